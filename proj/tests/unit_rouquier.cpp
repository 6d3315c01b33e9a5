#include <doctest.h>

#include <stdexcept>

#include "oddsym/rouquier.hpp"
#include "oddsym/uqpi.hpp"
#include "oddsym/verify.hpp"

using namespace oddsym;

TEST_SUITE("rouquier") {
  TEST_CASE("two-term complex") {
    auto c = build_complex(2, 0);
    CHECK(c.n == 1);
    CHECK(c.terms.size() == 2);
    CHECK(term_dim(c.term(0)) == GP(1));
    CHECK(term_dim(c.term(1)) == GP(1) + pq2(1));
    CHECK(homology_dim(c, 0).zero());
    CHECK(homology_dim(c, 1) == pq2(1));
    CHECK(term_dim(c.term(0)) - term_dim(c.term(1)) == -1 * pq2(1));
    CHECK(t_coeff(2, 1) == -1 * pq2(1));
  }

  TEST_CASE("degenerate weights") {
    auto c = build_complex(1, 1);
    CHECK(c.terms.size() == 1);
    CHECK(term_dim(c.term(0)) == GP(1));
    CHECK(image_dim(c, 0).zero());
    auto z = build_complex(0, 0);
    CHECK(homology_dim(z, 0) == GP(1));
    auto m = build_complex(2, -2);
    CHECK(m.dmin == 2);
    CHECK(homology_dim(m, 2) == pq2(-1));
    CHECK_THROWS_AS(build_complex(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_complex(1, 3), std::invalid_argument);
  }

  TEST_CASE("top homology") {
    auto c = build_complex(3, 1);
    CHECK(homology_dim(c, 0).zero());
    CHECK(homology_dim(c, 1) == pq2(2));
    CHECK(square_zero(build_complex(4, 0)));
    auto d = build_complex(4, 0);
    CHECK(homology_dim(d, 2) == pq2(3));
    CHECK(image_dim(d, 2) == bpoly(2, 2, 2));
  }

  TEST_CASE("initial and terminal pairs") {
    CHECK(initial_pair(0, 2, 2, {2, 1}, {}));
    CHECK(initial_pair(0, 2, 2, {2}, {}));
    CHECK(!initial_pair(0, 2, 2, {2, 2}, {}));
    CHECK(terminal_of(0, 2, 2, {2, 1}, {}) == std::pair<Partition, Partition>{{2}, {1}});
    CHECK(terminal_of(0, 2, 2, {1}, {}) == std::pair<Partition, Partition>{{1}, {}});
    CHECK(pair_less({{1}, {2}}, {{2}, {}}));
    CHECK(pair_less({{1}, {1, 1}}, {{1}, {2}}));
    CHECK(!pair_less({{1}, {2}}, {{1}, {2}}));
  }

  TEST_CASE("chain shape") {
    ChainShape s{4, 0, 2, 1};
    CHECK(s.size() == 2);
    CHECK(s.factor_index(0) == 1);
    CHECK(s.factor_index(1) == 1);
    CHECK(s.rank(0) == 3);
    CHECK(s.rank(1) == 2);
    CHECK(s.basis().size() == 6);
    CHECK(s.degree({2, 1}) == 4);
  }

  TEST_CASE("json") {
    auto j = complex_json(build_complex(2, 0));
    CHECK(j["n"] == 1);
    CHECK(j["terms"].size() == 2);
    CHECK(j["square_zero"] == true);
    CHECK(j["terms"][1]["rank"] == 2);
  }

  TEST_CASE("verification suite") {
    Bounds b;
    b.max_ell = 4;
    auto rep = verify_rouquier(b);
    for (auto& c : rep.checks) CHECK_MESSAGE(c.ok, (c.name + ": " + c.witness));
  }
}
