#include <doctest.h>

#include <algorithm>

#include "oddsym/combinatorics.hpp"

using namespace oddsym;

namespace {
long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_SUITE("combinatorics") {
  TEST_CASE("statistics") {
    auto s = stats({});
    CHECK((s.N == 0 && s.NE == 0 && s.dN == 0 && s.dE == 0 && s.NEbar == 0));
    s = stats({2, 1});
    CHECK(s.dN == 1);
    CHECK(s.dE == 1);
    CHECK(s.N == 2);
    CHECK(s.NE == 1);
    CHECK(s.NEbar == 6);
    for (auto& l : partitions_upto(12)) {
      CHECK(transpose(transpose(l)) == l);
      CHECK(stats(l).dE == stats(transpose(l)).dN);
    }
  }

  TEST_CASE("weakly northeast pair count") {
    for (auto& l : partitions_upto(8)) {
      long c = 0;
      int h = static_cast<int>(l.size());
      for (int ra = 0; ra < h; ++ra)
        for (int ca = 0; ca < l[ra]; ++ca)
          for (int rb = 0; rb <= ra; ++rb)
            for (int cb = ca; cb < l[rb]; ++cb) ++c;
      CHECK(c == stats(l).NEbar);
    }
  }

  TEST_CASE("dominance and lex") {
    for (int n = 0; n <= 10; ++n) {
      auto ps = partitions_of(n);
      for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < ps.size(); ++j) {
          if (dominates(ps[i], ps[j])) CHECK(ps[i] >= ps[j]);
          if (dominates(ps[i], ps[j]) && dominates(ps[j], ps[i])) CHECK(i == j);
          for (size_t k = 0; k < ps.size() && n <= 7; ++k)
            if (dominates(ps[i], ps[j]) && dominates(ps[j], ps[k])) CHECK(dominates(ps[i], ps[k]));
        }
    }
  }

  TEST_CASE("rectangles") {
    CHECK(enum_grpar(1, 1) == std::vector<Partition>{{}, {1}});
    CHECK(enum_grpar(2, 2).size() == 6);
    CHECK(enum_grpar(0, 5) == std::vector<Partition>{{}});
    for (int m = 0; m <= 7; ++m)
      for (int n = 0; n <= 7; ++n) CHECK(static_cast<long>(enum_grpar(m, n).size()) == binom(m + n, n));
  }

  TEST_CASE("tableaux") {
    CHECK(tableau_sign({{3}, {{1, 2, 3}}}) == 1);
    CHECK(tableau_sign({{2, 1}, {{1, 3}, {2}}}) == -1);
    CHECK_THROWS(tableau_sign({{2, 1}, {{2, 1}, {3}}}));
    for (auto& l : partitions_upto(7)) {
      auto ts = ssyt(l, l);
      REQUIRE(ts.size() == 1);
      CHECK(tableau_sign(ts[0]) == 1);
    }
    CHECK(ssyt({2, 1}, {1, 1, 1}).size() == 2);
    CHECK(ssyt({3, 2}, {2, 2, 1}).size() == 2);
  }

  TEST_CASE("pieri signs") {
    CHECK(pieri_sign({}, {1}, 1) == 1);
    CHECK(pieri_sign({1}, {2}, 1) == 1);
    CHECK(!pieri_sign({1}, {1, 1, 1}, 1).has_value());
    CHECK(!pieri_sign({1}, {1, 1}, 2).has_value());
  }

  TEST_CASE("permutations") {
    CHECK(perm_len(perm_id(4)) == 0);
    CHECK(reduced_word(perm_id(3)).empty());
    CHECK(perm_len(longest(3)) == 3);
    CHECK(min_coset_reps({2, 1}).size() == 3);
    for (auto& w : all_perms(5)) {
      auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == perm_len(w));
      CHECK(from_word(5, word) == w);
    }
    std::vector<int> lens;
    for (auto& w : min_coset_reps({2, 1})) lens.push_back(perm_len(w));
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<int>{0, 1, 2});
  }
}
