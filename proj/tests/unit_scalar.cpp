#include <doctest.h>

#include "oddsym/combinatorics.hpp"
#include "oddsym/scalar.hpp"

using namespace oddsym;

namespace {
GP P(int c, int d, int p) { return GP::mono(c, d, p); }

// sum over lambda in an r x (n-r) box of (pi q^2)^{|lambda|}, times q^{-(n-r)r}
GP box_oracle(int n, int r) {
  GP s;
  for (auto& l : enum_grpar(r, n - r)) s += pq2(psize(l));
  return GP::q(-(n - r) * r) * s;
}
}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("arithmetic") {
    CHECK(P(1, 1, 1) * P(1, 1, 1) == GP::q(2));
    CHECK((GP::q(1) - GP::q(-1)) * GP() == GP());
    CHECK((GP(1) + P(1, 1, 1)) * (GP(1) - P(1, 1, 1)) == GP(1) - GP::q(2));
    CHECK((GP::q(1) + GP::pi()).bar() == GP::q(-1) + GP::pi());
    CHECK(GP::mono(-3, 2, 1).str() == "-3*pi*q^2");
    GP a = P(2, -1, 0) + P(-1, 3, 1);
    CHECK(GP::from_json(a.to_json()) == a);
    CHECK(a.bar().bar() == a);
  }

  TEST_CASE("integers") {
    CHECK(qint(2) == GP::q(-1) + P(1, 1, 1));
    CHECK(qint(0).zero());
    CHECK(qint(1) == GP(1));
    CHECK(qint(-2) == -(GP::q(-1) + P(1, 1, 1)));
    for (int n = 1; n <= 6; ++n) CHECK(qint(n).bar() == pi_pow(n - 1) * qint(n));
    for (int n = -6; n <= 6; ++n) {
      // (pi q)^n - q^-n = [n] (pi q - q^-1)
      GP lhs = (n >= 0 ? P(1, n, n) : P(1, n, -n)) - GP::q(-n);
      CHECK(lhs == qint(n) * (P(1, 1, 1) - GP::q(-1)));
    }
  }

  TEST_CASE("binomials against box and coset oracles") {
    CHECK(qbinom(2, 1) == qint(2));
    CHECK(qbinom(-1, 1) == -GP::pi());
    CHECK(GP::q(1) * qbinom(2, 1) == GP(1) + pq2(1));
    for (int n = 0; n <= 8; ++n)
      for (int r = 0; r <= n; ++r) CHECK(qbinom(n, r) == box_oracle(n, r));
    for (int n = 0; n <= 6; ++n) {
      GP s;
      for (auto& w : all_perms(n)) s += pq2(perm_len(w));
      CHECK(qfact(n) == GP::q(-static_cast<int>(c2(n))) * s);
      CHECK(qfact(n).bar() == pi_pow(c2(n)) * qfact(n));
    }
    for (int n = 1; n <= 6; ++n)
      for (int r = 0; r <= 5; ++r)
        CHECK(qbinom(-n, r) == sgn(r) * pi_pow(n * r + c2(r)) * qbinom(n + r - 1, r));
    for (Composition a : {Composition{2, 1}, Composition{1, 2, 1}, Composition{2, 0, 2}, Composition{3, 1, 2}}) {
      GP s;
      for (auto& w : min_coset_reps(a)) s += pq2(perm_len(w));
      CHECK(qmultinom(a) == GP::q(-static_cast<int>(ncomp(a))) * s);
    }
  }

  TEST_CASE("b and c values") {
    CHECK(cpoly(1, 1, 0) == GP(1));
    CHECK(bpoly(1, 1, 1) == GP(1));
    CHECK(cpoly(1, 1, 1) == GP(1) + pq2(1));
  }
}
