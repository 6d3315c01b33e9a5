#include <doctest.h>

#include "oddsym/linalg.hpp"
#include "oddsym/oh.hpp"
#include "oddsym/onh.hpp"
#include "oddsym/verify.hpp"

using namespace oddsym;

namespace {
OPol X(int i) { return OPol::var(2, i); }

// OH_1^2 -> OPol_2 / J, h_r (x) 1 -> x_1^r, e1 -> x1 + x2, e2 -> x1 x2
OPol phi(const OH& a) {
  OPol out(2);
  for (auto& [l, r] : a.t) {
    OPol s = OPol::mono(2, {l.empty() ? 0 : l[0], 0});
    for (auto& [k, v] : r.even) {
      OPol y = OPol::one(2);
      for (size_t i = 0; i < k.size(); ++i) y = y * (-1 * (X(1) * X(2)));
      out += v * (s * y);
    }
    for (auto& [k, v] : r.odd) {
      REQUIRE(k.empty());
      out += v * (s * (X(1) + X(2)));
    }
  }
  return out;
}

std::vector<Expo> monos(int d) {
  std::vector<Expo> out;
  for (int a = 0; a <= d; ++a) out.push_back({a, d - a});
  return out;
}

// membership in the two-sided ideal <x1^2 + x2^2, x1^3 + x1^2 x2>
bool in_ideal(const OPol& f) {
  if (f.zero()) return true;
  int d = expo_deg(f.c.begin()->first);
  std::vector<OPol> gens = {X(1) * X(1) + X(2) * X(2), OPol::mono(2, {3, 0}) + OPol::mono(2, {2, 1})};
  std::vector<int> gd = {2, 3};
  QMat rows;
  auto col = [&](const Expo& k) { return k[0]; };
  for (size_t g = 0; g < gens.size(); ++g)
    for (int a = 0; a + gd[g] <= d; ++a)
      for (auto& u : monos(a))
        for (auto& v : monos(d - a - gd[g])) {
          OPol p = OPol::mono(2, u) * gens[g] * OPol::mono(2, v);
          std::vector<Q> row(d + 1, 0);
          for (auto& [k, c] : p.c) row[col(k)] += c;
          rows.push_back(row);
        }
  std::vector<Q> target(d + 1, 0);
  for (auto& [k, c] : f.c) target[col(k)] += c;
  int r0 = rows.empty() ? 0 : rank(rows);
  rows.push_back(target);
  return rank(rows) == r0;
}
}  // namespace

TEST_SUITE("oh") {
  TEST_CASE("base ring") {
    CHECK(rell_e(2, 1) == REll::c(2));
    CHECK(rell_e(2, 2) == -1 * REll::g(2, 1));
    CHECK(rell_e(2, 3).zero());
    CHECK((REll::c(3) * REll::c(3)).zero());
    CHECK(rell_h(4, 2) == REll::g(4, 1));
    CHECK(rell_h(4, 4) == REll::g(4, 1) * REll::g(4, 1) - REll::g(4, 2));
    CHECK((REll::c(4) * REll::g(4, 2)).zero());
    CHECK(!(REll::c(5) * REll::g(5, 2)).zero());
    CHECK(rell_monomials(4, 4).size() == 1);
    CHECK(rell_monomials(4, 6).size() == 1);
    CHECK(rell_monomials(4, 8).size() == 2);
    CHECK(rell_monomials(2, 6).empty());
    CHECK(retruncate(REll::g(5, 2), 3).zero());
    CHECK(REll::g(4, 1).str() == "g1");
  }

  TEST_CASE("normal form examples") {
    OH s2 = OH::basis(1, 2, {2});
    OH want = OH::basis(1, 2, {1}).times_r(rell_e(2, 1)) - OH::from_r(1, 2, rell_e(2, 2));
    CHECK(s2 == want);
    CHECK(OH::basis(2, 4, {2, 1}) == OH::basis(2, 4, {2, 1}));
    CHECK(OH::basis(2, 4, {1, 1, 1}).zero());
    OH a = OH::basis(2, 4, {1});
    CHECK(oh_mul(OH::one(2, 4), a) == a);
    CHECK(oh_mul(a, OH::one(2, 4)) == a);
    auto j = OH::basis(1, 2, {1}).times_r(REll::c(2)).to_json();
    CHECK(j["n"] == 1);
    CHECK(j["terms"][0]["lambda"] == nlohmann::json::array({1}));
    CHECK(j["terms"][0]["r_odd"][0]["coeff"] == 1);
  }

  TEST_CASE("two-variable presentation") {
    // Up to degree 3 the quotient of OPol_2 matches OH_1^2; the images of e1
    // and h1 do not supercommute there, and x1 f + f x1 = 2 x1^4 kills degree 4.
    std::vector<OH> S, R;
    for (int k = 0; k <= 4; ++k) S.push_back(OH::basis(1, 2, {k}));
    for (int d = 0; d <= 8; d += 2)
      for (auto& y : rell_monomials(2, d)) R.push_back(OH::from_r(1, 2, y));
    for (int k = 0; k <= 6; ++k) CHECK(in_ideal(phi(OH::basis(1, 2, {k})) - OPol::mono(2, {k, 0})));
    for (auto* B : {&S, &R})
      for (auto& u : *B)
        for (auto& v : *B) CHECK(in_ideal(phi(oh_mul(u, v)) - phi(u) * phi(v)));
    OPol e1 = X(1) + X(2);
    CHECK(!in_ideal(X(1) * e1 + e1 * X(1)));
    OH s1 = OH::basis(1, 2, {1}), c = OH::from_r(1, 2, rell_e(2, 1));
    CHECK(oh_mul(s1, c) == -1 * oh_mul(c, s1));
    for (int d = 0; d <= 3; ++d) {
      QMat rows;
      // dimension of J_d via the same spanning set as in_ideal
      std::vector<OPol> gens = {X(1) * X(1) + X(2) * X(2), OPol::mono(2, {3, 0}) + OPol::mono(2, {2, 1})};
      std::vector<int> gd = {2, 3};
      for (size_t g = 0; g < gens.size(); ++g)
        for (int a = 0; a + gd[g] <= d; ++a)
          for (auto& u : monos(a))
            for (auto& v : monos(d - a - gd[g])) {
              OPol p = OPol::mono(2, u) * gens[g] * OPol::mono(2, v);
              std::vector<Q> row(d + 1, 0);
              for (auto& [k, cf] : p.c) row[k[0]] += cf;
              rows.push_back(row);
            }
      int quot = d + 1 - (rows.empty() ? 0 : rank(rows));
      int oh = 0;
      for (int k = 0; k <= 1; ++k) oh += static_cast<int>(rell_monomials(2, 2 * (d - k)).size());
      CHECK(quot == oh);
    }
    CHECK(!in_ideal(X(1)));
    CHECK(!in_ideal(X(1) * X(2)));
    CHECK(in_ideal(OPol::mono(2, {4, 0})));
    CHECK(!OH::basis(1, 2, {4}).zero());
  }

  TEST_CASE("trace and pairing") {
    CHECK(oh_trace(OH::basis(2, 4, {2, 2})) == REll::one(4));
    CHECK(oh_trace(OH::basis(2, 4, {2, 1})).zero());
    CHECK(oh_trace(OH::one(1, 1)) == REll::one(1));  // the box is empty
    CHECK(oh_trace(OH::one(1, 2)).zero());
    CHECK(complement({2, 1}, 2, 3) == Partition{2, 1});
    CHECK(complement({}, 2, 2) == Partition{2, 2});
    auto g = trace_gram(1, 3);
    CHECK(g == std::vector<std::vector<i64>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  }

  TEST_CASE("psi, delta, alpha") {
    for (int ell = 1; ell <= 4; ++ell)
      for (int n = 0; n <= ell; ++n) {
        int np = ell - n;
        OH h1 = oh_from_sym(n, ell, sym_h(1));
        OH want = ((n + 1) % 2 ? -1 : 1) * oh_from_sym(np, ell, e_elem(1)) + OH::from_r(np, ell, rell_h(ell, 1));
        CHECK(psi_iso(h1, true) == want);
        CHECK(psi_iso(OH::one(n, ell), true) == OH::one(np, ell));
        OH d = delta_auto(h1);
        OH w = ((ell % 2) ? -1 : 1) * h1 + (1 - ((n % 2) ? -1 : 1)) * OH::from_r(n, ell, rell_e(ell, 1));
        CHECK(d == w);
        CHECK(alpha(OH::from_r(n, ell, rell_e(ell, 2))) == rell_e(np, 2));
      }
  }

  TEST_CASE("verification suite") {
    Bounds b;
    b.max_ell = 3;
    b.max_degree = 2;
    auto rep = verify_oh(b);
    for (auto& c : rep.checks) CHECK_MESSAGE(c.ok, (c.name + ": " + c.witness));
  }
}
