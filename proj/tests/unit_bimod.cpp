#include <doctest.h>

#include "oddsym/bimod.hpp"
#include "oddsym/verify.hpp"

using namespace oddsym;

namespace {
TensorVU vu(int n, int ell, int p, const OH& c, int q) {
  BimodVec v = BimodVec::basis('V', n, ell, p);
  v.c[p] = c;
  return tensor_vu(v, BimodVec::basis('U', n, ell, q));
}
}  // namespace

TEST_SUITE("bimod") {
  TEST_CASE("reductions") {
    for (int ell = 1; ell <= 3; ++ell)
      for (int n = 0; n < ell; ++n)
        for (int p = 0; p <= n; ++p) {
          CHECK(v_reduce(n, ell, p) == BimodVec::basis('V', n, ell, p));
          CHECK(u_reduce(n, ell, p) == BimodVec::basis('U', n, ell, p));
        }
    // v(x^2) = v(x) e1 - v(1) e2 in OH_2^2
    BimodVec want('V', 1, 2);
    want.c[1] = eps_bar(2, 2, 1);
    want.c[0] = -1 * eps_bar(2, 2, 2);
    CHECK(v_reduce(1, 2, 2) == want);
    CHECK(!eps_bar(2, 2, 2).zero());
    for (int ell = 1; ell <= 3; ++ell)
      for (int n = 0; n < ell; ++n)
        for (int p = 0; p <= n + 3; ++p) {
          CHECK(v_reduce(n, ell, p) == v_reduce_series(n, ell, p));
          CHECK(u_reduce(n, ell, p) == u_reduce_series(n, ell, p));
        }
  }

  TEST_CASE("actions") {
    BimodVec v1 = gen('V', 1, 2, 0);
    CHECK(act_left(OH::one(1, 2), v1) == v1);
    // eps_1 v(1) = v(x) - v(1) eps_1 for n = 1
    BimodVec want = gen('V', 1, 2, 1);
    want -= act_right(v1, eps_bar(2, 2, 1));
    CHECK(act_left(eps_bar(1, 2, 1), v1) == want);
    OH c = OH::from_r(1, 2, REll::c(2));
    // odd central element picks up the parity of v(x^p), which is p + n
    CHECK(act_left(c, v1) == -1 * act_right(v1, OH::from_r(2, 2, REll::c(2))));
    CHECK(act_left(c, gen('V', 1, 2, 1)) == act_right(gen('V', 1, 2, 1), OH::from_r(2, 2, REll::c(2))));
    CHECK_THROWS(to_left_basis(gen('U', 0, 2, 0)));
  }

  TEST_CASE("first adjunction") {
    for (int ell = 1; ell <= 4; ++ell)
      for (int n = 0; n < ell; ++n) {
        for (int r = 0; r <= n; ++r) CHECK(ev(n, ell, r, n - r) == OH::one(n + 1, ell));
        if (n >= 1) CHECK(ev(n, ell, 0, 0).zero());
      }
    CHECK(ev(1, 3, 1, 1) == eta_bar(2, 3, 1));
    CHECK(coev(0, 2) == vu(0, 2, 0, OH::one(1, 2), 0));
    TensorVU want = vu(1, 3, 0, -1 * eps_bar(2, 3, 1), 0);
    want += vu(1, 3, 1, OH::one(2, 3), 0);
    want += vu(1, 3, 0, OH::one(2, 3), 1);
    CHECK(coev(1, 3) == want);
    for (int ell = 1; ell <= 3; ++ell)
      for (int n = 0; n <= std::min(2, ell - 1); ++n) CHECK(coev_collapsed(n, ell, 1) == coev(n, ell));
  }

  TEST_CASE("second adjunction") {
    CHECK(tilde_ev(0, 3, 1, 1) == -1 * OH::one(0, 3));
    CHECK(tilde_ev(0, 3, 0, 2) == -1 * OH::one(0, 3));
    CHECK(tilde_ev(0, 3, 2, 0) == -1 * OH::one(0, 3));
    CHECK(tilde_ev(1, 3, 1, 0) == -1 * OH::one(1, 3));
    CHECK(tilde_ev(1, 3, 0, 1) == OH::one(1, 3));
    CHECK(tilde_ev(0, 3, 0, 1).zero());
    CHECK(tilde_ev(1, 4, 0, 1).zero());
    BimodVec v = gen('V', 1, 3, 1, true), u = gen('U', 1, 3, 0, true);
    CHECK(tilde_ev_apply(v, u) == tilde_ev(1, 3, 1, 0));
  }

  TEST_CASE("crossing") {
    CHECK(crossing(1, 2, 0, 0) == tensor_vu(gen('V', 1, 2, 0), gen('U', 1, 2, 0)));
    CHECK(crossing(2, 3, 1, 0) == tensor_vu(gen('V', 2, 3, 0), gen('U', 2, 3, 1)));
    CHECK_THROWS(crossing(1, 2, 0, 1));
    CHECK_THROWS(crossing(0, 2, 0, 0));
  }

  TEST_CASE("json") {
    auto j = gen('V', 1, 2, 2).to_json();
    CHECK(j["kind"] == "V");
    CHECK(j["n"] == 1);
    CHECK(j["ell"] == 2);
    CHECK(j["coeffs"].size() == 2);
    CHECK(j["coeffs"][1]["n"] == 2);
    CHECK(gen('U', 0, 1, 0).str() == "[s[](x)(1)]u(x^0)");
  }

  TEST_CASE("verification suite") {
    Bounds b;
    b.max_ell = 3;
    auto rep = verify_bimod(b);
    for (auto& c : rep.checks) CHECK_MESSAGE(c.ok, (c.name + ": " + c.witness));
  }
}
