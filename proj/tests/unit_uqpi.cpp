#include <doctest.h>

#include "oddsym/uqpi.hpp"

using namespace oddsym;

TEST_SUITE("uqpi") {
  TEST_CASE("divided powers") {
    for (int ell = 1; ell <= 6; ++ell) {
      CHECK(act_E(ell, 1, vbasis(ell, ell)) == VVec(ell + 1));
      CHECK(act_F(ell, 1, vbasis(ell, 0)) == VVec(ell + 1));
      CHECK(act_E(ell, 1, vbasis(ell, 0)) == vbasis(ell, 1));
      CHECK(act_F(ell, 1, vbasis(ell, 1)) == vscale(qint(ell), vbasis(ell, 0)));
      for (int d = 1; d <= 4; ++d)
        for (int n = 0; n <= ell; ++n) {
          VVec v = vbasis(ell, n), e = v, f = v;
          for (int i = 0; i < d; ++i) {
            e = act_E(ell, 1, e);
            f = act_F(ell, 1, f);
          }
          CHECK(e == vscale(qfact(d), act_E(ell, d, v)));
          CHECK(f == vscale(qfact(d), act_F(ell, d, v)));
        }
    }
  }

  TEST_CASE("reflection") {
    CHECK(t_coeff(2, 1) == -GP::mono(1, 2, 1));
    for (int ell = 0; ell <= 8; ++ell)
      for (int n = 0; n <= ell; ++n) {
        int m = ell - n;
        GP want = sgn(n) * pi_pow(c2(n) + n * m) * GP::q(n + n * m);
        CHECK(t_coeff(ell, n) == want);
        VVec v = vbasis(ell, n);
        CHECK(t_inverse(ell, t_forward(ell, v)) == v);
        CHECK(t_forward(ell, t_inverse(ell, v)) == v);
        CHECK(varpi(ell, varpi(ell, v)) == v);
      }
  }
}
