#include "oddsym/uqpi.hpp"

#include <algorithm>

namespace oddsym {

VVec vbasis(int ell, int n) {
  VVec v(ell + 1);
  v[n] = GP(1);
  return v;
}

VVec vscale(const GP& c, const VVec& v) {
  VVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

VVec vadd(const VVec& a, const VVec& b) {
  VVec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

VVec act_E(int ell, int d, const VVec& v) {
  VVec r(ell + 1);
  for (int n = 0; n + d <= ell; ++n)
    if (!v[n].zero()) r[n + d] += qbinom(n + d, d) * v[n];
  return r;
}

VVec act_F(int ell, int d, const VVec& v) {
  VVec r(ell + 1);
  for (int n = 0; n + d <= ell; ++n)
    if (!v[n + d].zero()) r[n] += pi_pow(c2(d) + static_cast<i64>(n) * d) * qbinom(ell - n, d) * v[n + d];
  return r;
}

VVec act_Ebar(int ell, int d, const VVec& v) { return vscale(pi_pow(c2(d)), act_E(ell, d, v)); }
VVec act_Fbar(int ell, int d, const VVec& v) { return vscale(pi_pow(c2(d)), act_F(ell, d, v)); }

VVec t_forward(int ell, const VVec& v) {
  VVec r(ell + 1);
  for (int n = 0; n <= ell; ++n) {
    if (v[n].zero()) continue;
    int k = ell - 2 * n;
    VVec b = vbasis(ell, n);
    b[n] = v[n];
    for (int d = std::max(0, -k); d <= ell; ++d) {
      if (k + d > ell) break;
      r = vadd(r, vscale(GP::mono(d % 2 ? -1 : 1, d), act_E(ell, k + d, act_F(ell, d, b))));
    }
  }
  return r;
}

VVec t_inverse(int ell, const VVec& v) {
  VVec r(ell + 1);
  for (int m = 0; m <= ell; ++m) {
    if (v[m].zero()) continue;
    int k = 2 * m - ell;
    VVec b = vbasis(ell, m);
    b[m] = v[m];
    for (int d = std::max(0, -k); d <= ell; ++d) {
      if (k + d > ell) break;
      r = vadd(r, vscale(GP::mono(d % 2 ? -1 : 1, -d), act_Fbar(ell, k + d, act_Ebar(ell, d, b))));
    }
  }
  return r;
}

VVec varpi(int ell, const VVec& v) {
  VVec r(ell + 1);
  for (int n = 0; n <= ell; ++n) r[ell - n] += pi_pow(static_cast<i64>(n) * (ell - n)) * v[n].bar();
  return r;
}

GP t_coeff(int ell, int n) { return t_forward(ell, vbasis(ell, n))[ell - n]; }

}  // namespace oddsym
