#include <algorithm>
#include <random>

#include "oddsym/linalg.hpp"
#include "oddsym/onh.hpp"
#include "oddsym/verify.hpp"

namespace oddsym {

namespace {
std::vector<Expo> monomials(int n, int d) {
  std::vector<Expo> out;
  Expo k(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      k[i] = left;
      out.push_back(k);
      return;
    }
    for (int e = left; e >= 0; --e) {
      k[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(k);
    return out;
  }
  rec(0, d);
  return out;
}

// matrix of the listed Demazure operators from degree d to degree d-1
QMat demazure_matrix(int n, int d, const std::vector<int>& js) {
  auto src = monomials(n, d), dst = monomials(n, d - 1);
  std::map<Expo, int> at;
  for (size_t i = 0; i < dst.size(); ++i) at[dst[i]] = static_cast<int>(i);
  QMat m(js.size() * dst.size(), std::vector<Q>(src.size(), 0));
  for (size_t c = 0; c < src.size(); ++c)
    for (size_t t = 0; t < js.size(); ++t)
      for (auto& [k, v] : demazure(js[t], OPol::mono(n, src[c])).c) m[t * dst.size() + at[k]][c] = Q(v);
  return m;
}

// coefficient list of a GP series in q^{2d}, d <= D, keyed by (d, parity)
std::map<std::pair<int, int>, i64> trunc(const GP& g, int D) {
  std::map<std::pair<int, int>, i64> r;
  for (auto& [k, v] : g.terms())
    if (k.first <= 2 * D) r[k] = v;
  return r;
}

OPol random_opol(std::mt19937_64& rng, int n, int maxdeg) {
  OPol f(n);
  std::uniform_int_distribution<int> e(0, maxdeg), c(-3, 3);
  for (int t = 0; t < 4; ++t) {
    Expo k(n, 0);
    int left = e(rng);
    for (int i = 0; i < n && left; ++i) {
      std::uniform_int_distribution<int> take(0, left);
      k[i] = take(rng);
      left -= k[i];
    }
    f.add(k, c(rng));
  }
  return f;
}
}  // namespace

SuiteReport verify_onh(const Bounds& b) {
  SuiteReport rep{"onh"};
  int N = b.max_ell < 0 ? 4 : b.max_ell;
  int D = b.max_degree < 0 ? 5 : b.max_degree / 2;  // polynomial degree 2D
  Check norm{"omega_n xi_n = 1"}, st{"odd Schur polynomials via the idempotent"}, ker{"OSym_n = joint kernel"},
      kim{"kernel equals image for each Demazure operator"}, dims{"graded dimension identities"},
      idem{"xi-omega and omega-xi are idempotent"};
  for (int n = 1; n <= std::max(N + 1, 1); ++n)
    norm.expect(onh_apply(omega(n), xi(n)) == OPol::one(n), [&] { return "n=" + std::to_string(n); });
  for (int n = 1; n <= N; ++n)
    for (auto& l : enum_grpar(n, 4))
      st.expect(schur_poly(l, n) == sym_to_opol(schur(l), n),
                [&] { return "n=" + std::to_string(n) + " lambda=" + pstr(l); });
  std::mt19937_64 rng(b.seed);
  for (int n = 1; n <= N; ++n) {
    std::vector<int> js;
    for (int j = 1; j < n; ++j) js.push_back(j);
    GP opol_dim, osym_dim;
    for (int d = 0; d <= D; ++d) {
      int cols = static_cast<int>(monomials(n, d).size());
      opol_dim += GP::mono(cols, 2 * d, d % 2);
      int kdim = cols;
      if (!js.empty() && d > 0) kdim -= rank(demazure_matrix(n, d, js));
      int sdim = 0;
      for (auto& l : partitions_of(d))
        if (static_cast<int>(l.size()) <= n) {
          ++sdim;
          OPol s = schur_poly(l, n);
          for (int j : js) ker.expect(demazure(j, s).zero(), [&] { return "s" + pstr(l) + " j=" + std::to_string(j); });
        }
      osym_dim += GP::mono(sdim, 2 * d, d % 2);
      ker.expect(kdim == sdim, [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d); });
      for (int j : js) {
        int kj = cols - (d > 0 ? rank(demazure_matrix(n, d, {j})) : 0);
        int ij = rank(demazure_matrix(n, d + 1, {j}));
        kim.expect(kj == ij, [&] { return "n,j,d=" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(d); });
      }
    }
    // product over r of 1/(1-(pi q^2)^r), truncated
    GP prod = GP(1);
    for (int r = 1; r <= n; ++r) {
      GP geo;
      for (int k = 0; k * r <= D; ++k) geo += pq2(static_cast<i64>(k) * r);
      prod = prod * geo;
    }
    GP poinc;
    for (auto& w : all_perms(n)) poinc += pq2(perm_len(w));
    dims.expect(trunc(prod, D) == trunc(osym_dim, D), [&] { return "OSym_n n=" + std::to_string(n); });
    dims.expect(trunc(osym_dim * poinc, D) == trunc(opol_dim, D), [&] { return "OPol_n n=" + std::to_string(n); });
    dims.expect(poinc == GP::q(c2(n)) * qfact(n), [&] { return "Poincare n=" + std::to_string(n); });
    ONHWord xw;
    for (int i = n - 1; i >= 1; --i)
      for (int t = 0; t < n - i; ++t) xw.g.push_back({false, i});
    for (int t = 0; t < 4; ++t) {
      OPol f = random_opol(rng, n, 2 * D);
      OPol a = onh_apply(omega(n), xi(n) * f);
      OPol c = xi(n) * onh_apply(omega(n), f);
      idem.expect(onh_apply(omega(n), xi(n) * a) == a && xi(n) * onh_apply(omega(n), c) == c &&
                      onh_apply(concat(xw, omega(n)), f) == c,
                  [&] { return "n=" + std::to_string(n); });
    }
  }
  rep.checks = {norm, st, ker, kim, dims, idem};
  return rep;
}

}  // namespace oddsym
