#include <algorithm>
#include <sstream>

#include "oddsym/osym.hpp"
#include "oddsym/scalar.hpp"
#include "oddsym/uqpi.hpp"
#include "oddsym/verify.hpp"

namespace oddsym {

namespace {
std::string args(std::initializer_list<long> xs) {
  std::ostringstream os;
  os << "(";
  bool f = true;
  for (long x : xs) {
    os << (f ? "" : ",") << x;
    f = false;
  }
  os << ")";
  return os.str();
}
int bound(int v, int dflt) { return v < 0 ? dflt : v; }
}  // namespace

SuiteReport verify_qpi(const Bounds& b) {
  SuiteReport rep{"qpi"};
  int B = bound(b.max_degree, 8);
  Check pascal{"binomial Pascal recursions"}, tri{"trinomial recursion"}, alt{"alternating trinomial sum"},
      box{"box-partition generating function"}, num{"c = b(r) + b(r+1)"}, numc{"rectangle expansion"};
  for (int n = -B; n <= B; ++n)
    for (int r = 0; r <= B; ++r) {
      GP lhs = qbinom(n, r);
      GP a = GP::q(-r) * qbinom(n - 1, r) + (n - r >= 0 ? GP::mono(1, n - r, n - r) : GP::mono(1, n - r, r - n)) *
                                               qbinom(n - 1, r - 1);
      GP c = GP::mono(1, r, r) * qbinom(n - 1, r) + GP::q(r - n) * qbinom(n - 1, r - 1);
      pascal.expect(lhs == a && lhs == c, [&] { return "n,r=" + args({n, r}); });
      for (int s = 0; s <= B; ++s) {
        GP t = pi_pow(s) * GP::q(s - r) * qtrinom(n - 1, r, s) +
               (n - r >= 0 ? GP::mono(1, n - r, n - r) : GP::mono(1, n - r, r - n)) * qtrinom(n - 1, r - 1, s) +
               GP::q(s - n) * qtrinom(n - 1, r, s - 1);
        tri.expect(qtrinom(n, r, s) == t, [&] { return "n,r,s=" + args({n, r, s}); });
      }
      GP sum;
      for (int s = 0; s <= r; ++s) {
        int t = r - s;
        sum += pi_pow(c2(t)) * GP::mono(t % 2 ? -1 : 1, -t) * qtrinom(n + s, s, t);
      }
      i64 e = static_cast<i64>(n) * r;
      alt.expect(sum == GP::mono(1, static_cast<int>(e), static_cast<int>(((e % 2) + 2) % 2)),
                 [&] { return "n,r=" + args({n, r}); });
    }
  for (int n = 0; n <= B; ++n)
    for (int r = 0; r <= n; ++r) {
      GP s;
      for (auto& l : enum_grpar(r, n - r)) s += pq2(psize(l));
      box.expect(GP::q((n - r) * r) * qbinom(n, r) == s, [&] { return "n,r=" + args({n, r}); });
      GP t;
      for (int j = 0; j <= r; ++j)
        t += pq2(static_cast<i64>(n - r) * (r - j)) * GP::q((n - r - 1) * j) * qbinom(n - r + j - 1, j);
      numc.expect(GP::q((n - r) * r) * qbinom(n, r) == t, [&] { return "n,r=" + args({n, r}); });
    }
  for (int m = -B; m <= B; ++m)
    for (int n = -B; n <= B; ++n)
      for (int r = 0; r <= B; ++r)
        num.expect(cpoly(m, n, r) == bpoly(m, n, r) + bpoly(m, n, r + 1),
                   [&] { return "m,n,r=" + args({m, n, r}); });
  rep.checks = {pascal, tri, alt, box, num, numc};
  return rep;
}

SuiteReport verify_uqpi(const Bounds& b) {
  SuiteReport rep{"uqpi"};
  int L = bound(b.max_ell, 10);
  Check inv{"T and its inverse are mutually inverse"}, coeff{"T coefficient on basis vectors"},
      comm{"EF - pi FE = bar[k] on weight spaces"}, divp{"[d]! E^(d) = E^d"}, vp{"varpi involution"};
  for (int ell = 0; ell <= L; ++ell) {
    for (int n = 0; n <= ell; ++n) {
      VVec v = vbasis(ell, n);
      inv.expect(t_inverse(ell, t_forward(ell, v)) == v && t_forward(ell, t_inverse(ell, v)) == v,
                 [&] { return "ell,n=" + args({ell, n}); });
      int m = ell - n;
      GP want = sgn(n) * pi_pow(c2(n) + static_cast<i64>(n) * m) * GP::q(n + n * m);
      coeff.expect(t_coeff(ell, n) == want, [&] { return "ell,n=" + args({ell, n}); });
      int k = 2 * n - ell;
      VVec lhs = vadd(act_E(ell, 1, act_F(ell, 1, v)), vscale(-GP::pi(), act_F(ell, 1, act_E(ell, 1, v))));
      comm.expect(lhs == vscale(qint(k).bar(), v), [&] { return "ell,n=" + args({ell, n}); });
      vp.expect(varpi(ell, varpi(ell, v)) == v, [&] { return "ell,n=" + args({ell, n}); });
      for (int d = 1; d <= std::min(4, ell); ++d) {
        VVec e = v;
        for (int i = 0; i < d; ++i) e = act_E(ell, 1, e);
        divp.expect(e == vscale(qfact(d), act_E(ell, d, v)), [&] { return "ell,n,d=" + args({ell, n, d}); });
      }
    }
  }
  rep.checks = {inv, coeff, comm, divp, vp};
  return rep;
}

SuiteReport verify_osym(const Bounds& b) {
  SuiteReport rep{"osym"};
  int D = bound(b.max_degree, 12);
  int F = std::min(D, 8), P = std::min(D, 7);
  Check grass{"infinite Grassmannian relations"}, sf{"Schur orthogonality (minus form)"},
      sfa{"Schur orthogonality (plus form)"}, niall{"psi on Schur functions"}, bears{"gamma-star on Schur functions"},
      semi{"semiorthogonality"}, babies{"gamma-star triangularity on e-monomials"}, pieri{"Pieri rule"},
      kos{"Kostka unitriangularity"};
  for (int r = 0; r <= D; ++r) {
    Sym a, c;
    for (int s = 0; s <= r; ++s) {
      sym_axpy(a, (s & 1) ? -1 : 1, mul(e_elem(s), sym_h(r - s)));
      sym_axpy(c, (s & 1) ? -1 : 1, mul(sym_h(s), e_elem(r - s)));
    }
    Sym want = r ? Sym{} : sym_one();
    grass.expect(a == want && c == want, [&] { return "r=" + std::to_string(r); });
  }
  for (int n = 0; n <= F; ++n) {
    auto ps = partitions_of(n);
    for (auto& l : ps) {
      auto st = stats(l);
      Sym sl = schur(l);
      for (auto& m : ps) {
        Sym sm = schur(m);
        i64 want = l == m ? ((st.dN & 1) ? -1 : 1) : 0;
        sf.expect(pair(sl, sm, Side::minus) == want, [&] { return pstr(l) + "," + pstr(m); });
        i64 want2 = l == m ? ((st.dE & 1) ? -1 : 1) : 0;
        sfa.expect(pair(sl, sm, Side::plus) == want2, [&] { return pstr(l) + "," + pstr(m); });
        Partition mt = transpose(m);
        i64 mm = pair(Sym{{l, 1}}, e_mono(m), Side::minus), pp = pair(Sym{{l, 1}}, e_mono(m), Side::plus);
        if (l == mt) {
          auto sm2 = stats(m);
          semi.expect(mm == (((st.NE + st.dN) & 1) ? -1 : 1) && pp == (((sm2.NE + sm2.dN) & 1) ? -1 : 1),
                      [&] { return pstr(l) + "," + pstr(m); });
        } else if (l > mt) {
          semi.expect(mm == 0 && pp == 0, [&] { return pstr(l) + "," + pstr(m); });
        }
        kos.expect(l == m ? kostka(l, m) == 1 : (kostka(l, m) == 0 || dominates(l, m)),
                   [&] { return pstr(l) + "," + pstr(m); });
      }
      niall.expect(psi(sl) == sym_scale(((st.NE + n) & 1) ? -1 : 1, schur(transpose(l))),
                   [&] { return pstr(l); });
      bears.expect(star(gamma(sl)) == sym_scale(((st.dN + st.dE) & 1) ? -1 : 1, sl), [&] { return pstr(l); });
      Sym g = to_e(star(gamma(e_mono(l))));
      bool ok = true;
      for (auto& [m, c] : g) {
        if (m == l) ok = ok && c == (((st.dN + st.dE) & 1) ? -1 : 1);
        else ok = ok && m > l;
      }
      ok = ok && g.count(l);
      babies.expect(ok, [&] { return pstr(l); });
    }
  }
  for (int n = 0; n <= P; ++n)
    for (auto& l : partitions_of(n))
      for (int r = 0; r <= std::min(4, D); ++r) {
        Sym got = to_schur(mul(schur(l), sym_h(r)));
        Sym want;
        for (auto& m : partitions_of(n + r))
          if (auto s = pieri_sign(l, m, r)) sym_add(want, m, *s);
        pieri.expect(got == want, [&] { return pstr(l) + " r=" + std::to_string(r); });
      }
  rep.checks = {grass, sf, sfa, niall, bears, semi, babies, pieri, kos};
  return rep;
}

}  // namespace oddsym
