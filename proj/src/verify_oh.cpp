#include <algorithm>
#include <random>
#include <sstream>

#include "oddsym/linalg.hpp"
#include "oddsym/oh.hpp"
#include "oddsym/verify.hpp"

namespace oddsym {

namespace {
int bound(int v, int dflt) { return v < 0 ? dflt : v; }
std::string nl(int n, int ell) { return "n=" + std::to_string(n) + " ell=" + std::to_string(ell); }
i64 sg(long k) { return (k & 1) ? -1 : 1; }

std::vector<REll> rell_upto(int ell, int d) {
  std::vector<REll> out;
  for (int k = 0; k <= d; k += 2)
    for (auto& r : rell_monomials(ell, k)) out.push_back(r);
  return out;
}

OH random_oh(std::mt19937_64& rng, int n, int ell) {
  auto B = oh_basis(n, ell);
  auto R = rell_upto(ell, 8);
  std::uniform_int_distribution<size_t> pb(0, B.size() - 1), pr(0, R.size() - 1);
  std::uniform_int_distribution<int> c(-2, 2);
  OH a(n, ell);
  for (int t = 0; t < 3; ++t) a += c(rng) * OH::basis(n, ell, B[pb(rng)]).times_r(R[pr(rng)]);
  return a;
}

// Dimension of degree d of (OSym_n (x) R_ell) / I computed from the
// presentation, and whether the normal form kills every spanning element of I.
struct PresDim {
  int dim = 0;
  bool kills = true;
};

PresDim presentation_dim(int n, int ell, int d) {
  int np = ell - n;
  using Key = std::pair<Partition, std::pair<bool, Partition>>;
  std::map<Key, int> idx;
  for (int k = 0; 2 * k <= d; ++k)
    for (auto& nu : partitions_of(k)) {
      if (static_cast<int>(nu.size()) > n) continue;
      for (auto& y : rell_monomials(ell, d - 2 * k)) {
        bool odd = !y.odd.empty();
        idx.emplace(Key{nu, {odd, odd ? y.odd.begin()->first : y.even.begin()->first}}, 0);
      }
    }
  int N = 0;
  for (auto& [k, v] : idx) v = N++;
  auto emono = [&](int sz) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(sz))
      if (p.empty() || p.front() <= n) out.push_back(p);
    return out;
  };
  QMat rows;
  PresDim res;
  for (int r = np + 1; 2 * r <= d; ++r)
    for (int A = 0; 2 * (A + r) <= d; ++A)
      for (int Bs = 0; 2 * (A + Bs + r) <= d; ++Bs)
        for (auto& y : rell_monomials(ell, d - 2 * (A + Bs + r)))
          for (auto& al : emono(A))
            for (auto& be : emono(Bs)) {
              std::map<Partition, REll> raw;
              for (int s = 0; s <= r; ++s) {
                REll es = rell_e(ell, s) * y;
                if (es.zero()) continue;
                Sym p = mul(mul(e_mono(al), sym_h(r - s)), e_mono(be));
                i64 k = sg(s) * sg(static_cast<long>(s) * Bs);
                for (auto& [nu, v] : to_schur(p)) {
                  if (static_cast<int>(nu.size()) > n) continue;
                  auto it = raw.try_emplace(nu, REll(ell)).first;
                  it->second += (k * v) * es;
                }
              }
              std::vector<Q> row(N, 0);
              bool any = false;
              for (auto& [nu, x] : raw) {
                for (auto& [g, v] : x.even) row[idx.at(Key{nu, {false, g}})] += v, any = true;
                for (auto& [g, v] : x.odd) row[idx.at(Key{nu, {true, g}})] += v, any = true;
              }
              if (!any) continue;
              rows.push_back(row);
              if (!oh_normalize(n, ell, raw).zero()) res.kills = false;
            }
  res.dim = N - (rows.empty() ? 0 : rank(rows));
  return res;
}
}  // namespace

SuiteReport verify_oh(const Bounds& b) {
  SuiteReport rep{"oh"};
  int L = bound(b.max_ell, 4);
  int LR = bound(b.max_ell, 5);
  int extra = bound(b.max_degree, 8);
  std::mt19937_64 rng(b.seed);
  Check rk{"graded rank of the normal-form basis"}, pres{"graded rank from the presentation"},
      kill{"normal form annihilates the defining ideal"}, rimg{"images of odd generators in R"},
      assoc{"associativity"}, cent{"R is supercentral"}, tr{"trace normalisation"}, gram{"specialised trace pairing"},
      inv{"psi inverse"}, hom{"psi multiplicative"}, pe{"psi on elementary functions"}, del{"delta closed forms"},
      al{"alpha"}, bar{"specialisation kills keys outside the box"};

  for (int ell = 0; ell <= LR; ++ell)
    for (int n = 0; n <= ell; ++n) {
      int np = ell - n;
      GP s;
      for (auto& l : oh_basis(n, ell)) s += pq2(psize(l));
      rk.expect(s == GP::q(n * np) * qbinom(ell, n), [&] { return nl(n, ell); });
      for (int d = 0; d <= 2 * n * np + extra; d += 2) {
        int want = 0;
        for (auto& l : oh_basis(n, ell)) want += static_cast<int>(rell_monomials(ell, d - 2 * psize(l)).size());
        PresDim p = presentation_dim(n, ell, d);
        pres.expect(p.dim == want, [&] {
          return nl(n, ell) + " d=" + std::to_string(d) + " got " + std::to_string(p.dim) + " want " +
                 std::to_string(want);
        });
        kill.expect(p.kills, [&] { return nl(n, ell) + " d=" + std::to_string(d); });
      }
    }

  for (int ell = 0; ell <= LR; ++ell) {
    rimg.expect(rell_from_osym(mul(sym_h(1), sym_h(1)), ell).zero(), [&] { return "o^2, ell=" + std::to_string(ell); });
    Sym com = mul(sym_h(1), e_elem(2));
    sym_axpy(com, -1, mul(e_elem(2), sym_h(1)));
    rimg.expect(rell_from_osym(com, ell).zero(), [&] { return "[o,e2], ell=" + std::to_string(ell); });
    for (int r = 0; r <= 6; ++r) {
      // z_r = sum_s (-1)^s e_{r-s} h_s and the even complete functions
      Sym z;
      for (int t = 0; t <= r; ++t) sym_axpy(z, sg(t), mul(e_elem(r - t), sym_h(t)));
      REll want = r == 0 ? REll::one(ell) : REll(ell);
      if (r % 2 == 0) rimg.expect(rell_from_osym(z, ell) == want, [&] { return "z_" + std::to_string(r); });
    }
    // h_{2r} is the complete function in the g's: sum_t (-1)^t g_t h_{r-t} = 0
    for (int r = 1; r <= 3; ++r) {
      REll acc(ell);
      for (int t = 0; t <= r; ++t) acc += sg(t) * (REll::g(ell, t) * rell_h(ell, 2 * (r - t)));
      rimg.expect(acc.zero(), [&] { return "complete h_" + std::to_string(2 * r) + " ell=" + std::to_string(ell); });
      rimg.expect(rell_h(ell, 2 * r + 1) == rell_h(ell, 2 * r) * REll::c(ell), [&] { return "odd h"; });
    }
  }

  for (int ell = 0; ell <= L; ++ell)
    for (int n = 0; n <= ell; ++n) {
      int np = ell - n;
      auto B = oh_basis(n, ell);
      Partition box(np > 0 ? n : 0, np);
      for (auto& l : B) {
        REll t = oh_trace(OH::basis(n, ell, l));
        tr.expect(l == box ? t == REll::one(ell) : t.zero(), [&] { return nl(n, ell) + " " + pstr(l); });
      }
      auto G = trace_gram(n, ell);
      for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j) {
          bool pairq = B[j] == complement(B[i], n, np);
          gram.expect(pairq ? (G[i][j] == 1 || G[i][j] == -1) : G[i][j] == 0,
                      [&] { return nl(n, ell) + " " + pstr(B[i]) + "," + pstr(B[j]); });
        }
      for (int k = 0; k <= n * np + 2; ++k)
        for (auto& l : partitions_of(k)) {
          if (static_cast<int>(l.size()) > n) continue;
          bool inbox = l.empty() || l.front() <= np;
          auto sb = oh_bar(OH::basis(n, ell, l));
          bar.expect(inbox ? sb == std::map<Partition, i64>{{l, 1}} : sb.empty(),
                     [&] { return nl(n, ell) + " " + pstr(l); });
        }

      for (int t = 0; t < 6; ++t) {
        OH a = random_oh(rng, n, ell), x = random_oh(rng, n, ell), y = random_oh(rng, n, ell);
        assoc.expect(oh_mul(oh_mul(a, x), y) == oh_mul(a, oh_mul(x, y)), [&] { return nl(n, ell) + " " + a.str(); });
        OH c1 = OH::from_r(n, ell, REll::c(ell));
        OH ae(n, ell), ao(n, ell);
        for (auto& [l, r] : a.t) {
          if (!r.even.empty()) ((psize(l) & 1) ? ao : ae).add(l, r.even_part());
          if (!r.odd.empty()) ((psize(l) & 1) ? ae : ao).add(l, r.odd_part());
        }
        cent.expect(oh_mul(c1, ae) == oh_mul(ae, c1) && oh_mul(c1, ao) == -1 * oh_mul(ao, c1),
                    [&] { return nl(n, ell) + " " + a.str(); });
        OH pa2 = psi_iso(a, true), px = psi_iso(x, true);
        hom.expect(psi_iso(oh_mul(a, x), true) == oh_mul(pa2, px), [&] { return nl(n, ell) + " " + a.str(); });
        hom.expect(psi_iso(oh_mul(a, x), false) == oh_mul(psi_iso(a, false), psi_iso(x, false)),
                   [&] { return "inverse " + nl(n, ell) + " " + a.str(); });
        al.expect(alpha(oh_mul(a, x)) == alpha(a) * alpha(x), [&] { return nl(n, ell) + " " + a.str(); });
      }
      for (auto& l : B) {
        OH s = OH::basis(n, ell, l);
        inv.expect(psi_iso(psi_iso(s, true), false) == s && psi_iso(psi_iso(s, false), true) == s,
                   [&] { return nl(n, ell) + " " + pstr(l); });
        if (!l.empty()) al.expect(alpha(s).zero(), [&] { return nl(n, ell) + " " + pstr(l); });
      }
      for (int r = 0; r <= ell + 1; ++r) {
        al.expect(alpha(OH::from_r(n, ell, rell_e(ell, r))) == rell_e(np, r),
                  [&] { return nl(n, ell) + " e" + std::to_string(r); });
        OH want(np, ell);
        for (int s = 0; s <= r; ++s)
          want += sg(static_cast<long>(n + r) * (r - s)) * oh_from_sym(np, ell, sym_h(r - s)).times_r(rell_e(ell, s));
        pe.expect(psi_iso(oh_from_sym(n, ell, e_elem(r)), true) == want,
                  [&] { return nl(n, ell) + " r=" + std::to_string(r); });
      }
      OH odot = OH::from_r(n, ell, rell_e(ell, 1));
      for (int r = 1; r <= 4; ++r) {
        i64 f = 1 + sg(n + r);
        auto check = [&](const char* nm, const Sym& fr, const Sym& fr1, long sgn2) {
          OH lhs = delta_auto(oh_from_sym(n, ell, fr));
          OH rhs = sg(static_cast<long>(ell) * r) * oh_from_sym(n, ell, fr) +
                   (sg(sgn2) * f) * oh_mul(oh_from_sym(n, ell, fr1), odot);
          del.expect(lhs == rhs, [&] { return nl(n, ell) + " " + nm + std::to_string(r) + ": " + lhs.str(); });
        };
        long lh = static_cast<long>(ell) * (r - 1), le = static_cast<long>(ell + 1) * (r - 1);
        check("h", sym_h(r), sym_h(r - 1), lh);
        check("e", e_elem(r), e_elem(r - 1), le);
        check("eps", gamma(e_elem(r)), gamma(e_elem(r - 1)), lh);
        check("eta", gamma(sym_h(r)), gamma(sym_h(r - 1)), le);
      }
      OH d1 = delta_auto(oh_from_sym(n, ell, sym_h(1)));
      OH w = sg(ell) * oh_from_sym(n, ell, sym_h(1)) + (1 - sg(n)) * odot;
      del.expect(d1 == w, [&] { return nl(n, ell) + " o"; });
      del.expect(delta_auto(OH::one(n, ell)) == OH::one(n, ell), [&] { return nl(n, ell) + " 1"; });
    }
  rep.checks = {rk, pres, kill, rimg, assoc, cent, tr, gram, inv, hom, pe, del, al, bar};
  return rep;
}

}  // namespace oddsym
