#include <stdexcept>

#include "oddsym/rouquier.hpp"
#include "oddsym/uqpi.hpp"
#include "oddsym/verify.hpp"

namespace oddsym {

namespace {
int bound(int v, int dflt) { return v < 0 ? dflt : v; }
std::string lk(int ell, int k) { return "ell=" + std::to_string(ell) + " k=" + std::to_string(k); }

i64 eval1(const GP& x) {
  i64 s = 0;
  for (auto& [key, c] : x.terms()) s += c;
  return s;
}

struct SrcChecks {
  Check ind{"labels give independent vectors"}, span{"labels outside the boxes add nothing"},
      dim{"graded dimension of each term"}, cl{"differential lands in the next term"},
      sq{"differential squares to zero"}, im{"graded rank of each differential"}, ip{"number of initial pairs"},
      tri{"triangularity on initial pairs"}, conc{"homology vanishes below the top degree"}, top{"top homology"},
      eul{"Euler characteristic is q^{nk} T"};
  std::vector<Check> list() const { return {ind, span, dim, cl, sq, im, ip, tri, conc, top, eul}; }
};

void check_complex(const RouquierComplex& c, SrcChecks& ch) {
  int ell = c.ell, k = c.k, n = c.n;
  auto w = [&] { return lk(ell, k); };
  ch.sq.expect(square_zero(c), w);
  GP euler;
  for (auto& t : c.terms) {
    int d = t.d;
    auto wd = [&] { return lk(ell, k) + " d=" + std::to_string(d); };
    ch.ind.expect(t.independent, wd);
    ch.span.expect(t.spanning, wd);
    ch.dim.expect(term_dim(t) == cpoly(n + k, n, d), wd);
    ch.cl.expect(c.closed[d - c.dmin], wd);
    GP want = d > c.dmin ? bpoly(n + k, n, d) : GP();
    ch.im.expect(image_dim(c, d) == want, [&] {
      return lk(ell, k) + " d=" + std::to_string(d) + " got " + image_dim(c, d).str() + " want " + want.str();
    });
    if (d < n) ch.conc.expect(homology_dim(c, d).zero(), wd);
    euler += (d % 2 ? GP(-1) : GP(1)) * term_dim(t);

    if (k < 0 || d == 0) continue;
    int count = 0;
    auto& dst = c.term(d - 1);
    auto& m = c.diff[d - c.dmin];
    for (size_t j = 0; j < t.labels.size(); ++j) {
      auto& [l, mu] = t.labels[j];
      if (!initial_pair(k, n, d, l, mu)) continue;
      ++count;
      auto target = terminal_of(k, n, d, l, mu);
      bool ok = false;
      for (size_t r = 0; r < dst.labels.size(); ++r) {
        if (m[r][j] == 0) continue;
        if (dst.labels[r] == target) ok = m[r][j] == 1 || m[r][j] == -1;
        else if (!pair_less(dst.labels[r], target)) {
          ok = false;
          break;
        }
      }
      ch.tri.expect(ok, [&] { return lk(ell, k) + " d=" + std::to_string(d) + " lambda=" + pstr(l) + " mu=" + pstr(mu); });
    }
    ch.ip.expect(count == eval1(bpoly(n + k, n, d)), wd);
  }
  ch.top.expect(homology_dim(c, n) == pq2(c2(n + 1) + static_cast<i64>(n) * k), w);
  ch.eul.expect(euler == GP::q(n * k) * t_coeff(ell, n), w);
}
}  // namespace

SuiteReport verify_src(const RouquierComplex& c) {
  SuiteReport rep{"rouquier"};
  SrcChecks ch;
  check_complex(c, ch);
  rep.checks = ch.list();
  return rep;
}

SuiteReport verify_rouquier(const Bounds& b) {
  SuiteReport rep{"rouquier"};
  int L = bound(b.max_ell, 5);
  Check adm{"inadmissible weights are rejected"};
  for (auto [ell, k] : {std::pair{2, 1}, {1, 3}, {3, -5}, {-1, 1}}) {
    bool threw = false;
    try {
      build_complex(ell, k);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    adm.expect(threw, [&] { return lk(ell, k); });
  }
  SrcChecks ch;
  for (int ell = 0; ell <= L; ++ell)
    for (int k = -ell; k <= ell; k += 2) check_complex(build_complex(ell, k), ch);
  rep.checks = ch.list();
  rep.checks.insert(rep.checks.begin(), adm);
  return rep;
}

}  // namespace oddsym
