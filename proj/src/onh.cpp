#include "oddsym/onh.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "oddsym/memo.hpp"

namespace oddsym {

OPol OPol::one(int n) { return mono(n, Expo(n, 0)); }

OPol OPol::var(int n, int i) {
  Expo k(n, 0);
  k.at(i - 1) = 1;
  return mono(n, k);
}

OPol OPol::mono(int n, const Expo& k, i64 coeff) {
  OPol p(n);
  p.add(k, coeff);
  return p;
}

void OPol::add(const Expo& k, i64 v) {
  if (!v) return;
  auto it = c.find(k);
  if (it == c.end()) c.emplace(k, v);
  else if ((it->second += v) == 0) c.erase(it);
}

OPol& OPol::operator+=(const OPol& o) {
  if (o.n != n) throw std::invalid_argument("OPol: variable counts differ");
  for (auto& [k, v] : o.c) add(k, v);
  return *this;
}

OPol& OPol::operator-=(const OPol& o) {
  if (o.n != n) throw std::invalid_argument("OPol: variable counts differ");
  for (auto& [k, v] : o.c) add(k, -v);
  return *this;
}

OPol OPol::operator-() const { return -1 * *this; }

OPol operator*(i64 s, const OPol& a) {
  OPol r(a.n);
  if (s)
    for (auto& [k, v] : a.c) r.c.emplace(k, s * v);
  return r;
}

int expo_deg(const Expo& k) { return std::accumulate(k.begin(), k.end(), 0); }

int mono_sign(const Expo& a, const Expo& b) {
  long s = 0, tail = 0;
  for (size_t j = a.size(); j-- > 0;) {
    s += tail * b[j];
    tail += a[j];
  }
  return s % 2 ? -1 : 1;
}

OPol operator*(const OPol& a, const OPol& b) {
  if (a.n != b.n) throw std::invalid_argument("OPol: variable counts differ");
  OPol r(a.n);
  for (auto& [ka, va] : a.c)
    for (auto& [kb, vb] : b.c) {
      Expo k(a.n);
      for (int i = 0; i < a.n; ++i) k[i] = ka[i] + kb[i];
      r.add(k, mono_sign(ka, kb) * va * vb);
    }
  return r;
}

std::string OPol::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    i64 v = it->second;
    os << (v < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    i64 a = v < 0 ? -v : v;
    bool bare = expo_deg(it->first) == 0;
    if (a != 1 || bare) os << a;
    bool need = a != 1;
    for (int i = 0; i < n; ++i) {
      int e = it->first[i];
      if (!e) continue;
      os << (need ? "*" : "") << "x" << i + 1;
      if (e > 1) os << "^" << e;
      need = true;
    }
    first = false;
  }
  return os.str();
}

nlohmann::json OPol::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [k, v] : c) terms.push_back({{"exponents", k}, {"coeff", v}});
  return {{"n", n}, {"terms", terms}};
}

namespace {
// product of single-variable powers in the given order, as a signed monomial
std::pair<Expo, int> ordered_product(int n, const std::vector<std::pair<int, int>>& factors) {
  Expo acc(n, 0);
  int sign = 1;
  for (auto [i, e] : factors) {
    Expo b(n, 0);
    b[i] = e;
    sign *= mono_sign(acc, b);
    acc[i] += e;
  }
  return {acc, sign};
}
}  // namespace

OPol sn_act(const Perm& w, const OPol& f) {
  int n = f.n;
  int len = perm_len(w);
  OPol r(n);
  for (auto& [k, v] : f.c) {
    std::vector<std::pair<int, int>> fac;
    int sign = 1;
    for (int i = 0; i < n; ++i) {
      if (!k[i]) continue;
      if ((len + w[i] - i) % 2 != 0 && k[i] % 2) sign = -sign;
      fac.push_back({w[i], k[i]});
    }
    auto [e, s] = ordered_product(n, fac);
    r.add(e, sign * s * v);
  }
  return r;
}

OPol opol_gamma(const OPol& f) {
  int n = f.n;
  OPol r(n);
  for (auto& [k, v] : f.c) {
    std::vector<std::pair<int, int>> fac;
    for (int i = 0; i < n; ++i)
      if (k[i]) fac.push_back({n - 1 - i, k[i]});
    auto [e, s] = ordered_product(n, fac);
    r.add(e, s * v);
  }
  return r;
}

OPol opol_star(const OPol& f) {
  OPol r(f.n);
  for (auto& [k, v] : f.c) {
    long e = 0;
    for (int x : k) e += static_cast<long>(x) * (x - 1) / 2;
    r.add(k, e % 2 ? -v : v);
  }
  return r;
}

namespace {
OPol left_var(int n, int i, const OPol& g) { return OPol::var(n, i) * g; }

OPol demazure_mono(int j, const Expo& k) {
  static Memo<std::pair<int, Expo>, OPol> memo;
  return memo.get({j, k}, [&] {
    int n = static_cast<int>(k.size());
    OPol r(n);
    int i = 0;
    while (i < n && !k[i]) ++i;
    if (i == n) return r;
    Expo g = k;
    --g[i];
    int ii = i + 1;
    if (ii == j) r.add(g, 1);
    if (ii == j + 1) r.add(g, -1);
    OPol dg = demazure_mono(j, g);
    if (dg.zero()) return r;
    if (ii == j) r += left_var(n, j + 1, dg);
    else if (ii == j + 1) r += left_var(n, j, dg);
    else r -= left_var(n, ii, dg);
    return r;
  });
}

OPol right_tau_mono(int j, const Expo& k) {
  static Memo<std::pair<int, Expo>, OPol> memo;
  return memo.get({j, k}, [&] {
    int n = static_cast<int>(k.size());
    OPol r(n);
    int i = n - 1;
    while (i >= 0 && !k[i]) --i;
    if (i < 0) return r;
    Expo g = k;
    --g[i];
    int ii = i + 1;
    // (g x_i).t = g (x_i.t) + (g.t) (s_j x_i)
    if (ii == j) r.add(g, 1);
    if (ii == j + 1) r.add(g, -1);
    OPol gt = right_tau_mono(j, g);
    if (gt.zero()) return r;
    if (ii == j) r += gt * OPol::var(n, j + 1);
    else if (ii == j + 1) r += gt * OPol::var(n, j);
    else r -= gt * OPol::var(n, ii);
    return r;
  });
}
}  // namespace

OPol demazure(int j, const OPol& f) {
  if (j < 1 || j >= f.n) throw std::invalid_argument("demazure: index out of range");
  OPol r(f.n);
  for (auto& [k, v] : f.c) r += v * demazure_mono(j, k);
  return r;
}

ONHWord parse_word(const std::string& s) {
  ONHWord w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 't')) throw std::invalid_argument("bad generator: " + tok);
    Gen g;
    g.tau = tok[0] == 't';
    g.i = std::stoi(tok.substr(1));
    w.g.push_back(g);
  }
  return w;
}

std::string word_str(const ONHWord& w) {
  std::ostringstream os;
  if (w.coeff != 1) os << w.coeff << (w.g.empty() ? "" : " ");
  for (size_t k = 0; k < w.g.size(); ++k) os << (k ? " " : "") << (w.g[k].tau ? 't' : 'x') << w.g[k].i;
  if (w.g.empty() && w.coeff == 1) os << "1";
  return os.str();
}

ONHWord tau_word(const std::vector<int>& letters) {
  ONHWord w;
  for (int i : letters) w.g.push_back({true, i});
  return w;
}

ONHWord concat(const ONHWord& a, const ONHWord& b) {
  ONHWord r = a;
  r.g.insert(r.g.end(), b.g.begin(), b.g.end());
  r.coeff = a.coeff * b.coeff;
  return r;
}

int word_parity(const ONHWord& w) { return static_cast<int>(w.g.size() % 2); }

OPol onh_apply(const ONHWord& w, const OPol& f) {
  OPol r = f;
  for (size_t k = w.g.size(); k-- > 0;) {
    const Gen& g = w.g[k];
    if (g.i < 1 || g.i > f.n - (g.tau ? 1 : 0)) throw std::invalid_argument("generator index out of range");
    r = g.tau ? demazure(g.i, r) : OPol::var(f.n, g.i) * r;
  }
  return w.coeff * r;
}

OPol right_action(const OPol& f, const ONHWord& w) {
  OPol r = f;
  for (const Gen& g : w.g) {
    if (g.i < 1 || g.i > f.n - (g.tau ? 1 : 0)) throw std::invalid_argument("generator index out of range");
    if (!g.tau) {
      r = r * OPol::var(f.n, g.i);
      continue;
    }
    OPol s(f.n);
    for (auto& [k, v] : r.c) s += v * right_tau_mono(g.i, k);
    r = s;
  }
  return w.coeff * r;
}

std::vector<int> wn_word(int n) {
  std::vector<int> w;
  for (int lo = 1; lo < n; ++lo)
    for (int j = n - 1; j >= lo; --j) w.push_back(j);
  return w;
}

ONHWord omega(int n) { return tau_word(wn_word(n)); }

OPol xi(int n) {
  // x_{n-1} x_{n-2}^2 ... x_1^{n-1}
  std::vector<std::pair<int, int>> fac;
  for (int i = n - 2; i >= 0; --i) fac.push_back({i, n - 1 - i});
  auto [k, s] = ordered_product(n, fac);
  return OPol::mono(n, k, s);
}

ONHWord tau_of(const Perm& w) {
  int n = static_cast<int>(w.size());
  if (w == longest(n)) return omega(n);
  return tau_word(reduced_word(w));
}

OPol schubert(const Perm& w) {
  static Memo<Perm, OPol> memo;
  return memo.get(w, [&] {
    int n = static_cast<int>(w.size());
    return onh_apply(tau_of(perm_mul(perm_inv(w), longest(n))), xi(n));
  });
}

OPol schur_poly(const Partition& l, int n) {
  if (static_cast<int>(l.size()) > n) return OPol(n);
  Expo k(n, 0);
  for (size_t i = 0; i < l.size(); ++i) k[i] = l[i];
  return onh_apply(omega(n), xi(n) * OPol::mono(n, k));
}

OPol e_poly(int n, int r) {
  OPol p(n);
  if (r < 0 || r > n) return p;
  std::vector<int> sel(n, 0);
  std::fill(sel.end() - r, sel.end(), 1);
  do p.add(Expo(sel.begin(), sel.end()), 1);
  while (std::next_permutation(sel.begin(), sel.end()));
  return p;
}

OPol h_poly(int n, int r) {
  static Memo<std::pair<int, int>, OPol> memo;
  return memo.get({n, r}, [&] {
    OPol p(n);
    if (r < 0) return p;
    // i_r >= ... >= i_1; factors are written with the largest index first
    std::vector<int> idx(r, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
      if (pos == r) {
        std::vector<std::pair<int, int>> fac;
        for (int t = r - 1; t >= 0; --t) fac.push_back({idx[t], 1});
        auto [e, s] = ordered_product(n, fac);
        p.add(e, s);
        return;
      }
      for (int i = lo; i < n; ++i) {
        idx[pos] = i;
        rec(pos + 1, i);
      }
    };
    rec(0, 0);
    return p;
  });
}

namespace {
OPol e_prod(int n, const Partition& l) {
  static Memo<std::pair<int, Partition>, OPol> memo;
  if (l.empty()) return OPol::one(n);
  return memo.get({n, l}, [&] {
    Partition head(l.begin(), l.end() - 1);
    return e_prod(n, head) * e_poly(n, l.back());
  });
}
}  // namespace

OPol sym_to_opol(const Sym& x, int n) {
  OPol r(n);
  for (auto& [l, c] : truncate(x, n)) r += c * e_prod(n, l);
  return r;
}

Sym opol_to_schur(const OPol& f, bool* ok) {
  Sym out;
  OPol rem = f;
  *ok = true;
  while (!rem.zero()) {
    auto it = rem.c.rbegin();
    Expo k = it->first;
    i64 v = it->second;
    if (!std::is_sorted(k.rbegin(), k.rend())) {
      *ok = false;
      return out;
    }
    Partition l = trim(k);
    OPol s = schur_poly(l, f.n);
    auto lt = s.c.rbegin();
    if (lt == s.c.rend() || lt->first != k || lt->second != 1) throw std::logic_error("odd Schur polynomial not unitriangular");
    rem -= v * s;
    sym_add(out, l, v);
  }
  return out;
}

std::map<Perm, Sym> decompose_over_osym(const OPol& f) {
  int n = f.n;
  std::map<int, std::vector<Perm>> by_len;
  for (auto& w : all_perms(n)) by_len[perm_len(w)].push_back(w);
  std::map<Perm, Sym> out;
  OPol rem = f;
  for (auto it = by_len.rbegin(); it != by_len.rend(); ++it) {
    OPol strip(n);
    for (auto& w : it->second) {
      ONHWord tw = tau_of(w);
      OPol unit = onh_apply(tw, schubert(w));
      i64 cw = unit.c.size() == 1 ? unit.c.begin()->second : 0;
      if (cw != 1 && cw != -1) throw std::logic_error("decompose: tau_w does not normalise p_w");
      OPol b = cw * onh_apply(tw, rem);
      bool ok;
      Sym bs = opol_to_schur(b, &ok);
      if (!ok) throw std::logic_error("decompose: coefficient is not symmetric");
      if (b.zero()) continue;
      out[w] = from_schur(bs);
      strip += schubert(w) * b;
    }
    rem -= strip;
  }
  if (!rem.zero()) throw std::logic_error("decompose: nonzero remainder");
  return out;
}

}  // namespace oddsym
