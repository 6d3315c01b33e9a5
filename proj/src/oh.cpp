#include "oddsym/oh.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "oddsym/memo.hpp"

namespace oddsym {

namespace {
i64 sg(long k) { return (k & 1) ? -1 : 1; }

Partition merge(const Partition& a, const Partition& b) {
  Partition r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.rbegin(), r.rend());
  return r;
}

void addto(std::map<Partition, i64>& m, const Partition& k, i64 v) {
  if (!v) return;
  auto& x = m[k];
  x += v;
  if (!x) m.erase(k);
}

std::string gmono(const Partition& k) {
  if (k.empty()) return "";
  std::ostringstream os;
  for (size_t i = 0; i < k.size();) {
    size_t j = i;
    while (j < k.size() && k[j] == k[i]) ++j;
    os << "g" << k[i];
    if (j - i > 1) os << "^" << j - i;
    i = j;
  }
  return os.str();
}
}  // namespace

REll REll::one(int ell) { return scalar(ell, 1); }
REll REll::scalar(int ell, i64 v) {
  REll r(ell);
  r.add_even({}, v);
  return r;
}
REll REll::g(int ell, int k) {
  REll r(ell);
  r.add_even(k ? Partition{k} : Partition{}, 1);
  return r;
}
REll REll::c(int ell) {
  REll r(ell);
  r.add_odd({}, 1);
  return r;
}

void REll::add_even(const Partition& k, i64 v) {
  if (!k.empty() && k.front() > m()) return;
  addto(even, k, v);
}
void REll::add_odd(const Partition& k, i64 v) {
  if (!k.empty() && k.front() > m()) return;
  if (ell % 2 == 0 && (m() == 0 || std::find(k.begin(), k.end(), m()) != k.end())) return;
  addto(odd, k, v);
}
REll& REll::operator+=(const REll& o) {
  for (auto& [k, v] : o.even) add_even(k, v);
  for (auto& [k, v] : o.odd) add_odd(k, v);
  return *this;
}
REll& REll::operator-=(const REll& o) {
  for (auto& [k, v] : o.even) add_even(k, -v);
  for (auto& [k, v] : o.odd) add_odd(k, -v);
  return *this;
}
REll operator*(i64 s, const REll& a) {
  REll r(a.ell);
  if (!s) return r;
  for (auto& [k, v] : a.even) r.add_even(k, s * v);
  for (auto& [k, v] : a.odd) r.add_odd(k, s * v);
  return r;
}
REll operator*(const REll& a, const REll& b) {
  REll r(a.ell);
  for (auto& [k, v] : a.even) {
    for (auto& [k2, v2] : b.even) r.add_even(merge(k, k2), v * v2);
    for (auto& [k2, v2] : b.odd) r.add_odd(merge(k, k2), v * v2);
  }
  for (auto& [k, v] : a.odd)
    for (auto& [k2, v2] : b.even) r.add_odd(merge(k, k2), v * v2);
  return r;
}
REll REll::even_part() const {
  REll r(ell);
  r.even = even;
  return r;
}
REll REll::odd_part() const {
  REll r(ell);
  r.odd = odd;
  return r;
}
i64 REll::constant() const {
  auto it = even.find({});
  return it == even.end() ? 0 : it->second;
}
std::string REll::str() const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto put = [&](const Partition& k, i64 v, bool odd) {
    std::string m = gmono(k);
    if (odd) m = m.empty() ? "c" : "c*" + m;
    os << (v < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    i64 a = v < 0 ? -v : v;
    if (m.empty()) os << a;
    else {
      if (a != 1) os << a << "*";
      os << m;
    }
    first = false;
  };
  for (auto& [k, v] : even) put(k, v, false);
  for (auto& [k, v] : odd) put(k, v, true);
  return os.str();
}

REll rell_e(int ell, int r) {
  REll x(ell);
  if (r < 0) return x;
  int k = r / 2;
  if (r % 2 == 0) return sg(k) * REll::g(ell, k);
  return sg(k) * (REll::g(ell, k) * REll::c(ell));
}

REll rell_from_osym(const Sym& x, int ell) {
  static Memo<std::pair<int, Partition>, REll> cache;
  REll out(ell);
  for (auto& [l, c] : to_e(x)) {
    REll img = cache.get({ell, l}, [&] {
      REll p = REll::one(ell);
      for (int part : l) p = p * rell_e(ell, part);
      return p;
    });
    out += c * img;
  }
  return out;
}

REll rell_h(int ell, int r) {
  if (r < 0) return REll(ell);
  return rell_from_osym(sym_h(r), ell);
}

REll retruncate(const REll& x, int ell2) {
  REll r(ell2);
  for (auto& [k, v] : x.even) r.add_even(k, v);
  for (auto& [k, v] : x.odd) r.add_odd(k, v);
  return r;
}

std::vector<REll> rell_monomials(int ell, int d) {
  std::vector<REll> out;
  if (d < 0 || d % 2) return out;
  int m = ell / 2;
  for (int odd = 0; odd <= 1; ++odd) {
    int rest = d - 2 * odd;
    if (rest < 0 || rest % 4) continue;
    for (auto& k : partitions_of(rest / 4)) {
      if (!k.empty() && k.front() > m) continue;
      REll r(ell);
      if (odd) r.add_odd(k, 1);
      else r.add_even(k, 1);
      if (!r.zero()) out.push_back(r);
    }
  }
  return out;
}

OH OH::one(int n, int ell) { return from_r(n, ell, REll::one(ell)); }
OH OH::from_r(int n, int ell, const REll& r) {
  OH a(n, ell);
  a.add({}, r);
  return a;
}
void OH::add(const Partition& l, const REll& r) {
  if (r.zero()) return;
  auto it = t.find(l);
  if (it == t.end()) {
    t.emplace(l, r);
    return;
  }
  it->second += r;
  if (it->second.zero()) t.erase(it);
}
OH& OH::operator+=(const OH& o) {
  for (auto& [l, r] : o.t) add(l, r);
  return *this;
}
OH& OH::operator-=(const OH& o) {
  for (auto& [l, r] : o.t) add(l, -1 * r);
  return *this;
}
OH operator*(i64 s, const OH& a) {
  OH r(a.n, a.ell);
  for (auto& [l, x] : a.t) r.add(l, s * x);
  return r;
}
OH OH::times_r(const REll& r) const {
  OH o(n, ell);
  for (auto& [l, x] : t) o.add(l, x * r);
  return o;
}
std::string OH::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [l, r] : t) {
    os << (first ? "" : " + ") << "s" << pstr(l) << "(x)(" << r.str() << ")";
    first = false;
  }
  return os.str();
}
nlohmann::json OH::to_json() const {
  auto poly = [](const std::map<Partition, i64>& m) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [k, v] : m) a.push_back({{"g", k}, {"coeff", v}});
    return a;
  };
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [l, r] : t)
    terms.push_back({{"lambda", part_json(l)}, {"r_even", poly(r.even)}, {"r_odd", poly(r.odd)}, {"coeff", 1}});
  return {{"n", n}, {"ell", ell}, {"terms", terms}};
}

int nprime(int n, int ell) { return ell - n; }
std::vector<Partition> oh_basis(int n, int ell) { return enum_grpar(n, ell - n); }

namespace {
// normal form of s_l (x) 1
OH reduce(int n, int ell, const Partition& l) {
  static Memo<std::tuple<int, int, Partition>, OH> cache;
  if (static_cast<int>(l.size()) > n) return OH(n, ell);
  int np = ell - n;
  if (l.empty() || l.front() <= np) return OH::basis(n, ell, l);
  return cache.get({n, ell, l}, [&] {
    std::map<Partition, REll> raw;
    for (auto& [mu, c] : schur(l)) {
      if (mu.front() <= np) throw std::logic_error("oh reduction: leading factor within the box");
      Partition rest(mu.begin() + 1, mu.end());
      int pr = psize(rest) & 1;
      for (int s = 1; s <= mu.front(); ++s) {
        REll es = rell_e(ell, s);
        if (es.zero()) continue;
        std::vector<int> word{mu.front() - s};
        word.insert(word.end(), rest.begin(), rest.end());
        i64 k = -c * sg(s) * sg(static_cast<long>(s) * pr);
        for (auto& [nu, v] : to_schur(straighten(word))) {
          if (static_cast<int>(nu.size()) > n) continue;
          auto it = raw.try_emplace(nu, REll(ell)).first;
          it->second += (k * v) * es;
        }
      }
    }
    return oh_normalize(n, ell, raw);
  });
}
}  // namespace

OH OH::basis(int n, int ell, const Partition& l0) {
  Partition l = trim(l0);
  int np = ell - n;
  if (static_cast<int>(l.size()) <= n && (l.empty() || l.front() <= np)) {
    OH a(n, ell);
    a.add(l, REll::one(ell));
    return a;
  }
  return reduce(n, ell, l);
}

OH oh_normalize(int n, int ell, const std::map<Partition, REll>& raw) {
  OH out(n, ell);
  for (auto& [l, r] : raw) {
    if (r.zero()) continue;
    out += reduce(n, ell, l).times_r(r);
  }
  return out;
}

OH oh_from_sym(int n, int ell, const Sym& x) {
  std::map<Partition, REll> raw;
  for (auto& [l, c] : to_schur(x))
    if (static_cast<int>(l.size()) <= n) raw.emplace(l, REll::scalar(ell, c));
  return oh_normalize(n, ell, raw);
}

OH oh_mul(const OH& a, const OH& b) {
  if (a.n != b.n || a.ell != b.ell) throw std::invalid_argument("oh_mul: mismatched (n, ell)");
  std::map<Partition, REll> raw;
  for (auto& [l, r] : a.t)
    for (auto& [m, r2] : b.t) {
      REll rr = (r.even_part() + sg(psize(m)) * r.odd_part()) * r2;
      if (rr.zero()) continue;
      for (auto& [nu, v] : lr(l, m)) {
        if (static_cast<int>(nu.size()) > a.n) continue;
        auto it = raw.try_emplace(nu, REll(a.ell)).first;
        it->second += v * rr;
      }
    }
  return oh_normalize(a.n, a.ell, raw);
}

REll oh_trace(const OH& a) {
  Partition box(a.ell - a.n > 0 ? a.n : 0, a.ell - a.n);
  auto it = a.t.find(box);
  return it == a.t.end() ? REll(a.ell) : it->second;
}

namespace {
// image of h_r (x) 1 under psi (forward) or its inverse
OH psi_h(int n, int ell, bool fwd, int r) {
  static Memo<std::tuple<int, int, bool, int>, OH> cache;
  return cache.get({n, ell, fwd, r}, [&] {
    int tn = ell - n;
    OH out(tn, ell);
    for (int s = 0; s <= r; ++s) {
      long e = fwd ? static_cast<long>(n + 1) * (r - s) : static_cast<long>(tn + r) * (r - s) + static_cast<long>(tn) * s;
      REll hs = rell_h(ell, s);
      if (hs.zero()) continue;
      out += sg(e) * oh_from_sym(tn, ell, e_elem(r - s)).times_r(hs);
    }
    return out;
  });
}

OH psi_schur(int n, int ell, bool fwd, const Partition& l) {
  static Memo<std::tuple<int, int, bool, Partition>, OH> cache;
  return cache.get({n, ell, fwd, l}, [&] {
    int tn = ell - n;
    OH out(tn, ell);
    for (auto& [mu, c] : schur(l)) {
      OH p = OH::one(tn, ell);
      for (int part : mu) p = oh_mul(p, psi_h(n, ell, fwd, part));
      out += c * p;
    }
    return out;
  });
}
}  // namespace

OH psi_iso(const OH& a, bool forward) {
  OH out(a.ell - a.n, a.ell);
  for (auto& [l, r] : a.t) out += psi_schur(a.n, a.ell, forward, l).times_r(r);
  return out;
}

OH delta_auto(const OH& a) { return psi_iso(psi_iso(a, true), true); }

REll alpha(const OH& a) {
  int np = a.ell - a.n;
  auto it = a.t.find({});
  return it == a.t.end() ? REll(np) : retruncate(it->second, np);
}

std::map<Partition, i64> oh_bar(const OH& a) {
  std::map<Partition, i64> out;
  for (auto& [l, r] : a.t)
    if (i64 c = r.constant()) out[l] = c;
  return out;
}

Partition complement(const Partition& l, int n, int np) {
  Partition r(n);
  for (int i = 0; i < n; ++i) {
    int j = n - 1 - i;
    r[i] = np - (j < static_cast<int>(l.size()) ? l[j] : 0);
  }
  return trim(r);
}

std::vector<std::vector<i64>> trace_gram(int n, int ell) {
  auto B = oh_basis(n, ell);
  std::vector<OH> b;
  for (auto& l : B) b.push_back(OH::basis(n, ell, l));
  std::vector<std::vector<i64>> g(B.size(), std::vector<i64>(B.size(), 0));
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j) g[i][j] = oh_trace(oh_mul(b[i], b[j])).constant();
  return g;
}

}  // namespace oddsym
