#include "oddsym/osym.hpp"

#include "oddsym/memo.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace oddsym {

std::recursive_mutex& memo_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

namespace {
int par(int r) { return r & 1; }
}  // namespace

void sym_add(Sym& a, const Partition& l, i64 c) {
  if (!c) return;
  auto it = a.find(l);
  if (it == a.end()) {
    a.emplace(l, c);
  } else if ((it->second += c) == 0) {
    a.erase(it);
  }
}

void sym_axpy(Sym& a, i64 c, const Sym& b) {
  if (!c) return;
  for (auto& [l, x] : b) sym_add(a, l, c * x);
}

Sym sym_scale(i64 c, const Sym& a) {
  Sym r;
  sym_axpy(r, c, a);
  return r;
}

Sym sym_one() { return Sym{{Partition{}, 1}}; }

Sym sym_h(int r) {
  if (r < 0) return {};
  if (r == 0) return sym_one();
  return Sym{{Partition{r}, 1}};
}

int sym_parity(const Partition& l) { return psize(l) & 1; }

static Sym straighten_rec(const std::vector<int>& w) {
  static Memo<std::vector<int>, Sym> memo;
  return memo.get(w, [&]() {
    size_t i = 0;
    while (i + 1 < w.size() && w[i] >= w[i + 1]) ++i;
    if (i + 1 >= w.size()) return Sym{{w, 1}};
    int r = w[i], s = w[i + 1];
    std::vector<std::pair<i64, std::pair<int, int>>> rep;
    if (par(r) == par(s)) {
      rep.push_back({1, {s, r}});
    } else if (par(r) == 0) {
      rep.push_back({1, {s, r}});
      for (int t = 1; t <= r; ++t) rep.push_back({2 * ((c2(t) & 1) ? -1 : 1), {s + t, r - t}});
    } else {
      rep.push_back({-1, {s, r}});
      for (int t = 1; t <= r; ++t) rep.push_back({-2 * ((c2(t + 1) & 1) ? -1 : 1), {s + t, r - t}});
    }
    Sym out;
    for (auto& [c, ab] : rep) {
      std::vector<int> nw(w.begin(), w.begin() + i);
      nw.push_back(ab.first);
      if (ab.second) nw.push_back(ab.second);
      nw.insert(nw.end(), w.begin() + i + 2, w.end());
      sym_axpy(out, c, straighten_rec(nw));
    }
    return out;
  });
}

Sym straighten(const std::vector<int>& word, i64 coeff) {
  std::vector<int> w;
  for (int x : word) {
    if (x < 0) return {};
    if (x) w.push_back(x);
  }
  return sym_scale(coeff, straighten_rec(w));
}

Sym mul(const Sym& a, const Sym& b) {
  Sym r;
  for (auto& [l, x] : a)
    for (auto& [m, y] : b) {
      std::vector<int> w = l;
      w.insert(w.end(), m.begin(), m.end());
      sym_axpy(r, x * y, straighten_rec(w));
    }
  return r;
}

Sym e_elem(int r) {
  static Memo<int, Sym> memo;
  if (r < 0) return {};
  if (r == 0) return sym_one();
  return memo.get(r, [&]() {
    Sym acc;
    for (int s = 0; s < r; ++s) sym_axpy(acc, (s & 1) ? -1 : 1, mul(e_elem(s), sym_h(r - s)));
    return sym_scale((r + 1) & 1 ? -1 : 1, acc);
  });
}

Sym e_mono(const Partition& l) {
  static Memo<Partition, Sym> memo;
  return memo.get(l, [&]() {
    Sym r = sym_one();
    for (int x : l) r = mul(r, e_elem(x));
    return r;
  });
}

Sym psi(const Sym& x) {
  Sym r;
  for (auto& [l, c] : x) sym_axpy(r, (psize(l) & 1) ? -c : c, e_mono(l));
  return r;
}

Sym to_e(const Sym& x) {
  Sym r;
  for (auto& [l, c] : psi(x)) sym_add(r, l, (psize(l) & 1) ? -c : c);
  return r;
}

Sym from_e(const Sym& xe) {
  Sym r;
  for (auto& [l, c] : xe) sym_axpy(r, c, e_mono(l));
  return r;
}

Sym gamma(const Sym& x) {
  Sym xe;
  for (auto& [l, c] : to_e(x)) {
    long s = 0;
    for (int p : l) s += c2(p);
    sym_add(xe, l, (s & 1) ? -c : c);
  }
  return from_e(xe);
}

Sym star(const Sym& x) {
  Sym xe;
  for (auto& [l, c] : to_e(x)) {
    long s = 0;
    for (size_t i = 0; i < l.size(); ++i)
      for (size_t j = i + 1; j < l.size(); ++j) s += par(l[i]) * par(l[j]);
    std::vector<int> rev(l.rbegin(), l.rend());
    // e-words straighten exactly like h-words
    sym_axpy(xe, (s & 1) ? -c : c, straighten(rev));
  }
  return from_e(xe);
}

SymTensor tensor_mul(const SymTensor& a, const SymTensor& b) {
  SymTensor r;
  for (auto& [k1, x] : a)
    for (auto& [k2, y] : b) {
      i64 sg = (sym_parity(k1.second) & sym_parity(k2.first)) ? -1 : 1;
      Sym left = mul(Sym{{k1.first, 1}}, Sym{{k2.first, 1}});
      Sym right = mul(Sym{{k1.second, 1}}, Sym{{k2.second, 1}});
      for (auto& [l, u] : left)
        for (auto& [m, v] : right) {
          auto key = std::make_pair(l, m);
          if ((r[key] += sg * x * y * u * v) == 0) r.erase(key);
        }
    }
  return r;
}

static SymTensor coproduct_h(const Partition& l) {
  static Memo<Partition, SymTensor> memo;
  return memo.get(l, [&]() {
    SymTensor acc{{{Partition{}, Partition{}}, 1}};
    for (int r : l) {
      SymTensor d;
      for (int s = 0; s <= r; ++s) {
        Partition a = s ? Partition{s} : Partition{};
        Partition b = r - s ? Partition{r - s} : Partition{};
        d[{a, b}] = 1;
      }
      acc = tensor_mul(acc, d);
    }
    return acc;
  });
}

SymTensor coproduct(const Sym& x, Side side) {
  SymTensor r;
  for (auto& [l, c] : x)
    for (auto& [k, v] : coproduct_h(l)) {
      auto key = side == Side::minus ? k : std::make_pair(k.second, k.first);
      i64 sg = (side == Side::plus && (sym_parity(k.first) & sym_parity(k.second))) ? -1 : 1;
      if ((r[key] += sg * c * v) == 0) r.erase(key);
    }
  return r;
}

// (h_l, y)^- with y in the h-basis, peeling the first letter of l
static i64 pair_h(const Partition& l, const Sym& y) {
  if (l.empty()) {
    auto it = y.find(Partition{});
    return it == y.end() ? 0 : it->second;
  }
  int r = l[0];
  Partition rest(l.begin() + 1, l.end());
  if (rest.empty()) {
    i64 s = 0;
    for (auto& [m, c] : y)
      if (psize(m) == r) s += c;
    return s;
  }
  Sym yd;
  for (auto& [m, c] : y)
    if (psize(m) == psize(l)) yd[m] = c;
  std::map<Partition, Sym> second;  // first-factor key -> second factor
  i64 total = 0;
  for (auto& [k, v] : coproduct(yd, Side::minus)) {
    if (psize(k.first) != r) continue;
    // (h_r, h_mu)^- = 1 for every mu of size r
    sym_add(second[Partition{}], k.second, v);
  }
  for (auto& [_, z] : second) total += pair_h(rest, z);
  return total;
}

i64 pair(const Sym& x, const Sym& y, Side side) {
  Sym a = x, b = y;
  if (side == Side::plus) {
    // (e_l, e_m)^+ obeys the same recursion as (h_l, h_m)^-
    a = to_e(x);
    b = to_e(y);
  }
  i64 s = 0;
  for (auto& [l, c] : a) s += c * pair_h(l, b);
  return s;
}

namespace {
// Signed count of fillings of l/cur by horizontal strips of sizes m[v], m[v+1], ...
// Adding a strip with value v creates, for each new box, one counted pair with
// every filled box in a lower row, so each step contributes a shape-only sign.
i64 kostka_from(const Partition& l, const Partition& m, size_t v, const Partition& cur) {
  static Memo<std::tuple<Partition, Partition, size_t, Partition>, i64> memo;
  if (v == m.size()) return cur == l ? 1 : 0;
  return memo.get({l, m, v, cur}, [&] {
    size_t h = l.size();
    Partition nu = cur;
    i64 total = 0;
    std::function<void(size_t, int)> strip = [&](size_t i, int left) {
      if (i == h) {
        if (left) return;
        long pairs = 0, below = 0;
        for (size_t r = h; r-- > 0;) {
          pairs += static_cast<long>(nu[r] - cur[r]) * below;
          below += nu[r];
        }
        total += (pairs % 2 ? -1 : 1) * kostka_from(l, m, v + 1, nu);
        return;
      }
      int hi = std::min(l[i], i ? cur[i - 1] : l[i]);
      for (int x = cur[i]; x <= hi && x - cur[i] <= left; ++x) {
        nu[i] = x;
        strip(i + 1, left - (x - cur[i]));
      }
      nu[i] = cur[i];
    };
    strip(0, m[v]);
    return total;
  });
}
}  // namespace

i64 kostka(const Partition& l, const Partition& m) {
  if (psize(l) != psize(m)) return 0;
  return kostka_from(l, m, 0, Partition(l.size(), 0));
}

static const std::vector<std::vector<i64>>& kostka_inverse(int n, std::vector<Partition>& parts) {
  static std::map<int, std::pair<std::vector<Partition>, std::vector<std::vector<i64>>>> cache;
  std::lock_guard<std::recursive_mutex> lk(memo_mutex());
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto ps = partitions_of(n);  // lex decreasing, so dominance-larger comes first
    size_t N = ps.size();
    std::vector<std::vector<i64>> K(N, std::vector<i64>(N)), inv(N, std::vector<i64>(N));
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j) K[i][j] = kostka(ps[i], ps[j]);
    // K is upper unitriangular in this order; solve K inv = I
    for (size_t j = 0; j < N; ++j) {
      for (size_t ii = N; ii-- > 0;) {
        i64 v = (ii == j) ? 1 : 0;
        for (size_t k = ii + 1; k < N; ++k) v -= K[ii][k] * inv[k][j];
        if (K[ii][ii] != 1) throw std::logic_error("kostka matrix not unitriangular");
        inv[ii][j] = v;
      }
    }
    it = cache.emplace(n, std::make_pair(ps, inv)).first;
  }
  parts = it->second.first;
  return it->second.second;
}

Sym schur(const Partition& l) {
  std::vector<Partition> ps;
  auto& inv = kostka_inverse(psize(l), ps);
  size_t j = std::find(ps.begin(), ps.end(), l) - ps.begin();
  Sym r;
  for (size_t i = 0; i < ps.size(); ++i) sym_add(r, ps[i], inv[i][j]);
  return r;
}

Sym from_schur(const Sym& xs) {
  Sym r;
  for (auto& [l, c] : xs) sym_axpy(r, c, schur(l));
  return r;
}

Sym to_schur(const Sym& x) {
  Sym r;
  for (auto& [m, c] : x)
    for (auto& l : partitions_of(psize(m))) sym_add(r, l, c * kostka(l, m));
  return r;
}

Sym lr(const Partition& l, const Partition& m) {
  static Memo<std::pair<Partition, Partition>, Sym> memo;
  return memo.get({l, m}, [&]() { return to_schur(mul(schur(l), schur(m))); });
}

Sym sigma_fn(const Partition& l) { return gamma(schur(l)); }

Sym truncate(const Sym& x, int n) {
  Sym r;
  for (auto& [l, c] : to_e(x))
    if (l.empty() || l[0] <= n) sym_add(r, l, c);
  return r;
}

std::string sym_str(const Sym& x, char basis) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    i64 c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    i64 a = c < 0 ? -c : c;
    if (it->first.empty()) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << basis << pstr(it->first);
  }
  return os.str();
}

nlohmann::json sym_json(const Sym& x, char basis) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [l, c] : x) terms.push_back({{"lambda", l}, {"coeff", c}});
  return {{"basis", std::string(1, basis)}, {"terms", terms}};
}

Sym sym_from_json(const nlohmann::json& j) {
  Sym x;
  for (auto& t : j.at("terms")) sym_add(x, t.at("lambda").get<Partition>(), t.at("coeff").get<i64>());
  std::string b = j.at("basis").get<std::string>();
  if (b == "e") return from_e(x);
  if (b == "s") return from_schur(x);
  if (b != "h") throw std::invalid_argument("unknown basis tag " + b);
  return x;
}

}  // namespace oddsym
