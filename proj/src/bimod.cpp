#include "oddsym/bimod.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include "oddsym/linalg.hpp"
#include "oddsym/memo.hpp"

namespace oddsym {

namespace {
i64 sg(long k) { return (k & 1) ? -1 : 1; }

void need(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

OH mulr(const REll& y, const OH& a) { return oh_mul(OH::from_r(a.n, a.ell, y), a); }

// s_l as a signed sum of eps-words eps_{m1} ... eps_{mk}
Sym eps_words(const Partition& l) {
  static Memo<Partition, Sym> memo;
  return memo.get(l, [&]() { return to_e(sigma_fn(l)); });
}
}  // namespace

BimodVec::BimodVec(char k, int nn, int l, bool t) : kind(k), tilde(t), n(nn), ell(l) {
  need(k == 'V' || k == 'U', "bimodule kind must be V or U");
  need(nn >= 0 && nn < l, "bimodule index out of range");
  c.assign(nn + 1, OH(nn + 1, l));
}

BimodVec BimodVec::basis(char k, int n, int ell, int r, bool t) {
  BimodVec x(k, n, ell, t);
  need(r >= 0 && r <= n, "basis index out of range");
  x.c[r] = OH::one(n + 1, ell);
  return x;
}

bool BimodVec::zero() const {
  for (auto& a : c)
    if (!a.zero()) return false;
  return true;
}
BimodVec& BimodVec::operator+=(const BimodVec& o) {
  need(kind == o.kind && tilde == o.tilde && n == o.n && ell == o.ell, "bimodule mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}
BimodVec& BimodVec::operator-=(const BimodVec& o) { return *this += -1 * o; }
BimodVec operator*(i64 s, const BimodVec& a) {
  BimodVec r = a;
  for (auto& x : r.c) x = s * x;
  return r;
}
bool BimodVec::operator==(const BimodVec& o) const {
  return kind == o.kind && tilde == o.tilde && n == o.n && ell == o.ell && c == o.c;
}
std::string BimodVec::str() const {
  std::ostringstream os;
  bool first = true;
  std::string g = kind == 'V' ? "v" : "u";
  if (tilde) g += "~";
  for (size_t r = 0; r < c.size(); ++r) {
    if (c[r].zero()) continue;
    os << (first ? "" : " + ");
    if (kind == 'V') os << g << "(x^" << r << ")[" << c[r].str() << "]";
    else os << "[" << c[r].str() << "]" << g << "(x^" << r << ")";
    first = false;
  }
  return first ? "0" : os.str();
}
nlohmann::json BimodVec::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (auto& x : c) a.push_back(x.to_json());
  return {{"kind", std::string(1, kind)}, {"tilde", tilde}, {"n", n}, {"ell", ell}, {"coeffs", a}};
}

OH eps_bar(int n, int ell, int r) {
  static Memo<std::tuple<int, int, int>, OH> memo;
  if (r < 0 || r > n) return OH(n, ell);
  return memo.get({n, ell, r}, [&]() { return oh_from_sym(n, ell, gamma(e_elem(r))); });
}
OH eta_bar(int n, int ell, int r) {
  static Memo<std::tuple<int, int, int>, OH> memo;
  if (r < 0) return OH(n, ell);
  return memo.get({n, ell, r}, [&]() { return oh_from_sym(n, ell, gamma(sym_h(r))); });
}

int oh_term_degree(const Partition& l, bool odd, const Partition& g) {
  return 2 * psize(l) + (odd ? 2 : 0) + 4 * psize(g);
}

OH oh_parity_part(const OH& a, int par) {
  OH out(a.n, a.ell);
  for (auto& [l, r] : a.t) {
    REll keep(a.ell);
    for (auto& [k, v] : r.even)
      if (psize(l) % 2 == par) keep.add_even(k, v);
    for (auto& [k, v] : r.odd)
      if ((psize(l) + 1) % 2 == par) keep.add_odd(k, v);
    out.add(l, keep);
  }
  return out;
}

BimodVec v_reduce(int n, int ell, int p) {
  static Memo<std::tuple<int, int, int>, BimodVec> memo;
  need(p >= 0, "negative power");
  if (p <= n) return BimodVec::basis('V', n, ell, p);
  return memo.get({n, ell, p}, [&]() {
    BimodVec x('V', n, ell);
    int m = p - n - 1;
    for (int q = 0; q <= n; ++q)
      for (int s = 0; s <= m; ++s) {
        int k = m + n + 1 - q - s;
        x.c[q] -= sg(k) * oh_mul(eps_bar(n + 1, ell, k), eta_bar(n + 1, ell, s));
      }
    return x;
  });
}

BimodVec u_reduce(int n, int ell, int p) {
  static Memo<std::tuple<int, int, int>, BimodVec> memo;
  need(p >= 0, "negative power");
  if (p <= n) return BimodVec::basis('U', n, ell, p);
  return memo.get({n, ell, p}, [&]() {
    BimodVec x('U', n, ell);
    int m = p - n - 1;
    for (int q = 0; q <= n; ++q)
      for (int r = 0; r <= m; ++r) {
        int k = m + n + 1 - q - r;
        x.c[q] -= sg(k) * oh_mul(eta_bar(n + 1, ell, r), eps_bar(n + 1, ell, k));
      }
    return x;
  });
}

BimodVec retilde(const BimodVec& x, bool tilde) {
  if (x.tilde == tilde) return x;
  BimodVec y = x;
  y.tilde = tilde;
  if (x.kind == 'U' && x.np() % 2)
    for (auto& a : y.c) a = oh_parity_part(a, 0) - oh_parity_part(a, 1);
  return y;
}

BimodVec gen(char kind, int n, int ell, int p, bool tilde) {
  BimodVec x = kind == 'V' ? v_reduce(n, ell, p) : u_reduce(n, ell, p);
  return retilde(x, tilde);
}

namespace {
// eps_r^{(n)} v(x^p) in V
BimodVec eps_on_v(int n, int ell, int r, int p) {
  static Memo<std::tuple<int, int, int, int>, BimodVec> memo;
  if (r == 0) return v_reduce(n, ell, p);
  if (r > n) return BimodVec('V', n, ell);
  return memo.get({n, ell, r, p}, [&]() {
    BimodVec x('V', n, ell);
    for (int k = 0; k <= r; ++k) x += sg(k) * act_right(v_reduce(n, ell, p + k), eps_bar(n + 1, ell, r - k));
    return sg(static_cast<long>(n) * (p + 1) + static_cast<long>(n + p) * (n - r)) * x;
  });
}

// u(x^p) eps_r^{(n)} in U
BimodVec u_eps(int n, int ell, int r, int p) {
  static Memo<std::tuple<int, int, int, int>, BimodVec> memo;
  if (r == 0) return u_reduce(n, ell, p);
  if (r > n) return BimodVec('U', n, ell);
  return memo.get({n, ell, r, p}, [&]() {
    BimodVec x('U', n, ell);
    for (int k = 0; k <= r; ++k) x += sg(k) * act_left(eps_bar(n + 1, ell, r - k), u_reduce(n, ell, p + k));
    return sg(static_cast<long>(n) * (p + 1) + static_cast<long>(p + 1) * (n - r)) * x;
  });
}

BimodVec eps_left(int r, const BimodVec& x) {
  BimodVec out('V', x.n, x.ell);
  for (int p = 0; p <= x.n; ++p)
    if (!x.c[p].zero()) out += act_right(eps_on_v(x.n, x.ell, r, p), x.c[p]);
  return out;
}

BimodVec eps_right(const BimodVec& x, int r) {
  BimodVec out('U', x.n, x.ell);
  for (int q = 0; q <= x.n; ++q)
    if (!x.c[q].zero()) out += act_left(x.c[q], u_eps(x.n, x.ell, r, q));
  return out;
}

BimodVec schur_on_v(int n, int ell, const Partition& l, int p) {
  static Memo<std::tuple<int, int, Partition, int>, BimodVec> memo;
  return memo.get({n, ell, l, p}, [&]() {
    BimodVec out('V', n, ell);
    for (auto& [w, cf] : eps_words(l)) {
      if (!w.empty() && w.front() > n) continue;
      BimodVec y = BimodVec::basis('V', n, ell, p);
      for (auto it = w.rbegin(); it != w.rend(); ++it) y = eps_left(*it, y);
      out += cf * y;
    }
    return out;
  });
}

BimodVec u_schur(int n, int ell, const Partition& l, int q) {
  static Memo<std::tuple<int, int, Partition, int>, BimodVec> memo;
  return memo.get({n, ell, l, q}, [&]() {
    BimodVec out('U', n, ell);
    for (auto& [w, cf] : eps_words(l)) {
      if (!w.empty() && w.front() > n) continue;
      BimodVec y = BimodVec::basis('U', n, ell, q);
      for (int r : w) y = eps_right(y, r);
      out += cf * y;
    }
    return out;
  });
}

// untwisted left action on V
BimodVec v_left(const OH& a, const BimodVec& x) {
  BimodVec out('V', x.n, x.ell);
  for (auto& [l, y] : a.t) {
    BimodVec z('V', x.n, x.ell);
    for (int p = 0; p <= x.n; ++p) {
      REll yy = y.even_part() + sg(p + x.n) * y.odd_part();
      z.c[p] = mulr(yy, x.c[p]);
    }
    if (l.empty()) {
      out += z;
      continue;
    }
    for (int p = 0; p <= x.n; ++p)
      if (!z.c[p].zero()) out += act_right(schur_on_v(x.n, x.ell, l, p), z.c[p]);
  }
  return out;
}

// right action on U
BimodVec u_right(const BimodVec& x, const OH& b) {
  BimodVec out('U', x.n, x.ell);
  for (auto& [l, y] : b.t) {
    BimodVec z('U', x.n, x.ell);
    if (l.empty()) z = x;
    else
      for (int q = 0; q <= x.n; ++q)
        if (!x.c[q].zero()) z += act_left(x.c[q], u_schur(x.n, x.ell, l, q));
    for (int q = 0; q <= x.n; ++q) {
      REll yy = y.even_part() + sg(q) * y.odd_part();
      out.c[q] += oh_mul(z.c[q], OH::from_r(x.n + 1, x.ell, yy));
    }
  }
  return out;
}
}  // namespace

BimodVec act_left(const OH& a, const BimodVec& x) {
  if (x.kind == 'U') {
    need(a.n == x.n + 1 && a.ell == x.ell, "left action on U needs OH_{n+1}");
    BimodVec y = x;
    for (auto& cf : y.c) cf = oh_mul(a, cf);
    return y;
  }
  need(a.n == x.n && a.ell == x.ell, "left action on V needs OH_n");
  BimodVec y;
  if (x.tilde && x.n % 2) {
    y = v_left(oh_parity_part(a, 0), retilde(x, false)) - v_left(oh_parity_part(a, 1), retilde(x, false));
  } else {
    y = v_left(a, retilde(x, false));
  }
  return retilde(y, x.tilde);
}

BimodVec act_right(const BimodVec& x, const OH& b) {
  if (x.kind == 'V') {
    need(b.n == x.n + 1 && b.ell == x.ell, "right action on V needs OH_{n+1}");
    BimodVec y = x;
    for (auto& cf : y.c) cf = oh_mul(cf, b);
    return y;
  }
  need(b.n == x.n && b.ell == x.ell, "right action on U needs OH_n");
  return retilde(u_right(retilde(x, false), b), x.tilde);
}

namespace {
using FlatKey = std::tuple<int, Partition, bool, Partition>;

void flatten(const BimodVec& x, std::map<FlatKey, Q>& out, std::map<FlatKey, int>* deg = nullptr) {
  for (int p = 0; p <= x.n; ++p)
    for (auto& [l, r] : x.c[p].t) {
      for (auto& [g, v] : r.even) {
        FlatKey k{p, l, false, g};
        out[k] += v;
        if (deg) (*deg)[k] = 2 * p + oh_term_degree(l, false, g);
      }
      for (auto& [g, v] : r.odd) {
        FlatKey k{p, l, true, g};
        out[k] += v;
        if (deg) (*deg)[k] = 2 * p + oh_term_degree(l, true, g);
      }
    }
}

// coordinates of x on the opposite-side basis; act(b, k) = b acting on basis vector k
template <class Act>
std::vector<OH> opposite(const BimodVec& x, Act act) {
  int n = x.n, ell = x.ell, np = x.np();
  std::vector<OH> res(np + 1, OH(n, ell));
  std::map<FlatKey, Q> tgt;
  std::map<FlatKey, int> deg;
  flatten(x, tgt, &deg);
  std::map<int, std::map<FlatKey, Q>> by_deg;
  for (auto& [k, v] : tgt)
    if (v != 0) by_deg[deg[k]][k] = v;
  for (auto& [D, part] : by_deg) {
    std::vector<std::pair<int, OH>> unk;
    for (int k = 0; k <= np; ++k)
      for (auto& l : oh_basis(n, ell))
        for (auto& y : rell_monomials(ell, D - 2 * k - 2 * psize(l))) unk.push_back({k, OH::basis(n, ell, l).times_r(y)});
    std::vector<std::map<FlatKey, Q>> cols;
    std::map<FlatKey, int> rows;
    for (auto& [k, v] : part) rows.emplace(k, 0);
    for (auto& [k, b] : unk) {
      std::map<FlatKey, Q> col;
      flatten(act(b, k), col);
      for (auto& [key, v] : col) rows.emplace(key, 0);
      cols.push_back(col);
    }
    int R = 0;
    for (auto& [k, v] : rows) v = R++;
    QMat m(R, std::vector<Q>(unk.size(), 0));
    for (size_t j = 0; j < cols.size(); ++j)
      for (auto& [key, v] : cols[j]) m[rows[key]][j] = v;
    std::vector<Q> b(R, 0);
    for (auto& [k, v] : part) b[rows[k]] = v;
    bool ok = false;
    auto sol = solve(m, b, static_cast<int>(unk.size()), &ok);
    need(ok, "vector not in the span of the opposite-side basis");
    for (size_t j = 0; j < unk.size(); ++j) {
      if (sol[j] == 0) continue;
      need(sol[j].get_den() == 1, "non-integral opposite-side coordinate");
      res[unk[j].first] += static_cast<i64>(sol[j].get_num().get_si()) * unk[j].second;
    }
  }
  return res;
}
}  // namespace

std::vector<OH> to_left_basis(const BimodVec& v) {
  need(v.kind == 'V', "to_left_basis needs a V vector");
  return opposite(v, [&](const OH& b, int k) { return act_left(b, gen('V', v.n, v.ell, k, v.tilde)); });
}

std::vector<OH> to_right_basis(const BimodVec& u) {
  need(u.kind == 'U', "to_right_basis needs a U vector");
  return opposite(u, [&](const OH& b, int k) { return act_right(gen('U', u.n, u.ell, k, u.tilde), b); });
}

void TruncSeries::add(int e, const OH& a) {
  if (e < lo || a.zero()) return;
  auto it = c.find(e);
  if (it == c.end()) c.emplace(e, a);
  else {
    it->second += a;
    if (it->second.zero()) c.erase(it);
  }
}
OH TruncSeries::at(int e) const {
  need(e >= lo, "series window too small");
  auto it = c.find(e);
  return it == c.end() ? OH(n, ell) : it->second;
}
TruncSeries TruncSeries::above(int p) const {
  TruncSeries r(lo, n, ell);
  for (auto& [e, a] : c)
    if (e > p) r.c.emplace(e, a);
  return r;
}
TruncSeries TruncSeries::at_most(int p) const {
  TruncSeries r(lo, n, ell);
  for (auto& [e, a] : c)
    if (e <= p) r.c.emplace(e, a);
  return r;
}
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int hia = a.c.empty() ? a.lo : a.c.rbegin()->first;
  int hib = b.c.empty() ? b.lo : b.c.rbegin()->first;
  TruncSeries r(std::max(a.lo + hib, b.lo + hia), a.n, a.ell);
  for (auto& [i, x] : a.c)
    for (auto& [j, y] : b.c) r.add(i + j, oh_mul(x, y));
  return r;
}

TruncSeries eps_series(int n, int ell, int lo) {
  TruncSeries s(lo, n, ell);
  for (int r = 0; r <= n; ++r) s.add(n - r, sg(r) * eps_bar(n, ell, r));
  return s;
}
TruncSeries eta_series(int n, int ell, int lo) {
  TruncSeries s(lo, n, ell);
  for (int r = 0; -n - r >= lo; ++r) s.add(-n - r, eta_bar(n, ell, r));
  return s;
}

BimodVec v_reduce_series(int n, int ell, int p) {
  BimodVec x('V', n, ell);
  int lo = -p - n - 6;
  TruncSeries E = eps_series(n + 1, ell, lo), H = eta_series(n + 1, ell, lo);
  for (int q = 0; q <= n; ++q) x.c[q] = (E.above(q) * H).at(q - p);
  return x;
}

BimodVec u_reduce_series(int n, int ell, int p) {
  BimodVec x('U', n, ell);
  int lo = -p - n - 6;
  TruncSeries E = eps_series(n + 1, ell, lo), H = eta_series(n + 1, ell, lo);
  for (int q = 0; q <= n; ++q) x.c[q] = (H * E.above(q)).at(q - p);
  return x;
}

TensorVU::TensorVU(int nn, int l) : n(nn), ell(l) {
  m.assign(nn + 1, std::vector<OH>(nn + 1, OH(nn + 1, l)));
}
TensorVU& TensorVU::operator+=(const TensorVU& o) {
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) m[p][q] += o.m[p][q];
  return *this;
}
std::string TensorVU::str() const {
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (m[p][q].zero()) continue;
      os << (first ? "" : " + ") << "v(x^" << p << ")(x)[" << m[p][q].str() << "]u(x^" << q << ")";
      first = false;
    }
  return first ? "0" : os.str();
}

TensorVU tensor_vu(const BimodVec& v, const BimodVec& u) {
  need(v.kind == 'V' && u.kind == 'U' && !v.tilde && !u.tilde && v.n == u.n, "tensor_vu needs V_n and U_n");
  TensorVU z(v.n, v.ell);
  for (int p = 0; p <= v.n; ++p)
    for (int q = 0; q <= v.n; ++q) z.m[p][q] += oh_mul(v.c[p], u.c[q]);
  return z;
}

TensorVU act_left(const OH& a, const TensorVU& z) {
  TensorVU out(z.n, z.ell);
  for (int p = 0; p <= z.n; ++p) {
    BimodVec w = act_left(a, BimodVec::basis('V', z.n, z.ell, p));
    for (int r = 0; r <= z.n; ++r)
      if (!w.c[r].zero())
        for (int q = 0; q <= z.n; ++q) out.m[r][q] += oh_mul(w.c[r], z.m[p][q]);
  }
  return out;
}

TensorVU act_right(const TensorVU& z, const OH& a) {
  TensorVU out(z.n, z.ell);
  for (int q = 0; q <= z.n; ++q) {
    BimodVec w = act_right(BimodVec::basis('U', z.n, z.ell, q), a);
    for (int s = 0; s <= z.n; ++s)
      if (!w.c[s].zero())
        for (int p = 0; p <= z.n; ++p) out.m[p][s] += oh_mul(z.m[p][q], w.c[s]);
  }
  return out;
}

TensorUV::TensorUV(int nn, int l) : n(nn), ell(l) {
  int np = l - nn - 1;
  m.assign(np + 1, std::vector<OH>(np + 1, OH(nn, l)));
}
TensorUV& TensorUV::operator+=(const TensorUV& o) {
  for (size_t j = 0; j < m.size(); ++j)
    for (size_t k = 0; k < m.size(); ++k) m[j][k] += o.m[j][k];
  return *this;
}

TensorUV tensor_uv(const BimodVec& u, const BimodVec& v) {
  need(u.kind == 'U' && v.kind == 'V' && u.tilde && v.tilde && u.n == v.n, "tensor_uv needs U~_n and V~_n");
  TensorUV z(u.n, u.ell);
  auto B = to_right_basis(u);
  auto A = to_left_basis(v);
  for (size_t j = 0; j < B.size(); ++j)
    for (size_t k = 0; k < A.size(); ++k) z.m[j][k] += oh_mul(B[j], A[k]);
  return z;
}

TensorUV act_left(const OH& a, const TensorUV& z) {
  TensorUV out(z.n, z.ell);
  int np = z.ell - z.n - 1;
  for (int j = 0; j <= np; ++j) {
    auto B = to_right_basis(act_left(a, gen('U', z.n, z.ell, j, true)));
    for (int i = 0; i <= np; ++i)
      if (!B[i].zero())
        for (int k = 0; k <= np; ++k) out.m[i][k] += oh_mul(B[i], z.m[j][k]);
  }
  return out;
}

TensorUV act_right(const TensorUV& z, const OH& a) {
  TensorUV out(z.n, z.ell);
  int np = z.ell - z.n - 1;
  for (int k = 0; k <= np; ++k) {
    auto A = to_left_basis(act_right(gen('V', z.n, z.ell, k, true), a));
    for (int i = 0; i <= np; ++i)
      if (!A[i].zero())
        for (int j = 0; j <= np; ++j) out.m[j][i] += oh_mul(z.m[j][k], A[i]);
  }
  return out;
}

OH ev(int n, int ell, int r, int s) {
  if (r + s < n) return OH(n + 1, ell);
  return eta_bar(n + 1, ell, r + s - n);
}

OH ev_apply(const BimodVec& u, const BimodVec& v) {
  need(u.kind == 'U' && v.kind == 'V' && !u.tilde && !v.tilde && u.n == v.n, "ev needs U_n and V_n");
  OH out(u.n + 1, u.ell);
  for (int q = 0; q <= u.n; ++q)
    for (int p = 0; p <= u.n; ++p)
      if (!u.c[q].zero() && !v.c[p].zero()) out += oh_mul(oh_mul(u.c[q], ev(u.n, u.ell, q, p)), v.c[p]);
  return out;
}

TensorVU coev(int n, int ell) {
  TensorVU z(n, ell);
  for (int r = 0; r <= n; ++r)
    for (int s = 0; r + s <= n; ++s) z.m[r][s] += sg(n - r - s) * eps_bar(n + 1, ell, n - r - s);
  return z;
}

TensorVU coev_collapsed(int n, int ell, int form) {
  need(form == 1 || form == 2, "form must be 1 or 2");
  TensorVU z(n, ell);
  for (int r = 0; r <= n; ++r) {
    if (form == 1) {
      BimodVec w = act_right(BimodVec::basis('U', n, ell, 0), eps_bar(n, ell, n - r));
      for (int q = 0; q <= n; ++q) z.m[r][q] += w.c[q];
    } else {
      BimodVec w = act_left(eps_bar(n, ell, n - r), BimodVec::basis('V', n, ell, 0));
      for (int p = 0; p <= n; ++p) z.m[p][r] += sg(static_cast<long>(n + 1) * r) * w.c[p];
    }
  }
  return z;
}

OH tilde_ev(int n, int ell, int r, int s) {
  int np = ell - n - 1;
  i64 sign = sg(static_cast<long>(n) * (r + s) + c2(r) + c2(s + 1));
  if (r + s < np) return OH(n, ell);
  if (r + s == np) return sign * OH::one(n, ell);
  OH x = eta_bar(np + 1, ell, r + s - np);
  if (s % 2) x += (2 * sg(n + 1)) * eta_bar(np + 1, ell, r + s - np - 1).times_r(REll::c(ell));
  return sign * psi_iso(x, false);
}

OH tilde_ev_apply(const BimodVec& v, const BimodVec& u) {
  need(v.kind == 'V' && u.kind == 'U' && v.tilde && u.tilde && v.n == u.n, "tilde_ev needs V~_n and U~_n");
  int n = v.n, ell = v.ell, np = ell - n - 1;
  OH out(n, ell);
  for (int p = 0; p <= n; ++p) {
    if (v.c[p].zero()) continue;
    auto B = to_right_basis(act_left(v.c[p], u));
    auto A = to_left_basis(gen('V', n, ell, p, true));
    for (int k = 0; k <= np; ++k)
      for (int j = 0; j <= np; ++j)
        if (!A[k].zero() && !B[j].zero()) out += oh_mul(oh_mul(A[k], tilde_ev(n, ell, k, j)), B[j]);
  }
  return out;
}

TensorUV tilde_coev(int n, int ell) {
  int np = ell - n - 1;
  TensorUV z(n, ell);
  for (int s = 0; s <= np; ++s) {
    OH psi_inv = psi_iso(eps_bar(np, ell, np - s), false);
    auto B = to_right_basis(act_left(psi_inv, gen('U', n, ell, 0, true)));
    i64 sign = sg(static_cast<long>(ell) * s + c2(s));
    for (int j = 0; j <= np; ++j) z.m[j][s] += sign * B[j];
  }
  return z;
}

TensorVU crossing(int n, int ell, int r, int s) {
  need(n >= 1 && n < ell, "crossing needs 0 < n < ell");
  need(s >= 0 && s <= n - 1 && r >= 0, "crossing index out of range");
  TensorVU z = tensor_vu(gen('V', n, ell, s), gen('U', n, ell, r));
  TensorVU out(n, ell);
  i64 lead = sg(static_cast<long>(n) * r + r * s + r + s + n + 1);
  out += z;
  for (auto& row : out.m)
    for (auto& x : row) x = lead * x;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= r + s - n; ++q) {
      i64 sign = sg(static_cast<long>(n) * q + p * q + r * q + r + q);
      BimodVec w = act_right(act_right(gen('U', n, ell, q), eps_bar(n, ell, n - p)), eta_bar(n, ell, r + s - n - q));
      TensorVU t = tensor_vu(gen('V', n, ell, p), w);
      for (auto& row : t.m)
        for (auto& x : row) x = sign * x;
      out += t;
    }
  return out;
}

}  // namespace oddsym
