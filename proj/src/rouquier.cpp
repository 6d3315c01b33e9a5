#include "oddsym/rouquier.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddsym/bimod.hpp"
#include "oddsym/memo.hpp"
#include "oddsym/onh.hpp"

namespace oddsym {

namespace {
i64 sg(long k) { return (k & 1) ? -1 : 1; }

Q constant_term(const OH& a) {
  auto it = a.t.find(Partition{});
  return it == a.t.end() ? Q(0) : Q(it->second.constant());
}

// push the coefficient c through raw[i..] and specialise at the right end
void push(const std::vector<BimodVec>& raw, size_t i, const OH* c, ChainIndex& prefix, const Q& scale,
          ChainVec& out) {
  if (i == raw.size()) {
    Q v = c ? constant_term(*c) : Q(1);
    if (v != 0) {
      Q& slot = out[prefix];
      slot += scale * v;
      if (slot == 0) out.erase(prefix);
    }
    return;
  }
  BimodVec x = c ? act_left(*c, raw[i]) : raw[i];
  std::vector<OH> coords = x.kind == 'U' ? to_right_basis(x) : x.c;
  for (size_t r = 0; r < coords.size(); ++r) {
    if (coords[r].zero()) continue;
    prefix.push_back(static_cast<int>(r));
    push(raw, i + 1, &coords[r], prefix, scale, out);
    prefix.pop_back();
  }
}

void axpy(ChainVec& out, const Q& s, const ChainVec& x) {
  for (auto& [k, v] : x) {
    Q& slot = out[k];
    slot += s * v;
    if (slot == 0) out.erase(k);
  }
}

std::vector<Expo> monomials_of(const OPol& f) {
  std::vector<Expo> out;
  for (auto& [k, v] : f.c) out.push_back(k);
  return out;
}

using ShapeKey = std::vector<int>;
ShapeKey key_of(const ChainShape& s) { return {s.ell, s.k, s.n, s.d}; }

// a monomial of the U part and a monomial of the V part, split into rank-one factors
ChainVec embed_monomial(const ChainShape& s, const Expo& a, const Expo& b) {
  static Memo<std::pair<ShapeKey, std::pair<Expo, Expo>>, ChainVec> memo;
  return memo.get({key_of(s), {a, b}}, [&] {
    int nu = s.nu(), d = s.d;
    long e = 0;
    for (int i = 0; i < nu; ++i) {
      long rest = 0;
      for (int j = i + 1; j < nu; ++j) rest += a[j];
      e += static_cast<long>(a[i]) * rest + static_cast<long>(nu - 1 - i) * a[i];
    }
    for (int i = 0; i < d; ++i) e += hash_op(s.n - d + i + 1, d - 1 - i) * b[i];
    std::vector<BimodVec> raw;
    for (int i = 0; i < nu; ++i) raw.push_back(gen('U', s.factor_index(i), s.ell, a[nu - 1 - i]));
    for (int t = 0; t < d; ++t) raw.push_back(gen('V', s.factor_index(nu + t), s.ell, b[t]));
    ChainVec out;
    ChainIndex prefix;
    push(raw, 0, nullptr, prefix, Q(sg(e)), out);
    return out;
  });
}

ChainVec apply_ev(const ChainShape& s, const ChainVec& x) {
  ChainVec out;
  for (auto& [idx, v] : x) axpy(out, v, chain_ev(s, idx));
  return out;
}

ChainShape shape(int ell, int k, int d) { return ChainShape{ell, k, (ell - k) / 2, d}; }

int rank_of_columns(const QMat& m, const std::vector<int>& cols) {
  if (cols.empty() || m.empty()) return 0;
  QMat sub(m.size(), std::vector<Q>(cols.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[i][cols[j]];
  return rank(sub);
}

Q at(const std::vector<Q>& row, size_t i) { return i < row.size() ? row[i] : Q(0); }
}  // namespace

int ChainShape::factor_index(int i) const { return i < nu() ? n + k - 1 - i : n - d + (i - nu()); }

int ChainShape::rank(int i) const {
  int j = factor_index(i);
  return is_u(i) ? ell - j : j + 1;
}

int ChainShape::degree(const ChainIndex& x) const {
  int deg = 0;
  for (int i = 0; i < size(); ++i) deg += is_u(i) ? 2 * x[i] : 2 * x[i] - 2 * factor_index(i);
  return deg;
}

std::vector<ChainIndex> ChainShape::basis() const {
  std::vector<ChainIndex> out{{}};
  for (int i = 0; i < size(); ++i) {
    std::vector<ChainIndex> next;
    for (auto& p : out)
      for (int r = 0; r < rank(i); ++r) {
        next.push_back(p);
        next.back().push_back(r);
      }
    out = std::move(next);
  }
  return out;
}

ChainVec chain_embed(const ChainShape& s, const Partition& lambda, const Partition& mu) {
  int nu = s.nu();
  if (static_cast<int>(lambda.size()) > nu || static_cast<int>(mu.size()) > s.d) return {};
  OPol g = nu ? sym_to_opol(sigma_fn(lambda), nu) : OPol::one(0);
  OPol f = s.d ? sym_to_opol(sigma_fn(mu), s.d) : OPol::one(0);
  ChainVec out;
  for (auto& [a, ca] : g.c)
    for (auto& [b, cb] : f.c) axpy(out, Q(ca * cb), embed_monomial(s, a, b));
  return out;
}

ChainVec chain_ev(const ChainShape& s, const ChainIndex& x) {
  static Memo<std::pair<ShapeKey, ChainIndex>, ChainVec> memo;
  return memo.get({key_of(s), x}, [&] {
    int nu = s.nu(), d = s.d;
    if (nu < 1 || d < 1) throw std::invalid_argument("chain_ev needs a U and a V factor");
    OH eta = ev(s.n - d, s.ell, x[nu - 1], x[nu]);
    std::vector<BimodVec> raw;
    for (int t = 1; t < d; ++t) raw.push_back(BimodVec::basis('V', s.n - d + t, s.ell, x[nu + t]));
    ChainIndex prefix(x.begin(), x.begin() + (nu - 1));
    ChainVec out;
    push(raw, 0, &eta, prefix, Q(1), out);
    return out;
  });
}

RouquierComplex build_complex(int ell, int k) {
  if (ell < 0 || std::abs(k) > ell || (ell - k) % 2 != 0) throw std::invalid_argument("inadmissible (ell, k)");
  RouquierComplex c;
  c.ell = ell;
  c.k = k;
  c.n = (ell - k) / 2;
  c.dmin = std::max(0, -k);
  for (int d = c.dmin; d <= c.n; ++d) {
    RouquierTerm t;
    t.d = d;
    t.shape = shape(ell, k, d);
    t.chain_basis = t.shape.basis();
    std::map<ChainIndex, int> col;
    for (size_t i = 0; i < t.chain_basis.size(); ++i) col[t.chain_basis[i]] = static_cast<int>(i);
    auto row_of = [&](const ChainVec& v) {
      std::vector<Q> r(t.chain_basis.size(), 0);
      for (auto& [idx, x] : v) r[col.at(idx)] = x;
      return r;
    };
    int shift = static_cast<int>(2 * hash_op(c.n - d, d));
    for (auto& l : enum_grpar(k + d, c.n))
      for (auto& m : enum_grpar(d, c.n - d)) {
        t.labels.push_back({l, m});
        t.degrees.push_back(2 * psize(l) + 2 * psize(m) - shift);
        t.rows.push_back(row_of(chain_embed(t.shape, l, m)));
      }
    int r0 = t.rows.empty() ? 0 : rank(t.rows);
    t.independent = r0 == static_cast<int>(t.rows.size());
    QMat wide = t.rows;
    for (auto& l : enum_grpar(k + d, c.n + 1))
      for (auto& m : enum_grpar(d, c.n - d + 1)) {
        bool inside = (l.empty() || l[0] <= c.n) && (m.empty() || m[0] <= c.n - d);
        if (!inside) wide.push_back(row_of(chain_embed(t.shape, l, m)));
      }
    t.spanning = wide.empty() || rank(wide) == r0;
    c.terms.push_back(std::move(t));
  }
  c.diff.resize(c.terms.size());
  c.closed.assign(c.terms.size(), true);
  for (size_t i = 1; i < c.terms.size(); ++i) {
    auto& src = c.terms[i];
    auto& dst = c.terms[i - 1];
    std::map<ChainIndex, int> col;
    for (size_t j = 0; j < dst.chain_basis.size(); ++j) col[dst.chain_basis[j]] = static_cast<int>(j);
    // columns of a are the target basis vectors in chain coordinates
    QMat a(dst.chain_basis.size(), std::vector<Q>(dst.rows.size(), 0));
    for (size_t j = 0; j < dst.rows.size(); ++j)
      for (size_t r = 0; r < dst.chain_basis.size(); ++r) a[r][j] = dst.rows[j][r];
    QMat m(dst.rows.size(), std::vector<Q>(src.rows.size(), 0));
    for (size_t j = 0; j < src.rows.size(); ++j) {
      ChainVec x;
      for (size_t r = 0; r < src.chain_basis.size(); ++r)
        if (src.rows[j][r] != 0) x[src.chain_basis[r]] = src.rows[j][r];
      ChainVec y = apply_ev(src.shape, x);
      std::vector<Q> b(dst.chain_basis.size(), 0);
      for (auto& [idx, v] : y) b[col.at(idx)] = v;
      bool ok = false;
      auto sol = dst.rows.empty() ? std::vector<Q>{} : solve(a, b, static_cast<int>(dst.rows.size()), &ok);
      if (dst.rows.empty()) ok = std::all_of(b.begin(), b.end(), [](const Q& v) { return v == 0; });
      if (!ok) {
        c.closed[i] = false;
        continue;
      }
      for (size_t r = 0; r < dst.rows.size(); ++r) m[r][j] = at(sol, r);
    }
    c.diff[i] = std::move(m);
  }
  return c;
}

GP term_dim(const RouquierTerm& t) {
  GP s;
  for (int deg : t.degrees) s += pq2(deg / 2);
  return s;
}

GP image_dim(const RouquierComplex& c, int d) {
  size_t i = static_cast<size_t>(d - c.dmin);
  if (d <= c.dmin || d > c.n) return GP();
  auto& src = c.terms[i];
  std::map<int, std::vector<int>> bydeg;
  for (size_t j = 0; j < src.degrees.size(); ++j) bydeg[src.degrees[j]].push_back(static_cast<int>(j));
  GP s;
  for (auto& [deg, cols] : bydeg)
    if (int r = rank_of_columns(c.diff[i], cols)) s += GP(r) * pq2(deg / 2);
  return s;
}

GP homology_dim(const RouquierComplex& c, int d) {
  return term_dim(c.term(d)) - image_dim(c, d) - image_dim(c, d + 1);
}

bool square_zero(const RouquierComplex& c) {
  for (size_t i = 2; i < c.terms.size(); ++i) {
    auto& a = c.diff[i - 1];
    auto& b = c.diff[i];
    for (size_t r = 0; r < a.size(); ++r)
      for (size_t j = 0; j < c.terms[i].rows.size(); ++j) {
        Q s = 0;
        for (size_t t = 0; t < b.size(); ++t) s += a[r][t] * b[t][j];
        if (s != 0) return false;
      }
  }
  return true;
}

nlohmann::json complex_json(const RouquierComplex& c) {
  nlohmann::json j{{"ell", c.ell}, {"k", c.k}, {"n", c.n}, {"terms", nlohmann::json::array()}};
  for (auto& t : c.terms) {
    nlohmann::json x{{"d", t.d},
                     {"dim", term_dim(t).to_json()},
                     {"rank", static_cast<int>(t.rows.size())},
                     {"image_of_differential", image_dim(c, t.d).to_json()},
                     {"homology", homology_dim(c, t.d).to_json()}};
    j["terms"].push_back(x);
  }
  j["square_zero"] = square_zero(c);
  return j;
}

bool initial_pair(int k, int n, int d, const Partition& lambda, const Partition& mu) {
  if (d < 1) return false;
  int last = k + d - 1 < static_cast<int>(lambda.size()) ? lambda[k + d - 1] : 0;
  int s = d - 1 - last;
  if (s < 0 || s > d - 1) return false;
  int row = d - s - 1;
  return (row < static_cast<int>(mu.size()) ? mu[row] : 0) == n - d;
}

std::pair<Partition, Partition> terminal_of(int k, int n, int d, const Partition& lambda, const Partition& mu) {
  Partition lm = lambda;
  lm.resize(std::max(0, k + d - 1));
  int last = k + d - 1 < static_cast<int>(lambda.size()) ? lambda[k + d - 1] : 0;
  int s = d - 1 - last;
  Partition m = mu;
  m.resize(d, 0);
  for (int i = 0; i < d - s; ++i) ++m[i];
  m.erase(m.begin());
  (void)n;
  return {trim(lm), trim(m)};
}

bool pair_less(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) {
  int sa = psize(a.first), sb = psize(b.first);
  if (sa != sb) return sa < sb;
  Partition x = a.second, y = b.second;
  size_t len = std::max(x.size(), y.size());
  x.resize(len, 0);
  y.resize(len, 0);
  return x < y;
}

}  // namespace oddsym
