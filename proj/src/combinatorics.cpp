#include "oddsym/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddsym {

bool is_partition(const Partition& l) {
  for (size_t i = 0; i < l.size(); ++i) {
    if (l[i] <= 0) return false;
    if (i && l[i] > l[i - 1]) return false;
  }
  return true;
}

Partition trim(Partition l) {
  while (!l.empty() && l.back() == 0) l.pop_back();
  return l;
}

int psize(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

Partition transpose(const Partition& l) {
  Partition t;
  if (l.empty()) return t;
  for (int j = 0; j < l[0]; ++j) {
    int c = 0;
    for (int x : l)
      if (x > j) ++c;
    t.push_back(c);
  }
  return t;
}

PartStats stats(const Partition& l) {
  PartStats s;
  int n = static_cast<int>(l.size());
  for (int i = 0; i < n; ++i) {
    s.dN += static_cast<long>(i) * l[i];
    s.dE += static_cast<long>(l[i]) * (l[i] - 1) / 2;
    for (int j = i + 1; j < n; ++j) s.N += static_cast<long>(l[i]) * l[j];
  }
  // boxes (row, col); B strictly northeast of A
  for (int ra = 0; ra < n; ++ra)
    for (int ca = 0; ca < l[ra]; ++ca)
      for (int rb = 0; rb < ra; ++rb)
        for (int cb = ca + 1; cb < l[rb]; ++cb) ++s.NE;
  s.NEbar = psize(l) + s.dN + s.dE + s.NE;
  return s;
}

bool dominates(const Partition& l, const Partition& m) {
  if (psize(l) != psize(m)) return false;
  int a = 0, b = 0;
  for (size_t i = 0; i < std::max(l.size(), m.size()); ++i) {
    a += i < l.size() ? l[i] : 0;
    b += i < m.size() ? m[i] : 0;
    if (a < b) return false;
  }
  return true;
}

static void gen_parts(int n, int maxp, int maxh, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (maxh == 0) return;
  for (int p = std::min(n, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(n - p, p, maxh - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_parts(n, n, n, cur, out);
  return out;
}

std::vector<Partition> enum_grpar(int m, int n) {
  std::vector<Partition> out;
  for (int s = 0; s <= m * n; ++s) {
    Partition cur;
    gen_parts(s, n, m, cur, out);
  }
  return out;
}

std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int s = 0; s <= n; ++s) {
    auto p = partitions_of(s);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::string pstr(const Partition& l) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << "]";
  return os.str();
}

long ncomp(const Composition& a) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) s += static_cast<long>(a[i]) * a[j];
  return s;
}

bool semistandard(const Tableau& t) {
  if (t.rows.size() != t.shape.size()) return false;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(t.rows[i].size()) != t.shape[i]) return false;
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j && t.rows[i][j] < t.rows[i][j - 1]) return false;
      if (i && t.rows[i][j] <= t.rows[i - 1][j]) return false;
    }
  }
  return true;
}

int tableau_sign(const Tableau& t) {
  if (!semistandard(t)) throw std::invalid_argument("tableau_sign: not semistandard");
  long cnt = 0;
  for (size_t ra = 0; ra < t.rows.size(); ++ra)
    for (size_t ca = 0; ca < t.rows[ra].size(); ++ca)
      for (size_t rb = 0; rb < ra; ++rb)
        for (size_t cb = 0; cb < t.rows[rb].size(); ++cb)
          if (t.rows[rb][cb] >= t.rows[ra][ca]) ++cnt;
  return cnt % 2 ? -1 : 1;
}

std::vector<Tableau> ssyt(const Partition& shape, const Composition& content) {
  std::vector<Tableau> out;
  if (psize(shape) != std::accumulate(content.begin(), content.end(), 0)) return out;
  // fill entries 1..k successively as horizontal strips
  int k = static_cast<int>(content.size());
  std::vector<std::vector<int>> rows(shape.size());
  std::function<void(int, Partition)> rec = [&](int v, Partition cur) {
    if (v == k) {
      if (trim(cur) == trim(shape)) out.push_back({shape, rows});
      return;
    }
    int need = content[v];
    // choose new shape nu with cur <= nu <= shape, nu/cur horizontal strip of size need
    Partition nu = cur;
    nu.resize(shape.size(), 0);
    std::function<void(size_t, int)> strip = [&](size_t i, int left) {
      if (i == shape.size()) {
        if (left) return;
        for (size_t r = 0; r < shape.size(); ++r)
          for (int c = cur.size() > r ? cur[r] : 0; c < nu[r]; ++c) rows[r].push_back(v + 1);
        rec(v + 1, nu);
        for (size_t r = 0; r < shape.size(); ++r) {
          int base = cur.size() > r ? cur[r] : 0;
          rows[r].resize(base);
        }
        return;
      }
      int lo = cur.size() > i ? cur[i] : 0;
      int hi = shape[i];
      if (i > 0) hi = std::min(hi, cur.size() > i - 1 ? cur[i - 1] : 0);
      for (int x = lo; x <= hi && x - lo <= left; ++x) {
        nu[i] = x;
        strip(i + 1, left - (x - lo));
      }
      nu[i] = lo;
    };
    strip(0, need);
  };
  Partition start(shape.size(), 0);
  rec(0, start);
  return out;
}

std::optional<int> pieri_sign(const Partition& l, const Partition& m, int r) {
  size_t h = std::max(l.size(), m.size());
  Partition a = l, b = m;
  a.resize(h, 0);
  b.resize(h, 0);
  if (psize(b) - psize(a) != r) return std::nullopt;
  // added boxes: one at the bottom of r distinct columns, i.e. a horizontal strip
  std::vector<int> cols;
  for (size_t i = 0; i < h; ++i) {
    if (b[i] < a[i]) return std::nullopt;
    if (i && b[i] > a[i - 1]) return std::nullopt;
    for (int c = a[i]; c < b[i]; ++c) cols.push_back(c + 1);
  }
  std::sort(cols.begin(), cols.end());
  auto lt = transpose(trim(a));
  long S = 0;
  int l1 = a.empty() ? 0 : a[0];
  for (int ij : cols)
    for (int k = ij + 1; k <= l1; ++k) S += lt[k - 1];
  long e = stats(trim(a)).NE + stats(trim(b)).NE + S;
  return e % 2 ? -1 : 1;
}

Perm perm_id(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inv(const Perm& w) {
  Perm r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[w[i]] = static_cast<int>(i);
  return r;
}

Perm perm_s(int n, int i) {
  Perm w = perm_id(n);
  std::swap(w[i - 1], w[i]);
  return w;
}

int perm_len(const Perm& w) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

std::vector<int> reduced_word(const Perm& w0) {
  std::vector<int> word;
  Perm w = w0;
  int n = static_cast<int>(w.size());
  while (perm_len(w) > 0) {
    // smallest left descent: i with w^{-1}(i) > w^{-1}(i+1)
    Perm wi = perm_inv(w);
    for (int i = 1; i < n; ++i) {
      if (wi[i - 1] > wi[i]) {
        word.push_back(i);
        w = perm_mul(perm_s(n, i), w);
        break;
      }
    }
  }
  return word;
}

Perm from_word(int n, const std::vector<int>& word) {
  Perm w = perm_id(n);
  for (int i : word) w = perm_mul(w, perm_s(n, i));
  return w;
}

Perm longest(int n) {
  Perm w(n);
  for (int i = 0; i < n; ++i) w[i] = n - 1 - i;
  return w;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm w = perm_id(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Perm> min_coset_reps(const Composition& alpha) {
  int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  std::vector<Perm> out;
  for (auto& w : all_perms(n)) {
    int pos = 0;
    bool ok = true;
    for (int a : alpha) {
      for (int j = pos; j + 1 < pos + a; ++j)
        if (w[j] > w[j + 1]) ok = false;
      pos += a;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

nlohmann::json part_json(const Partition& l) { return nlohmann::json(l); }

}  // namespace oddsym
