#include "oddsym/linalg.hpp"

namespace oddsym {

std::vector<int> rref(QMat& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  size_t cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

QMat nullspace(const QMat& m0, int ncols) {
  QMat m = m0;
  auto piv = rref(m);
  std::vector<int> is_piv(ncols, -1);
  for (size_t k = 0; k < piv.size(); ++k) is_piv[piv[k]] = static_cast<int>(k);
  QMat out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f] >= 0) continue;
    std::vector<Q> v(ncols, 0);
    v[f] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m[k][f];
    out.push_back(v);
  }
  return out;
}

std::vector<Q> solve(const QMat& m0, const std::vector<Q>& b, int ncols, bool* ok) {
  QMat m = m0;
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  if (m.empty()) {
    *ok = true;
    return std::vector<Q>(ncols, 0);
  }
  auto piv = rref(m);
  std::vector<Q> x(ncols, 0);
  *ok = piv.empty() || piv.back() < ncols;
  if (!*ok) return {};
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = m[k][ncols];
  return x;
}

QMat transpose(const QMat& m, int ncols) {
  QMat t(ncols, std::vector<Q>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace oddsym
