#pragma once

#include <vector>

#include <gmpxx.h>

namespace oddsym {

using Q = mpq_class;
using QMat = std::vector<std::vector<Q>>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m);
int rank(QMat m);
// basis of {v : m v = 0}
QMat nullspace(const QMat& m, int ncols);
// one solution of m v = b, or empty if inconsistent
std::vector<Q> solve(const QMat& m, const std::vector<Q>& b, int ncols, bool* ok);
QMat transpose(const QMat& m, int ncols);

}  // namespace oddsym
