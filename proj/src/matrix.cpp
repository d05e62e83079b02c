#include "ty/matrix.hpp"

#include <algorithm>

namespace ty {

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = m[r][c].inv();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::vector<QVec> kernel_basis(QMat m, int ncols) {
  if (m.empty()) {
    // no constraints: the whole space
    std::vector<QVec> basis;
    for (int i = 0; i < ncols; ++i) {
      QVec e(static_cast<size_t>(ncols), Rational(0));
      e[static_cast<size_t>(i)] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    QVec v(static_cast<size_t>(ncols), Rational(0));
    v[static_cast<size_t>(f)] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<size_t>(pivots[i])] = -m[i][static_cast<size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat row_space(QMat m) {
  rref(m);
  return m;
}

QMat invert(QMat m) {
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rational(0));
    m[i][n + i] = 1;
  }
  std::vector<int> piv = rref(m);
  for (size_t i = 0; i < n; ++i)
    if (i >= piv.size() || piv[i] != static_cast<int>(i))
      throw SingularMatrix("matrix is singular");
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace ty
