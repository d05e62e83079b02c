#pragma once

#include <utility>
#include <vector>

#include "ty/errors.hpp"
#include "ty/rational.hpp"

namespace ty {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major dense

// Sparse matrix stored by columns; entries within a column sorted by row.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rational>>> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(static_cast<size_t>(c)) {}

  void add(int r, int c, const Rational& v) {
    if (v.is_zero()) return;
    auto& cc = col[static_cast<size_t>(c)];
    for (auto& e : cc) {
      if (e.first == r) {
        e.second += v;
        return;
      }
    }
    cc.emplace_back(r, v);
  }

  void compress() {
    for (auto& cc : col) {
      cc.erase(std::remove_if(cc.begin(), cc.end(),
                              [](const auto& e) { return e.second.is_zero(); }),
               cc.end());
      std::sort(cc.begin(), cc.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }

  bool is_zero() const {
    for (const auto& cc : col)
      for (const auto& e : cc)
        if (!e.second.is_zero()) return false;
    return true;
  }

  long nnz() const {
    long n = 0;
    for (const auto& cc : col) n += static_cast<long>(cc.size());
    return n;
  }

  // y += s * (this * x), generic over the scalar ring of x.
  template <class R>
  void apply_add(const std::vector<R>& x, std::vector<R>& y, const Rational& s = 1) const {
    for (int c = 0; c < cols; ++c) {
      const R& xc = x[static_cast<size_t>(c)];
      if (xc == R(0)) continue;
      for (const auto& e : col[static_cast<size_t>(c)]) {
        y[static_cast<size_t>(e.first)] += xc * R(e.second * s);
      }
    }
  }

  QVec apply(const QVec& x) const {
    QVec y(static_cast<size_t>(rows), Rational(0));
    apply_add(x, y);
    return y;
  }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    SparseMat r(a.rows, b.cols);
    for (int c = 0; c < b.cols; ++c) {
      QVec acc(static_cast<size_t>(a.rows), Rational(0));
      for (const auto& e : b.col[static_cast<size_t>(c)]) {
        for (const auto& f : a.col[static_cast<size_t>(e.first)])
          acc[static_cast<size_t>(f.first)] += f.second * e.second;
      }
      for (int i = 0; i < a.rows; ++i)
        if (!acc[static_cast<size_t>(i)].is_zero()) r.add(i, c, acc[static_cast<size_t>(i)]);
    }
    return r;
  }

  friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    SparseMat r = a;
    for (int c = 0; c < b.cols; ++c)
      for (const auto& e : b.col[static_cast<size_t>(c)]) r.add(e.first, c, -e.second);
    r.compress();
    return r;
  }

  QMat dense() const {
    QMat m(static_cast<size_t>(rows), QVec(static_cast<size_t>(cols), Rational(0)));
    for (int c = 0; c < cols; ++c)
      for (const auto& e : col[static_cast<size_t>(c)])
        m[static_cast<size_t>(e.first)][static_cast<size_t>(c)] = e.second;
    return m;
  }

  static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
  }

  static SparseMat from_dense(const QMat& d) {
    SparseMat m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
    for (size_t i = 0; i < d.size(); ++i)
      for (size_t j = 0; j < d[i].size(); ++j)
        m.add(static_cast<int>(i), static_cast<int>(j), d[i][j]);
    return m;
  }
};

// In-place reduced row echelon form; returns the pivot column of each
// surviving row. Deterministic: scans columns left to right, picks the
// topmost nonzero row.
std::vector<int> rref(QMat& m);

// Basis of the null space {x : m x = 0}, one vector per free column in
// ascending column order. The basis is itself in reduced echelon shape.
std::vector<QVec> kernel_basis(QMat m, int ncols);

// Row space basis in reduced echelon form (drops zero rows).
QMat row_space(QMat m);

bool is_zero_vec(const QVec& v);

// A subspace of Q^ambient given by a reduced-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, QMat basis_rows) : ambient_(ambient) {
    basis_ = row_space(std::move(basis_rows));
    pivots_.clear();
    for (const auto& row : basis_) {
      for (int j = 0; j < ambient_; ++j) {
        if (!row[static_cast<size_t>(j)].is_zero()) {
          pivots_.push_back(j);
          break;
        }
      }
    }
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const QMat& basis() const { return basis_; }
  const QVec& basis_vec(int i) const { return basis_[static_cast<size_t>(i)]; }

  // Coordinates of v in the echelon basis; throws NotInSpan otherwise.
  QVec coords_of(const QVec& v) const {
    QVec c(basis_.size(), Rational(0));
    QVec rem = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
      Rational piv = rem[static_cast<size_t>(pivots_[i])];
      if (piv.is_zero()) continue;
      c[i] = piv;  // pivot entries of an RREF basis are 1
      for (int j = 0; j < ambient_; ++j)
        rem[static_cast<size_t>(j)] -= piv * basis_[i][static_cast<size_t>(j)];
    }
    if (!is_zero_vec(rem)) throw NotInSpan("vector not in subspace");
    return c;
  }

  bool contains(const QVec& v) const {
    try {
      coords_of(v);
      return true;
    } catch (const NotInSpan&) {
      return false;
    }
  }

  QVec from_coords(const QVec& c) const {
    QVec v(static_cast<size_t>(ambient_), Rational(0));
    for (size_t i = 0; i < basis_.size(); ++i)
      for (int j = 0; j < ambient_; ++j)
        v[static_cast<size_t>(j)] += c[i] * basis_[i][static_cast<size_t>(j)];
    return v;
  }

 private:
  int ambient_ = 0;
  QMat basis_;
  std::vector<int> pivots_;
};

// Inverse of a dense square matrix over Q; throws SingularMatrix.
QMat invert(QMat m);

}  // namespace ty
