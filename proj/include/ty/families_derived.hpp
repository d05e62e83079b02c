#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ty/minors.hpp"
#include "ty/s_family.hpp"

namespace ty {

// Gauss-Jordan inverse over any field-like ring (Rational or RatFunc).
template <class R>
std::vector<std::vector<R>> invert_dense(std::vector<std::vector<R>> m) {
  size_t n = m.size();
  std::vector<std::vector<R>> inv(n, std::vector<R>(n, R(Rational(0))));
  for (size_t i = 0; i < n; ++i) inv[i][i] = R(Rational(1));
  for (size_t c = 0; c < n; ++c) {
    size_t sel = n;
    for (size_t r = c; r < n; ++r) {
      if (!(m[r][c] == R(Rational(0)))) {
        sel = r;
        break;
      }
    }
    if (sel == n) throw SingularMatrix("matrix is singular");
    std::swap(m[c], m[sel]);
    std::swap(inv[c], inv[sel]);
    R piv = m[c][c];
    for (size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] / piv;
      inv[c][j] = inv[c][j] / piv;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == R(Rational(0))) continue;
      R f = m[r][c];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - f * m[c][j];
        inv[r][j] = inv[r][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

// The bordered-minor family
//   s#_{ab}(u) = s^{-m..m, A(a)}_{-m..m, A(b)}(u + M/2),
// optionally dressed with alpha_{-m}(u); with the prefactor this realizes the
// Sylvester homomorphism image and satisfies the smaller twisted Yangian
// relations. Entry matrices are cached per (a, b, argument); instances are
// not safe to share across threads.
template <class R>
class SharpFamily : public SFamily<R> {
 public:
  SharpFamily(const SFamily<R>& base, int m, bool with_alpha,
              MinorRoute route = MinorRoute::formula)
      : base_(&base), m_(m), with_alpha_(with_alpha), route_(route) {
    const IndexScheme& big = base.scheme();
    if (m < 0 || m >= big.n) throw InvalidIndex("sharp family needs 0 <= m < n");
    small_ = big.symplectic() ? IndexScheme::sp(big.n - m)
                              : IndexScheme::o_even(big.n - m);
    big_M_ = big.has_zero() ? 2 * m + 1 : 2 * m;
  }

  const IndexScheme& scheme() const override { return small_; }
  int dim() const override { return base_->dim(); }
  int block_size() const { return big_M_; }

  int to_big(int a) const { return a > 0 ? a + m_ : a - m_; }

  void entry_apply_add(int a, int b, const Affine& arg, const std::vector<R>& x,
                       std::vector<R>& y) const override {
    const auto& mat = matrix_at(a, b, arg);
    for (size_t c = 0; c < x.size(); ++c) {
      if (x[c] == R(Rational(0))) continue;
      for (size_t r = 0; r < x.size(); ++r) y[r] += mat[r][c] * x[c];
    }
  }

 private:
  const std::vector<std::vector<R>>& matrix_at(int a, int b, const Affine& arg) const {
    auto key = std::make_tuple(a, b, arg);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    int d = dim();
    std::vector<std::vector<R>> mat(static_cast<size_t>(d),
                                    std::vector<R>(static_cast<size_t>(d), R(Rational(0))));
    std::vector<R> e(static_cast<size_t>(d), R(Rational(0)));
    for (int c = 0; c < d; ++c) {
      e[static_cast<size_t>(c)] = R(Rational(1));
      std::vector<R> col =
          sharp_entry_apply(*base_, m_, to_big(a), to_big(b), arg, e, route_);
      e[static_cast<size_t>(c)] = R(Rational(0));
      for (int r = 0; r < d; ++r) mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = col[static_cast<size_t>(r)];
    }
    if (with_alpha_) {
      R al = alpha_value<R>(base_->scheme().cs, Rational(-m_), arg);
      for (auto& row : mat)
        for (auto& v : row) v = v * al;
    }
    return cache_.emplace(std::move(key), std::move(mat)).first->second;
  }

  const SFamily<R>* base_;
  int m_;
  bool with_alpha_;
  MinorRoute route_;
  IndexScheme small_;
  int big_M_;
  mutable std::map<std::tuple<int, int, Affine>, std::vector<std::vector<R>>> cache_;
};

// The dual bordered-minor family over the middle block:
//   i,j in B -> alpha_{m-n}(u) s^{-n..-m-1, i, m+1..n}_{-n..-m-1, j, m+1..n}(u + n - m).
template <class R>
class DualFamily : public SFamily<R> {
 public:
  DualFamily(const SFamily<R>& base, int m, MinorRoute route = MinorRoute::chain)
      : base_(&base), m_(m), route_(route) {
    const IndexScheme& big = base.scheme();
    if (m < 1 || m >= big.n) throw InvalidIndex("dual family needs 1 <= m < n");
    small_ = big.has_zero() ? IndexScheme::o_odd(m)
                            : (big.symplectic() ? IndexScheme::sp(m) : IndexScheme::o_even(m));
  }

  const IndexScheme& scheme() const override { return small_; }
  int dim() const override { return base_->dim(); }

  void entry_apply_add(int i, int j, const Affine& arg, const std::vector<R>& x,
                       std::vector<R>& y) const override {
    const IndexScheme& big = base_->scheme();
    std::vector<int> upper, lower;
    for (int t = -big.n; t <= -m_ - 1; ++t) upper.push_back(t);
    upper.push_back(i);
    for (int t = m_ + 1; t <= big.n; ++t) upper.push_back(t);
    lower = upper;
    lower[static_cast<size_t>(big.n - m_)] = j;
    Affine inner = arg.shifted(Rational(big.n - m_));
    std::vector<R> res = minor_apply(*base_, upper, lower, inner, x, route_);
    R al = alpha_value<R>(big.cs, Rational(m_ - big.n), arg);
    for (size_t t = 0; t < y.size(); ++t) y[t] += res[t] * al;
  }

 private:
  const SFamily<R>* base_;
  int m_;
  MinorRoute route_;
  IndexScheme small_;
};

// The image family under the inversion automorphism: W(v) = S^{-1}(-v - N/2).
// Minors of this family realize the automorphism's action on minors.
template <class R>
class InverseFamily : public SFamily<R> {
 public:
  explicit InverseFamily(const SFamily<R>& base) : base_(&base) {
    long big = static_cast<long>(base.scheme().N) * base.dim();
    if (big > 48) throw SizeLimitExceeded("inverse family limited to N*dim <= 48");
  }
  // copying would shadow the converting constructor when composing the map
  // with itself; force an explicit upcast instead
  InverseFamily(const InverseFamily&) = delete;
  InverseFamily& operator=(const InverseFamily&) = delete;

  const IndexScheme& scheme() const override { return base_->scheme(); }
  int dim() const override { return base_->dim(); }

  void entry_apply_add(int a, int b, const Affine& arg, const std::vector<R>& x,
                       std::vector<R>& y) const override {
    const IndexScheme& sch = scheme();
    Affine inner = arg.negated().shifted(-Rational(sch.N, 2));
    const auto& inv = inverse_at(inner);
    int d = dim();
    int pa = sch.pos(a), pb = sch.pos(b);
    for (int c = 0; c < d; ++c) {
      if (x[static_cast<size_t>(c)] == R(Rational(0))) continue;
      for (int r = 0; r < d; ++r)
        y[static_cast<size_t>(r)] += inv[static_cast<size_t>(pa * d + r)][static_cast<size_t>(pb * d + c)] *
                                     x[static_cast<size_t>(c)];
    }
  }

 private:
  const std::vector<std::vector<R>>& inverse_at(const Affine& inner) const {
    auto it = cache_.find(inner);
    if (it != cache_.end()) return it->second;
    const IndexScheme& sch = scheme();
    int d = dim(), N = sch.N;
    size_t big = static_cast<size_t>(N) * static_cast<size_t>(d);
    std::vector<std::vector<R>> m(big, std::vector<R>(big, R(Rational(0))));
    for (int a : sch.indices()) {
      for (int b : sch.indices()) {
        auto blk = base_->entry_matrix(a, b, inner);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c)
            m[static_cast<size_t>(sch.pos(a) * d + r)][static_cast<size_t>(sch.pos(b) * d + c)] =
                blk[static_cast<size_t>(r)][static_cast<size_t>(c)];
      }
    }
    auto inv = invert_dense(std::move(m));
    return cache_.emplace(inner, std::move(inv)).first->second;
  }

  const SFamily<R>* base_;
  mutable std::map<Affine, std::vector<std::vector<R>>> cache_;
};

}  // namespace ty
