#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ty/scheme.hpp"

namespace ty {

// Tuples of scheme indices packed 4 bits per slot (N <= 15, k <= 16).
using Tuple = std::vector<int>;

inline uint64_t encode_tuple(const IndexScheme& sch, const Tuple& t) {
  uint64_t key = 0;
  for (size_t s = 0; s < t.size(); ++s)
    key |= static_cast<uint64_t>(sch.pos(t[s])) << (4 * s);
  return key;
}

inline Tuple decode_tuple(const IndexScheme& sch, uint64_t key, int k) {
  Tuple t(static_cast<size_t>(k));
  for (int s = 0; s < k; ++s) t[static_cast<size_t>(s)] = sch.index_at((key >> (4 * s)) & 0xf);
  return t;
}

// Exact linear operator on (C^N)^{tensor k}, stored sparsely by pairs of
// basis tuples. Only used at small k; the minor kernel applies the same
// operators slot-locally instead of materializing them.
template <class R>
class TensorOp {
 public:
  TensorOp(IndexScheme sch, int k) : sch_(sch), k_(k) {}

  const IndexScheme& scheme() const { return sch_; }
  int slots() const { return k_; }

  void add(const Tuple& out, const Tuple& in, const R& v) {
    if (v == R(0)) return;
    auto key = std::make_pair(encode_tuple(sch_, out), encode_tuple(sch_, in));
    auto it = m_.find(key);
    if (it == m_.end())
      m_.emplace(key, v);
    else {
      it->second += v;
      if (it->second == R(0)) m_.erase(it);
    }
  }

  R entry(const Tuple& out, const Tuple& in) const {
    auto it = m_.find({encode_tuple(sch_, out), encode_tuple(sch_, in)});
    return it == m_.end() ? R(0) : it->second;
  }

  static TensorOp identity(IndexScheme sch, int k) {
    TensorOp op(sch, k);
    Tuple t(static_cast<size_t>(k), sch.indices()[0]);
    op.for_all_tuples(k, [&](const Tuple& tt) { op.add(tt, tt, R(1)); });
    return op;
  }

  template <class Fn>
  void for_all_tuples(int k, Fn&& fn) const {
    Tuple t(static_cast<size_t>(k));
    auto idx = sch_.indices();
    std::vector<size_t> c(static_cast<size_t>(k), 0);
    while (true) {
      for (int s = 0; s < k; ++s) t[static_cast<size_t>(s)] = idx[c[static_cast<size_t>(s)]];
      fn(t);
      int s = 0;
      while (s < k) {
        if (++c[static_cast<size_t>(s)] < idx.size()) break;
        c[static_cast<size_t>(s)] = 0;
        ++s;
      }
      if (s == k) break;
    }
  }

  friend TensorOp operator*(const TensorOp& a, const TensorOp& b) {
    TensorOp r(a.sch_, a.k_);
    std::map<std::pair<uint64_t, uint64_t>, R> acc;
    for (const auto& [kb, vb] : b.m_) {
      for (const auto& [ka, va] : a.m_) {
        if (ka.second != kb.first) continue;
        acc[{ka.first, kb.second}] += va * vb;
      }
    }
    for (auto& [key, v] : acc)
      if (!(v == R(0))) r.m_.emplace(key, std::move(v));
    return r;
  }

  friend TensorOp operator+(const TensorOp& a, const TensorOp& b) {
    TensorOp r = a;
    for (const auto& [key, v] : b.m_) {
      auto it = r.m_.find(key);
      if (it == r.m_.end())
        r.m_.emplace(key, v);
      else {
        it->second += v;
        if (it->second == R(0)) r.m_.erase(it);
      }
    }
    return r;
  }

  friend TensorOp operator-(const TensorOp& a, const TensorOp& b) { return a + (b * R(-1)); }

  friend TensorOp operator*(const TensorOp& a, const R& s) {
    TensorOp r(a.sch_, a.k_);
    if (s == R(0)) return r;
    for (const auto& [key, v] : a.m_) r.m_.emplace(key, v * s);
    return r;
  }

  bool operator==(const TensorOp& o) const { return m_ == o.m_; }
  bool is_zero() const { return m_.empty(); }

 private:
  IndexScheme sch_;
  int k_;
  std::map<std::pair<uint64_t, uint64_t>, R> m_;
};

// P = sum e_ij (x) e_ji, the flip of the two slots.
template <class R = Rational>
TensorOp<R> build_P(const IndexScheme& sch) {
  TensorOp<R> op(sch, 2);
  for (int i : sch.indices())
    for (int j : sch.indices()) op.add({i, j}, {j, i}, R(1));
  return op;
}

// Q = sum theta_ij e_{-j,-i} (x) e_{ji}.
template <class R = Rational>
TensorOp<R> build_Q(const IndexScheme& sch) {
  TensorOp<R> op(sch, 2);
  for (int i : sch.indices())
    for (int j : sch.indices())
      op.add({-j, j}, {-i, i}, R(Rational(sch.theta(i, j))));
  return op;
}

// R^t(x) = 1 - Q / x.
template <class R>
TensorOp<R> build_Rt(const IndexScheme& sch, const R& x) {
  if (x == R(0)) throw DivideByZero("R^t at zero argument");
  TensorOp<R> op = TensorOp<R>::identity(sch, 2);
  R minv = R(-1) / x;
  return op + build_Q<R>(sch) * minv;
}

// Antisymmetrizer A_k = sum over sigma of sgn(sigma) P_sigma.
template <class R = Rational>
TensorOp<R> antisymmetrizer(const IndexScheme& sch, int k) {
  if (k < 1 || k > sch.N) throw InvalidIndex("antisymmetrizer order out of range");
  TensorOp<R> op(sch, k);
  std::vector<int> perm(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
  op.for_all_tuples(k, [&](const Tuple& t) {
    std::vector<int> sigma = perm;
    do {
      int inv = 0;
      for (size_t a = 0; a < sigma.size(); ++a)
        for (size_t b = a + 1; b < sigma.size(); ++b)
          if (sigma[a] > sigma[b]) ++inv;
      Tuple out(t.size());
      // P_sigma moves slot s content to slot sigma(s)
      for (size_t s = 0; s < t.size(); ++s) out[static_cast<size_t>(sigma[s])] = t[s];
      op.add(out, t, R(Rational(inv % 2 == 0 ? 1 : -1)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  });
  return op;
}

// Entrywise transposition (A^t)_{ij} = theta_ij A_{-j,-i} for an N x N matrix
// over any ring, rows/columns ordered by ascending scheme index.
template <class R>
std::vector<std::vector<R>> transpose_t(const IndexScheme& sch,
                                        const std::vector<std::vector<R>>& a) {
  size_t N = static_cast<size_t>(sch.N);
  if (a.size() != N) throw ShapeMismatch("transpose_t: matrix has wrong size");
  for (const auto& row : a)
    if (row.size() != N) throw ShapeMismatch("transpose_t: matrix has wrong size");
  std::vector<std::vector<R>> out(N, std::vector<R>(N, R(0)));
  for (int i : sch.indices())
    for (int j : sch.indices())
      out[static_cast<size_t>(sch.pos(i))][static_cast<size_t>(sch.pos(j))] =
          R(Rational(sch.theta(i, j))) *
          a[static_cast<size_t>(sch.pos(-j))][static_cast<size_t>(sch.pos(-i))];
  return out;
}

}  // namespace ty
