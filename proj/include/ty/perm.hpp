#pragma once

#include <algorithm>
#include <vector>

#include "ty/errors.hpp"

namespace ty {

// Permutation of an ascending ground sequence c_1 < ... < c_N, stored as the
// value at each position.
struct Perm {
  std::vector<int> ground;  // ascending
  std::vector<int> img;     // img[t] = value at position t+1

  Perm() = default;
  Perm(std::vector<int> g, std::vector<int> im)
      : ground(std::move(g)), img(std::move(im)) {
    if (ground.size() != img.size()) throw Error("permutation size mismatch");
  }

  static Perm identity(std::vector<int> g) {
    std::vector<int> im = g;
    return Perm(std::move(g), std::move(im));
  }
  static Perm identity_n(int N) {
    std::vector<int> g(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) g[static_cast<size_t>(i)] = i + 1;
    return identity(g);
  }

  int size() const { return static_cast<int>(ground.size()); }

  int sgn() const {
    // parity of inversions of img relative to the ground order
    int inv = 0;
    for (size_t i = 0; i < img.size(); ++i)
      for (size_t j = i + 1; j < img.size(); ++j)
        if (img[i] > img[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  }

  // value of the underlying map at a ground element
  int map(int c) const {
    for (size_t t = 0; t < ground.size(); ++t)
      if (ground[t] == c) return img[t];
    throw Error("element not in permutation ground");
  }

  Perm inverse() const {
    std::vector<int> im(img.size());
    for (size_t t = 0; t < ground.size(); ++t) {
      // position of value ground[t]
      auto it = std::find(img.begin(), img.end(), ground[t]);
      im[t] = ground[static_cast<size_t>(it - img.begin())];
    }
    return Perm(ground, std::move(im));
  }

  // (this o other)(c) = this(other(c))
  Perm compose(const Perm& other) const {
    std::vector<int> im(img.size());
    for (size_t t = 0; t < ground.size(); ++t) im[t] = map(other.img[t]);
    return Perm(ground, std::move(im));
  }

  bool operator==(const Perm& o) const { return ground == o.ground && img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

namespace detail {

// Image of the ordered pair (x, y) under the pair-rewriting rule on the
// sorted ground set G (|G| >= 3).
inline std::pair<int, int> omega_pair(int x, int y, const std::vector<int>& G) {
  int cN = G[G.size() - 1];
  int cN1 = G[G.size() - 2];
  int cN2 = G[G.size() - 3];
  if (x != cN && y != cN) return {y, x};
  if ((x == cN1 && y == cN) || (x == cN && y == cN1)) return {cN1, cN2};
  if (y == cN) return {cN1, x};
  return {y, cN1};  // x == cN, y < cN1
}

}  // namespace detail

// The inductive self-map p -> p' of the symmetric group used by the explicit
// minor expansion. The last position is always sent to the largest ground
// element; pairs (p'_i, p'_{N-i}) are filled from (p_i, p_{N+1-i}) on a
// shrinking ground set, and for even N the single middle position receives
// the one remaining unused value.
inline Perm omega(const Perm& p) {
  int N = p.size();
  if (N < 2) throw Error("omega needs N >= 2");
  std::vector<int> res(static_cast<size_t>(N), 0);
  std::vector<bool> set(static_cast<size_t>(N), false);
  res[static_cast<size_t>(N - 1)] = p.ground.back();
  set[static_cast<size_t>(N - 1)] = true;

  std::vector<int> G = p.ground;
  int i = 1;
  while (static_cast<int>(G.size()) >= 3) {
    int x = p.img[static_cast<size_t>(i - 1)];
    int y = p.img[static_cast<size_t>(N - i)];
    auto [a, b] = detail::omega_pair(x, y, G);
    res[static_cast<size_t>(i - 1)] = a;
    set[static_cast<size_t>(i - 1)] = true;
    res[static_cast<size_t>(N - i - 1)] = b;
    set[static_cast<size_t>(N - i - 1)] = true;
    G.erase(std::find(G.begin(), G.end(), x));
    G.erase(std::find(G.begin(), G.end(), y));
    ++i;
  }
  if (N % 2 == 0) {
    // middle position gets the unique unused value
    std::vector<int> used;
    for (int t = 0; t < N; ++t)
      if (set[static_cast<size_t>(t)]) used.push_back(res[static_cast<size_t>(t)]);
    std::sort(used.begin(), used.end());
    for (int c : p.ground) {
      if (!std::binary_search(used.begin(), used.end(), c)) {
        res[static_cast<size_t>(N / 2 - 1)] = c;
        break;
      }
    }
  }
  return Perm(p.ground, std::move(res));
}

// Exhaustive check that p -> p (p')^{-1} is injective on S_N.
inline bool omega_quotient_bijective(int N) {
  if (N < 2) throw Error("omega_quotient_bijective needs N >= 2");
  if (N > 8) throw SizeLimitExceeded("omega_quotient_bijective: N too large");
  Perm p = Perm::identity_n(N);
  std::vector<Perm> images;
  std::vector<int> img = p.img;
  do {
    Perm q(p.ground, img);
    images.push_back(q.compose(omega(q).inverse()));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

}  // namespace ty
