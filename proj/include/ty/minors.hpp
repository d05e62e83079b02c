#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ty/perm.hpp"
#include "ty/s_family.hpp"
#include "ty/tensor_op.hpp"

namespace ty {

enum class MinorRoute { chain, formula };

namespace kernel {

// Sparse vector in (C^N)^{tensor k} (x) module: packed index tuple -> module
// coefficient vector.
template <class R>
using State = std::unordered_map<uint64_t, std::vector<R>>;

template <class R>
bool all_zero(const std::vector<R>& v) {
  for (const auto& x : v)
    if (!(x == R(Rational(0)))) return false;
  return true;
}

template <class R>
void accumulate(State<R>& st, uint64_t key, std::vector<R>&& vec) {
  auto it = st.find(key);
  if (it == st.end()) {
    st.emplace(key, std::move(vec));
  } else {
    for (size_t i = 0; i < vec.size(); ++i) it->second[i] += vec[i];
  }
}

// One S-factor acting on a tensor slot: sum_{a,b} e_ab at `slot` (x) s_ab(arg).
template <class R>
State<R> apply_S_slot(const SFamily<R>& fam, int slot, const Affine& arg,
                      const State<R>& st) {
  const IndexScheme& sch = fam.scheme();
  State<R> out;
  out.reserve(st.size() * 2);
  for (const auto& [key, vec] : st) {
    int col = sch.index_at(static_cast<int>((key >> (4 * slot)) & 0xf));
    uint64_t base = key & ~(0xfULL << (4 * slot));
    for (int row : fam.candidate_rows(col)) {
      std::vector<R> y(vec.size(), R(Rational(0)));
      fam.entry_apply_add(row, col, arg, vec, y);
      if (all_zero(y)) continue;
      uint64_t nk = base | (static_cast<uint64_t>(sch.pos(row)) << (4 * slot));
      accumulate(out, nk, std::move(y));
    }
  }
  return out;
}

// R^t factor between slots s,t at spectral value x: w -> w - Q_{st} w / x.
// Q(e_a (x) e_b) = [a = -b] sum_j theta_{b,j} e_{-j} (x) e_j.
template <class R>
State<R> apply_Rt_slots(const IndexScheme& sch, int s, int t, const Affine& x,
                        const State<R>& st) {
  R minus_inv = Spectral<R>::inv(x) * R(Rational(-1));
  State<R> out = st;
  for (const auto& [key, vec] : st) {
    int vs = sch.index_at(static_cast<int>((key >> (4 * s)) & 0xf));
    int vt = sch.index_at(static_cast<int>((key >> (4 * t)) & 0xf));
    if (vs != -vt) continue;
    uint64_t base = key & ~(0xfULL << (4 * s)) & ~(0xfULL << (4 * t));
    for (int j : sch.indices()) {
      R c = minus_inv * R(Rational(sch.theta(vt, j)));
      std::vector<R> y(vec.size(), R(Rational(0)));
      for (size_t i = 0; i < vec.size(); ++i) y[i] = vec[i] * c;
      uint64_t nk = base | (static_cast<uint64_t>(sch.pos(-j)) << (4 * s)) |
                    (static_cast<uint64_t>(sch.pos(j)) << (4 * t));
      accumulate(out, nk, std::move(y));
    }
  }
  return out;
}

// Coefficient of the antisymmetrized tuple: sum_sigma sgn(sigma) w[a o sigma].
template <class R>
std::vector<R> antisym_readout(const IndexScheme& sch, const State<R>& st,
                               const std::vector<int>& upper, int dim) {
  int k = static_cast<int>(upper.size());
  std::vector<int> sigma(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) sigma[static_cast<size_t>(i)] = i;
  std::vector<R> acc(static_cast<size_t>(dim), R(Rational(0)));
  do {
    int inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (sigma[static_cast<size_t>(a)] > sigma[static_cast<size_t>(b)]) ++inv;
    uint64_t key = 0;
    for (int i = 0; i < k; ++i)
      key |= static_cast<uint64_t>(
                 sch.pos(upper[static_cast<size_t>(sigma[static_cast<size_t>(i)])]))
             << (4 * i);
    auto it = st.find(key);
    if (it == st.end()) continue;
    if (inv % 2 == 0)
      for (int i = 0; i < dim; ++i) acc[static_cast<size_t>(i)] += it->second[static_cast<size_t>(i)];
    else
      for (int i = 0; i < dim; ++i)
        acc[static_cast<size_t>(i)] += it->second[static_cast<size_t>(i)] * R(Rational(-1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return acc;
}

struct Factor {
  bool is_S;
  int slot;       // S factor slot, or first R^t slot
  int slot2 = 0;  // second R^t slot
};

// <S_1,...,S_k> = S_1 (Rt_12..Rt_1k) S_2 (Rt_23..Rt_2k) ... S_k.
inline std::vector<Factor> bracket_program(int k) {
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    fs.push_back(Factor{true, i, 0});
    for (int j = i + 1; j < k; ++j) fs.push_back(Factor{false, i, j});
  }
  return fs;
}

template <class R>
State<R> run_program(const SFamily<R>& fam, const std::vector<Factor>& program,
                     const Affine& arg, State<R> st) {
  // factors act on a vector right to left
  for (auto it = program.rbegin(); it != program.rend(); ++it) {
    if (it->is_S) {
      st = apply_S_slot(fam, it->slot, arg.shifted(Rational(-it->slot)), st);
    } else {
      // u_i + u_j with u_i = arg - i (0-based slots), negated
      Affine x = (arg.shifted(Rational(-it->slot)) + arg.shifted(Rational(-it->slot2))).negated();
      st = apply_Rt_slots(fam.scheme(), it->slot, it->slot2, x, st);
    }
  }
  return st;
}

template <class R>
State<R> start_state(const IndexScheme& sch, const std::vector<int>& lower,
                     const std::vector<R>& vec) {
  State<R> st;
  uint64_t key = 0;
  for (size_t i = 0; i < lower.size(); ++i)
    key |= static_cast<uint64_t>(sch.pos(lower[i])) << (4 * i);
  st.emplace(key, vec);
  return st;
}

template <class T>
bool has_duplicate(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

// sign of the permutation carrying `from` to `to` (equal distinct content)
inline int perm_sign_between(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> perm;
  for (int x : to) {
    auto it = std::find(from.begin(), from.end(), x);
    if (it == from.end()) throw Error("perm_sign_between: content mismatch");
    perm.push_back(static_cast<int>(it - from.begin()));
  }
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace kernel

// ---------------------------------------------------------------------------
// Sklyanin minor s^{upper}_{lower}(arg) applied to a module vector, by the
// antisymmetrized operator chain. The full tensor operator is never
// materialized: the chain is applied to e_{lower} (x) vec and the coefficient
// at the antisymmetrized upper tuple is read off.
template <class R>
std::vector<R> minor_apply_chain(const SFamily<R>& fam, const std::vector<int>& upper,
                                 const std::vector<int>& lower, const Affine& arg,
                                 const std::vector<R>& vec) {
  if (upper.size() != lower.size()) throw ShapeMismatch("minor index lists differ in size");
  int k = static_cast<int>(upper.size());
  if (k < 1 || k > fam.scheme().N) throw ShapeMismatch("minor order out of range");
  for (int a : upper) fam.scheme().check_index(a);
  for (int b : lower) fam.scheme().check_index(b);
  if (kernel::has_duplicate(upper) || kernel::has_duplicate(lower))
    return std::vector<R>(vec.size(), R(Rational(0)));  // zero by skew-symmetry
  auto st = kernel::start_state(fam.scheme(), lower, vec);
  st = kernel::run_program(fam, kernel::bracket_program(k), arg, std::move(st));
  return kernel::antisym_readout(fam.scheme(), st, upper, fam.dim());
}

// Auxiliary minor: coefficient extraction from
// A_k <S_1,...,S_{k-1}> Rt_{1k} ... Rt_{k-1,k}.
template <class R>
std::vector<R> aux_minor_apply(const SFamily<R>& fam, const std::vector<int>& upper,
                               const std::vector<int>& lower, int c, const Affine& arg,
                               const std::vector<R>& vec) {
  int k = static_cast<int>(upper.size());
  if (static_cast<int>(lower.size()) != k - 1)
    throw ShapeMismatch("auxiliary minor needs k-1 lower indices");
  if (kernel::has_duplicate(upper))
    return std::vector<R>(vec.size(), R(Rational(0)));
  std::vector<kernel::Factor> program = kernel::bracket_program(k - 1);
  for (int i = 0; i + 1 < k; ++i) program.push_back(kernel::Factor{false, i, k - 1});
  std::vector<int> start = lower;
  start.push_back(c);
  auto st = kernel::start_state(fam.scheme(), start, vec);
  st = kernel::run_program(fam, program, arg, std::move(st));
  return kernel::antisym_readout(fam.scheme(), st, upper, fam.dim());
}

// ---------------------------------------------------------------------------
// Explicit minor formula: for indices a_1..a_M, b_M,
//   s^{-a_1..-a_M}_{a_1..a_{M-1},b_M}(u) = alpha_m(u) *
//     sum_p sgn(p p') s^t_{-a_{p(1)},a_{p'(1)}}(-u) ... s^t_{..}(-u+m-1)
//                     s_{-a_{p(m+1)},a_{p'(m+1)}}(u-m) ... s_{..,b_M}(u-M+1)
// with p' the omega-image of p over the ground set {1..M} and M = 2m or 2m+1.
template <class R>
std::vector<R> minsf_apply(const SFamily<R>& fam, const std::vector<int>& a_list,
                           int b_last, const Affine& arg, const std::vector<R>& vec) {
  const IndexScheme& sch = fam.scheme();
  int M = static_cast<int>(a_list.size());
  if (M < 1) throw ShapeMismatch("minor formula needs at least one index");
  if (M == 1) {
    std::vector<R> y(vec.size(), R(Rational(0)));
    fam.entry_apply_add(-a_list[0], b_last, arg, vec, y);
    return y;
  }
  int m = M / 2;
  std::vector<R> acc(vec.size(), R(Rational(0)));
  Perm p = Perm::identity_n(M);
  std::vector<int> img = p.img;
  do {
    Perm pp(p.ground, img);
    Perm ppr = omega(pp);
    int sign = pp.sgn() * ppr.sgn();
    std::vector<R> w = vec;
    bool dead = false;
    for (int t = M; t >= 1 && !dead; --t) {
      int row = -a_list[static_cast<size_t>(img[static_cast<size_t>(t - 1)] - 1)];
      int pr = ppr.img[static_cast<size_t>(t - 1)];
      int colbase = pr == M ? b_last : a_list[static_cast<size_t>(pr - 1)];
      std::vector<R> y(vec.size(), R(Rational(0)));
      if (t <= m) {
        // transposed entry at -(u) + t - 1
        fam.entry_t_apply_add(row, colbase, arg.negated().shifted(Rational(t - 1)), w, y);
      } else {
        fam.entry_apply_add(row, colbase, arg.shifted(Rational(1 - t)), w, y);
      }
      w = std::move(y);
      dead = kernel::all_zero(w);
    }
    if (dead) continue;
    if (sign > 0)
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += w[i];
    else
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += w[i] * R(Rational(-1));
  } while (std::next_permutation(img.begin(), img.end()));
  R al = alpha_value<R>(sch.cs, Rational(m), arg);
  for (auto& x : acc) x = x * al;
  return acc;
}

// General minor through the explicit formula, when the index shape permits:
// we need an ordering with {a_1..a_{M-1}} inside lower n (-upper).
template <class R>
std::vector<R> minor_apply_formula(const SFamily<R>& fam, const std::vector<int>& upper,
                                   const std::vector<int>& lower, const Affine& arg,
                                   const std::vector<R>& vec) {
  if (upper.size() != lower.size()) throw ShapeMismatch("minor index lists differ in size");
  int M = static_cast<int>(upper.size());
  if (kernel::has_duplicate(upper) || kernel::has_duplicate(lower))
    return std::vector<R>(vec.size(), R(Rational(0)));
  if (M == 1) return minsf_apply(fam, std::vector<int>{-upper[0]}, lower[0], arg, vec);

  std::vector<int> neg_upper;
  for (int a : upper) neg_upper.push_back(-a);
  std::sort(neg_upper.begin(), neg_upper.end());
  std::vector<int> ls = lower;
  std::sort(ls.begin(), ls.end());
  std::vector<int> X;
  std::set_intersection(ls.begin(), ls.end(), neg_upper.begin(), neg_upper.end(),
                        std::back_inserter(X));
  if (static_cast<int>(X.size()) < M - 1)
    throw ShapeMismatch("index shape outside the reach of the explicit formula");
  if (static_cast<int>(X.size()) == M) X.pop_back();

  std::vector<int> rest_l, rest_nu;
  std::set_difference(ls.begin(), ls.end(), X.begin(), X.end(), std::back_inserter(rest_l));
  std::set_difference(neg_upper.begin(), neg_upper.end(), X.begin(), X.end(),
                      std::back_inserter(rest_nu));
  int b_last = rest_l[0];
  int a_last = rest_nu[0];

  std::vector<int> a_list = X;
  a_list.push_back(a_last);
  std::vector<int> upper_f, lower_f;
  for (int a : a_list) upper_f.push_back(-a);
  lower_f = X;
  lower_f.push_back(b_last);
  int sign = kernel::perm_sign_between(upper_f, upper) *
             kernel::perm_sign_between(lower_f, lower);

  std::vector<R> res = minsf_apply(fam, a_list, b_last, arg, vec);
  if (sign < 0)
    for (auto& x : res) x = x * R(Rational(-1));
  return res;
}

template <class R>
std::vector<R> minor_apply(const SFamily<R>& fam, const std::vector<int>& upper,
                           const std::vector<int>& lower, const Affine& arg,
                           const std::vector<R>& vec,
                           MinorRoute route = MinorRoute::chain) {
  if (route == MinorRoute::formula) return minor_apply_formula(fam, upper, lower, arg, vec);
  return minor_apply_chain(fam, upper, lower, arg, vec);
}

// Sklyanin determinant: the full minor with upper = lower = all indices.
template <class R>
std::vector<R> sdet_apply(const SFamily<R>& fam, const Affine& arg, const std::vector<R>& vec,
                          MinorRoute route = MinorRoute::chain) {
  std::vector<int> idx = fam.scheme().indices();
  return minor_apply(fam, idx, idx, arg, vec, route);
}

// Sklyanin comatrix entry \hat s_{xy}(arg) applied to a vector, through the
// transposed-comatrix minor expression
//   \hat s^t_{a_i a_j}(u) = (-1)^{i+j} alpha_{N-1}(u) s^{omit a_j}_{omit a_i}(-u+N-2).
template <class R>
std::vector<R> comatrix_entry_apply(const SFamily<R>& fam, int x, int y, const Affine& arg,
                                    const std::vector<R>& vec,
                                    MinorRoute route = MinorRoute::formula) {
  const IndexScheme& sch = fam.scheme();
  std::vector<int> idx = sch.indices();
  int i = sch.pos(-y) + 1, j = sch.pos(-x) + 1;  // hat s_{xy} = theta_xy hat s^t_{-y,-x}
  std::vector<int> upper, lower;
  for (int t = 0; t < sch.N; ++t) {
    if (t + 1 != j) upper.push_back(idx[static_cast<size_t>(t)]);
    if (t + 1 != i) lower.push_back(idx[static_cast<size_t>(t)]);
  }
  Affine inner = arg.negated().shifted(Rational(sch.N - 2));
  std::vector<R> res = minor_apply(fam, upper, lower, inner, vec, route);
  Rational sign((i + j) % 2 == 0 ? 1 : -1);
  R coef = alpha_value<R>(sch.cs, Rational(sch.N - 1), arg) *
           R(sign * Rational(sch.theta(x, y)));
  for (auto& v : res) v = v * coef;
  return res;
}

// s#_{ab}(u) = s^{-m..m,a}_{-m..m,b}(u + M/2) over the base family.
template <class R>
std::vector<R> sharp_entry_apply(const SFamily<R>& fam, int m, int a, int b,
                                 const Affine& arg, const std::vector<R>& vec,
                                 MinorRoute route = MinorRoute::formula) {
  const IndexScheme& sch = fam.scheme();
  int M = sch.has_zero() ? 2 * m + 1 : 2 * m;
  std::vector<int> upper, lower;
  for (int i = -m; i <= m; ++i) {
    if (i == 0 && !sch.has_zero()) continue;
    upper.push_back(i);
    lower.push_back(i);
  }
  upper.push_back(a);
  lower.push_back(b);
  return minor_apply(fam, upper, lower, arg.shifted(Rational(M, 2)), vec, route);
}

}  // namespace ty
