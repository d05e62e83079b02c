#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ty/lie_rep.hpp"
#include "ty/poly.hpp"
#include "ty/scheme.hpp"

namespace ty {

// Spectral argument a*u + b. Minor internals only ever shift, negate and
// rescale arguments, so affine forms are closed under everything we need.
struct Affine {
  Rational a, b;
  Affine() : a(1), b(0) {}
  Affine(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  static Affine constant(const Rational& c) { return Affine(0, c); }
  static Affine uvar() { return Affine(1, 0); }

  Affine shifted(const Rational& c) const { return Affine(a, b + c); }
  Affine negated() const { return Affine(-a, -b); }
  friend Affine operator+(const Affine& x, const Affine& y) {
    return Affine(x.a + y.a, x.b + y.b);
  }
  bool operator<(const Affine& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const Affine& o) const { return a == o.a && b == o.b; }
};

// Scalar realization of an affine argument. Over Rational the argument must
// be constant (sampled evaluation); over RatFunc it stays symbolic.
template <class R>
struct Spectral;

template <>
struct Spectral<Rational> {
  static Rational value(const Affine& f) {
    if (!f.a.is_zero())
      throw Error("sampled evaluation needs a constant spectral argument");
    return f.b;
  }
  static Rational inv(const Affine& f) {
    Rational v = value(f);
    if (v.is_zero()) throw PoleError("sample hits a pole of a spectral factor");
    return v.inv();
  }
};

template <>
struct Spectral<RatFunc> {
  static RatFunc value(const Affine& f) { return RatFunc::linear(f.a, f.b); }
  static RatFunc inv(const Affine& f) {
    if (f.a.is_zero() && f.b.is_zero()) throw PoleError("zero spectral factor");
    return RatFunc(Poly(Rational(1)), Poly::linear(f.a, f.b));
  }
};

// alpha_p(u): 1 in the orthogonal case, (u+1/2)/(u-p+1/2) in the symplectic.
inline RatFunc alpha_ratfunc(Case cs, const Rational& p) {
  if (cs == Case::orthogonal) return RatFunc(Rational(1));
  return RatFunc(Poly::linear(1, Rational(1, 2)), Poly::linear(1, Rational(1, 2) - p));
}

template <class R>
R alpha_value(Case cs, const Rational& p, const Affine& arg) {
  if (cs == Case::orthogonal) return R(Rational(1));
  R num = Spectral<R>::value(arg.shifted(Rational(1, 2)));
  return num * Spectral<R>::inv(arg.shifted(Rational(1, 2) - p));
}

// An operator-valued matrix family u -> S(u): for each index pair the entry
// is an operator on the module, rational in the spectral parameter. The
// Sklyanin-minor machinery is written against this interface.
template <class R>
class SFamily {
 public:
  virtual ~SFamily() = default;
  virtual const IndexScheme& scheme() const = 0;
  virtual int dim() const = 0;

  // y += s_{ab}(arg) x
  virtual void entry_apply_add(int a, int b, const Affine& arg,
                               const std::vector<R>& x, std::vector<R>& y) const = 0;

  // rows that can be nonzero for a given column (pruning hint)
  virtual std::vector<int> candidate_rows(int col) const { return scheme().indices(); }

  // transposed entry s^t_{ab}(arg) = theta_ab s_{-b,-a}(arg)
  void entry_t_apply_add(int a, int b, const Affine& arg, const std::vector<R>& x,
                         std::vector<R>& y) const {
    int th = scheme().theta(a, b);
    if (th == 1) {
      entry_apply_add(-b, -a, arg, x, y);
    } else {
      std::vector<R> tmp(x.size(), R(Rational(0)));
      entry_apply_add(-b, -a, arg, x, tmp);
      for (size_t i = 0; i < x.size(); ++i) y[i] += tmp[i] * R(Rational(-1));
    }
  }

  std::vector<R> entry_apply(int a, int b, const Affine& arg, const std::vector<R>& x) const {
    std::vector<R> y(x.size(), R(Rational(0)));
    entry_apply_add(a, b, arg, x, y);
    return y;
  }

  // dense dim x dim matrix of the entry (columns = images of unit vectors)
  std::vector<std::vector<R>> entry_matrix(int a, int b, const Affine& arg) const {
    int d = dim();
    std::vector<std::vector<R>> m(static_cast<size_t>(d),
                                  std::vector<R>(static_cast<size_t>(d), R(Rational(0))));
    std::vector<R> e(static_cast<size_t>(d), R(Rational(0)));
    for (int c = 0; c < d; ++c) {
      e[static_cast<size_t>(c)] = R(Rational(1));
      std::vector<R> y(static_cast<size_t>(d), R(Rational(0)));
      entry_apply_add(a, b, arg, e, y);
      for (int r = 0; r < d; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = y[static_cast<size_t>(r)];
      e[static_cast<size_t>(c)] = R(Rational(0));
    }
    return m;
  }
};

// Evaluation realization on a concrete module:
// s_{ab}(u) -> delta_ab + F_ab (u +- 1/2)^{-1}.
template <class R>
class EvalFamily : public SFamily<R> {
 public:
  explicit EvalFamily(const LieRep& rep) : rep_(&rep) {
    const IndexScheme& sch = rep.scheme();
    rows_.assign(static_cast<size_t>(sch.N), {});
    for (int b : sch.indices()) {
      auto& rs = rows_[static_cast<size_t>(sch.pos(b))];
      for (int a : sch.indices())
        if (a == b || !rep.F(a, b).is_zero()) rs.push_back(a);
    }
  }

  const IndexScheme& scheme() const override { return rep_->scheme(); }
  int dim() const override { return rep_->dim(); }
  const LieRep& rep() const { return *rep_; }

  std::vector<int> candidate_rows(int col) const override {
    return rows_[static_cast<size_t>(scheme().pos(col))];
  }

  void entry_apply_add(int a, int b, const Affine& arg, const std::vector<R>& x,
                       std::vector<R>& y) const override {
    if (a == b)
      for (size_t i = 0; i < x.size(); ++i) y[i] += x[i];
    const SparseMat& f = rep_->F(a, b);
    if (f.is_zero()) return;
    R c = Spectral<R>::inv(arg.shifted(scheme().eval_shift()));
    for (int col = 0; col < f.cols; ++col) {
      const R& xc = x[static_cast<size_t>(col)];
      if (xc == R(Rational(0))) continue;
      for (const auto& e : f.col[static_cast<size_t>(col)])
        y[static_cast<size_t>(e.first)] += xc * c * R(e.second);
    }
  }

 private:
  const LieRep* rep_;
  std::vector<std::vector<int>> rows_;
};

// Restriction of a family to the middle block B = {-m..m}, regarded as the
// generator matrix of the smaller algebra of the same case.
template <class R>
class SubFamilyBB : public SFamily<R> {
 public:
  SubFamilyBB(const SFamily<R>& base, int m) : base_(&base), m_(m) {
    const IndexScheme& big = base.scheme();
    if (m >= big.n) throw InvalidIndex("middle block needs m < n");
    small_ = big.has_zero() ? IndexScheme::o_odd(m)
                            : (big.symplectic() ? IndexScheme::sp(m) : IndexScheme::o_even(m));
  }
  const IndexScheme& scheme() const override { return small_; }
  int dim() const override { return base_->dim(); }
  void entry_apply_add(int a, int b, const Affine& arg, const std::vector<R>& x,
                       std::vector<R>& y) const override {
    base_->entry_apply_add(a, b, arg, x, y);  // B indices coincide
  }

 private:
  const SFamily<R>* base_;
  int m_;
  IndexScheme small_;
};

}  // namespace ty
