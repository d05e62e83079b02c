#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ty/errors.hpp"
#include "ty/rational.hpp"

namespace ty {

// Univariate polynomial over Rational, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: implicit constant
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  // b + a*u
  static Poly linear(const Rational& a, const Rational& b) {
    return Poly(std::vector<Rational>{b, a});
  }
  static Poly var() { return linear(1, 0); }

  // Monic product of (u - r) over the given roots.
  static Poly from_roots(const std::vector<Rational>& roots) {
    Poly p(Rational(1));
    for (const auto& r : roots) p = p * linear(1, -r);
    return p;
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& operator[](size_t i) const { return c_[i]; }
  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
  }
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // p(a*u + b)
  Poly compose_affine(const Rational& a, const Rational& b) const {
    Poly r;
    Poly lin = linear(a, b);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Rational& s) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }

  // Euclidean division: returns (quotient, remainder).
  std::pair<Poly, Poly> divrem(const Poly& d) const {
    if (d.is_zero()) throw DivideByZero("polynomial division by zero");
    Poly q;
    std::vector<Rational> r(c_);
    Rational dl = d.lc();
    int dd = d.degree();
    std::vector<Rational> qc;
    int rd = static_cast<int>(r.size()) - 1;
    if (rd >= dd) qc.assign(static_cast<size_t>(rd - dd + 1), Rational(0));
    while (rd >= dd) {
      if (!r[static_cast<size_t>(rd)].is_zero()) {
        Rational f = r[static_cast<size_t>(rd)] / dl;
        qc[static_cast<size_t>(rd - dd)] = f;
        for (int i = 0; i <= dd; ++i)
          r[static_cast<size_t>(rd - dd + i)] -= f * d.c_[static_cast<size_t>(i)];
      }
      --rd;
    }
    return {Poly(std::move(qc)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * lc().inv();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  std::string str(const std::string& var = "u") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = c_[static_cast<size_t>(i)];
      if (c.is_zero()) continue;
      if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) s += "-";
      Rational a = c.abs();
      if (i == 0 || !a.is_one()) s += a.str();
      if (i > 0) {
        if (!a.is_one()) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Monic gcd via the Euclidean algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Reduced rational function in one variable; denominator monic and nonzero.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}   // NOLINT
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  // a*u + b as a rational function
  static RatFunc linear(const Rational& a, const Rational& b) {
    return RatFunc(Poly::linear(a, b));
  }
  static RatFunc var() { return RatFunc(Poly::var()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw PoleError("pole at u = " + x.str());
    return num_.eval(x) / d;
  }

  RatFunc compose_affine(const Rational& a, const Rational& b) const {
    return RatFunc(num_.compose_affine(a, b), den_.compose_affine(a, b));
  }
  RatFunc at_minus_u() const { return compose_affine(-1, 0); }

  RatFunc inv() const {
    if (is_zero()) throw DivideByZero("inverse of the zero rational function");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivideByZero("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Coefficients c_0..c_r of the expansion at u = infinity,
  // f(u) = c_0 + c_1 u^{-1} + c_2 u^{-2} + ...; requires deg num <= deg den.
  std::vector<Rational> series_coeffs(int r) const {
    if (is_zero()) return std::vector<Rational>(static_cast<size_t>(r) + 1, Rational(0));
    int d = den_.degree();
    if (num_.degree() > d)
      throw Error("series expansion requires a proper rational function");
    std::vector<Rational> c(static_cast<size_t>(r) + 1, Rational(0));
    // num = den * (sum c_s u^{-s}): match coefficients of u^{d-s}.
    for (int s = 0; s <= r; ++s) {
      Rational acc = num_.coeff(d - s);
      for (int t = 0; t < s; ++t) acc -= den_.coeff(d - s + t) * c[static_cast<size_t>(t)];
      c[static_cast<size_t>(s)] = acc;  // den is monic
    }
    return c;
  }

  std::string str(const std::string& var = "u") const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivideByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divrem(g).first;
      den_ = den_.divrem(g).first;
    }
    Rational l = den_.lc();
    if (!l.is_one()) {
      Rational li = l.inv();
      num_ = num_ * li;
      den_ = den_ * li;
    }
  }
  Poly num_, den_;
};

// All rational roots of a monic polynomial, with multiplicity, ascending.
// Half-integer candidates inside the coefficient bound are tried first; the
// rational root theorem covers the rest. Throws NonLinearFactor if the
// polynomial does not split over Q.
std::vector<Rational> factor_linear(const Poly& p);

// The unique rational function with deg num <= deg_num, deg den <= deg_den
// through all sample points, if one exists.
RatFunc interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                    int deg_num, int deg_den);

}  // namespace ty
