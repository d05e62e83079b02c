#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "ty/errors.hpp"

namespace ty {

// Arbitrary-precision rational, always reduced with positive denominator.
// Serializes as "p/q" ("p" when q = 1).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) {
    if (den == 0) throw DivideByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : q_(n) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpq_class(s));
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw DivideByZero("rational with zero denominator");
      mpq_class q;
      q = num;
      q /= mpq_class(den);
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw Error("cannot parse rational: '" + s + "'");
    }
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_half_integer() const {  // element of (1/2)Z
    return q_.get_den() == 1 || q_.get_den() == 2;
  }
  int sign() const { return sgn(q_); }

  long to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
      throw Error("rational does not fit in long: " + str());
    return q_.get_num().get_si();
  }

  // Largest integer <= value.
  mpz_class floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return f;
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivideByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational inv() const {
    if (is_zero()) throw DivideByZero();
    return Rational(mpq_class(1) / q_);
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](const mpz_class& z) {
      size_t v = mpz_fdiv_ui(z.get_mpz_t(), 0x7fffffff);
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(q_.get_num());
    mix(q_.get_den());
    return h;
  }

 private:
  mpq_class q_;
};

inline Rational half(long k) { return Rational(k, 2); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ty

#include <ostream>

namespace ty {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}
}  // namespace ty

template <>
struct std::hash<ty::Rational> {
  size_t operator()(const ty::Rational& r) const { return r.hash(); }
};
