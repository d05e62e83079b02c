#pragma once

#include <string>
#include <vector>

#include "ty/errors.hpp"
#include "ty/rational.hpp"

namespace ty {

enum class Case { orthogonal, symplectic };

// Matrix indices run over {-n..n} excluding 0 when N = 2n, including 0 when
// N = 2n+1. theta and the +-1/2 evaluation shift carry the case split (upper
// sign orthogonal, lower symplectic).
struct IndexScheme {
  int N = 0;
  int n = 0;
  Case cs = Case::symplectic;

  static IndexScheme sp(int half_rank) {
    if (half_rank < 1) throw InvalidIndex("sp scheme needs n >= 1");
    return IndexScheme{2 * half_rank, half_rank, Case::symplectic};
  }
  static IndexScheme o_odd(int half_rank) {
    if (half_rank < 0) throw InvalidIndex("o scheme needs n >= 0");
    return IndexScheme{2 * half_rank + 1, half_rank, Case::orthogonal};
  }
  static IndexScheme o_even(int half_rank) {
    if (half_rank < 1) throw InvalidIndex("o scheme needs n >= 1");
    return IndexScheme{2 * half_rank, half_rank, Case::orthogonal};
  }

  bool has_zero() const { return N % 2 == 1; }
  bool symplectic() const { return cs == Case::symplectic; }

  bool valid_index(int i) const {
    if (i < -n || i > n) return false;
    if (i == 0 && !has_zero()) return false;
    return true;
  }

  void check_index(int i) const {
    if (!valid_index(i)) throw InvalidIndex("index " + std::to_string(i) + " out of range");
  }

  std::vector<int> indices() const {
    std::vector<int> v;
    for (int i = -n; i <= n; ++i)
      if (i != 0 || has_zero()) v.push_back(i);
    return v;
  }

  // 0-based position of an index in ascending order.
  int pos(int i) const {
    check_index(i);
    int p = i + n;
    if (!has_zero() && i > 0) --p;
    return p;
  }
  int index_at(int p) const {
    int i = p - n;
    if (!has_zero() && i >= 0) ++i;
    return i;
  }

  int theta(int i, int j) const {
    check_index(i);
    check_index(j);
    if (cs == Case::orthogonal) return 1;
    return (i > 0 ? 1 : -1) * (j > 0 ? 1 : -1);
  }

  // Shift in the evaluation map f_ij(u) = delta_ij + F_ij (u +- 1/2)^{-1}.
  Rational eval_shift() const {
    return cs == Case::orthogonal ? Rational(1, 2) : Rational(-1, 2);
  }

  std::string str() const {
    return (cs == Case::orthogonal ? "o_" : "sp_") + std::to_string(N);
  }

  bool operator==(const IndexScheme& o) const {
    return N == o.N && n == o.n && cs == o.cs;
  }
};

// Highest weight (lambda_1,...,lambda_n) in the non-positive convention.
struct HighestWeight {
  std::vector<Rational> entries;

  HighestWeight() = default;
  explicit HighestWeight(std::vector<Rational> e) : entries(std::move(e)) {}
  static HighestWeight of_longs(const std::vector<long>& v) {
    std::vector<Rational> e;
    e.reserve(v.size());
    for (long x : v) e.emplace_back(x);
    return HighestWeight(std::move(e));
  }

  size_t size() const { return entries.size(); }
  const Rational& operator[](size_t i) const { return entries[i]; }

  void validate(const IndexScheme& sch) const {
    if (static_cast<int>(entries.size()) != sch.n)
      throw InvalidWeight("weight has " + std::to_string(entries.size()) +
                          " entries, scheme needs " + std::to_string(sch.n));
    for (size_t i = 0; i + 1 < entries.size(); ++i) {
      Rational d = entries[i] - entries[i + 1];
      if (!d.is_integer() || d.sign() < 0)
        throw InvalidWeight("weight entries must decrease by nonnegative integers");
    }
    if (entries.empty()) return;
    Rational head = -entries[0];
    switch (sch.cs) {
      case Case::symplectic:
        if (!head.is_integer() || head.sign() < 0)
          throw InvalidWeight("symplectic weight needs -lambda_1 a nonnegative integer");
        break;
      case Case::orthogonal:
        if (sch.has_zero()) {
          Rational t = head * Rational(2);
          if (!t.is_integer() || t.sign() < 0)
            throw InvalidWeight("odd orthogonal weight needs -2*lambda_1 a nonnegative integer");
        } else {
          if (entries.size() < 2) throw InvalidWeight("even orthogonal weight needs n >= 2");
          Rational t = -entries[0] - entries[1];
          if (!t.is_integer() || t.sign() < 0)
            throw InvalidWeight("even orthogonal weight needs -lambda_1-lambda_2 a nonnegative integer");
        }
        break;
    }
  }

  bool all_integer() const {
    for (const auto& e : entries)
      if (!e.is_integer()) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += entries[i].str();
    }
    return s + ")";
  }
};

}  // namespace ty
