#pragma once

#include <string>
#include <vector>

#include "ty/poly.hpp"

namespace ty {

// Ordered family of monic polynomials P_1..P_{n-m}, stored as sorted rational
// root multisets.
struct DrinfeldData {
  std::vector<std::vector<Rational>> roots;

  size_t count() const { return roots.size(); }
  Poly poly(size_t k) const { return Poly::from_roots(roots[k]); }

  // P_1(u) = P_1(-u+1)
  bool first_palindromic() const {
    if (roots.empty()) return true;
    Poly p = poly(0);
    return p == p.compose_affine(-1, 1).monic();
  }

  bool operator==(const DrinfeldData& o) const { return roots == o.roots; }
  bool operator!=(const DrinfeldData& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    for (size_t k = 0; k < roots.size(); ++k) {
      s += "P_" + std::to_string(k + 1) + " roots {";
      for (size_t i = 0; i < roots[k].size(); ++i) {
        if (i) s += ", ";
        s += roots[k][i].str();
      }
      s += "}";
      if (k + 1 < roots.size()) s += "; ";
    }
    return s;
  }
};

}  // namespace ty
