#pragma once

#include <string>
#include <vector>

#include "ty/drinfeld.hpp"
#include "ty/errors.hpp"
#include "ty/rational.hpp"

namespace ty {

// Extended integers for diagram row endpoints.
using XInt = long long;
constexpr XInt kNegInf = -(1LL << 60);
constexpr XInt kPosInf = (1LL << 60);

inline bool xfinite(XInt v) { return v > kNegInf && v < kPosInf; }

// Infinite row-interval diagram Gamma(lambda) for a non-positive integer
// weight, extended by lambda_{-i} = -lambda_i, lambda_0 = 0, and +-infinity
// beyond n. Cell (i,j) lies in the diagram iff lambda_i <= j < lambda_{i-1}.
class Diagram {
 public:
  explicit Diagram(std::vector<long> lam);

  int n() const { return static_cast<int>(lam_.size()); }

  // lambda_i for any integer i, with the extension conventions.
  XInt lam_ext(int i) const;

  // half-open column interval [lo, hi) of row i; valid for -n <= i <= n+1
  std::pair<XInt, XInt> row_interval(int i) const;

  bool row_valid(int i) const { return i >= -n() && i <= n() + 1; }
  bool contains(int i, long j) const;

  const std::vector<long>& lam() const { return lam_; }

 private:
  std::vector<long> lam_;
};

struct Cell {
  int i;
  long j;
  long content() const { return j - i; }
  bool operator==(const Cell& o) const { return i == o.i && j == o.j; }
  bool operator<(const Cell& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// The finite set Gamma(mu) n Gamma(lambda)^{(k-1)}, 1 <= k <= n - m.
std::vector<Cell> intersect_shifted(const Diagram& mu_diag, const Diagram& lam_diag, int k);

// Drinfeld polynomials by the diagram rule: P_k(u) is the product of
// (u + c(cell) + 1/2) over the k-th shifted intersection.
DrinfeldData drinfeld_diagram(const std::vector<long>& lam, const std::vector<long>& mu);

// Trapezium interpolating array between lambda (top) and mu (bottom):
// rows lambda_{k,.} for k = m..n and lambda'_{k,.} for k = m+1..n,
// all entries non-positive integers subject to the two betweenness chains.
struct TrapPattern {
  int n = 0, m = 0;
  std::vector<std::vector<long>> lam_rows;   // lam_rows[k-m] = (lambda_{k,1..k})
  std::vector<std::vector<long>> lamp_rows;  // lamp_rows[k-m-1] = (lambda'_{k,1..k})

  long lam(int k, int i) const { return lam_rows[static_cast<size_t>(k - m)][static_cast<size_t>(i - 1)]; }
  long lamp(int k, int i) const { return lamp_rows[static_cast<size_t>(k - m - 1)][static_cast<size_t>(i - 1)]; }

  // w_k = 2 sum_i lambda'_{ki} - sum_i lambda_{ki} - sum_i lambda_{k-1,i}
  std::vector<long> weight() const;

  bool operator==(const TrapPattern& o) const {
    return n == o.n && m == o.m && lam_rows == o.lam_rows && lamp_rows == o.lamp_rows;
  }
  std::string str() const;
};

// All patterns between lambda and mu (may be empty); m < n required.
std::vector<TrapPattern> enumerate_patterns(const std::vector<long>& lam,
                                            const std::vector<long>& mu);

// The nonemptiness inequalities for V(lambda)^+_mu.
bool skew_nonempty(const std::vector<long>& lam, const std::vector<long>& mu);

// The pattern of maximal weight, entries given by the mid{...} formulas.
TrapPattern lambda0(const std::vector<long>& lam, const std::vector<long>& mu);

// Partial order on weights: w <= w' iff w' - w is a nonnegative integral
// combination of the positive roots -2e_k and +-e_i - e_j (i < j).
bool weight_leq(const std::vector<long>& w, const std::vector<long>& wp);

// ASCII picture of Gamma(lambda) lifted by `shift` rows.
std::string render_diagram(const std::vector<long>& lam, int shift = 0);

void validate_sp_weight(const std::vector<long>& lam);

}  // namespace ty
