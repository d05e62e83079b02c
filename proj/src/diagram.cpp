#include "ty/diagram.hpp"

#include <algorithm>
#include <functional>

namespace ty {

void validate_sp_weight(const std::vector<long>& lam) {
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] > 0) throw InvalidWeight("weight entries must be non-positive");
    if (i + 1 < lam.size() && lam[i] < lam[i + 1])
      throw InvalidWeight("weight entries must be weakly decreasing");
  }
}

Diagram::Diagram(std::vector<long> lam) : lam_(std::move(lam)) {
  validate_sp_weight(lam_);
}

XInt Diagram::lam_ext(int i) const {
  int nn = n();
  if (i > nn) return kNegInf;
  if (i < -nn) return kPosInf;
  if (i == 0) return 0;
  if (i > 0) return lam_[static_cast<size_t>(i - 1)];
  return -lam_[static_cast<size_t>(-i - 1)];
}

std::pair<XInt, XInt> Diagram::row_interval(int i) const {
  if (!row_valid(i)) throw InvalidIndex("diagram row out of range");
  return {lam_ext(i), lam_ext(i - 1)};
}

bool Diagram::contains(int i, long j) const {
  if (!row_valid(i)) return false;
  auto [lo, hi] = row_interval(i);
  return lo <= j && j < hi;
}

std::vector<Cell> intersect_shifted(const Diagram& mu_diag, const Diagram& lam_diag, int k) {
  if (k < 1) throw InvalidIndex("shift index must be >= 1");
  std::vector<Cell> cells;
  for (int i = -mu_diag.n(); i <= mu_diag.n() + 1; ++i) {
    auto [mlo, mhi] = mu_diag.row_interval(i);
    int src = i + k - 1;  // lifting by k-1 puts original row src at row i
    if (!lam_diag.row_valid(src)) continue;
    auto [llo, lhi] = lam_diag.row_interval(src);
    XInt lo = std::max(mlo, llo), hi = std::min(mhi, lhi);
    if (lo >= hi) continue;
    if (!xfinite(lo) || !xfinite(hi))
      throw InfiniteIntersection("diagram intersection is infinite at row " +
                                 std::to_string(i));
    for (XInt j = lo; j < hi; ++j) cells.push_back(Cell{i, static_cast<long>(j)});
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

DrinfeldData drinfeld_diagram(const std::vector<long>& lam, const std::vector<long>& mu) {
  validate_sp_weight(lam);
  validate_sp_weight(mu);
  int n = static_cast<int>(lam.size()), m = static_cast<int>(mu.size());
  if (m >= n) throw InvalidWeight("drinfeld_diagram needs m < n");
  Diagram dl(lam), dm(mu);
  DrinfeldData out;
  for (int k = 1; k <= n - m; ++k) {
    std::vector<Rational> roots;
    for (const Cell& c : intersect_shifted(dm, dl, k))
      roots.push_back(-Rational(c.content()) - Rational(1, 2));
    std::sort(roots.begin(), roots.end());
    out.roots.push_back(std::move(roots));
  }
  return out;
}

std::vector<long> TrapPattern::weight() const {
  std::vector<long> w;
  for (int k = m + 1; k <= n; ++k) {
    long wk = 0;
    for (int i = 1; i <= k; ++i) wk += 2 * lamp(k, i) - lam(k, i);
    for (int i = 1; i <= k - 1; ++i) wk -= lam(k - 1, i);
    w.push_back(wk);
  }
  return w;
}

std::string TrapPattern::str() const {
  std::string s;
  for (int k = n; k >= m; --k) {
    s += "  [";
    for (int i = 1; i <= k; ++i) s += (i > 1 ? " " : "") + std::to_string(lam(k, i));
    s += "]\n";
    if (k > m) {
      s += " [";
      for (int i = 1; i <= k; ++i) s += (i > 1 ? " " : "") + std::to_string(lamp(k, i));
      s += "]'\n";
    }
  }
  return s;
}

bool skew_nonempty(const std::vector<long>& lam, const std::vector<long>& mu) {
  int n = static_cast<int>(lam.size()), m = static_cast<int>(mu.size());
  auto mu_at = [&](int i) -> XInt {
    if (i <= 0) return 0;
    if (i > m) return kNegInf;
    return mu[static_cast<size_t>(i - 1)];
  };
  for (int i = 1; i <= m; ++i)
    if (i + n - m <= n && mu_at(i) < lam[static_cast<size_t>(i + n - m - 1)]) return false;
  for (int i = 1; i <= n; ++i)
    if (XInt(lam[static_cast<size_t>(i - 1)]) < mu_at(i + n - m)) return false;
  return true;
}

std::vector<TrapPattern> enumerate_patterns(const std::vector<long>& lam,
                                            const std::vector<long>& mu) {
  validate_sp_weight(lam);
  validate_sp_weight(mu);
  int n = static_cast<int>(lam.size()), m = static_cast<int>(mu.size());
  if (m >= n) throw InvalidWeight("enumerate_patterns needs m < n");

  std::vector<TrapPattern> out;
  TrapPattern cur;
  cur.n = n;
  cur.m = m;
  cur.lam_rows.assign(static_cast<size_t>(n - m + 1), {});
  cur.lamp_rows.assign(static_cast<size_t>(n - m), {});
  cur.lam_rows[static_cast<size_t>(n - m)] = lam;

  // Rows are filled from the top: lambda'_k from lambda_k (first chain), then
  // lambda_{k-1} from lambda'_k (second chain); the bottom row must equal mu.
  std::function<void(int)> descend = [&](int k) {
    if (k == m) {
      out.push_back(cur);
      return;
    }
    const auto& top = cur.lam_rows[static_cast<size_t>(k - m)];
    std::vector<long> prime(static_cast<size_t>(k));
    std::function<void(int)> choose_prime = [&](int i) {
      if (i > k) {
        cur.lamp_rows[static_cast<size_t>(k - m - 1)] = prime;
        // choose the next lambda row within the second chain
        std::vector<long> next(static_cast<size_t>(k - 1));
        std::function<void(int)> choose_lam = [&](int t) {
          if (t > k - 1) {
            cur.lam_rows[static_cast<size_t>(k - 1 - m)] = next;
            descend(k - 1);
            return;
          }
          long lo = prime[static_cast<size_t>(t)];  // lambda'_{k,t+1}
          long hi = prime[static_cast<size_t>(t - 1)];
          if (k - 1 == m) {
            long v = mu[static_cast<size_t>(t - 1)];
            if (lo <= v && v <= hi) {
              next[static_cast<size_t>(t - 1)] = v;
              choose_lam(t + 1);
            }
            return;
          }
          for (long v = lo; v <= hi; ++v) {
            next[static_cast<size_t>(t - 1)] = v;
            choose_lam(t + 1);
          }
        };
        choose_lam(1);
        return;
      }
      long lo = top[static_cast<size_t>(i - 1)];
      long hi = i == 1 ? 0 : top[static_cast<size_t>(i - 2)];
      for (long v = lo; v <= hi; ++v) {
        prime[static_cast<size_t>(i - 1)] = v;
        choose_prime(i + 1);
      }
    };
    choose_prime(1);
  };
  descend(n);
  return out;
}

namespace {

XInt mid3(XInt a, XInt b, XInt c) {
  // middle of three; with one -infinity this is the minimum of the others
  XInt lo = std::min({a, b, c}), hi = std::max({a, b, c});
  return a + b + c - lo - hi;
}

}  // namespace

TrapPattern lambda0(const std::vector<long>& lam, const std::vector<long>& mu) {
  validate_sp_weight(lam);
  validate_sp_weight(mu);
  int n = static_cast<int>(lam.size()), m = static_cast<int>(mu.size());
  if (m >= n) throw InvalidWeight("lambda0 needs m < n");
  if (!skew_nonempty(lam, mu)) throw EmptySkewSpace("no patterns between the weights");

  auto mu_at = [&](int i) -> XInt {
    if (i <= 0) return 0;
    if (i > m) return kNegInf;
    return mu[static_cast<size_t>(i - 1)];
  };
  TrapPattern p;
  p.n = n;
  p.m = m;
  p.lam_rows.assign(static_cast<size_t>(n - m + 1), {});
  p.lamp_rows.assign(static_cast<size_t>(n - m), {});
  for (int k = m; k <= n; ++k) {
    std::vector<long> row(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) {
      XInt v = mid3(lam[static_cast<size_t>(i - 1)], mu_at(i + k - m), mu_at(i + m - k));
      if (!xfinite(v)) throw Error("lambda0: entry not finite");
      row[static_cast<size_t>(i - 1)] = static_cast<long>(v);
    }
    p.lam_rows[static_cast<size_t>(k - m)] = std::move(row);
  }
  for (int k = m + 1; k <= n; ++k) {
    std::vector<long> row(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) {
      XInt v = mid3(lam[static_cast<size_t>(i - 1)], mu_at(i + k - m - 1), mu_at(i + m - k));
      if (!xfinite(v)) throw Error("lambda0: entry not finite");
      row[static_cast<size_t>(i - 1)] = static_cast<long>(v);
    }
    p.lamp_rows[static_cast<size_t>(k - m - 1)] = std::move(row);
  }
  return p;
}

bool weight_leq(const std::vector<long>& w, const std::vector<long>& wp) {
  if (w.size() != wp.size()) throw ShapeMismatch("weights of different rank");
  // w <= w' iff v = w - w' lies in the nonnegative span of
  // {2e_k, e_i + e_j, e_j - e_i (i<j)}: suffix sums >= 0 and even total.
  long total = 0;
  std::vector<long> v(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    v[i] = w[i] - wp[i];
    total += v[i];
  }
  if (total % 2 != 0) return false;
  long suffix = 0;
  for (size_t i = w.size(); i-- > 0;) {
    suffix += v[i];
    if (suffix < 0) return false;
  }
  return true;
}

std::string render_diagram(const std::vector<long>& lam, int shift) {
  Diagram d(lam);
  int n = d.n();
  // window covering all finite endpoints plus margin
  long lo = -3, hi = 3;
  for (int i = -n; i <= n + 1; ++i) {
    XInt e = d.lam_ext(i);
    if (xfinite(e)) {
      lo = std::min(lo, static_cast<long>(e) - 2);
      hi = std::max(hi, static_cast<long>(e) + 2);
    }
  }
  std::string out;
  for (int i = -n; i <= n + 1; ++i) {
    auto [rlo, rhi] = d.row_interval(i);
    int row = i - shift;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%4d ", row);
    std::string line(buf);
    line += (rlo <= lo - 1 && lo - 1 < rhi) ? '<' : ' ';
    for (long j = lo; j <= hi; ++j) {
      bool in = rlo <= j && j < rhi;
      line += in ? '#' : (j == 0 ? '.' : ' ');
    }
    line += (rlo <= hi + 1 && hi + 1 < rhi) ? '>' : ' ';
    out += line;
    out += '\n';
  }
  // ruler marking the origin column
  std::string ruler(5, ' ');
  ruler += ' ';
  for (long j = lo; j <= hi; ++j) ruler += (j == 0 ? '0' : ' ');
  out += ruler;
  out += '\n';
  return out;
}

}  // namespace ty
