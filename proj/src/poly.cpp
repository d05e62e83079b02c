#include "ty/poly.hpp"

#include <cmath>

#include "ty/matrix.hpp"

namespace ty {

namespace {

// Upper bound on |root| for a monic polynomial (Fujiwara-style, computed in
// log2 to stay safe for large coefficients).
double root_bound_log2(const Poly& p) {
  int d = p.degree();
  double best = 0.0;
  for (int i = 1; i <= d; ++i) {
    const Rational c = p.coeff(d - i);
    if (c.is_zero()) continue;
    // log2|c| <= log2(num) - log2(den) + 1
    double lg = static_cast<double>(mpz_sizeinbase(c.num().get_mpz_t(), 2)) -
                static_cast<double>(mpz_sizeinbase(c.den().get_mpz_t(), 2)) + 1.0;
    best = std::max(best, lg / i);
  }
  return best + 2.0;  // factor 2 of the bound plus slack
}

}  // namespace

std::vector<Rational> factor_linear(const Poly& p) {
  if (p.is_zero() || !p.is_monic())
    throw Error("factor_linear requires a monic polynomial");
  std::vector<Rational> roots;
  Poly rem = p;
  if (rem.degree() == 0) return roots;

  double blog = root_bound_log2(rem);
  if (blog > 22.0)
    throw Error("factor_linear: root bound too large for enumeration");
  long bound2 = 2 * (static_cast<long>(std::ldexp(1.0, static_cast<int>(blog) + 1)) + 1);

  // Half-integer candidates first (contents + 1/2 lattice), then integers are
  // covered by the same sweep since t runs over all of (1/2)Z.
  for (long t = -bound2; t <= bound2 && rem.degree() > 0; ++t) {
    Rational r(t, 2);
    while (rem.degree() > 0 && rem.eval(r).is_zero()) {
      roots.push_back(r);
      rem = rem.divrem(Poly::linear(1, -r)).first;
    }
  }

  if (rem.degree() > 0) {
    // Fall back to the rational root theorem on the (smaller) remainder.
    mpz_class lcm_den(1);
    for (const auto& c : rem.coeffs())
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    mpz_class a0 = rem.coeff(0).num() * (lcm_den / rem.coeff(0).den());
    mpz_class an = lcm_den;  // leading coefficient after scaling (rem is monic)
    if (a0 == 0) {
      // handled above (root 0 is a half-integer), should not happen
      throw Error("factor_linear: unexpected zero constant term");
    }
    mpz_class a0a = abs(a0);
    if (mpz_sizeinbase(a0a.get_mpz_t(), 2) > 44)
      throw NonLinearFactor("no rational factorization found (search bound exceeded): " +
                            rem.str());
    std::vector<mpz_class> ps, qs;
    for (mpz_class dv = 1; dv * dv <= a0a; ++dv) {
      if (a0a % dv == 0) {
        ps.push_back(dv);
        ps.push_back(a0a / dv);
      }
    }
    for (mpz_class dv = 1; dv * dv <= an; ++dv) {
      if (an % dv == 0) {
        qs.push_back(dv);
        qs.push_back(an / dv);
      }
    }
    for (const auto& pp : ps) {
      for (const auto& qq : qs) {
        for (int s = -1; s <= 1; s += 2) {
          Rational r(mpq_class(s * pp, qq));
          while (rem.degree() > 0 && rem.eval(r).is_zero()) {
            roots.push_back(r);
            rem = rem.divrem(Poly::linear(1, -r)).first;
          }
        }
      }
    }
  }

  if (rem.degree() > 0)
    throw NonLinearFactor("polynomial does not split into rational linear factors: " +
                          rem.str());
  std::sort(roots.begin(), roots.end());
  if (Poly::from_roots(roots) != p)
    throw Error("factor_linear: reconstruction failed");  // unreachable
  return roots;
}

RatFunc interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                    int deg_num, int deg_den) {
  size_t need = static_cast<size_t>(deg_num + deg_den + 1);
  if (points.size() < need)
    throw Error("interpolate: not enough points");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw Error("interpolate: repeated abscissa " + points[i].first.str());

  // p(x) - y q(x) = 0 at every point, unknowns = coefficients of p and q.
  int ncols = deg_num + 1 + deg_den + 1;
  QMat m;
  for (const auto& [x, y] : points) {
    QVec row(static_cast<size_t>(ncols), Rational(0));
    Rational xp(1);
    for (int i = 0; i <= deg_num; ++i) {
      row[static_cast<size_t>(i)] = xp;
      xp *= x;
    }
    xp = Rational(1);
    for (int i = 0; i <= deg_den; ++i) {
      row[static_cast<size_t>(deg_num + 1 + i)] = -y * xp;
      xp *= x;
    }
    m.push_back(std::move(row));
  }
  auto ker = kernel_basis(std::move(m), ncols);
  for (const auto& v : ker) {
    std::vector<Rational> pc(v.begin(), v.begin() + deg_num + 1);
    std::vector<Rational> qc(v.begin() + deg_num + 1, v.end());
    Poly q{std::vector<Rational>(qc)};
    if (q.is_zero()) continue;
    RatFunc f(Poly(std::move(pc)), std::move(q));
    bool ok = true;
    for (const auto& [x, y] : points) {
      try {
        if (f.eval(x) != y) {
          ok = false;
          break;
        }
      } catch (const PoleError&) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
    break;  // candidate function is unique; a failure means unattainable data
  }
  throw InconsistentSamples("no rational function of bounded degree through the samples");
}

}  // namespace ty
