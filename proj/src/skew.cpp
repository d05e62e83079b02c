#include "ty/skew.hpp"

#include <algorithm>
#include <map>

namespace ty {

namespace {

std::vector<long> weight_longs(const HighestWeight& w) {
  std::vector<long> v;
  v.reserve(w.size());
  for (const auto& e : w.entries) v.push_back(e.to_long());
  return v;
}

QVec normalized(QVec v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      Rational inv = x.inv();
      for (auto& y : v) y *= inv;
      return v;
    }
  }
  throw Error("cannot normalize the zero vector");
}

}  // namespace

SkewModule::SkewModule(HighestWeight lam, HighestWeight mu, const IndexScheme& sch,
                       const IrrepOptions& opts)
    : lam_(std::move(lam)),
      mu_(std::move(mu)),
      m_(static_cast<int>(mu_.size())),
      rep_(extract_irrep(lam_, sch, opts)),
      small_(IndexScheme::sp(sch.n - m_)) {
  if (!sch.symplectic())
    throw Error("skew modules are identified in the symplectic case only");
  if (m_ >= sch.n) throw InvalidIndex("skew module needs m < n");
  if (!skew_nonempty(lam_longs(), mu_longs()))
    throw EmptySkewSpace("betweenness inequalities fail for " + lam_.str() + " over " +
                         mu_.str());
  space_ = skew_subspace(rep_, mu_, m_);
  if (space_.dim() == 0)
    throw EmptySkewSpace("skew subspace is zero for " + lam_.str() + " over " + mu_.str());
}

std::vector<long> SkewModule::lam_longs() const { return weight_longs(lam_); }
std::vector<long> SkewModule::mu_longs() const { return weight_longs(mu_); }

QVec SkewModule::act_ambient(int a_small, int b_small, const Rational& x,
                             const QVec& v) const {
  EvalFamily<Rational> fam(rep_);
  QVec w = sharp_entry_apply(fam, m_, to_big(a_small), to_big(b_small),
                             Affine::constant(x), v, MinorRoute::formula);
  Rational al = alpha_value<Rational>(Case::symplectic, Rational(-m_), Affine::constant(x));
  for (auto& y : w) y *= al;
  return w;
}

QMat SkewModule::action_matrix(int a_small, int b_small, const Rational& x) const {
  QMat mat(static_cast<size_t>(space_.dim()), QVec(static_cast<size_t>(space_.dim()), Rational(0)));
  for (int c = 0; c < space_.dim(); ++c) {
    QVec img = act_ambient(a_small, b_small, x, space_.basis_vec(c));
    QVec coords = space_.coords_of(img);  // throws if the action leaves the subspace
    for (int r = 0; r < space_.dim(); ++r) mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = coords[static_cast<size_t>(r)];
  }
  return mat;
}

QVec find_highest_vector(const SkewModule& sm) {
  const IndexScheme& big = sm.big_scheme();
  int m = sm.m(), n = big.n;
  TrapPattern l0 = lambda0(sm.lam_longs(), sm.mu_longs());
  std::vector<long> w0 = l0.weight();

  // weight constraints under F_kk, k = m+1..n, and Lie raising kernels,
  // expressed in subspace coordinates
  const Subspace& sp = sm.space();
  QMat sys;
  auto add_op_rows = [&](const SparseMat& op, const Rational& shift) {
    std::vector<QVec> imgs;
    for (int t = 0; t < sp.dim(); ++t) {
      QVec img = op.apply(sp.basis_vec(t));
      if (!shift.is_zero())
        for (int r = 0; r < sp.ambient_dim(); ++r)
          img[static_cast<size_t>(r)] -= shift * sp.basis_vec(t)[static_cast<size_t>(r)];
      imgs.push_back(std::move(img));
    }
    for (int r = 0; r < sp.ambient_dim(); ++r) {
      QVec row(static_cast<size_t>(sp.dim()), Rational(0));
      bool nz = false;
      for (int t = 0; t < sp.dim(); ++t) {
        row[static_cast<size_t>(t)] = imgs[static_cast<size_t>(t)][static_cast<size_t>(r)];
        nz = nz || !row[static_cast<size_t>(t)].is_zero();
      }
      if (nz) sys.push_back(std::move(row));
    }
  };
  for (int k = m + 1; k <= n; ++k)
    add_op_rows(sm.rep().F(k, k), Rational(w0[static_cast<size_t>(k - m - 1)]));
  std::vector<int> outer;
  for (int i = -n; i <= n; ++i)
    if (i != 0 && std::abs(i) > m) outer.push_back(i);
  for (size_t s = 0; s < outer.size(); ++s)
    for (size_t t = s + 1; t < outer.size(); ++t)
      add_op_rows(sm.rep().F(outer[s], outer[t]), Rational(0));

  auto ker = kernel_basis(std::move(sys), sp.dim());
  if (ker.size() != 1)
    throw NotOneDimensional("extremal weight space has dimension " +
                            std::to_string(ker.size()));
  QVec zeta = normalized(sp.from_coords(ker.front()));

  // post-verification: the series raisings annihilate zeta
  for (int t = 0; t < 3; ++t) {
    Rational x = sample_point(t);
    const std::vector<int> small_idx = sm.small_scheme().indices();
    for (size_t s = 0; s < small_idx.size(); ++s) {
      for (size_t q = s + 1; q < small_idx.size(); ++q) {
        QVec img = sm.act_ambient(small_idx[s], small_idx[q], x, zeta);
        if (!is_zero_vec(img))
          throw Error("series raising does not annihilate the extremal vector");
      }
    }
  }
  return zeta;
}

namespace {

// eigenvalue of an operator action on an eigenvector
Rational eigenvalue_on(const QVec& img, const QVec& vec) {
  for (size_t i = 0; i < vec.size(); ++i) {
    if (!vec[i].is_zero()) {
      Rational c = img[i] / vec[i];
      for (size_t j = 0; j < vec.size(); ++j)
        if (img[j] != c * vec[j]) throw NotEigenvector("vector is not an eigenvector");
      return c;
    }
  }
  throw NotEigenvector("zero eigenvector");
}

}  // namespace

std::vector<RatFunc> extract_hw(const SkewModule& sm, const QVec& zeta) {
  int n = sm.big_scheme().n, m = sm.m();
  int deg = 2 * n + 2;
  int npts = 2 * deg + 1;
  std::vector<RatFunc> hw;
  for (int a = 1; a <= n - m; ++a) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 0; t < npts + 3; ++t) {
      Rational x = sample_point(t);
      pts.emplace_back(x, eigenvalue_on(sm.act_ambient(a, a, x, zeta), zeta));
    }
    RatFunc f = interpolate({pts.begin(), pts.begin() + npts}, deg, deg);
    for (int t = npts; t < npts + 3; ++t)
      if (f.eval(pts[static_cast<size_t>(t)].first) != pts[static_cast<size_t>(t)].second)
        throw InconsistentSamples("eigenvalue is not rational of the expected degree");
    hw.push_back(std::move(f));
  }
  return hw;
}

namespace {

// mu_i with the conventions mu_i = 0 for i <= 0, mu_i = -infinity for i > m.
bool mu_defined(const std::vector<long>& mu, int i) {
  return i <= static_cast<int>(mu.size());
}
long mu_at(const std::vector<long>& mu, int i) {
  if (i <= 0) return 0;
  return mu[static_cast<size_t>(i - 1)];
}

RatFunc lin_over_lin(const Rational& cnum, const Rational& cden) {
  return RatFunc(Poly::linear(1, cnum), Poly::linear(1, cden));
}

}  // namespace

RatFunc hw_closed_form(const std::vector<long>& lam, const std::vector<long>& mu, int k) {
  validate_sp_weight(lam);
  validate_sp_weight(mu);
  int n = static_cast<int>(lam.size()), m = static_cast<int>(mu.size());
  if (k <= m || k > n) throw InvalidIndex("component index must lie in m+1..n");

  RatFunc out(Rational(1));
  // nu(u) = prod_i (u + mu_i - i + 1/2)(u - mu_i + i + 1/2) / ((u - i + 1/2)(u + i + 1/2))
  for (int i = 1; i <= m; ++i) {
    Rational mi(mu_at(mu, i));
    out = out * lin_over_lin(mi - Rational(i) + Rational(1, 2), -Rational(i) + Rational(1, 2));
    out = out * lin_over_lin(-mi + Rational(i) + Rational(1, 2), Rational(i) + Rational(1, 2));
  }
  for (int i = 1; i <= k - 1; ++i) {
    // first product: requires lambda_i < mu_{i+k-m-1}
    if (mu_defined(mu, i + k - m - 1) && lam[static_cast<size_t>(i - 1)] < mu_at(mu, i + k - m - 1)) {
      long top = mu_defined(mu, i + k - m)
                     ? std::max(lam[static_cast<size_t>(i - 1)], mu_at(mu, i + k - m))
                     : lam[static_cast<size_t>(i - 1)];
      Rational off = Rational(k - m + i) - Rational(1, 2);
      out = out * lin_over_lin(-Rational(top) + off, -Rational(mu_at(mu, i + k - m - 1)) + off);
    }
    // second product: requires lambda_i > mu_{i+m-k+1}
    if (lam[static_cast<size_t>(i - 1)] > mu_at(mu, i + m - k + 1)) {
      long bot = std::min(lam[static_cast<size_t>(i - 1)], mu_at(mu, i + m - k));
      Rational off = Rational(k - m - i) - Rational(1, 2);
      out = out * lin_over_lin(Rational(bot) + off, Rational(mu_at(mu, i + m - k + 1)) + off);
    }
  }
  long last = std::min(lam[static_cast<size_t>(k - 1)], mu_at(mu, m));
  out = out * lin_over_lin(Rational(last) - Rational(m) - Rational(1, 2),
                           -Rational(m) - Rational(1, 2));
  return out;
}

std::vector<RatFunc> hw_closed_form_all(const std::vector<long>& lam,
                                        const std::vector<long>& mu) {
  std::vector<RatFunc> hw;
  int n = static_cast<int>(lam.size()), m = static_cast<int>(mu.size());
  for (int k = m + 1; k <= n; ++k) hw.push_back(hw_closed_form(lam, mu, k));
  return hw;
}

DrinfeldData drinfeld_from_hw(const std::vector<RatFunc>& hw) {
  DrinfeldData out;
  for (size_t k = 0; k < hw.size(); ++k) {
    RatFunc ratio = k == 0 ? hw[0].at_minus_u() / hw[0] : hw[k - 1] / hw[k];
    // ratio must be P(u+1)/P(u) for a monic P
    if (!ratio.num().is_monic() || !ratio.den().is_monic())
      throw UnpairableRoots("component ratio is not a ratio of monic polynomials");
    std::vector<Rational> alphas, betas;
    for (const auto& r : factor_linear(ratio.num())) alphas.push_back(-r);
    for (const auto& r : factor_linear(ratio.den())) betas.push_back(-r);
    // pair within congruence classes mod 1, ascending
    std::map<Rational, std::pair<std::vector<Rational>, std::vector<Rational>>> classes;
    auto frac = [](const Rational& q) { return q - Rational(q.floor()); };
    for (const auto& a : alphas) classes[frac(a)].first.push_back(a);
    for (const auto& b : betas) classes[frac(b)].second.push_back(b);
    std::vector<Rational> roots;
    for (auto& [key, cls] : classes) {
      auto& [as, bs] = cls;
      if (as.size() != bs.size())
        throw UnpairableRoots("numerator/denominator mismatch in class " + key.str());
      std::sort(as.begin(), as.end());
      std::sort(bs.begin(), bs.end());
      for (size_t i = 0; i < as.size(); ++i) {
        Rational gap = as[i] - bs[i];
        if (!gap.is_integer() || gap.sign() <= 0)
          throw UnpairableRoots("roots cannot be paired into unit chains");
        // P factor (u + beta)(u + beta + 1) ... (u + alpha - 1)
        for (Rational g = bs[i]; g < as[i]; g += Rational(1)) roots.push_back(-g);
      }
    }
    std::sort(roots.begin(), roots.end());
    // verification against the ratio equation
    Poly p = Poly::from_roots(roots);
    RatFunc check = RatFunc(p.compose_affine(1, 1), p);
    if (check != ratio) throw UnpairableRoots("telescoped polynomial fails the ratio equation");
    out.roots.push_back(std::move(roots));
  }
  if (!out.first_palindromic()) throw UnpairableRoots("first polynomial is not palindromic");
  return out;
}

namespace {

// span closure of a set of matrices under multiplication; returns dimension
// and the closing basis (as flattened rref rows)
std::pair<int, std::vector<QMat>> algebra_closure(const std::vector<QMat>& gens, int d) {
  auto flatten = [&](const QMat& m) {
    QVec v;
    v.reserve(static_cast<size_t>(d) * static_cast<size_t>(d));
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  auto unflatten = [&](const QVec& v) {
    QMat m(static_cast<size_t>(d), QVec(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[static_cast<size_t>(i * d + j)];
    return m;
  };
  QMat basis;
  {
    QMat rows;
    QMat id(static_cast<size_t>(d), QVec(static_cast<size_t>(d), Rational(0)));
    for (int i = 0; i < d; ++i) id[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    rows.push_back(flatten(id));
    for (const auto& g : gens) rows.push_back(flatten(g));
    basis = row_space(std::move(rows));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    QMat rows = basis;
    std::vector<QMat> mats;
    for (const auto& v : basis) mats.push_back(unflatten(v));
    for (const auto& a : mats)
      for (const auto& b : mats) {
        QMat ab(static_cast<size_t>(d), QVec(static_cast<size_t>(d), Rational(0)));
        for (int i = 0; i < d; ++i)
          for (int t = 0; t < d; ++t) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(t)].is_zero()) continue;
            for (int j = 0; j < d; ++j)
              ab[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                  a[static_cast<size_t>(i)][static_cast<size_t>(t)] * b[static_cast<size_t>(t)][static_cast<size_t>(j)];
          }
        rows.push_back(flatten(ab));
      }
    QMat closed = row_space(std::move(rows));
    if (closed.size() > basis.size()) {
      basis = std::move(closed);
      grew = true;
    }
  }
  std::vector<QMat> mats;
  for (const auto& v : basis) mats.push_back(unflatten(v));
  return {static_cast<int>(basis.size()), mats};
}

// interpolated restricted action of s_ab(u) as a matrix of rational functions
std::vector<std::vector<RatFunc>> action_ratfunc_matrix(const SkewModule& sm, int a, int b) {
  int d = sm.dim();
  int deg = 2 * sm.big_scheme().n + 2;
  int npts = 2 * deg + 1;
  std::vector<Rational> xs;
  std::vector<QMat> samples;
  for (int t = 0; t < npts; ++t) {
    xs.push_back(sample_point(t));
    samples.push_back(sm.action_matrix(a, b, xs.back()));
  }
  std::vector<std::vector<RatFunc>> out(static_cast<size_t>(d),
                                        std::vector<RatFunc>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::vector<std::pair<Rational, Rational>> pts;
      for (int t = 0; t < npts; ++t)
        pts.emplace_back(xs[static_cast<size_t>(t)],
                         samples[static_cast<size_t>(t)][static_cast<size_t>(i)][static_cast<size_t>(j)]);
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] = interpolate(pts, deg, deg);
    }
  }
  return out;
}

// series coefficient matrices of the action, r = 1..rmax for every (a,b)
std::vector<QMat> action_coefficients(const SkewModule& sm, int rmax) {
  int d = sm.dim();
  std::vector<QMat> out;
  const std::vector<int> idx = sm.small_scheme().indices();
  for (int a : idx) {
    for (int b : idx) {
      auto fm = action_ratfunc_matrix(sm, a, b);
      for (int r = 1; r <= rmax; ++r) {
        QMat coef(static_cast<size_t>(d), QVec(static_cast<size_t>(d), Rational(0)));
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            coef[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                fm[static_cast<size_t>(i)][static_cast<size_t>(j)].series_coeffs(r)[static_cast<size_t>(r)];
        out.push_back(std::move(coef));
      }
    }
  }
  return out;
}

}  // namespace

bool check_irreducible(const SkewModule& sm) {
  int d = sm.dim();
  if (d == 1) return true;
  int r = 2;
  int prev_dim = -1, stable = 0;
  std::vector<QMat> algebra;
  while (stable < 2 && r <= 64) {
    auto gens = action_coefficients(sm, r);
    auto [adim, basis] = algebra_closure(gens, d);
    if (adim == prev_dim)
      ++stable;
    else
      stable = 0;
    prev_dim = adim;
    algebra = std::move(basis);
    r *= 2;
  }
  // commutant: X with XA = AX for every basis element A
  QMat sys;
  for (const auto& a : algebra) {
    // rows of [X, A] = 0 as linear conditions on X (d^2 unknowns)
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        QVec row(static_cast<size_t>(d) * static_cast<size_t>(d), Rational(0));
        // (XA - AX)_{ij} = sum_t X_{it} A_{tj} - A_{it} X_{tj}
        for (int t = 0; t < d; ++t) {
          row[static_cast<size_t>(i * d + t)] += a[static_cast<size_t>(t)][static_cast<size_t>(j)];
          row[static_cast<size_t>(t * d + j)] -= a[static_cast<size_t>(i)][static_cast<size_t>(t)];
        }
        if (!is_zero_vec(row)) sys.push_back(std::move(row));
      }
    }
  }
  auto ker = kernel_basis(std::move(sys), d * d);
  return ker.size() == 1;
}

CheckResult check_restriction(const SkewModule& sm) {
  CheckResult res{"restriction:" + sm.big_scheme().str() + ":m=" + std::to_string(sm.m()),
                  "Lie algebra inside the series action", true, ""};
  const std::vector<int> idx = sm.small_scheme().indices();
  for (int a : idx) {
    for (int b : idx) {
      QMat want(static_cast<size_t>(sm.dim()), QVec(static_cast<size_t>(sm.dim()), Rational(0)));
      for (int c = 0; c < sm.dim(); ++c) {
        QVec img = sm.rep().F(sm.to_big(a), sm.to_big(b)).apply(sm.space().basis_vec(c));
        QVec coords = sm.space().coords_of(img);
        for (int r = 0; r < sm.dim(); ++r) want[static_cast<size_t>(r)][static_cast<size_t>(c)] = coords[static_cast<size_t>(r)];
      }
      auto fm = action_ratfunc_matrix(sm, a, b);
      for (int i = 0; i < sm.dim() && res.pass; ++i) {
        for (int j = 0; j < sm.dim(); ++j) {
          if (fm[static_cast<size_t>(i)][static_cast<size_t>(j)].series_coeffs(1)[1] !=
              want[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
            res.pass = false;
            res.witness = "entry (" + std::to_string(a) + "," + std::to_string(b) + ")[" +
                          std::to_string(i) + "," + std::to_string(j) + "]";
            break;
          }
        }
      }
      if (!res.pass) return res;
    }
  }
  return res;
}

CheckResult check_skew_sdetav(const SkewModule& sm, const std::vector<RatFunc>& hw) {
  CheckResult res{"skew-sdetav:" + sm.big_scheme().str() + ":m=" + std::to_string(sm.m()),
                  "determinant eigenvalue", true, ""};
  int K = sm.small_scheme().N;
  int nm = sm.small_scheme().n;
  RatFunc scalar = alpha_ratfunc(Case::symplectic, Rational(nm));
  for (int i = 1; i <= nm; ++i) {
    const RatFunc& mu = hw[static_cast<size_t>(i - 1)];
    scalar = scalar * mu.compose_affine(-1, Rational(i - 1)) *
             mu.compose_affine(1, Rational(i - K));
  }
  EvalFamily<Rational> fam(sm.rep());
  int entry_bound = minor_bound(2 * sm.m() + 1, MinorRoute::formula) + 1;
  int bl = K * (entry_bound + 1) + K * (K - 1) / 2;
  int br = 4 * nm + 2;
  int samples = bl + br + 1;
  for (int t = 0; t < samples && res.pass; ++t) {
    Rational x = sample_point(t);
    SharpFamily<Rational> sharp(fam, sm.m(), /*with_alpha=*/true, MinorRoute::formula);
    Rational sc = scalar.eval(x);
    for (int c = 0; c < sm.dim(); ++c) {
      QVec v = sm.space().basis_vec(c);
      QVec got = sdet_apply(sharp, Affine::constant(x), v, MinorRoute::chain);
      QVec want = v;
      for (auto& y : want) y *= sc;
      if (got != want) {
        res.pass = false;
        res.witness = "basis vector " + std::to_string(c) + " at u = " + x.str();
        break;
      }
    }
  }
  return res;
}

CheckResult check_skew_sklmu(const SkewModule& sm, const std::vector<RatFunc>& hw,
                             const QVec& zeta) {
  CheckResult res{"skew-sklmu:" + sm.big_scheme().str() + ":m=" + std::to_string(sm.m()),
                  "nested minor eigenvalue", true, ""};
  EvalFamily<Rational> fam(sm.rep());
  int nm = sm.small_scheme().n;
  for (int k = 1; k <= nm && res.pass; ++k) {
    std::vector<int> big_idx, small_idx;
    for (int i = -k + 1; i <= k; ++i)
      if (i != 0) big_idx.push_back(i);
    for (int i = -k + 1; i <= k - 1; ++i)
      if (i != 0) small_idx.push_back(i);
    const RatFunc& mu = hw[static_cast<size_t>(k - 1)];
    int entry_bound = minor_bound(2 * sm.m() + 1, MinorRoute::formula) + 2;
    int kb = static_cast<int>(big_idx.size());
    int samples = 2 * (kb * entry_bound + kb * (kb - 1) / 2) + 4 * nm + 3;
    for (int t = 0; t < samples; ++t) {
      Rational x = sample_point(t);
      SharpFamily<Rational> sharp(fam, sm.m(), /*with_alpha=*/true, MinorRoute::formula);
      QVec lhs = minor_apply(sharp, big_idx, big_idx, Affine::constant(x), zeta,
                             MinorRoute::chain);
      QVec rhs = small_idx.empty()
                     ? zeta
                     : minor_apply(sharp, small_idx, small_idx, Affine::constant(x),
                                   zeta, MinorRoute::chain);
      Rational muval = mu.eval(x - Rational(2 * k - 2));
      for (auto& v : rhs) v *= muval;
      if (lhs != rhs) {
        res.pass = false;
        res.witness = "k = " + std::to_string(k) + " at u = " + x.str();
        break;
      }
    }
  }
  return res;
}

}  // namespace ty
