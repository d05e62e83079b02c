#include "ty/lie_rep.hpp"

#include <cstdlib>

namespace ty {

long tensor_size_limit() {
  if (const char* e = std::getenv("TY_SIZE_LIMIT")) {
    long v = std::atol(e);
    if (v > 0) return v;
  }
  return 1000000;
}

LieRep vector_rep(const IndexScheme& sch) {
  LieRep rep(sch, sch.N);
  for (int i : sch.indices()) {
    for (int j : sch.indices()) {
      SparseMat& f = rep.F(i, j);
      f.add(sch.pos(i), sch.pos(j), 1);
      f.add(sch.pos(-j), sch.pos(-i), Rational(-sch.theta(i, j)));
      f.compress();
    }
  }
  check_generator_symmetry(rep);
  check_brackets(rep);
  return rep;
}

LieRep trivial_rep(const IndexScheme& sch) {
  return LieRep(sch, 1);  // all generators act as zero
}

LieRep tensor_rep(const LieRep& base, int d) {
  if (d < 1) throw InvalidIndex("tensor power must be >= 1");
  double sz = 1;
  for (int s = 0; s < d; ++s) sz *= base.dim();
  if (sz > static_cast<double>(tensor_size_limit()))
    throw SizeLimitExceeded("tensor power dimension exceeds limit");
  long dim = 1;
  for (int s = 0; s < d; ++s) dim *= base.dim();

  const IndexScheme& sch = base.scheme();
  LieRep rep(sch, static_cast<int>(dim));
  long stride = 1;
  std::vector<long> strides(static_cast<size_t>(d));
  for (int s = 0; s < d; ++s) {
    strides[static_cast<size_t>(s)] = stride;
    stride *= base.dim();
  }
  for (int i : sch.indices()) {
    for (int j : sch.indices()) {
      SparseMat& f = rep.F(i, j);
      const SparseMat& b = base.F(i, j);
      for (long t = 0; t < dim; ++t) {
        for (int s = 0; s < d; ++s) {
          long st = strides[static_cast<size_t>(s)];
          int digit = static_cast<int>((t / st) % base.dim());
          for (const auto& e : b.col[static_cast<size_t>(digit)]) {
            long target = t + (static_cast<long>(e.first) - digit) * st;
            f.add(static_cast<int>(target), static_cast<int>(t), e.second);
          }
        }
      }
      f.compress();
    }
  }
  return rep;
}

namespace {

// Tensor basis element weights under the Cartan generators are sums of slot
// weights (+1 at index k, -1 at index -k), so weight spaces of tensor powers
// are spanned by basis vectors.
bool cartan_diagonal(const LieRep& rep) {
  for (int k = 1; k <= rep.scheme().n; ++k) {
    const SparseMat& f = rep.F(k, k);
    for (int c = 0; c < f.cols; ++c)
      for (const auto& e : f.col[static_cast<size_t>(c)])
        if (e.first != c) return false;
  }
  return true;
}

Rational diag_entry(const SparseMat& m, int i) {
  for (const auto& e : m.col[static_cast<size_t>(i)])
    if (e.first == i) return e.second;
  return Rational(0);
}

std::vector<std::pair<int, int>> raising_pairs(const IndexScheme& sch, int lo, int hi) {
  std::vector<std::pair<int, int>> out;
  for (int i = lo; i <= hi; ++i) {
    if (!sch.valid_index(i)) continue;
    for (int j = i + 1; j <= hi; ++j) {
      if (!sch.valid_index(j)) continue;
      out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

Subspace weight_space(const LieRep& rep, const std::vector<int>& cartan_indices,
                      const std::vector<Rational>& targets) {
  if (cartan_indices.size() != targets.size())
    throw ShapeMismatch("weight_space: index/target size mismatch");
  if (cartan_diagonal(rep)) {
    QMat rows;
    for (int b = 0; b < rep.dim(); ++b) {
      bool ok = true;
      for (size_t t = 0; t < cartan_indices.size(); ++t) {
        if (diag_entry(rep.F(cartan_indices[t], cartan_indices[t]), b) != targets[t]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        QVec e(static_cast<size_t>(rep.dim()), Rational(0));
        e[static_cast<size_t>(b)] = 1;
        rows.push_back(std::move(e));
      }
    }
    return Subspace(rep.dim(), std::move(rows));
  }
  QMat stacked;
  for (size_t t = 0; t < cartan_indices.size(); ++t) {
    QMat m = rep.F(cartan_indices[t], cartan_indices[t]).dense();
    for (int i = 0; i < rep.dim(); ++i) {
      m[static_cast<size_t>(i)][static_cast<size_t>(i)] -= targets[t];
      stacked.push_back(std::move(m[static_cast<size_t>(i)]));
    }
  }
  auto ker = kernel_basis(std::move(stacked), rep.dim());
  return Subspace(rep.dim(), QMat(ker.begin(), ker.end()));
}

Subspace skew_subspace(const LieRep& rep, const HighestWeight& mu, int m) {
  const IndexScheme& sch = rep.scheme();
  if (static_cast<int>(mu.size()) != m)
    throw ShapeMismatch("skew_subspace: mu must have m entries");
  QMat stacked;
  auto push_op_rows = [&](const SparseMat& op, const Rational& diag_shift) {
    QMat d = op.dense();
    for (int i = 0; i < rep.dim(); ++i) {
      if (!diag_shift.is_zero()) d[static_cast<size_t>(i)][static_cast<size_t>(i)] -= diag_shift;
      if (!is_zero_vec(d[static_cast<size_t>(i)])) stacked.push_back(std::move(d[static_cast<size_t>(i)]));
    }
  };
  for (auto [i, j] : raising_pairs(sch, -m, m)) push_op_rows(rep.F(i, j), Rational(0));
  for (int i = 1; i <= m; ++i) push_op_rows(rep.F(i, i), mu[static_cast<size_t>(i - 1)]);
  auto ker = kernel_basis(std::move(stacked), rep.dim());
  return Subspace(rep.dim(), QMat(ker.begin(), ker.end()));
}

LieRep extract_irrep(const HighestWeight& lam, const IndexScheme& sch,
                     const IrrepOptions& opts) {
  lam.validate(sch);
  if (!lam.all_integer())
    throw InvalidWeight("extract_irrep handles tensor (integer) weights only");
  long d = 0;
  for (const auto& e : lam.entries) d += e.abs().to_long();
  if (d == 0) return trivial_rep(sch);

  double sz = 1;
  for (long s = 0; s < d; ++s) sz *= sch.N;
  long limit = opts.size_limit > 0 ? opts.size_limit : tensor_size_limit();
  if (sz > static_cast<double>(limit))
    throw SizeLimitExceeded("extract_irrep: N^d exceeds the size limit");

  LieRep big = tensor_rep(vector_rep(sch), static_cast<int>(d));

  // Highest-weight space: basis tensor vectors of weight lambda...
  Subspace wsp = [&] {
    std::vector<int> cart;
    std::vector<Rational> targ;
    for (int k = 1; k <= sch.n; ++k) {
      cart.push_back(k);
      targ.push_back(lam[static_cast<size_t>(k - 1)]);
    }
    return weight_space(big, cart, targ);
  }();
  if (wsp.dim() == 0) throw NoHighestVector("no vector of weight " + lam.str());

  // ...intersected with the kernel of every raising generator; constraint
  // rows live in the weight-space coordinates.
  QMat constraints;
  for (auto [i, j] : raising_pairs(sch, -sch.n, sch.n)) {
    std::vector<QVec> imgs;
    imgs.reserve(static_cast<size_t>(wsp.dim()));
    for (int t = 0; t < wsp.dim(); ++t) imgs.push_back(big.F(i, j).apply(wsp.basis_vec(t)));
    for (int r = 0; r < big.dim(); ++r) {
      QVec row(static_cast<size_t>(wsp.dim()), Rational(0));
      bool nz = false;
      for (int t = 0; t < wsp.dim(); ++t) {
        row[static_cast<size_t>(t)] = imgs[static_cast<size_t>(t)][static_cast<size_t>(r)];
        nz = nz || !row[static_cast<size_t>(t)].is_zero();
      }
      if (nz) constraints.push_back(std::move(row));
    }
  }
  auto ker = kernel_basis(std::move(constraints), wsp.dim());
  if (ker.empty())
    throw NoHighestVector("weight " + lam.str() + " has no highest vector at d = " +
                          std::to_string(d));
  const QVec& kc = opts.last_kernel_vector ? ker.back() : ker.front();
  QVec v0 = wsp.from_coords(kc);

  // Close the cyclic span under the lowering generators.
  auto lowerings = [&] {
    std::vector<std::pair<int, int>> out;
    for (int i : sch.indices())
      for (int j : sch.indices())
        if (i > j) out.emplace_back(i, j);
    return out;
  }();
  QMat basis{v0};
  basis = row_space(std::move(basis));
  QMat frontier = basis;
  while (!frontier.empty()) {
    QMat cand = basis;
    size_t old_dim = basis.size();
    for (const auto& v : frontier)
      for (auto [i, j] : lowerings) {
        QVec w = big.F(i, j).apply(v);
        if (!is_zero_vec(w)) cand.push_back(std::move(w));
      }
    cand = row_space(std::move(cand));
    if (cand.size() == old_dim) break;
    // new frontier = vectors beyond the old span
    Subspace old_span(big.dim(), basis);
    frontier.clear();
    for (const auto& v : cand)
      if (!old_span.contains(v)) frontier.push_back(v);
    basis = std::move(cand);
  }

  Subspace sub(big.dim(), basis);
  LieRep rep(sch, sub.dim());
  for (int i : sch.indices()) {
    for (int j : sch.indices()) {
      SparseMat& f = rep.F(i, j);
      for (int t = 0; t < sub.dim(); ++t) {
        QVec img = big.F(i, j).apply(sub.basis_vec(t));
        QVec coords = sub.coords_of(img);  // throws if not a submodule
        for (int r = 0; r < sub.dim(); ++r)
          if (!coords[static_cast<size_t>(r)].is_zero()) f.add(r, t, coords[static_cast<size_t>(r)]);
      }
      f.compress();
    }
  }
  if (opts.verify) {
    check_generator_symmetry(rep);
    check_brackets(rep);
  }
  return rep;
}

void check_generator_symmetry(const LieRep& rep) {
  const IndexScheme& sch = rep.scheme();
  for (int i : sch.indices()) {
    for (int j : sch.indices()) {
      SparseMat diff = rep.F(i, j);
      const SparseMat& other = rep.F(-j, -i);
      Rational th(sch.theta(i, j));
      for (int c = 0; c < other.cols; ++c)
        for (const auto& e : other.col[static_cast<size_t>(c)])
          diff.add(e.first, c, th * e.second);
      diff.compress();
      if (!diff.is_zero())
        throw Error("generator symmetry violated at F_{" + std::to_string(i) + "," +
                    std::to_string(j) + "}");
    }
  }
}

void check_brackets(const LieRep& rep) {
  const IndexScheme& sch = rep.scheme();
  LieRep vec = [&] {
    // plain construction to avoid recursion into verification
    LieRep r(sch, sch.N);
    for (int i : sch.indices())
      for (int j : sch.indices()) {
        r.F(i, j).add(sch.pos(i), sch.pos(j), 1);
        r.F(i, j).add(sch.pos(-j), sch.pos(-i), Rational(-sch.theta(i, j)));
        r.F(i, j).compress();
      }
    return r;
  }();

  // Canonical spanning list of generators (one of each +-theta pair).
  std::vector<std::pair<int, int>> canon;
  for (int i : sch.indices())
    for (int j : sch.indices()) {
      if (vec.F(i, j).is_zero()) continue;
      int a = sch.pos(i) * sch.N + sch.pos(j);
      int b = sch.pos(-j) * sch.N + sch.pos(-i);
      if (a <= b) canon.emplace_back(i, j);
    }

  auto vec_of = [&](const SparseMat& m) {
    QVec v(static_cast<size_t>(sch.N) * static_cast<size_t>(sch.N), Rational(0));
    for (int c = 0; c < m.cols; ++c)
      for (const auto& e : m.col[static_cast<size_t>(c)])
        v[static_cast<size_t>(e.first) * static_cast<size_t>(sch.N) + static_cast<size_t>(c)] =
            e.second;
    return v;
  };

  // Express a vector-rep matrix in the canonical generator span.
  auto express = [&](const SparseMat& x) {
    QMat sys;  // columns: canon generators, then the target
    size_t nn = static_cast<size_t>(sch.N) * static_cast<size_t>(sch.N);
    std::vector<QVec> cols;
    for (auto [a, b] : canon) cols.push_back(vec_of(vec.F(a, b)));
    QVec target = vec_of(x);
    for (size_t r = 0; r < nn; ++r) {
      QVec row(canon.size() + 1, Rational(0));
      bool nz = false;
      for (size_t c = 0; c < canon.size(); ++c) {
        row[c] = cols[c][r];
        nz = nz || !row[c].is_zero();
      }
      row[canon.size()] = target[r];
      nz = nz || !row[canon.size()].is_zero();
      if (nz) sys.push_back(std::move(row));
    }
    std::vector<int> piv = rref(sys);
    QVec coeff(canon.size(), Rational(0));
    for (size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == static_cast<int>(canon.size()))
        throw Error("bracket does not lie in the generator span");
      coeff[static_cast<size_t>(piv[r])] = sys[r][canon.size()];
    }
    return coeff;
  };

  // Spanning pairs: every generator against Cartans and simple-step pairs.
  std::vector<std::pair<int, int>> second;
  for (int k = 1; k <= sch.n; ++k) second.emplace_back(k, k);
  auto idx = sch.indices();
  for (size_t t = 0; t + 1 < idx.size(); ++t) {
    second.emplace_back(idx[t], idx[t + 1]);
    second.emplace_back(idx[t + 1], idx[t]);
  }

  for (auto [i, j] : canon) {
    for (auto [k, l] : second) {
      SparseMat lhs = rep.F(i, j) * rep.F(k, l) - rep.F(k, l) * rep.F(i, j);
      SparseMat bracket_vec =
          vec.F(i, j) * vec.F(k, l) - vec.F(k, l) * vec.F(i, j);
      QVec coeff = express(bracket_vec);
      SparseMat rhs(rep.dim(), rep.dim());
      for (size_t t = 0; t < canon.size(); ++t) {
        if (coeff[t].is_zero()) continue;
        const SparseMat& g = rep.F(canon[t].first, canon[t].second);
        for (int c = 0; c < g.cols; ++c)
          for (const auto& e : g.col[static_cast<size_t>(c)]) rhs.add(e.first, c, e.second * coeff[t]);
      }
      if (!(lhs - rhs).is_zero())
        throw Error("bracket relation failed at [F_{" + std::to_string(i) + "," +
                    std::to_string(j) + "}, F_{" + std::to_string(k) + "," +
                    std::to_string(l) + "}]");
    }
  }
}

Rational weyl_dim(const HighestWeight& lam, const IndexScheme& sch) {
  lam.validate(sch);
  int n = sch.n;
  // standard dominant coordinates a_i = -lambda_{n+1-i}
  std::vector<Rational> a(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i - 1)] = -lam[static_cast<size_t>(n - i)];
  std::vector<Rational> t(static_cast<size_t>(n)), s(static_cast<size_t>(n));
  Rational rho_off;
  if (sch.symplectic())
    rho_off = Rational(1);
  else if (sch.has_zero())
    rho_off = Rational(1, 2);
  else
    rho_off = Rational(0);
  for (int i = 1; i <= n; ++i) {
    Rational base = Rational(n - i) + rho_off;
    t[static_cast<size_t>(i - 1)] = a[static_cast<size_t>(i - 1)] + base;
    s[static_cast<size_t>(i - 1)] = base;
  }
  Rational dim(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dim *= (t[static_cast<size_t>(i)] * t[static_cast<size_t>(i)] -
              t[static_cast<size_t>(j)] * t[static_cast<size_t>(j)]) /
             (s[static_cast<size_t>(i)] * s[static_cast<size_t>(i)] -
              s[static_cast<size_t>(j)] * s[static_cast<size_t>(j)]);
  if (sch.symplectic() || sch.has_zero())
    for (int i = 0; i < n; ++i) dim *= t[static_cast<size_t>(i)] / s[static_cast<size_t>(i)];
  return dim;
}

}  // namespace ty
