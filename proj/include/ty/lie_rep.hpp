#pragma once

#include <vector>

#include "ty/matrix.hpp"
#include "ty/scheme.hpp"

namespace ty {

// A concrete g_N-module: the dimension together with the sparse matrix of
// every generator F_ij. Construction verifies the defining symmetry
// F_ij = -theta_ij F_{-j,-i} and a spanning set of bracket relations.
class LieRep {
 public:
  LieRep(IndexScheme sch, int dim) : sch_(sch), dim_(dim) {
    gens_.assign(static_cast<size_t>(sch.N) * static_cast<size_t>(sch.N),
                 SparseMat(dim, dim));
  }

  const IndexScheme& scheme() const { return sch_; }
  int dim() const { return dim_; }

  SparseMat& F(int i, int j) { return gens_[slot(i, j)]; }
  const SparseMat& F(int i, int j) const { return gens_[slot(i, j)]; }

  // y += s * F_ij x
  template <class R>
  void apply_F(int i, int j, const std::vector<R>& x, std::vector<R>& y,
               const Rational& s = 1) const {
    F(i, j).apply_add(x, y, s);
  }

 private:
  size_t slot(int i, int j) const {
    return static_cast<size_t>(sch_.pos(i)) * static_cast<size_t>(sch_.N) +
           static_cast<size_t>(sch_.pos(j));
  }
  IndexScheme sch_;
  int dim_;
  std::vector<SparseMat> gens_;
};

// Options for extract_irrep.
struct IrrepOptions {
  long size_limit = 0;  // 0: use TY_SIZE_LIMIT or the built-in default
  bool last_kernel_vector = false;  // test hook: pick a different highest vector
  bool verify = true;               // bracket + symmetry verification
};

long tensor_size_limit();  // default, overridable via TY_SIZE_LIMIT

LieRep vector_rep(const IndexScheme& sch);
LieRep tensor_rep(const LieRep& base, int d);
LieRep trivial_rep(const IndexScheme& sch);

// Builds V(lambda) inside (C^N)^{tensor d}, d = sum |lambda_i|: solves for a
// highest vector, then spans its closure under the lowering generators.
LieRep extract_irrep(const HighestWeight& lam, const IndexScheme& sch,
                     const IrrepOptions& opts = {});

// Exact joint eigenspace of the F_kk for k in cartan_indices.
Subspace weight_space(const LieRep& rep, const std::vector<int>& cartan_indices,
                      const std::vector<Rational>& targets);

// V(lambda)^+_mu: g_M-highest vectors of weight mu (M = 2m or 2m+1).
Subspace skew_subspace(const LieRep& rep, const HighestWeight& mu, int m);

// Weyl dimension formula for V(lambda), independent of the construction.
Rational weyl_dim(const HighestWeight& lam, const IndexScheme& sch);

// Verifies [F_ij, F_kl] = bracket(F_ij, F_kl) on a spanning set of pairs,
// with the bracket expanded through the vector representation.
void check_brackets(const LieRep& rep);

// Verifies F_ij = -theta_ij F_{-j,-i} for all generators.
void check_generator_symmetry(const LieRep& rep);

}  // namespace ty
