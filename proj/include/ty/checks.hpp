#pragma once

#include <string>
#include <vector>

#include "ty/families_derived.hpp"
#include "ty/lie_rep.hpp"
#include "ty/minors.hpp"

namespace ty {

struct CheckResult {
  std::string name;
  std::string ref;  // identity tag carried into reports
  bool pass = false;
  std::string witness;
};

// Deterministic sample lattice 17/3 + t: the spectral factors of every
// in-scope identity have half-integer or third-free poles, so these points
// are always regular.
Rational sample_point(int t);
// Pairs with denominators 3 and 7, so sums/differences are never poles.
std::pair<Rational, Rational> sample_pair(int t);

// Degree bound (numerator and denominator) for an order-k minor of an
// evaluation family: chain terms carry k entry denominators plus one per
// R^t factor; formula terms carry k entries plus the alpha prefactor.
int minor_bound(int k, MinorRoute route);

// Highest vector of a constructed irreducible module (weight lambda and
// annihilated by all raisings); normalized so the first nonzero entry is 1.
QVec highest_vector_of(const LieRep& rep, const HighestWeight& lam);

// Evaluation-module highest weight, symplectic case:
// mu_i(u) = (u + lambda_i - 1/2)/(u - 1/2).
std::vector<RatFunc> eval_hw(const HighestWeight& lam);

// --- defining relations -----------------------------------------------------
CheckResult check_quaternary(const LieRep& rep, int pairs = 5);
CheckResult check_symmetry(const LieRep& rep, int samples = 5);
// family-level versions (used on Sylvester images)
CheckResult check_family_quaternary(const SFamily<Rational>& fam, int pairs,
                                    const std::string& name);
CheckResult check_family_symmetry(const SFamily<Rational>& fam, int samples,
                                  const std::string& name);

// --- determinant and comatrix identities ------------------------------------
CheckResult check_comdef(const LieRep& rep, MinorRoute route = MinorRoute::formula);
CheckResult check_symsdet(const LieRep& rep, MinorRoute route = MinorRoute::formula);
CheckResult check_sdetav(const LieRep& rep, const std::vector<RatFunc>& hw,
                         MinorRoute route = MinorRoute::formula);
CheckResult check_sklmu(const LieRep& rep, const HighestWeight& lam,
                        MinorRoute route = MinorRoute::formula);
CheckResult check_sdetcirc(const LieRep& rep);
CheckResult check_varpi_involutive(const LieRep& rep, int samples = 3);

// --- quantum Sylvester -------------------------------------------------------
CheckResult check_sylvester_sdet(const LieRep& rep, int m,
                                 MinorRoute inner = MinorRoute::formula);
CheckResult check_nnentry(const LieRep& rep, int m,
                          MinorRoute inner = MinorRoute::formula);
CheckResult check_sharp_relations(const LieRep& rep, int m, int samples = 5);
CheckResult check_dual_relations(const LieRep& rep, int m, int samples = 5);
CheckResult check_homcoin(const LieRep& rep, int samples = 5);

// --- minor machinery ---------------------------------------------------------
// formula route == chain route over every index shape of the given orders
CheckResult check_minor_routes(const LieRep& rep, int max_k, int stride = 1);
CheckResult check_aux_identities(const LieRep& rep);
CheckResult check_centrality(const LieRep& rep, int pairs = 3);

}  // namespace ty
