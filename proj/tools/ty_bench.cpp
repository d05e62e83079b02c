// Timing harness comparing the serial reference minor route (operator chain)
// against the permutation-formula route, and single-threaded against
// OpenMP-parallel identity sweeps.

#include <chrono>
#include <cstdio>

#include "ty/checks.hpp"
#include "ty/parallel.hpp"

using namespace ty;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
double timed(const char* label, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  double s = seconds(t0);
  std::printf("%-42s %8.3f s\n", label, s);
  return s;
}

void bench_sdet_routes(const LieRep& mod, int nsamples) {
  const IndexScheme& sch = mod.scheme();
  EvalFamily<Rational> fam(mod);
  std::vector<Rational> probe(static_cast<size_t>(mod.dim()), Rational(0));
  probe[0] = 1;
  std::vector<Rational> got_chain, got_formula;
  char label[96];
  std::snprintf(label, sizeof(label), "sdet %s dim=%d chain", sch.str().c_str(), mod.dim());
  timed(label, [&] {
    for (int t = 0; t < nsamples; ++t)
      got_chain = sdet_apply(fam, Affine::constant(sample_point(t)), probe,
                             MinorRoute::chain);
  });
  std::snprintf(label, sizeof(label), "sdet %s dim=%d formula", sch.str().c_str(), mod.dim());
  timed(label, [&] {
    for (int t = 0; t < nsamples; ++t)
      got_formula = sdet_apply(fam, Affine::constant(sample_point(t)), probe,
                               MinorRoute::formula);
  });
  if (got_chain != got_formula) {
    std::printf("ROUTE MISMATCH on %s\n", sch.str().c_str());
    std::exit(1);
  }
}

void bench_parallel_sweep() {
  LieRep sp4 = vector_rep(IndexScheme::sp(2));
  int saved = thread_limit();
  thread_limit() = 1;
  double serial = timed("minor route sweep sp_4  (1 thread)",
                        [&] { check_minor_routes(sp4, 3); });
  thread_limit() = 0;
  double par = timed("minor route sweep sp_4  (all threads)",
                     [&] { check_minor_routes(sp4, 3); });
  thread_limit() = saved;
  std::printf("parallel speedup: %.2fx over %d threads\n", serial / par,
              effective_threads());
}

}  // namespace

int main() {
  std::printf("== Sklyanin determinant: chain vs permutation formula ==\n");
  bench_sdet_routes(vector_rep(IndexScheme::sp(1)), 40);
  bench_sdet_routes(vector_rep(IndexScheme::sp(2)), 12);
  bench_sdet_routes(vector_rep(IndexScheme::o_odd(1)), 40);
  bench_sdet_routes(extract_irrep(HighestWeight::of_longs({-1, -1}), IndexScheme::sp(2)), 8);
  std::printf("\n== OpenMP sweep vs serial reference ==\n");
  bench_parallel_sweep();
  return 0;
}
