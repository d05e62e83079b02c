#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ty/poly.hpp"

using namespace ty;

namespace {

RatFunc lin(long an, long bn2, long ad, long bd2) {
  // (an*u + bn2/2) / (ad*u + bd2/2)
  return RatFunc(Poly::linear(Rational(an), Rational(bn2, 2)),
                 Poly::linear(Rational(ad), Rational(bd2, 2)));
}

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
  auto poly = [&] {
    int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    return Poly(std::move(c));
  };
  Poly den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(poly(), den);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(3, -2).str() == "-3/2");
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(1, 2).is_half_integer());
  CHECK(!Rational(1, 3).is_half_integer());
  CHECK_THROWS_AS(Rational(1, 0), DivideByZero);
  CHECK_THROWS_AS(Rational(1).inv() / Rational(0), DivideByZero);
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("inverse pair cancels") {
  RatFunc f = lin(0, 2, 1, -1);  // 1/(u - 1/2)
  RatFunc g(Poly::linear(1, Rational(-1, 2)));
  CHECK((f * g).is_one());
}

TEST_CASE("triple product with cancellation") {
  // ((u+1/2)/(u-1/2)) ((u+3/2)/(u+1/2)) ((u-5/2)/(u-3/2))
  RatFunc prod = lin(1, 1, 1, -1) * lin(1, 3, 1, 1) * lin(1, -5, 1, -3);
  RatFunc want(Poly::linear(1, Rational(3, 2)) * Poly::linear(1, Rational(-5, 2)),
               Poly::linear(1, Rational(-1, 2)) * Poly::linear(1, Rational(-3, 2)));
  CHECK(prod == want);
  // independent cross-check by evaluation at u = 7
  CHECK(prod.eval(7) == Rational(17, 2) * Rational(9, 2) / (Rational(13, 2) * Rational(11, 2)));
}

TEST_CASE("self quotient is one") {
  RatFunc f(Poly::linear(1, Rational(-3, 2)));
  CHECK((f / f).is_one());
}

TEST_CASE("evaluation") {
  RatFunc f = lin(1, 1, 1, -1);  // (u+1/2)/(u-1/2)
  CHECK(f.eval(Rational(3, 2)) == Rational(2));
  CHECK(RatFunc(Rational(1)).eval(Rational(9, 5)) == Rational(1));
  RatFunc g(Poly::linear(1, Rational(-3, 2)));
  CHECK(g.eval(Rational(3, 2)) == Rational(0));
  CHECK_THROWS_AS(f.eval(Rational(1, 2)), PoleError);
}

TEST_CASE("factor_linear on constructed products") {
  Poly p = Poly::from_roots({Rational(3, 2), Rational(-1, 2)});
  auto roots = factor_linear(p);
  CHECK(roots == std::vector<Rational>{Rational(-1, 2), Rational(3, 2)});

  Poly q(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});  // u^2 + 1
  CHECK_THROWS_AS(factor_linear(q), NonLinearFactor);

  // repeated roots and integer roots mixed
  Poly r = Poly::from_roots({Rational(2), Rational(2), Rational(-7, 2)});
  CHECK(factor_linear(r) == std::vector<Rational>{Rational(-7, 2), Rational(2), Rational(2)});
}

TEST_CASE("factor_linear reconstructs large half-integer sets") {
  std::vector<Rational> roots = {Rational(31, 2), Rational(29, 2), Rational(27, 2),
                                 Rational(9, 2),  Rational(7, 2),  Rational(-19, 2)};
  std::sort(roots.begin(), roots.end());
  CHECK(factor_linear(Poly::from_roots(roots)) == roots);
}

TEST_CASE("factor then rebuild is the identity up to degree 20") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> halfroot(-19, 19);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 1 + trial;
    std::vector<Rational> roots;
    for (int i = 0; i < d; ++i) roots.emplace_back(halfroot(rng), 2);
    std::sort(roots.begin(), roots.end());
    CHECK(factor_linear(Poly::from_roots(roots)) == roots);
  }
}

TEST_CASE("interpolation roundtrips") {
  RatFunc f = lin(1, -3, 1, -1);  // (u-3/2)/(u-1/2)
  std::vector<std::pair<Rational, Rational>> pts;
  for (long x : {2, 3, 4, 5}) pts.emplace_back(Rational(x), f.eval(Rational(x)));
  CHECK(interpolate(pts, 1, 1) == f);

  std::vector<std::pair<Rational, Rational>> cpts;
  for (long x : {0, 1, 2}) cpts.emplace_back(Rational(x), Rational(1));
  CHECK(interpolate(cpts, 1, 1).is_one());

  RatFunc g(Poly::linear(1, Rational(3, 2)) * Poly::linear(1, Rational(-5, 2)),
            Poly::linear(1, Rational(-1, 2)) * Poly::linear(1, Rational(-3, 2)));
  std::vector<std::pair<Rational, Rational>> gpts;
  for (long x : {3, 4, 5, 6, 7, 8}) gpts.emplace_back(Rational(x), g.eval(Rational(x)));
  CHECK(interpolate(gpts, 2, 2) == g);
}

TEST_CASE("interpolation rejects inconsistent samples") {
  std::vector<std::pair<Rational, Rational>> pts;
  for (long x : {0, 1, 2, 3, 4}) pts.emplace_back(Rational(x), Rational(x * x));
  CHECK_THROWS_AS(interpolate(pts, 1, 1), InconsistentSamples);
}

TEST_CASE("interpolate o sample is the identity for bounded degrees") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> halfroot(-9, 9);
    std::vector<Rational> nroots, droots;
    for (int i = 0; i < 4 + trial % 5; ++i) nroots.emplace_back(halfroot(rng), 2);
    for (int i = 0; i < 4 + (trial + 2) % 5; ++i) droots.emplace_back(halfroot(rng), 2);
    RatFunc f(Poly::from_roots(nroots), Poly::from_roots(droots));
    std::vector<std::pair<Rational, Rational>> pts;
    int need = 8 + 8 + 1;
    for (int t = 0; t < need; ++t) {
      Rational x = Rational(17, 3) + Rational(t);
      pts.emplace_back(x, f.eval(x));
    }
    CHECK(interpolate(pts, 8, 8) == f);
  }
}

TEST_CASE("field axiom spot checks on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("normalization is idempotent") {
  Poly n = Poly::linear(2, 3) * Poly::linear(1, -1);
  Poly d = Poly::linear(4, 6) * Poly::linear(1, 5);
  RatFunc f(n, d);
  RatFunc g(f.num(), f.den());
  CHECK(f == g);
  CHECK(f.den().is_monic());
  CHECK(poly_gcd(f.num(), f.den()).degree() == 0);
}

TEST_CASE("series coefficients at infinity") {
  // (u + 1)/(u - 1) = 1 + 2/u + 2/u^2 + ...
  RatFunc f(Poly::linear(1, 1), Poly::linear(1, -1));
  auto c = f.series_coeffs(3);
  CHECK(c[0] == Rational(1));
  CHECK(c[1] == Rational(2));
  CHECK(c[2] == Rational(2));
  CHECK(c[3] == Rational(2));
}

TEST_CASE("compose affine") {
  RatFunc f = lin(1, -3, 1, -1);
  RatFunc g = f.compose_affine(-1, 1);  // f(-u + 1)
  CHECK(g.eval(Rational(0)) == f.eval(Rational(1)));
  CHECK(g.eval(Rational(5)) == f.eval(Rational(-4)));
}
