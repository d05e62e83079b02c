#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ty/perm.hpp"
#include "ty/poly.hpp"
#include "ty/scheme.hpp"
#include "ty/tensor_op.hpp"

using namespace ty;

TEST_CASE("index schemes") {
  IndexScheme sp2 = IndexScheme::sp(1);
  CHECK(sp2.N == 2);
  CHECK(sp2.indices() == std::vector<int>{-1, 1});
  CHECK(sp2.pos(-1) == 0);
  CHECK(sp2.pos(1) == 1);
  CHECK(!sp2.valid_index(0));

  IndexScheme o3 = IndexScheme::o_odd(1);
  CHECK(o3.N == 3);
  CHECK(o3.indices() == std::vector<int>{-1, 0, 1});
  CHECK(o3.pos(0) == 1);
  for (int p = 0; p < o3.N; ++p) CHECK(o3.pos(o3.index_at(p)) == p);
}

TEST_CASE("theta values") {
  IndexScheme o3 = IndexScheme::o_odd(1);
  for (int i : o3.indices())
    for (int j : o3.indices()) CHECK(o3.theta(i, j) == 1);

  IndexScheme sp4 = IndexScheme::sp(2);
  CHECK(sp4.theta(1, -1) == -1);
  CHECK(sp4.theta(-2, -1) == 1);
  CHECK(sp4.theta(2, 1) == 1);
  CHECK_THROWS_AS(sp4.theta(0, 1), InvalidIndex);
}

TEST_CASE("transpose_t") {
  IndexScheme sp2 = IndexScheme::sp(1);
  // identity fixed
  std::vector<std::vector<Rational>> id(2, std::vector<Rational>(2, Rational(0)));
  id[0][0] = id[1][1] = 1;
  CHECK(transpose_t(sp2, id) == id);
  // e_{1,1} -> e_{-1,-1}
  std::vector<std::vector<Rational>> e11(2, std::vector<Rational>(2, Rational(0)));
  e11[sp2.pos(1)][sp2.pos(1)] = 1;
  auto tr = transpose_t(sp2, e11);
  CHECK(tr[sp2.pos(-1)][sp2.pos(-1)] == Rational(1));
  CHECK(tr[sp2.pos(1)][sp2.pos(1)] == Rational(0));
  // involution on random matrices
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (const IndexScheme& sch : {IndexScheme::sp(2), IndexScheme::o_odd(1)}) {
    std::vector<std::vector<Rational>> a(static_cast<size_t>(sch.N),
                                         std::vector<Rational>(static_cast<size_t>(sch.N)));
    for (auto& row : a)
      for (auto& v : row) v = Rational(coef(rng));
    CHECK(transpose_t(sch, transpose_t(sch, a)) == a);
  }
}

TEST_CASE("tensor operators") {
  for (const IndexScheme& sch :
       {IndexScheme::sp(1), IndexScheme::sp(2), IndexScheme::o_odd(1)}) {
    auto P = build_P<Rational>(sch);
    auto Q = build_Q<Rational>(sch);
    auto I2 = TensorOp<Rational>::identity(sch, 2);
    CHECK(P * P == I2);
    CHECK(Q * Q == Q * Rational(sch.N));
    // R^t(x) R^t(-x + N) = 1 at several sample arguments
    for (int t = 0; t < 3; ++t) {
      Rational x = Rational(17, 3) + Rational(t);
      CHECK(build_Rt<Rational>(sch, x) * build_Rt<Rational>(sch, Rational(sch.N) - x) == I2);
    }
  }
}

TEST_CASE("R^t over rational functions") {
  IndexScheme sp2 = IndexScheme::sp(1);
  RatFunc x = RatFunc::var();
  auto lhs = build_Rt<RatFunc>(sp2, x) *
             build_Rt<RatFunc>(sp2, RatFunc(Rational(sp2.N)) - x);
  CHECK(lhs == TensorOp<RatFunc>::identity(sp2, 2));
}

TEST_CASE("antisymmetrizers") {
  IndexScheme sp4 = IndexScheme::sp(2);
  auto A1 = antisymmetrizer<Rational>(sp4, 1);
  CHECK(A1 == TensorOp<Rational>::identity(sp4, 1));
  auto A2 = antisymmetrizer<Rational>(sp4, 2);
  CHECK(A2 == TensorOp<Rational>::identity(sp4, 2) - build_P<Rational>(sp4));
  for (int k = 1; k <= 4; ++k) {
    auto A = antisymmetrizer<Rational>(sp4, k);
    Rational kfact(1);
    for (int i = 2; i <= k; ++i) kfact *= Rational(i);
    CHECK(A * A == A * kfact);
  }
}

TEST_CASE("antisymmetrizer absorbs slot permutations") {
  IndexScheme sp4 = IndexScheme::sp(2);
  for (int k = 2; k <= 4; ++k) {
    auto A = antisymmetrizer<Rational>(sp4, k);
    // P_sigma for a transposition of the first two slots
    TensorOp<Rational> Pt(sp4, k);
    Pt.for_all_tuples(k, [&](const Tuple& t) {
      Tuple o = t;
      std::swap(o[0], o[1]);
      Pt.add(o, t, Rational(1));
    });
    CHECK(A * Pt == A * Rational(-1));
  }
}

TEST_CASE("omega base cases and the N=3 example") {
  // N = 2: every permutation maps to the identity
  for (std::vector<int> img : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    Perm p({1, 2}, img);
    CHECK(omega(p) == Perm::identity({1, 2}));
  }
  // N = 3: (1,2,3) -> (2,1,3)
  Perm p({1, 2, 3}, {1, 2, 3});
  CHECK(omega(p).img == std::vector<int>{2, 1, 3});
}

TEST_CASE("omega fixes the last ground element") {
  for (int N : {2, 3, 4, 5}) {
    Perm p = Perm::identity_n(N);
    std::vector<int> img = p.img;
    do {
      Perm q(p.ground, img);
      Perm qp = omega(q);
      CHECK(qp.img.back() == N);
      // image is a genuine permutation
      std::vector<int> s = qp.img;
      std::sort(s.begin(), s.end());
      CHECK(s == p.ground);
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("omega quotient map is bijective") {
  CHECK(omega_quotient_bijective(2));
  CHECK(omega_quotient_bijective(3));
  CHECK(omega_quotient_bijective(4));
  CHECK(omega_quotient_bijective(5));
  CHECK(omega_quotient_bijective(6));
}

TEST_CASE("permutation algebra") {
  Perm p({1, 2, 3, 4}, {3, 1, 4, 2});
  CHECK(p.compose(p.inverse()) == Perm::identity({1, 2, 3, 4}));
  CHECK(p.inverse().compose(p) == Perm::identity({1, 2, 3, 4}));
  CHECK(p.sgn() == Perm({1, 2, 3, 4}, {3, 1, 4, 2}).inverse().sgn());
  CHECK(Perm({1, 2}, {2, 1}).sgn() == -1);
}
