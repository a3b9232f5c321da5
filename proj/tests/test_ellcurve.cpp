// Copyright 2026 The cmtorsion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmtorsion/ellcurve.hpp"
#include "oracles.hpp"

using namespace cmtorsion;

namespace {

// Jordan's totient J_2(n) / 2: the number of x-coordinates of points of
// exact order n > 2.
int expected_degree(int n) {
  long j = n * n;
  for (auto [p, e] : oracle::factor_naive(n)) j = j / (p * p) * (p * p - 1);
  return static_cast<int>(j / 2);
}

}  // namespace

TEST_CASE("curve invariants") {
  EllipticCurve E(-15, 22);
  CHECK(E.j_invariant() == 54000);
  CHECK(E.discriminant() == -16 * (4 * -3375 + 27 * 484));
  CHECK(to_string(E) == "y^2 = x^3 - 15*x + 22");
  CHECK(to_string(EllipticCurve(0, Rational(-1, 2))) == "y^2 = x^3 - 1/2");
  CHECK(EllipticCurve(0, 1).j_invariant() == 0);
  CHECK(EllipticCurve(1, 0).j_invariant() == 1728);
  CHECK_THROWS_AS(EllipticCurve(0, 0), SingularCurve);
  CHECK_THROWS_AS(EllipticCurve(-3, 2), SingularCurve);
  CHECK(quadratic_twist(E, -3) == EllipticCurve(-15 * 9, 22 * -27));
  CHECK_THROWS(quadratic_twist(E, 4));
  CHECK_THROWS(quadratic_twist(E, 0));
}

TEST_CASE("group law") {
  EllipticCurve E(0, -2);
  Point<Rational> P(3, 5);
  REQUIRE(on_curve(E, P));
  auto inf = Point<Rational>::infinity();
  CHECK(point_add(E, P, inf) == P);
  CHECK(point_add(E, P, point_neg(P)) == inf);
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      CHECK(point_add(E, point_mul(E, m, P), point_mul(E, n, P)) == point_mul(E, m + n, P));
    }
  }
  CHECK(point_order(E, P) == 0);
  CHECK_THROWS_AS(point_add(E, P, Point<Rational>(1, 1)), std::invalid_argument);

  EllipticCurve F(0, 1);
  CHECK(point_order(F, Point<Rational>(2, 3)) == 6);
  CHECK(point_order(F, Point<Rational>(0, 1)) == 3);
  CHECK(point_order(F, Point<Rational>(-1, 0)) == 2);
}

TEST_CASE("explicit low division polynomials") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    Rational a = static_cast<long>(rng() % 41) - 20, b = static_cast<long>(rng() % 41) - 20;
    if (4 * a * a * a + 27 * b * b == 0) continue;
    EllipticCurve E(a, b);
    CHECK(division_polynomial(E, 2) == Poly{b, a, 0, 1});
    CHECK(division_polynomial(E, 3) == Poly{-a * a, 12 * b, 6 * a, 0, 3});
    Poly f4 = Poly{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1} * Rational(2);
    CHECK(division_polynomial(E, 4) == E.rhs() * f4);
    CHECK(primitive_division_polynomial(E, 4) == f4);
  }
}

TEST_CASE("the recurrence agrees with the group law") {
  // x(nP) = x - psi_{n-1} psi_{n+1} / psi_n^2, with psi_n = f_n (n odd) or
  // 2y f_n (n even) and y^2 = F(x).
  EllipticCurve E(0, -2);
  Point<Rational> P(3, 5);
  DivisionTower t(E);
  const Rational x = P.x(), F = E.rhs().eval(x);
  for (int n = 2; n <= 9; ++n) {
    Rational num = t.f(n - 1).eval(x) * t.f(n + 1).eval(x), den = t.f(n).eval(x) * t.f(n).eval(x);
    Rational expected = n % 2 ? Rational(x - 4 * F * num / den) : Rational(x - num / (4 * F * den));
    CHECK(point_mul(E, n, P).x() == expected);
  }
}

TEST_CASE("primitive division polynomials multiply out to classical ones") {
  for (auto [a, b] : {std::pair<long, long>{0, 16}, {-15, 22}, {1, 0}, {-2835, -71442}, {3, -7}}) {
    EllipticCurve E(a, b);
    DivisionTower t(E);
    for (int n : {4, 6, 9}) {
      Poly prod = Poly::constant(1);
      for (int d = 2; d <= n; ++d) {
        if (n % d == 0) prod *= t.primitive(d);
      }
      CHECK(prod.monic() == t.classical(n).monic());
    }
  }
}

TEST_CASE("primitive degrees") {
  CHECK(primitive_division_degree(2) == 3);
  for (int n = 3; n <= 12; ++n) CHECK(primitive_division_degree(n) == expected_degree(n));
  EllipticCurve E(-11, 14);
  for (int n = 2; n <= 9; ++n) CHECK(primitive_division_polynomial(E, n).degree() == primitive_division_degree(n));
}

TEST_CASE("torsion group names") {
  CHECK(TorsionGroup::parse("C2xC2") == TorsionGroup{2, 2});
  CHECK(TorsionGroup::parse("C14").name() == "C14");
  CHECK(TorsionGroup{}.name() == "C1");
  CHECK_THROWS(TorsionGroup::parse("C2xC3"));
  CHECK_THROWS(TorsionGroup::parse("Z6"));
  CHECK(elements_of_order({2, 2}, 2) == 3);
  CHECK(elements_of_order(TorsionGroup::cyclic(9), 3) == 2);
  CHECK(elements_of_order(TorsionGroup::cyclic(9), 9) == 6);
  CHECK(elements_of_order(TorsionGroup::cyclic(14), 7) == 6);
  CHECK(TorsionGroup::cyclic(4) < TorsionGroup{2, 2});
}

TEST_CASE("torsion over Q agrees with Nagell-Lutz") {
  std::vector<std::pair<long, long>> curves;
  for (long k = -60; k <= 60; ++k) {
    if (k == 0) continue;
    curves.push_back({0, k});
    curves.push_back({k, 0});
  }
  const std::vector<std::pair<long, long>> base{{-15, 22}, {-480, 4048}, {-11, 14}, {-2835, -71442},
                                                {-595, 5586}, {-4320, 96768}, {-9504, 365904}, {-608, 5776}};
  for (auto [a, b] : base) {
    for (long d : {1L, -1L, 2L, -2L, 3L, -3L}) curves.push_back({a * d * d, b * d * d * d});
  }
  for (auto [a, b] : curves) {
    EllipticCurve E(a, b);
    auto t = torsion_over_base(E);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(t.group.order() == oracle::torsion_order_nagell_lutz(a, b));
    if (t.group.order() > 1) {
      REQUIRE_FALSE(t.generators.empty());
      CHECK(point_order(E, t.generators[0]) == t.group.n2);
    }
    if (t.group.n1 == 2) {
      REQUIRE(t.generators.size() == 2);
      CHECK(point_order(E, t.generators[1]) == 2);
      CHECK_FALSE(t.generators[1] == point_mul(E, t.group.n2 / 2, t.generators[0]));
    }
  }
  CHECK(torsion_over_base(EllipticCurve(0, 1)).group.name() == "C6");
  CHECK(torsion_over_base(EllipticCurve(-1, 0)).group.name() == "C2xC2");
  CHECK(torsion_over_base(EllipticCurve(4, 0)).group.name() == "C4");
}

TEST_CASE("a point of order 9 over a cubic field") {
  EllipticCurve E(0, 16);
  DivisionTower t(E);
  bool found = false;
  for (const Poly& g : irreducible_factors_of_degree(t.factorization(9), 3)) {
    CubicField K(g);
    auto tk = torsion_over_base(E, K, t);
    if (tk.group != TorsionGroup::cyclic(9)) continue;
    found = true;
    const auto& P = tk.generators.at(0);
    CHECK(point_order(E, P) == 9);
    CHECK(t.primitive(9).eval(0) != 0);
    CHECK(evaluate(t.primitive(9), P.x()).is_zero());
    auto Q = point_mul(E, 3, P);
    CHECK(point_order(E, Q) == 3);
    CHECK(evaluate(t.primitive(3), Q.x()).is_zero());
  }
  CHECK(found);
}

TEST_CASE("division polynomials of the j = 0 and j = 1728 families") {
  for (long k : {-7L, -2L, 1L, 5L, 16L}) {
    EllipticCurve E3(0, k);
    CHECK(division_polynomial(E3, 3) == Poly{0, 12 * k, 0, 0, 3});
    CHECK(primitive_division_polynomial(E3, 4) == Poly{-8 * k * k, 0, 0, 20 * k, 0, 0, 1} * Rational(2));
    EllipticCurve E4(k, 0);
    // k^2 f3(x^2 / k) with f3 = 3x^2 + 6x - 1.
    CHECK(division_polynomial(E4, 3) == Poly{-k * k, 0, 6 * k, 0, 3});
  }
}
