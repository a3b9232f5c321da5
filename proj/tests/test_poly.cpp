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

#include "cmtorsion/poly.hpp"
#include "oracles.hpp"

using namespace cmtorsion;

namespace {

Poly random_poly(std::mt19937_64& rng, int deg, long bound) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) {
    c.push_back(make_rational(static_cast<long>(rng() % (2 * bound + 1)) - bound, 1 + rng() % 3));
  }
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

}  // namespace

TEST_CASE("arithmetic and printing") {
  Poly f{-1, -3, 0, 1};
  CHECK(to_string(f) == "x^3 - 3*x - 1");
  CHECK(to_string(Poly{Rational(1), 0, Rational(1, 2)}) == "1/2*x^2 + 1");
  CHECK(to_string(Poly()) == "0");
  CHECK(f.degree() == 3);
  CHECK(Poly().degree() == -1);
  CHECK((f - f).is_zero());
  CHECK(f.eval(2) == 1);
  CHECK(f.derivative() == Poly{-3, 0, 3});
  CHECK(pow(Poly{1, 1}, 3) == Poly{1, 3, 3, 1});
  CHECK(f.scale_arg(2) == Poly{-1, -6, 0, 8});
  CHECK(from_dense(to_dense(f)) == f);
  CHECK(to_dense(Poly{Rational(1, 2), 3}) == std::vector<std::string>{"1/2", "3/1"});
}

TEST_CASE("division with remainder") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, 1 + static_cast<int>(rng() % 7), 20);
    Poly b = random_poly(rng, static_cast<int>(rng() % 4), 20);
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_AS(exact_div(Poly{1, 0, 1}, Poly{1, 1}), InexactDivision);
  CHECK_THROWS_AS(divrem(Poly{1}, Poly()), std::domain_error);
}

TEST_CASE("gcd divides both inputs and absorbs common factors") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    Poly c = random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
    Poly a = random_poly(rng, static_cast<int>(rng() % 4), 9) * c;
    Poly b = random_poly(rng, static_cast<int>(rng() % 4), 9) * c;
    Poly g = gcd(a, b);
    CHECK(g.lead() == 1);
    CHECK(mod(a, g).is_zero());
    CHECK(mod(b, g).is_zero());
    CHECK(mod(g, c.monic()).is_zero());
  }
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, 2, 1}) == Poly{1, 1});
  CHECK_THROWS(gcd(Poly(), Poly()));
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 80; ++i) {
    Poly a = random_poly(rng, 1 + static_cast<int>(rng() % 5), 12);
    Poly b = random_poly(rng, 1 + static_cast<int>(rng() % 5), 12);
    CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
  }
}

TEST_CASE("discriminants") {
  CHECK(discriminant(Poly{-1, -2, 1, 1}) == 49);     // x^3 + x^2 - 2x - 1
  CHECK(discriminant(Poly{-2, 0, 0, 1}) == -108);    // x^3 - 2
  CHECK(discriminant(Poly{-1, -3, 0, 1}) == 81);     // x^3 - 3x - 1
  CHECK(discriminant(Poly{1, 1, 1}) == -3);
  // y^2 = x^3 + a x + b: disc(x^3 + a x + b) = -4a^3 - 27b^2.
  CHECK(discriminant(Poly{22, -15, 0, 1}) == -4 * (-15) * (-15) * (-15) - 27 * 22 * 22);
  CHECK_THROWS(discriminant(Poly{1, 1}));
}

TEST_CASE("rational roots with multiplicity") {
  // 2 (x - 1/2)^2 (x + 3) (x^2 + 1)
  Poly f = Poly{Rational(-1, 2), 1} * Poly{Rational(-1, 2), 1} * Poly{3, 1} * Poly{1, 0, 1} * Rational(2);
  auto r = rational_roots(f);
  CHECK(r == std::vector<Rational>{-3, Rational(1, 2), Rational(1, 2)});
  CHECK(rational_roots(Poly{-2, 0, 0, 1}).empty());
  // x^3 - 8 = 0 at x = 2 only; 3x(x^3 + 4k) for k = -2 has roots {0, 2}.
  CHECK(rational_roots(Poly{0, -24, 0, 0, 3}) == std::vector<Rational>{0, 2});
}

TEST_CASE("integer primitive part") {
  auto ip = integer_primitive(Poly{Rational(3, 2), Rational(-9, 4), Rational(3, 8)});
  CHECK(ip.content == Rational(3, 8));
  CHECK(ip.coeffs == std::vector<BigInt>{4, -6, 1});
  ip = integer_primitive(Poly{2, -4});
  CHECK(ip.content == -2);
  CHECK(ip.coeffs == std::vector<BigInt>{-1, 2});
}
