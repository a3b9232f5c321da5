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

#include "cmtorsion/exactnum.hpp"
#include "oracles.hpp"

using namespace cmtorsion;

TEST_CASE("rationals are parsed and printed canonically") {
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+7") == 7);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_fraction_string(Rational(5)) == "5/1");
  CHECK(to_fraction_string(Rational(-1, 3)) == "-1/3");
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "1/0", "0x10", "1 /2", "2e3"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("factor_integer agrees with trial division") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    long n = static_cast<long>(rng() % 2000000) - 1000000;
    if (n == 0) continue;
    Factorization f = factor_integer(BigInt(n));
    CHECK(f.product() == n);
    auto ref = oracle::factor_naive(n);
    REQUIRE(f.primes.size() == ref.size());
    std::size_t k = 0;
    for (auto [p, e] : ref) {
      CHECK(f.primes[k].first == p);
      CHECK(f.primes[k].second == static_cast<unsigned>(e));
      ++k;
    }
  }
}

TEST_CASE("factor_integer splits large composites") {
  // 2^64 + 1 = 274177 * 67280421310721
  BigInt n = pow(BigInt(2), 64) + 1;
  Factorization f = factor_integer(n);
  REQUIRE(f.primes.size() == 2);
  CHECK(f.primes[0].first == 274177);
  CHECK(f.primes[1].first == BigInt("67280421310721"));
  // Two primes beyond the trial division bound, and a prime power.
  BigInt p("1000000007"), q("998244353");
  f = factor_integer(p * q * q * 12);
  CHECK(f.product() == p * q * q * 12);
  CHECK(f.primes.size() == 4);
  CHECK(f.primes.back().first == p);
  CHECK(f.primes.back().second == 1);
  CHECK(f.primes[2].second == 2);
  CHECK_THROWS_AS(factor_integer(0), std::domain_error);
}

TEST_CASE("Miller-Rabin matches trial division on small integers") {
  for (long n = -5; n < 20000; ++n) CHECK(is_probable_prime(BigInt(n)) == oracle::is_prime_naive(n));
  CHECK_FALSE(is_probable_prime(BigInt("3215031751")));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_probable_prime(BigInt("170141183460469231731687303715884105727")));
}

TEST_CASE("power-free parts") {
  CHECK(power_free_part(Rational(-432), 6) == -432);
  CHECK(power_free_part(Rational(64), 6) == 1);
  CHECK(power_free_part(Rational(-64), 2) == -1);
  CHECK(power_free_part(Rational(48), 4) == 3);
  CHECK(squarefree_part(Rational(-7 * 9)) == -7);
  CHECK(squarefree_part(Rational(3, 8)) == 6);
  CHECK_THROWS(power_free_part(Rational(0), 2));

  // Property: m = q * r^n for some rational r and every exponent of m < n.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational q = make_rational(static_cast<long>(rng() % 20001) - 10000, 1 + rng() % 500);
    if (q == 0) continue;
    for (unsigned n : {2u, 3u, 4u, 6u}) {
      BigInt m = power_free_part(q, n);
      CHECK(sign(m) == sign(q));
      CHECK(is_perfect_power(Rational(m) / q, n).has_value());
      for (auto [p, e] : oracle::factor_naive(m.get_si())) CHECK(e < static_cast<int>(n));
    }
  }
}

TEST_CASE("perfect powers") {
  CHECK(is_perfect_power(Rational(-27, 8), 3) == Rational(-3, 2));
  CHECK(is_perfect_power(Rational(16, 81), 4) == Rational(2, 3));
  CHECK_FALSE(is_perfect_power(Rational(-4), 2).has_value());
  CHECK_FALSE(is_perfect_power(Rational(2), 3).has_value());
  CHECK(is_perfect_power(Rational(0), 5) == 0);
}
