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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmtorsion {

/// Arbitrary precision integer. GMP keeps it canonical (zero is non-negative).
using BigInt = mpz_class;

/// Arbitrary precision rational, always stored reduced with a positive
/// denominator. Every arithmetic operator on mpq_class re-canonicalizes.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "n" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
/// Always "n/d", also for integers ("5/1"). Used by the dense JSON forms.
std::string to_fraction_string(const Rational& q);
std::string to_string(const BigInt& n);

int sign(const BigInt& n);
int sign(const Rational& q);

struct Factorization {
  int unit = 1;  // +1 or -1
  std::vector<std::pair<BigInt, unsigned>> primes;  // strictly increasing

  BigInt product() const;
};

/// Complete factorization of a nonzero integer. Trial division up to a fixed
/// bound, then Pollard rho (Brent) on the cofactor, every reported prime
/// confirmed by Miller-Rabin.
Factorization factor_integer(const BigInt& n);

/// Miller-Rabin with the first 13 prime bases; deterministic below 3.3e24.
bool is_probable_prime(const BigInt& n);

/// The integer m with m = q modulo n-th powers, every prime exponent of m in
/// [0, n-1], and sign(m) == sign(q).
BigInt power_free_part(const Rational& q, unsigned n);

/// power_free_part(q, 2).
BigInt squarefree_part(const Rational& q);

/// r with r^n == q when such a rational exists; the positive root for even n.
std::optional<Rational> is_perfect_power(const Rational& q, unsigned n);

/// q^e for a non-negative exponent.
Rational pow(const Rational& q, unsigned e);
BigInt pow(const BigInt& q, unsigned e);

}  // namespace cmtorsion
