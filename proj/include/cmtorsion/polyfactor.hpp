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

/**
 * @file polyfactor.hpp
 * @brief Complete factorization of univariate polynomials over Q.
 *
 * Zassenhaus' method: squarefree decomposition, factorization modulo a
 * well-chosen small prime (distinct-degree + Cantor-Zassenhaus splitting),
 * Hensel lifting along a binary factor tree past the Landau-Mignotte bound,
 * then recombination by subset search. Subsets are pruned with the factor
 * degrees seen modulo several primes and with a constant-term test.
 *
 * Every factorization is reassembled and compared with its input before it
 * is returned.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmtorsion/poly.hpp"

namespace cmtorsion {

struct FactorList {
  /// Equals the leading coefficient of the input, since every factor is monic.
  Rational content;
  /// Monic irreducible factors with multiplicities, sorted by degree and then
  /// by coefficients (lowest degree first).
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly expand() const;
};

class UnsuitablePrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

FactorList factor_poly(const Poly& f);

/// Monic irreducible factors of exactly degree d.
std::vector<Poly> irreducible_factors_of_degree(const Poly& f, int d);
std::vector<Poly> irreducible_factors_of_degree(const FactorList& fl, int d);

/// Degrees of the irreducible factors of f over F_p, ascending. f must have
/// integer coefficients, p an odd prime not dividing lc(f), and f squarefree
/// modulo p; otherwise UnsuitablePrime is thrown.
std::vector<int> factor_degrees_mod_p(const Poly& f, std::uint64_t p);

/// Checks that the degrees of f modulo `primes` suitable primes agree with the
/// union of the degrees of the factors of fl modulo the same primes. Works on
/// the squarefree product of the factors. Returns false on disagreement.
bool degrees_consistent_mod_p(const FactorList& fl, int primes = 3);

/// Seed of the random splitting in Cantor-Zassenhaus; CMTORSION_SEED in the
/// environment overrides the built-in default. Only speed depends on it.
std::uint64_t factorization_seed();

/// Calls `fn(input, result)` for every factor_poly call made on this thread
/// while the object is alive. Observers nest.
class ScopedFactorObserver {
 public:
  using Callback = std::function<void(const Poly&, const FactorList&)>;
  explicit ScopedFactorObserver(Callback fn);
  ~ScopedFactorObserver();
  ScopedFactorObserver(const ScopedFactorObserver&) = delete;
  ScopedFactorObserver& operator=(const ScopedFactorObserver&) = delete;

 private:
  Callback fn_;
  ScopedFactorObserver* prev_;
  friend void notify_factor_observers(const Poly&, const FactorList&);
};

}  // namespace cmtorsion
