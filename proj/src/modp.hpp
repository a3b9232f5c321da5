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

// Polynomials over F_p for small odd primes p (p < 2^31), lowest degree
// first. Internal to the library.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "zpoly.hpp"

namespace cmtorsion::detail {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 mod_inv(u64 a, u64 p);
u64 mod_pow(u64 a, u64 e, u64 p);

void mtrim(ModPoly& a);
inline int mdeg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }
ModPoly mreduce(const ZPoly& a, u64 p);
ModPoly madd(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly msub(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly mmul(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly mscale(const ModPoly& a, u64 c, u64 p);
void mdivrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r);
ModPoly mrem(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly mmonic(const ModPoly& a, u64 p);
ModPoly mgcd(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly mderiv(const ModPoly& a, u64 p);
ModPoly mpowmod(const ModPoly& base, const BigInt& e, const ModPoly& m, u64 p);
/// s*a + t*b = 1 for coprime a, b; deg s < deg b, deg t < deg a.
void mbezout(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t);
bool msquarefree(const ModPoly& f, u64 p);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, ModPoly>> mddf(const ModPoly& f, u64 p);
/// Degrees of the irreducible factors of a monic squarefree f, ascending.
std::vector<int> mfactor_degrees(const ModPoly& f, u64 p);
/// Monic irreducible factors of a monic squarefree f.
std::vector<ModPoly> mfactor(const ModPoly& f, u64 p, std::mt19937_64& rng);

}  // namespace cmtorsion::detail
