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

// Dense integer polynomials (lowest degree first) and arithmetic modulo an
// integer. Internal to the library.

#pragma once

#include <vector>

#include "cmtorsion/exactnum.hpp"

namespace cmtorsion::detail {

using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& a);
inline int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }
BigInt zcontent(const ZPoly& a);
/// Divides out the content and makes the leading coefficient positive.
ZPoly zprimitive(ZPoly a);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zderivative(const ZPoly& a);
/// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly zprem(const ZPoly& a, const ZPoly& b);
/// Exact division over Z. Returns false (leaving q unspecified) when b does
/// not divide a in Z[x].
bool zexact_div(const ZPoly& a, const ZPoly& b, ZPoly* q);
/// Primitive gcd with positive leading coefficient.
ZPoly zgcd(const ZPoly& a, const ZPoly& b);

/// Reduces every coefficient into [0, m).
void zreduce(ZPoly& a, const BigInt& m);
/// Reduces every coefficient into (-m/2, m/2].
void zsymmetric(ZPoly& a, const BigInt& m);
ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const BigInt& m);
ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const BigInt& m);
ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const BigInt& m);
/// Division by a monic polynomial modulo m.
void zdivrem_monic_mod(const ZPoly& a, const ZPoly& b, const BigInt& m, ZPoly* q, ZPoly* r);

}  // namespace cmtorsion::detail
