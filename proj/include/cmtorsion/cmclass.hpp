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
 * @file cmclass.hpp
 * @brief The thirteen Qbar-isomorphism classes of CM elliptic curves over Q.
 *
 * Each class has a base curve E_cm: y^2 = x^3 + A x + B, and every curve over
 * Q with that j-invariant is Q-isomorphic to exactly one twist
 *   E_cm^k: y^2 = x^3 + k^2 A x + k^3 B      (cm not 3 or 4, k squarefree)
 *   E_3^k:  y^2 = x^3 + k                    (k sixth-power-free)
 *   E_4^k:  y^2 = x^3 + k x                  (k fourth-power-free)
 * The pair (cm, k) is called the CM invariants of the curve.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmtorsion/ellcurve.hpp"

namespace cmtorsion {

/// A condition on k and the torsion group over Q it selects; conditions of a
/// class are tried in order and the first match wins.
struct TorsionCondition {
  std::string label;
  TorsionGroup group;
};

struct CMClass {
  int cm;                 // absolute discriminant of the CM order
  int D;                  // the field discriminant is -D
  int conductor;          // cm == D * conductor^2
  BigInt A, B;            // base curve y^2 = x^3 + A x + B
  Rational j;
  int j_sign;             // j = j_sign * prod p^e, j_sign == 0 for j = 0
  std::vector<std::pair<int, int>> j_factors;
  std::vector<TorsionCondition> torsion_conditions;
};

/// All thirteen classes in the customary order 3, 12, 27, 4, 16, 7, 28, 8,
/// 11, 19, 43, 67, 163. The first call checks every row: j recomputed from
/// (A, B) must equal the stored factorization, and cm == D f^2.
const std::vector<CMClass>& cm_classes();

/// Throws std::invalid_argument for an unknown cm.
const CMClass& cm_class(int cm);

struct CMInvariants {
  int cm = 0;
  BigInt k;

  friend bool operator==(const CMInvariants& a, const CMInvariants& b) { return a.cm == b.cm && a.k == b.k; }
  friend bool operator<(const CMInvariants& a, const CMInvariants& b) {
    if (a.cm != b.cm) return a.cm < b.cm;
    return a.k < b.k;
  }
};

class NotCM : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws NotCM when j(E) is none of the thirteen values, and
/// std::logic_error if the recovered twist fails the isomorphism check.
CMInvariants detect_cm(const EllipticCurve& E);

/// The power-free class representative of k for this cm: sixth-power-free
/// for cm 3, fourth-power-free for cm 4, squarefree otherwise.
BigInt canonical_k(int cm, const Rational& k);

/// True when cm is known and k is nonzero and already canonical.
bool valid_invariants(const CMInvariants& inv);

/// Throws std::invalid_argument for invalid invariants.
EllipticCurve normal_form(const CMInvariants& inv);

/// Index into cm_class(cm).torsion_conditions of the first matching condition.
int torsion_condition_index(const CMInvariants& inv);

TorsionGroup torsion_over_Q_table(const CMInvariants& inv);

/// Canonical k for the class in the order 1, -1, 2, -2, ... up to |k| <= bound.
std::vector<BigInt> canonical_k_values(int cm, long bound);

}  // namespace cmtorsion
