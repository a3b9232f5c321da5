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

#include "cmtorsion/cmclass.hpp"

namespace cmtorsion {

namespace {

const TorsionGroup C1 = TorsionGroup::cyclic(1);
const TorsionGroup C2 = TorsionGroup::cyclic(2);
const TorsionGroup C3 = TorsionGroup::cyclic(3);
const TorsionGroup C4 = TorsionGroup::cyclic(4);
const TorsionGroup C6 = TorsionGroup::cyclic(6);
const TorsionGroup C2xC2{2, 2};

Rational j_from_factors(int sign, const std::vector<std::pair<int, int>>& factors) {
  BigInt v = sign;
  for (const auto& [p, e] : factors) v *= pow(BigInt(p), static_cast<unsigned>(e));
  return Rational(v);
}

std::vector<CMClass> build_table() {
  std::vector<CMClass> t = {
      {3, 3, 1, 0, 1, 0, 0, {}, {{"1", C6}, {"-432, r^2 != 1", C3}, {"r^3 != 1", C2}, {"!= r^2, r^3, -432", C1}}},
      {12, 3, 2, -15, 22, 0, 1, {{2, 4}, {3, 3}, {5, 3}}, {{"1", C6}, {"!= 1", C2}}},
      {27, 3, 3, -480, 4048, 0, -1, {{2, 15}, {3, 1}, {5, 3}}, {{"1", C3}, {"!= 1", C1}}},
      {4, 4, 1, 1, 0, 0, 1, {{2, 6}, {3, 3}}, {{"4", C4}, {"-r^2", C2xC2}, {"!= 4, -r^2", C2}}},
      {16, 4, 2, -11, 14, 0, 1, {{2, 3}, {3, 3}, {11, 3}}, {{"1, 2", C4}, {"!= 1, 2", C2}}},
      {7, 7, 1, -2835, -71442, 0, -1, {{3, 3}, {5, 3}}, {{"any", C2}}},
      {28, 7, 2, -595, 5586, 0, 1, {{3, 3}, {5, 3}, {17, 3}}, {{"any", C2}}},
      {8, 8, 1, -4320, 96768, 0, 1, {{2, 6}, {5, 3}}, {{"any", C2}}},
      {11, 11, 1, -9504, 365904, 0, -1, {{2, 15}}, {{"any", C1}}},
      {19, 19, 1, -608, 5776, 0, -1, {{2, 15}, {3, 3}}, {{"any", C1}}},
      {43, 43, 1, -13760, 621264, 0, -1, {{2, 18}, {3, 3}, {5, 3}}, {{"any", C1}}},
      {67, 67, 1, -117920, 15585808, 0, -1, {{2, 15}, {3, 3}, {5, 3}, {11, 3}}, {{"any", C1}}},
      {163, 163, 1, -34790720, BigInt("78984748304"), 0, -1, {{2, 18}, {3, 3}, {5, 3}, {23, 3}, {29, 3}},
       {{"any", C1}}},
  };
  for (auto& row : t) {
    row.j = j_from_factors(row.j_sign, row.j_factors);
    EllipticCurve E{Rational(row.A), Rational(row.B)};
    if (E.j_invariant() != row.j) {
      throw std::logic_error("CM table: j-invariant of class " + std::to_string(row.cm) + " does not match [A, B]");
    }
    if (row.cm != row.D * row.conductor * row.conductor) {
      throw std::logic_error("CM table: cm != D f^2 for class " + std::to_string(row.cm));
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i].j == t[j].j) throw std::logic_error("CM table: repeated j-invariant");
    }
  }
  return t;
}

unsigned power_class(int cm) { return cm == 3 ? 6 : cm == 4 ? 4 : 2; }

bool is_square_q(const Rational& q) { return is_perfect_power(q, 2).has_value(); }
bool is_cube_q(const Rational& q) { return is_perfect_power(q, 3).has_value(); }

}  // namespace

const std::vector<CMClass>& cm_classes() {
  static const std::vector<CMClass> table = build_table();
  return table;
}

const CMClass& cm_class(int cm) {
  for (const auto& c : cm_classes()) {
    if (c.cm == cm) return c;
  }
  throw std::invalid_argument("unknown CM class " + std::to_string(cm));
}

BigInt canonical_k(int cm, const Rational& k) {
  cm_class(cm);
  return power_free_part(k, power_class(cm));
}

bool valid_invariants(const CMInvariants& inv) {
  bool known = false;
  for (const auto& c : cm_classes()) known = known || c.cm == inv.cm;
  if (!known || inv.k == 0) return false;
  return canonical_k(inv.cm, Rational(inv.k)) == inv.k;
}

EllipticCurve normal_form(const CMInvariants& inv) {
  if (!valid_invariants(inv)) {
    throw std::invalid_argument("invalid CM invariants (" + std::to_string(inv.cm) + ", " + to_string(inv.k) + ")");
  }
  const CMClass& c = cm_class(inv.cm);
  Rational k(inv.k);
  if (inv.cm == 3) return EllipticCurve(0, k);
  if (inv.cm == 4) return EllipticCurve(k, 0);
  return EllipticCurve(k * k * c.A, k * k * k * c.B);
}

CMInvariants detect_cm(const EllipticCurve& E) {
  const Rational j = E.j_invariant();
  const CMClass* match = nullptr;
  for (const auto& c : cm_classes()) {
    if (c.j == j) match = &c;
  }
  if (!match) throw NotCM("not a CM curve: j = " + to_string(j));
  CMInvariants inv{match->cm, 0};
  const Rational& a = E.a();
  const Rational& b = E.b();
  bool ok;
  if (inv.cm == 3) {
    inv.k = power_free_part(b, 6);
    ok = is_perfect_power(b / Rational(inv.k), 6).has_value();
  } else if (inv.cm == 4) {
    inv.k = power_free_part(a, 4);
    ok = is_perfect_power(a / Rational(inv.k), 4).has_value();
  } else {
    const Rational A(match->A), B(match->B);
    inv.k = squarefree_part(b * A / (a * B));
    const Rational k(inv.k);
    // (x, y) -> (u^2 x, u^3 y) with u^2 = t maps E_cm^k onto E.
    const Rational t = b * A / (a * k * B);
    ok = is_square_q(t) && a == k * k * A * t * t && b == k * k * k * B * t * t * t;
  }
  if (!ok) {
    throw std::logic_error("detect_cm: recovered twist k = " + to_string(inv.k) + " is not isomorphic to " +
                           to_string(E));
  }
  return inv;
}

int torsion_condition_index(const CMInvariants& inv) {
  if (!valid_invariants(inv)) {
    throw std::invalid_argument("invalid CM invariants (" + std::to_string(inv.cm) + ", " + to_string(inv.k) + ")");
  }
  const Rational k(inv.k);
  switch (inv.cm) {
    case 3:
      if (k == 1) return 0;
      if (k == -432 || is_square_q(k)) return 1;
      if (is_cube_q(k)) return 2;
      return 3;
    case 12:
    case 27:
      return k == 1 ? 0 : 1;
    case 4:
      if (k == 4) return 0;
      if (is_square_q(-k)) return 1;
      return 2;
    case 16:
      return (k == 1 || k == 2) ? 0 : 1;
    default:
      return 0;
  }
}

TorsionGroup torsion_over_Q_table(const CMInvariants& inv) {
  return cm_class(inv.cm).torsion_conditions.at(static_cast<std::size_t>(torsion_condition_index(inv))).group;
}

std::vector<BigInt> canonical_k_values(int cm, long bound) {
  std::vector<BigInt> out;
  for (long m = 1; m <= bound; ++m) {
    for (long k : {m, -m}) {
      if (canonical_k(cm, Rational(k)) == k) out.emplace_back(k);
    }
  }
  return out;
}

}  // namespace cmtorsion
