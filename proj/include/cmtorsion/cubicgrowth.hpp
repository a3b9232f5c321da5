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
 * @file cubicgrowth.hpp
 * @brief Torsion growth of CM curves over cubic fields.
 *
 * Two independent routes: growth_engine() searches cubic factors of the
 * primitive division polynomials and computes E(K)_tors over each candidate
 * field; growth_table() reads off the closed-form classification. cross_check()
 * compares them up to field isomorphism.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmtorsion/cmclass.hpp"
#include "cmtorsion/ellcurve.hpp"
#include "cmtorsion/numberfield.hpp"

namespace cmtorsion {

struct GrowthRecord {
  TorsionGroup group;
  CubicField field;
  /// Empty for records produced by growth_table().
  std::vector<Point<FieldElem>> generators;
};

struct GrowthReport {
  EllipticCurve curve;
  CMInvariants inv;
  TorsionGroup torsion_Q;
  std::vector<Point<Rational>> torsion_Q_generators;
  /// Sorted by group, then by defining polynomial.
  std::vector<GrowthRecord> growths;
  /// Paranoid mode only: anything found outside the expected groups.
  std::vector<std::string> violations;

  int h_count() const { return static_cast<int>(growths.size()); }
};

struct EngineOptions {
  /// Also search points of order 5, 6 and 8 and report unexpected groups or
  /// cubic points of order 5 or 8 as violations.
  bool paranoid = false;
};

/// Throws NotCM for curves without CM.
GrowthReport growth_engine(const EllipticCurve& E, const EngineOptions& options = {});

/// Every torsion group a CM curve over Q can have over Q or over a cubic
/// field: C1, C2, C3, C4, C6, C2xC2, C9, C14.
const std::vector<TorsionGroup>& cm_cubic_torsion_groups();

/// One row of the closed-form growth table.
struct GrowthTableRow {
  int cm;
  std::string condition;
  TorsionGroup torsion_Q;
  /// Group names with the printed defining polynomial of each field; for the
  /// parametrised rows the polynomial depends on k and is produced by
  /// growth_table().
  std::vector<std::string> growth_groups;
  std::vector<std::string> field_labels;
};

const std::vector<GrowthTableRow>& growth_table_rows();

/// Index into growth_table_rows() of the first row matching inv.
int growth_row_index(const CMInvariants& inv);

/// Closed-form report for normal_form(inv); records carry no generators.
GrowthReport growth_table(const CMInvariants& inv);

/// Smallest |k| (positive first) whose first matching row is `row`.
BigInt representative_k(int row);

struct CrossCheck {
  CMInvariants inv;
  bool match = false;
  /// Human-readable reasons for a mismatch; empty on MATCH.
  std::vector<std::string> differences;
  GrowthReport engine;
  GrowthReport table;
};

/// Runs growth_engine(normal_form(inv)) and compares it with growth_table(inv).
CrossCheck cross_check(const CMInvariants& inv, const EngineOptions& options = {});
/// Compares an engine report for any curve with the table row of its
/// invariants.
CrossCheck compare_with_table(GrowthReport engine);

/// Size used to pick a readable defining polynomial: max |num * den| over the
/// coefficients.
BigInt poly_height(const Poly& g);

}  // namespace cmtorsion
