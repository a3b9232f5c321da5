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

#include <set>

#include "cmtorsion/cubicgrowth.hpp"

using namespace cmtorsion;

namespace {

std::vector<std::string> group_names(const GrowthReport& r) {
  std::vector<std::string> out;
  for (const auto& g : r.growths) out.push_back(g.group.name());
  return out;
}

bool has_field(const GrowthReport& r, const std::string& group, const Poly& g) {
  for (const auto& rec : r.growths) {
    if (rec.group.name() == group && fields_isomorphic(rec.field, CubicField(g))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("y^2 = x^3 + 16 grows to C6 and C9") {
  GrowthReport r = growth_engine(normal_form({3, 16}));
  CHECK(r.torsion_Q.name() == "C3");
  CHECK(group_names(r) == std::vector<std::string>{"C6", "C9"});
  CHECK(has_field(r, "C6", Poly{-16, 0, 0, 1}));
  CHECK(has_field(r, "C9", Poly{-1, -3, 0, 1}));
  for (const auto& rec : r.growths) {
    for (const auto& P : rec.generators) CHECK(on_curve(r.curve, P));
    CHECK(point_order(r.curve, rec.generators.at(0)) == rec.group.n2);
  }
}

TEST_CASE("curves without growth") {
  for (CMInvariants inv : {CMInvariants{3, 1}, {3, -1}, {4, 4}, {4, -1}, {16, 1}, {8, 5}, {12, 1}}) {
    CAPTURE(inv.cm);
    GrowthReport r = growth_engine(normal_form(inv));
    CHECK(r.growths.empty());
    CHECK(r.h_count() == 0);
  }
}

TEST_CASE("C14 over the cubic field of conductor 7") {
  for (CMInvariants inv : {CMInvariants{7, -7}, {28, 7}}) {
    GrowthReport r = growth_engine(normal_form(inv));
    CHECK(r.torsion_Q.name() == "C2");
    REQUIRE(r.growths.size() == 1);
    CHECK(r.growths[0].group.name() == "C14");
    CHECK(fields_isomorphic(r.growths[0].field, CubicField(Poly{-1, -2, 1, 1})));
  }
  CHECK(growth_engine(normal_form({7, 7})).growths.empty());
}

TEST_CASE("the engine accepts any model of the curve") {
  // y^2 = x^3 + 16 * 2^6 is y^2 = x^3 + 16 scaled by u = 2.
  GrowthReport a = growth_engine(EllipticCurve(0, 16 * 64));
  CHECK(a.inv == CMInvariants{3, 16});
  CHECK(group_names(a) == std::vector<std::string>{"C6", "C9"});
  CHECK_THROWS_AS(growth_engine(EllipticCurve(1, 1)), NotCM);
}

TEST_CASE("closed-form rows") {
  const auto& rows = growth_table_rows();
  CHECK(rows.size() == 30);
  std::set<int> classes;
  for (const auto& r : rows) {
    classes.insert(r.cm);
    CHECK(r.growth_groups.size() == r.field_labels.size());
    CHECK(r.growth_groups.size() <= 2);
  }
  CHECK(classes.size() == 13);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    BigInt k = representative_k(i);
    CHECK(growth_row_index({rows[static_cast<std::size_t>(i)].cm, k}) == i);
  }
  // k = 4 = 2^2 is the first square away from 1 and 16.
  CHECK(growth_table({3, 4}).growths.size() == 1);
  CHECK(growth_table({3, 4}).growths[0].group.name() == "C6");
  CHECK(growth_table({3, -12}).growths.size() == 2);
  CHECK(growth_table({3, -108}).torsion_Q.name() == "C1");
}

TEST_CASE("cross-check on a small corpus") {
  for (int cm : {3, 27, 7, 28, 11}) {
    for (const auto& k : canonical_k_values(cm, 12)) {
      CrossCheck cc = cross_check({cm, k});
      CAPTURE(cm);
      CAPTURE(k);
      CHECK(cc.match);
      CHECK(cc.differences.empty());
    }
  }
}

TEST_CASE("cross-check reports differences") {
  GrowthReport engine = growth_engine(normal_form({3, 16}));
  engine.growths.pop_back();
  CrossCheck cc = compare_with_table(engine);
  CHECK_FALSE(cc.match);
  CHECK_FALSE(cc.differences.empty());
}

TEST_CASE("paranoid mode finds nothing unexpected") {
  EngineOptions opts{true};
  for (CMInvariants inv : {CMInvariants{3, 16}, {3, -3}, {27, 1}, {7, -7}, {4, 4}, {163, 1}}) {
    GrowthReport r = growth_engine(normal_form(inv), opts);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("the realized groups") {
  std::set<std::string> names;
  for (const auto& g : cm_cubic_torsion_groups()) names.insert(g.name());
  CHECK(names == std::set<std::string>{"C1", "C2", "C3", "C4", "C6", "C2xC2", "C9", "C14"});
  CHECK(poly_height(Poly{Rational(-5, 3), 0, 1}) == 15);
}
