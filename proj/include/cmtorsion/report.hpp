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
 * @file report.hpp
 * @brief Serializable view of a growth report, shared by the JSON and text
 * renderings of the command line tool. Every number is an exact "num/den"
 * string.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmtorsion/cubicgrowth.hpp"

namespace cmtorsion {

inline constexpr const char* kReportSchemaVersion = "1.0";

/// A point with coordinates over Q (one entry each) or over a cubic field
/// (three coordinates each).
struct PointDoc {
  std::vector<std::string> x, y;
  friend bool operator==(const PointDoc&, const PointDoc&) = default;
};

struct FieldDoc {
  std::string sparse;
  std::vector<std::string> dense;
  friend bool operator==(const FieldDoc&, const FieldDoc&) = default;
};

struct GrowthDoc {
  std::string group;
  FieldDoc field;
  std::vector<PointDoc> generators;
  friend bool operator==(const GrowthDoc&, const GrowthDoc&) = default;
};

struct CrossCheckDoc {
  std::string verdict;  // "MATCH" or "MISMATCH"
  std::vector<std::string> differences;
  std::string expected_torsion_Q;
  std::vector<GrowthDoc> expected;
  std::string computed_torsion_Q;
  std::vector<GrowthDoc> computed;
  friend bool operator==(const CrossCheckDoc&, const CrossCheckDoc&) = default;
};

struct ReportDocument {
  std::string schema_version = kReportSchemaVersion;
  /// Echo of the request: either a and b, or cm and k, as given.
  std::optional<std::string> input_a, input_b;
  std::optional<int> input_cm;
  std::optional<std::string> input_k;

  std::string a, b, equation;
  int cm = 0;
  std::string k;
  std::string torsion_Q;
  std::vector<PointDoc> torsion_Q_generators;
  std::vector<GrowthDoc> growths;
  int h_count = 0;
  std::optional<CrossCheckDoc> cross_check;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

PointDoc point_doc(const Point<Rational>& P);
PointDoc point_doc(const Point<FieldElem>& P);
FieldDoc field_doc(const Poly& g);
GrowthDoc growth_doc(const GrowthRecord& r);

/// Fills everything except the input echo.
ReportDocument make_report(const GrowthReport& r, const std::optional<CrossCheck>& cc = std::nullopt);

nlohmann::json to_json(const ReportDocument& doc);
/// Throws nlohmann::json::exception or std::invalid_argument on bad input.
ReportDocument report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CrossCheckDoc& doc);
nlohmann::json to_json(const GrowthDoc& doc);

/// Plain-text rendering with the same content as the JSON form.
std::string render_text(const ReportDocument& doc);

}  // namespace cmtorsion
