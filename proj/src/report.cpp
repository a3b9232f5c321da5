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

#include "cmtorsion/report.hpp"

#include <sstream>

namespace cmtorsion {

using nlohmann::json;

PointDoc point_doc(const Point<Rational>& P) {
  if (P.is_infinity()) return {};
  return {{to_fraction_string(P.x())}, {to_fraction_string(P.y())}};
}

PointDoc point_doc(const Point<FieldElem>& P) {
  if (P.is_infinity()) return {};
  auto x = to_coord_strings(P.x());
  auto y = to_coord_strings(P.y());
  return {{x.begin(), x.end()}, {y.begin(), y.end()}};
}

FieldDoc field_doc(const Poly& g) { return {to_string(g), to_dense(g)}; }

GrowthDoc growth_doc(const GrowthRecord& r) {
  GrowthDoc d{r.group.name(), field_doc(r.field.defining_poly()), {}};
  for (const auto& P : r.generators) d.generators.push_back(point_doc(P));
  return d;
}

ReportDocument make_report(const GrowthReport& r, const std::optional<CrossCheck>& cc) {
  ReportDocument doc;
  doc.a = to_fraction_string(r.curve.a());
  doc.b = to_fraction_string(r.curve.b());
  doc.equation = to_string(r.curve);
  doc.cm = r.inv.cm;
  doc.k = to_string(r.inv.k);
  doc.torsion_Q = r.torsion_Q.name();
  for (const auto& P : r.torsion_Q_generators) doc.torsion_Q_generators.push_back(point_doc(P));
  for (const auto& g : r.growths) doc.growths.push_back(growth_doc(g));
  doc.h_count = r.h_count();
  if (cc) {
    CrossCheckDoc c;
    c.verdict = cc->match ? "MATCH" : "MISMATCH";
    c.differences = cc->differences;
    c.expected_torsion_Q = cc->table.torsion_Q.name();
    for (const auto& g : cc->table.growths) c.expected.push_back(growth_doc(g));
    c.computed_torsion_Q = cc->engine.torsion_Q.name();
    for (const auto& g : cc->engine.growths) c.computed.push_back(growth_doc(g));
    doc.cross_check = std::move(c);
  }
  return doc;
}

namespace {

json point_json(const PointDoc& p) {
  if (p.x.empty()) return json{{"infinity", true}};
  return json{{"x", p.x}, {"y", p.y}};
}

PointDoc point_from(const json& j) {
  if (j.contains("infinity")) return {};
  return {j.at("x").get<std::vector<std::string>>(), j.at("y").get<std::vector<std::string>>()};
}

GrowthDoc growth_from(const json& j) {
  GrowthDoc d;
  d.group = j.at("group").get<std::string>();
  d.field.sparse = j.at("field").at("sparse").get<std::string>();
  d.field.dense = j.at("field").at("dense").get<std::vector<std::string>>();
  for (const auto& p : j.at("generators")) d.generators.push_back(point_from(p));
  return d;
}

std::string point_text(const PointDoc& p) {
  if (p.x.empty()) return "O";
  auto coord = [](const std::vector<std::string>& c) {
    if (c.size() == 1) return to_string(parse_rational(c[0]));
    Poly v({parse_rational(c[0]), parse_rational(c[1]), parse_rational(c[2])});
    return to_string(v, "x");
  };
  return "(" + coord(p.x) + ", " + coord(p.y) + ")";
}

void growth_lines(std::ostringstream& out, const std::vector<GrowthDoc>& gs, const std::string& indent) {
  for (const auto& g : gs) {
    out << indent << g.group << " over Q[x]/(" << g.field.sparse << ")";
    if (!g.generators.empty()) {
      out << "; generators";
      for (const auto& p : g.generators) out << " " << point_text(p);
    }
    out << "\n";
  }
}

}  // namespace

json to_json(const GrowthDoc& g) {
  json gens = json::array();
  for (const auto& p : g.generators) gens.push_back(point_json(p));
  return json{{"group", g.group}, {"field", {{"sparse", g.field.sparse}, {"dense", g.field.dense}}}, {"generators", gens}};
}

json to_json(const CrossCheckDoc& c) {
  json expected = json::array(), computed = json::array();
  for (const auto& g : c.expected) expected.push_back(to_json(g));
  for (const auto& g : c.computed) computed.push_back(to_json(g));
  return json{{"verdict", c.verdict},
              {"differences", c.differences},
              {"expected", {{"torsion_Q", c.expected_torsion_Q}, {"growths", expected}}},
              {"computed", {{"torsion_Q", c.computed_torsion_Q}, {"growths", computed}}}};
}

json to_json(const ReportDocument& d) {
  json input = json::object();
  if (d.input_a) input["curve"] = {*d.input_a, *d.input_b};
  if (d.input_cm) input["cm"] = *d.input_cm;
  if (d.input_k) input["k"] = *d.input_k;
  json tq_gens = json::array();
  for (const auto& p : d.torsion_Q_generators) tq_gens.push_back(point_json(p));
  json growths = json::array();
  for (const auto& g : d.growths) growths.push_back(to_json(g));
  json out{{"schema_version", d.schema_version},
           {"input", input},
           {"curve", {{"a", d.a}, {"b", d.b}, {"equation", d.equation}}},
           {"invariants", {{"cm", d.cm}, {"k", d.k}}},
           {"torsion_Q", {{"group", d.torsion_Q}, {"generators", tq_gens}}},
           {"growths", growths},
           {"h_count", d.h_count}};
  if (d.cross_check) out["cross_check"] = to_json(*d.cross_check);
  return out;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument d;
  d.schema_version = j.at("schema_version").get<std::string>();
  if (d.schema_version != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version " + d.schema_version);
  }
  const json& in = j.at("input");
  if (in.contains("curve")) {
    d.input_a = in.at("curve").at(0).get<std::string>();
    d.input_b = in.at("curve").at(1).get<std::string>();
  }
  if (in.contains("cm")) d.input_cm = in.at("cm").get<int>();
  if (in.contains("k")) d.input_k = in.at("k").get<std::string>();
  d.a = j.at("curve").at("a").get<std::string>();
  d.b = j.at("curve").at("b").get<std::string>();
  d.equation = j.at("curve").at("equation").get<std::string>();
  d.cm = j.at("invariants").at("cm").get<int>();
  d.k = j.at("invariants").at("k").get<std::string>();
  d.torsion_Q = j.at("torsion_Q").at("group").get<std::string>();
  for (const auto& p : j.at("torsion_Q").at("generators")) d.torsion_Q_generators.push_back(point_from(p));
  for (const auto& g : j.at("growths")) d.growths.push_back(growth_from(g));
  d.h_count = j.at("h_count").get<int>();
  if (j.contains("cross_check")) {
    const json& c = j.at("cross_check");
    CrossCheckDoc cc;
    cc.verdict = c.at("verdict").get<std::string>();
    cc.differences = c.at("differences").get<std::vector<std::string>>();
    cc.expected_torsion_Q = c.at("expected").at("torsion_Q").get<std::string>();
    for (const auto& g : c.at("expected").at("growths")) cc.expected.push_back(growth_from(g));
    cc.computed_torsion_Q = c.at("computed").at("torsion_Q").get<std::string>();
    for (const auto& g : c.at("computed").at("growths")) cc.computed.push_back(growth_from(g));
    d.cross_check = std::move(cc);
  }
  return d;
}

std::string render_text(const ReportDocument& d) {
  std::ostringstream out;
  out << "curve: " << d.equation << "\n";
  out << "CM invariants: cm = " << d.cm << ", k = " << d.k << "\n";
  out << "torsion over Q: " << d.torsion_Q;
  if (!d.torsion_Q_generators.empty()) {
    out << "; generators";
    for (const auto& p : d.torsion_Q_generators) out << " " << point_text(p);
  }
  out << "\n";
  out << "growth over cubic fields (h = " << d.h_count << "):";
  out << (d.growths.empty() ? " none\n" : "\n");
  growth_lines(out, d.growths, "  ");
  if (d.cross_check) {
    const auto& c = *d.cross_check;
    out << "cross-check: " << c.verdict << "\n";
    for (const auto& diff : c.differences) out << "  " << diff << "\n";
    out << "  table: " << c.expected_torsion_Q << " over Q\n";
    growth_lines(out, c.expected, "    ");
  }
  return out.str();
}

}  // namespace cmtorsion
