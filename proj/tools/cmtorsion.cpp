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

// cmtorsion: classify CM elliptic curves over Q and their torsion growth over
// cubic fields.
//
// Exit codes
//   0  success (verify: every curve matched)
//   1  malformed arguments
//   2  the curve has no complex multiplication
//   3  the curve is singular
//   4  verify found at least one mismatch
//   5  internal error

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmtorsion/cubicgrowth.hpp"
#include "cmtorsion/report.hpp"

using namespace cmtorsion;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kNotCM = 2, kSingular = 3, kMismatch = 4, kInternal = 5 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long parse_long(const std::string& s, const char* what) {
  Rational q;
  try {
    q = parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + ": expected an integer, got '" + s + "'");
  }
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
    throw UsageError(std::string(what) + ": expected an integer, got '" + s + "'");
  }
  return q.get_num().get_si();
}

int parse_cm(const std::string& s) {
  long cm = parse_long(s, "cm");
  for (const auto& c : cm_classes()) {
    if (c.cm == cm) return c.cm;
  }
  throw UsageError("unknown cm '" + s + "'; expected one of 3 12 27 4 16 7 28 8 11 19 43 67 163");
}

Rational parse_rational_arg(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string curve;
  std::string cm;
  std::string k;
  std::string format = "text";
  bool cross_check = false;
  bool paranoid = false;
};

int run_classify(const ClassifyArgs& args) {
  const bool by_curve = !args.curve.empty();
  const bool by_inv = !args.cm.empty() || !args.k.empty();
  if (by_curve == by_inv || (by_inv && (args.cm.empty() || args.k.empty()))) {
    throw UsageError("give exactly one of --curve A,B or --cm N --k K");
  }

  EngineOptions opts{args.paranoid};
  ReportDocument doc;
  std::optional<GrowthReport> report;
  std::optional<CrossCheck> cc;

  if (by_curve) {
    auto parts = split(args.curve, ',');
    if (parts.size() != 2) throw UsageError("--curve expects A,B");
    Rational a = parse_rational_arg(parts[0], "--curve A");
    Rational b = parse_rational_arg(parts[1], "--curve B");
    EllipticCurve E(a, b);  // SingularCurve propagates
    report = growth_engine(E, opts);
    doc.input_a = parts[0];
    doc.input_b = parts[1];
  } else {
    int cm = parse_cm(args.cm);
    Rational k = parse_rational_arg(args.k, "--k");
    if (k == 0) throw UsageError("--k must be nonzero");
    CMInvariants inv{cm, canonical_k(cm, k)};
    report = growth_engine(normal_form(inv), opts);
    doc.input_cm = cm;
    doc.input_k = args.k;
  }
  if (args.cross_check) cc = compare_with_table(*report);

  ReportDocument full = make_report(*report, cc);
  full.input_a = doc.input_a;
  full.input_b = doc.input_b;
  full.input_cm = doc.input_cm;
  full.input_k = doc.input_k;

  if (args.format == "json") {
    std::cout << to_json(full).dump(2) << "\n";
  } else {
    std::cout << render_text(full);
  }
  if (args.paranoid && !report->violations.empty()) {
    for (const auto& v : report->violations) std::cerr << "violation: " << v << "\n";
    return kMismatch;
  }
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string cm_list;
  std::string k_range;
  int jobs = 1;
  std::string format = "text";
  bool paranoid = false;
};

struct SweepResult {
  CMInvariants inv;
  bool match = false;
  std::string torsion_Q;
  std::vector<std::pair<std::string, std::string>> growths;  // group, field
  std::vector<std::string> differences;
};

long default_bound(int cm) { return (cm == 3 || cm == 4) ? 200 : 100; }

std::vector<CMInvariants> sweep_corpus(const VerifyArgs& args) {
  std::vector<int> cms;
  if (args.cm_list.empty()) {
    for (const auto& c : cm_classes()) cms.push_back(c.cm);
  } else {
    for (const auto& s : split(args.cm_list, ',')) cms.push_back(parse_cm(s));
  }
  std::optional<std::pair<long, long>> range;
  if (!args.k_range.empty()) {
    auto parts = split(args.k_range, ',');
    if (parts.size() != 2) throw UsageError("--k-range expects LO,HI");
    long lo = parse_long(parts[0], "--k-range"), hi = parse_long(parts[1], "--k-range");
    if (lo > hi) throw UsageError("--k-range: LO exceeds HI");
    if (hi - lo > 2000000) throw UsageError("--k-range: at most 2000000 values");
    range = {lo, hi};
  }
  std::set<CMInvariants> out;
  for (int cm : cms) {
    long lo = range ? range->first : -default_bound(cm);
    long hi = range ? range->second : default_bound(cm);
    for (long k = lo; k <= hi; ++k) {
      if (k == 0) continue;
      BigInt c = canonical_k(cm, Rational(k));
      // Only k already in canonical form belong to the sweep; the others
      // would repeat a curve under another name.
      if (c == k) out.insert({cm, c});
    }
  }
  return {out.begin(), out.end()};
}

SweepResult sweep_one(const CMInvariants& inv, const EngineOptions& opts) {
  SweepResult r{inv, false, "", {}, {}};
  try {
    CrossCheck cc = cross_check(inv, opts);
    r.match = cc.match;
    r.differences = cc.differences;
    r.torsion_Q = cc.engine.torsion_Q.name();
    for (const auto& g : cc.engine.growths) {
      r.growths.emplace_back(g.group.name(), to_string(g.field.defining_poly()));
    }
    for (const auto& v : cc.engine.violations) {
      r.match = false;
      r.differences.push_back("violation: " + v);
    }
  } catch (const std::exception& e) {
    r.differences.push_back(std::string("error: ") + e.what());
  }
  return r;
}

int run_verify(const VerifyArgs& args) {
  if (args.jobs < 1) throw UsageError("--jobs must be positive");
  const auto corpus = sweep_corpus(args);
  const EngineOptions opts{args.paranoid};
  std::vector<SweepResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) results[i] = sweep_one(corpus[i], opts);
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(args.jobs, std::max<std::size_t>(1, corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t matches = 0;
  for (const auto& r : results) matches += r.match ? 1 : 0;
  const std::size_t mismatches = results.size() - matches;

  if (args.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      json gs = json::array();
      for (const auto& [g, f] : r.growths) gs.push_back({{"group", g}, {"field", f}});
      rows.push_back({{"cm", r.inv.cm},
                      {"k", to_string(r.inv.k)},
                      {"verdict", r.match ? "MATCH" : "MISMATCH"},
                      {"torsion_Q", r.torsion_Q},
                      {"growths", gs},
                      {"differences", r.differences}});
    }
    json out = {{"schema_version", kReportSchemaVersion},
                {"checked", results.size()},
                {"match", matches},
                {"mismatch", mismatches},
                {"results", rows}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.match && r.growths.empty()) continue;
      std::cout << (r.match ? "MATCH    " : "MISMATCH ") << "cm=" << r.inv.cm << " k=" << to_string(r.inv.k)
                << "  " << (r.torsion_Q.empty() ? "?" : r.torsion_Q);
      for (const auto& [g, f] : r.growths) std::cout << "  " << g << " over " << f;
      std::cout << "\n";
      for (const auto& d : r.differences) std::cout << "    " << d << "\n";
    }
    std::cout << "checked " << results.size() << " curves: " << matches << " MATCH, " << mismatches
              << " MISMATCH\n";
  }
  return mismatches == 0 ? kOk : kMismatch;
}

// ------------------------------------------------------------------ tables

std::string factored_j(const CMClass& c) {
  if (c.j_sign == 0) return "0";
  std::string s = c.j_sign < 0 ? "-" : "";
  for (std::size_t i = 0; i < c.j_factors.size(); ++i) {
    if (i) s += "*";
    s += std::to_string(c.j_factors[i].first);
    if (c.j_factors[i].second != 1) s += "^" + std::to_string(c.j_factors[i].second);
  }
  return s;
}

// First canonical k (in the order 1, -1, 2, -2, ...) selecting condition idx.
std::optional<BigInt> condition_representative(int cm, int idx) {
  for (const auto& k : canonical_k_values(cm, 1000)) {
    if (torsion_condition_index({cm, k}) == idx) return k;
  }
  return std::nullopt;
}

json table2_json() {
  json rows = json::array();
  for (const auto& c : cm_classes()) {
    json conds = json::array();
    for (std::size_t i = 0; i < c.torsion_conditions.size(); ++i) {
      const auto& tc = c.torsion_conditions[i];
      json row = {{"condition", tc.label}, {"torsion_Q", tc.group.name()}};
      auto k = condition_representative(c.cm, static_cast<int>(i));
      if (k) {
        // The engine computes the group from the curve alone.
        TorsionGroup g = torsion_over_base(normal_form({c.cm, *k})).group;
        row["representative_k"] = to_string(*k);
        row["computed_torsion_Q"] = g.name();
        row["agrees"] = (g == tc.group);
      } else {
        row["representative_k"] = nullptr;
        row["computed_torsion_Q"] = nullptr;
        row["agrees"] = false;
      }
      conds.push_back(row);
    }
    rows.push_back({{"cm", c.cm},
                    {"D", c.D},
                    {"conductor", c.conductor},
                    {"A", to_string(c.A)},
                    {"B", to_string(c.B)},
                    {"j", to_string(c.j)},
                    {"j_factored", factored_j(c)},
                    {"torsion_conditions", conds}});
  }
  return {{"schema_version", kReportSchemaVersion}, {"table", 2}, {"rows", rows}};
}

json table1_json() {
  json rows = json::array();
  const auto& table = growth_table_rows();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    BigInt k = representative_k(static_cast<int>(i));
    CrossCheck cc = cross_check({row.cm, k});
    json computed = json::array(), expected = json::array();
    for (const auto& g : cc.engine.growths) {
      const Poly& f = g.field.defining_poly();
      computed.push_back({{"group", g.group.name()}, {"field", {{"sparse", to_string(f)}, {"dense", to_dense(f)}}}});
    }
    for (std::size_t j = 0; j < row.growth_groups.size(); ++j) {
      expected.push_back({{"group", row.growth_groups[j]}, {"field", row.field_labels[j]}});
    }
    rows.push_back({{"cm", row.cm},
                    {"condition", row.condition},
                    {"torsion_Q", row.torsion_Q.name()},
                    {"expected_growths", expected},
                    {"representative_k", to_string(k)},
                    {"computed_torsion_Q", cc.engine.torsion_Q.name()},
                    {"computed_growths", computed},
                    {"h_count", cc.engine.h_count()},
                    {"verdict", cc.match ? "MATCH" : "MISMATCH"},
                    {"differences", cc.differences}});
  }
  return {{"schema_version", kReportSchemaVersion}, {"table", 1}, {"rows", rows}};
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string table1_markdown(const json& t) {
  std::ostringstream out;
  out << "| cm | condition | E(Q)_tors | growth | k | computed growth (defining polynomial) | verdict |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : t["rows"]) {
    std::vector<std::string> exp, got;
    for (const auto& g : r["expected_growths"]) exp.push_back(g["group"].get<std::string>());
    for (const auto& g : r["computed_growths"]) {
      got.push_back(g["group"].get<std::string>() + ": " + g["field"]["sparse"].get<std::string>());
    }
    out << "| " << r["cm"].get<int>() << " | " << r["condition"].get<std::string>() << " | "
        << r["computed_torsion_Q"].get<std::string>() << " | " << (exp.empty() ? "-" : join(exp, ", ")) << " | "
        << r["representative_k"].get<std::string>() << " | " << (got.empty() ? "-" : join(got, "; ")) << " | "
        << r["verdict"].get<std::string>() << " |\n";
  }
  return out.str();
}

std::string table2_markdown(const json& t) {
  std::ostringstream out;
  out << "| cm | D | f | [A, B] | j | condition | E(Q)_tors | k | computed |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : t["rows"]) {
    bool first = true;
    for (const auto& c : r["torsion_conditions"]) {
      if (first) {
        out << "| " << r["cm"].get<int>() << " | " << r["D"].get<int>() << " | " << r["conductor"].get<int>()
            << " | [" << r["A"].get<std::string>() << ", " << r["B"].get<std::string>() << "] | "
            << r["j_factored"].get<std::string>() << " | ";
      } else {
        out << "| | | | | | ";
      }
      first = false;
      out << c["condition"].get<std::string>() << " | " << c["torsion_Q"].get<std::string>() << " | "
          << (c["representative_k"].is_null() ? "-" : c["representative_k"].get<std::string>()) << " | "
          << (c["computed_torsion_Q"].is_null() ? "-" : c["computed_torsion_Q"].get<std::string>()) << " |\n";
    }
  }
  return out.str();
}

struct TablesArgs {
  int which = 0;
  std::string format = "markdown";
};

int run_tables(const TablesArgs& args) {
  json t = args.which == 1 ? table1_json() : table2_json();
  if (args.format == "json") {
    std::cout << t.dump(2) << "\n";
  } else {
    std::cout << (args.which == 1 ? table1_markdown(t) : table2_markdown(t));
  }
  bool ok = true;
  for (const auto& r : t["rows"]) {
    if (args.which == 1) {
      ok = ok && r["verdict"] == "MATCH";
    } else {
      for (const auto& c : r["torsion_conditions"]) ok = ok && c["agrees"].get<bool>();
    }
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of CM elliptic curves over Q and its growth over cubic fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cmtorsion 1.0");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify one curve y^2 = x^3 + A x + B");
  classify->add_option("--curve", ca.curve, "Coefficients A,B as integers or p/q")->allow_extra_args(false);
  classify->add_option("--cm", ca.cm, "CM class (3 12 27 4 16 7 28 8 11 19 43 67 163)");
  classify->add_option("--k", ca.k, "Twist parameter k");
  classify->add_option("--format", ca.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  classify->add_flag("--cross-check", ca.cross_check, "Compare with the closed-form classification");
  classify->add_flag("--paranoid", ca.paranoid, "Search extra orders and report unexpected torsion");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Cross-check engine and closed form over a corpus of twists");
  verify->add_option("--cm-list", va.cm_list, "Comma-separated classes (default: all)");
  verify->add_option("--k-range", va.k_range, "LO,HI (default: |k| <= 200 for cm 3 and 4, 100 otherwise)");
  verify->add_option("--jobs", va.jobs, "Worker threads");
  verify->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--paranoid", va.paranoid, "Search extra orders and report unexpected torsion");

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "Regenerate the classification tables from engine runs");
  tables->add_option("--which", ta.which, "1 (cubic growth) or 2 (CM classes)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  tables->add_option("--format", ta.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return run_classify(ca);
    if (*verify) return run_verify(va);
    if (*tables) return run_tables(ta);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotCM&) {
    std::cerr << "not a CM curve\n";
    return kNotCM;
  } catch (const SingularCurve& e) {
    std::cerr << e.what() << "\n";
    return kSingular;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
