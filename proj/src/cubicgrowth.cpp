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

#include "cmtorsion/cubicgrowth.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cmtorsion {

namespace {

const TorsionGroup C1 = TorsionGroup::cyclic(1);
const TorsionGroup C2 = TorsionGroup::cyclic(2);
const TorsionGroup C3 = TorsionGroup::cyclic(3);
const TorsionGroup C4 = TorsionGroup::cyclic(4);
const TorsionGroup C6 = TorsionGroup::cyclic(6);
const TorsionGroup C9 = TorsionGroup::cyclic(9);
const TorsionGroup C14 = TorsionGroup::cyclic(14);
const TorsionGroup C2xC2{2, 2};

const std::map<std::string, Poly>& fixed_fields() {
  static const std::map<std::string, Poly> fields{
      {"x^3 - 2", Poly{-2, 0, 0, 1}},
      {"x^3 - 3", Poly{-3, 0, 0, 1}},
      {"x^3 - 3*x - 1", Poly{-1, -3, 0, 1}},
      {"x^3 + x^2 - 2*x - 1", Poly{-1, -2, 1, 1}},
      {"x^3 - x^2 + x + 1", Poly{1, 1, -1, 1}},
      {"x^3 - x^2 + 3*x - 1", Poly{-1, 3, -1, 1}},
      {"x^3 - x^2 - x + 3", Poly{3, -1, -1, 1}},
      {"x^3 - x^2 - 3*x + 5", Poly{5, -3, -1, 1}},
      {"x^3 - 8*x - 10", Poly{-10, -8, 0, 1}},
  };
  return fields;
}

bool coeff_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

bool record_less(const GrowthRecord& a, const GrowthRecord& b) {
  if (a.group < b.group) return true;
  if (b.group < a.group) return false;
  return coeff_less(a.field.defining_poly(), b.field.defining_poly());
}

bool is_square_q(const Rational& q) { return is_perfect_power(q, 2).has_value(); }

// x^3 - c
Poly pure_cubic(const Rational& c) { return Poly{-c, 0, 0, 1}; }

// Isomorphic defining polynomials of smaller height: clear denominators by
// x -> x/d, divide out x -> l x where l, l^2, l^3 divide the coefficients,
// reduce x^3 - c to x^3 - |cube-free part of c|, and add the polynomial of a
// short element of the ring of integers.
// The same few fields recur across twists, so reductions are memoized.
Poly cached_reduction(const Poly& h) {
  static std::mutex mu;
  static std::map<std::string, Poly> cache;
  const std::string key = to_string(h);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Poly r = reduced_defining_poly(CubicField(h));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, r).first->second;
}

std::vector<Poly> tidy_variants(const Poly& g) {
  std::vector<Poly> out{g};
  BigInt d = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  Poly h = g.scale_arg(Rational(1, d)) * Rational(d * d * d);
  for (bool progress = true; progress;) {
    progress = false;
    for (long l = 2; l <= 1000; ++l) {
      if (mpz_divisible_ui_p(h[2].get_num_mpz_t(), l) && mpz_divisible_ui_p(h[1].get_num_mpz_t(), l * l) &&
          mpz_divisible_ui_p(h[0].get_num_mpz_t(), l * l * l)) {
        h = h.scale_arg(Rational(l)) * Rational(1, l * l * l);
        progress = true;
        break;
      }
    }
  }
  out.push_back(h);
  if (!(g[1] == 0 && g[2] == 0)) out.push_back(cached_reduction(h));
  // x^3 - c and x^3 - c^2 define the same field.
  for (std::size_t i = 0, n = out.size(); i < n; ++i) {
    const Poly v = out[i];
    if (v[1] != 0 || v[2] != 0) continue;
    out.push_back(pure_cubic(Rational(abs(power_free_part(-v[0], 3)))));
    out.push_back(pure_cubic(Rational(abs(power_free_part(v[0] * v[0], 3)))));
  }
  return out;
}

int first_row_of(int cm) {
  const auto& rows = growth_table_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].cm == cm) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown CM class " + std::to_string(cm));
}

}  // namespace

BigInt poly_height(const Poly& g) {
  BigInt h = 0;
  for (const auto& c : g.coeffs()) {
    BigInt v = abs(c.get_num()) * c.get_den();
    if (v > h) h = v;
  }
  return h;
}

const std::vector<TorsionGroup>& cm_cubic_torsion_groups() {
  static const std::vector<TorsionGroup> groups{C1, C2, C3, C4, C6, C2xC2, C9, C14};
  return groups;
}

const std::vector<GrowthTableRow>& growth_table_rows() {
  static const std::vector<GrowthTableRow> rows{
      {3, "1", C6, {}, {}},
      {3, "16", C3, {"C6", "C9"}, {"x^3 - 2", "x^3 - 3*x - 1"}},
      {3, "-432", C3, {"C6"}, {"x^3 - 2"}},
      {3, "r^2 (r != +-1, +-4)", C3, {"C6"}, {"x^3 - k"}},
      {3, "-27", C2, {"C6"}, {"x^3 - 2"}},
      {3, "r^3 (r != 1, -3)", C2, {}, {}},
      {3, "-108", C1, {"C6"}, {"x^3 - 2"}},
      {3, "-3r^2 (r != +-6)", C1, {"C2", "C3"}, {"x^3 - 3r^2", "x^3 - 12r^2"}},
      {3, "!= r^2, r^3, -3r^2", C1, {"C2"}, {"x^3 - k"}},
      {12, "1", C6, {}, {}},
      {12, "-3", C2, {"C6"}, {"x^3 - 2"}},
      {12, "!= 1, -3", C2, {}, {}},
      {27, "1", C3, {"C6", "C9"}, {"x^3 - 2", "x^3 - 3*x - 1"}},
      {27, "-3", C1, {"C2", "C3"}, {"x^3 - 2", "x^3 - 3"}},
      {27, "!= 1, -3", C1, {"C2"}, {"x^3 - 2"}},
      {4, "4", C4, {}, {}},
      {4, "-r^2", C2xC2, {}, {}},
      {4, "!= 4, -r^2", C2, {}, {}},
      {16, "1, 2", C4, {}, {}},
      {16, "!= 1, 2", C2, {}, {}},
      {7, "-7", C2, {"C14"}, {"x^3 + x^2 - 2*x - 1"}},
      {7, "!= -7", C2, {}, {}},
      {28, "7", C2, {"C14"}, {"x^3 + x^2 - 2*x - 1"}},
      {28, "!= 7", C2, {}, {}},
      {8, "any", C2, {}, {}},
      {11, "any", C1, {"C2"}, {"x^3 - x^2 + x + 1"}},
      {19, "any", C1, {"C2"}, {"x^3 - x^2 + 3*x - 1"}},
      {43, "any", C1, {"C2"}, {"x^3 - x^2 - x + 3"}},
      {67, "any", C1, {"C2"}, {"x^3 - x^2 - 3*x + 5"}},
      {163, "any", C1, {"C2"}, {"x^3 - 8*x - 10"}},
  };
  return rows;
}

int growth_row_index(const CMInvariants& inv) {
  if (!valid_invariants(inv)) {
    throw std::invalid_argument("invalid CM invariants (" + std::to_string(inv.cm) + ", " + to_string(inv.k) + ")");
  }
  const Rational k(inv.k);
  int local = 0;
  switch (inv.cm) {
    case 3:
      if (k == 1) local = 0;
      else if (k == 16) local = 1;
      else if (k == -432) local = 2;
      else if (is_square_q(k)) local = 3;
      else if (k == -27) local = 4;
      else if (is_perfect_power(k, 3)) local = 5;
      else if (k == -108) local = 6;
      else if (is_square_q(-k / 3)) local = 7;
      else local = 8;
      break;
    case 12:
    case 27:
      local = k == 1 ? 0 : k == -3 ? 1 : 2;
      break;
    case 4:
      local = k == 4 ? 0 : is_square_q(-k) ? 1 : 2;
      break;
    case 16:
      local = (k == 1 || k == 2) ? 0 : 1;
      break;
    case 7:
      local = k == -7 ? 0 : 1;
      break;
    case 28:
      local = k == 7 ? 0 : 1;
      break;
    default:
      local = 0;
  }
  return first_row_of(inv.cm) + local;
}

GrowthReport growth_table(const CMInvariants& inv) {
  const int row = growth_row_index(inv);
  const GrowthTableRow& r = growth_table_rows()[static_cast<std::size_t>(row)];
  const Rational k(inv.k);
  std::vector<std::pair<TorsionGroup, Poly>> entries;
  for (std::size_t i = 0; i < r.growth_groups.size(); ++i) {
    const std::string& label = r.field_labels[i];
    Poly g;
    if (label == "x^3 - k") {
      g = pure_cubic(k);
    } else if (label == "x^3 - 3r^2") {
      g = pure_cubic(-k);
    } else if (label == "x^3 - 12r^2") {
      g = pure_cubic(-4 * k);
    } else {
      auto it = fixed_fields().find(label);
      if (it == fixed_fields().end()) throw std::logic_error("growth table: unknown field " + label);
      g = it->second;
    }
    entries.emplace_back(TorsionGroup::parse(r.growth_groups[i]), g);
  }
  GrowthReport rep{normal_form(inv), inv, r.torsion_Q, {}, {}, {}};
  for (auto& [G, g] : entries) rep.growths.push_back({G, CubicField(g), {}});
  std::sort(rep.growths.begin(), rep.growths.end(), record_less);
  return rep;
}

BigInt representative_k(int row) {
  const auto& rows = growth_table_rows();
  if (row < 0 || row >= static_cast<int>(rows.size())) throw std::out_of_range("representative_k: bad row");
  const int cm = rows[static_cast<std::size_t>(row)].cm;
  for (const auto& k : canonical_k_values(cm, 1000)) {
    if (growth_row_index({cm, k}) == row) return k;
  }
  throw std::logic_error("representative_k: no k up to 1000 for row " + std::to_string(row));
}

GrowthReport growth_engine(const EllipticCurve& E, const EngineOptions& options) {
  const CMInvariants inv = detect_cm(E);
  const std::vector<int> orders =
      options.paranoid ? std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9} : default_torsion_orders();
  DivisionTower tower(E);
  auto tq = torsion_over_base(E, tower, orders);
  GrowthReport rep{E, inv, tq.group, tq.generators, {}, {}};

  // Cubic fields generated by the x-coordinate of a point of order m.
  std::vector<CubicField> candidates;
  for (int m : orders) {
    for (const Poly& g : irreducible_factors_of_degree(tower.factorization(m), 3)) {
      CubicField K(g);
      if (m != 2 && !is_square(evaluate(E.rhs(), K.generator()))) continue;
      if (m == 5 || m == 8) {
        rep.violations.push_back("point of order " + std::to_string(m) + " over " + to_string(g));
      }
      candidates.push_back(K);
    }
  }

  // Partition by isomorphism and pick a readable representative per class.
  std::vector<std::vector<CubicField>> classes;
  for (const auto& K : candidates) {
    bool placed = false;
    for (auto& cls : classes) {
      if (fields_isomorphic(cls.front(), K)) {
        cls.push_back(K);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({K});
  }
  for (const auto& cls : classes) {
    std::optional<Poly> best;
    for (const auto& K : cls) {
      for (const Poly& g : tidy_variants(K.defining_poly())) {
        if (!best) {
          best = g;
          continue;
        }
        const BigInt hg = poly_height(g), hb = poly_height(*best);
        if (hg < hb || (hg == hb && coeff_less(g, *best))) best = g;
      }
    }
    const CubicField field(*best);
    auto tk = torsion_over_base(E, field, tower, orders);
    if (tk.group == tq.group || tk.group.n2 % tq.group.n2 != 0 || tk.group.n1 % tq.group.n1 != 0) {
      throw std::logic_error("growth_engine: " + tk.group.name() + " over " + to_string(*best) +
                             " is not a strict extension of " + tq.group.name());
    }
    const auto& allowed = cm_cubic_torsion_groups();
    if (options.paranoid &&
        (std::find(allowed.begin(), allowed.end(), tk.group) == allowed.end() || tk.group == C4 ||
         tk.group == C2xC2)) {
      rep.violations.push_back("group " + tk.group.name() + " over " + to_string(*best));
    }
    rep.growths.push_back({tk.group, field, tk.generators});
  }
  std::sort(rep.growths.begin(), rep.growths.end(), record_less);
  return rep;
}

CrossCheck cross_check(const CMInvariants& inv, const EngineOptions& options) {
  CrossCheck cc = compare_with_table(growth_engine(normal_form(inv), options));
  if (!(cc.inv == inv)) {
    cc.differences.insert(cc.differences.begin(), "engine recovered invariants (" + std::to_string(cc.inv.cm) +
                                                      ", " + to_string(cc.inv.k) + ")");
    cc.inv = inv;
    cc.match = false;
  }
  return cc;
}

CrossCheck compare_with_table(GrowthReport engine) {
  const CMInvariants inv = engine.inv;
  CrossCheck cc{inv, false, {}, std::move(engine), growth_table(inv)};
  auto& diff = cc.differences;
  if (!(cc.engine.torsion_Q == cc.table.torsion_Q)) {
    diff.push_back("torsion over Q: table " + cc.table.torsion_Q.name() + ", engine " + cc.engine.torsion_Q.name());
  }
  std::vector<bool> used(cc.engine.growths.size(), false);
  for (const auto& t : cc.table.growths) {
    bool found = false;
    for (std::size_t i = 0; i < cc.engine.growths.size() && !found; ++i) {
      const auto& e = cc.engine.growths[i];
      if (used[i] || !(e.group == t.group)) continue;
      if (fields_isomorphic(e.field, t.field)) {
        used[i] = true;
        found = true;
      }
    }
    if (!found) {
      diff.push_back("missing from engine: " + t.group.name() + " over " + to_string(t.field.defining_poly()));
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) {
      const auto& e = cc.engine.growths[i];
      diff.push_back("missing from table: " + e.group.name() + " over " + to_string(e.field.defining_poly()));
    }
  }
  for (const auto& v : cc.engine.violations) diff.push_back("violation: " + v);
  cc.match = diff.empty();
  return cc;
}

}  // namespace cmtorsion
