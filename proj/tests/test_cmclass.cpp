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

#include <random>
#include <set>

#include "cmtorsion/cmclass.hpp"
#include "oracles.hpp"

using namespace cmtorsion;

TEST_CASE("the thirteen classes") {
  const auto& cls = cm_classes();
  REQUIRE(cls.size() == 13);
  std::vector<int> order;
  for (const auto& c : cls) order.push_back(c.cm);
  CHECK(order == std::vector<int>{3, 12, 27, 4, 16, 7, 28, 8, 11, 19, 43, 67, 163});
  for (const auto& c : cls) {
    CAPTURE(c.cm);
    CHECK(c.cm == c.D * c.conductor * c.conductor);
    EllipticCurve E{Rational(c.A), Rational(c.B)};
    CHECK(E.j_invariant() == c.j);
    // Rebuild j from its stored factorization.
    Rational j = c.j_sign;
    for (auto [p, e] : c.j_factors) j *= pow(Rational(p), static_cast<unsigned>(e));
    CHECK(j == c.j);
    CHECK(detect_cm(E).cm == c.cm);
    CHECK(detect_cm(E).k == 1);
  }
  CHECK(cm_class(67).j == -Rational(pow(BigInt(2), 15) * 27 * 125 * 1331));
  CHECK(cm_class(12).j == 54000);
  CHECK_THROWS_AS(cm_class(5), std::invalid_argument);
}

TEST_CASE("normal forms") {
  CHECK(normal_form({16, 2}) == EllipticCurve(-44, 112));
  CHECK(normal_form({3, -432}) == EllipticCurve(0, -432));
  CHECK(normal_form({4, -1}) == EllipticCurve(-1, 0));
  CHECK(normal_form({7, -7}) == EllipticCurve(-2835 * 49, 71442 * 343));
  CHECK_THROWS(normal_form({16, 4}));
  CHECK_THROWS(normal_form({3, 64}));
  CHECK_THROWS(normal_form({5, 1}));
  CHECK(valid_invariants({3, -432}));
  CHECK_FALSE(valid_invariants({4, 16}));
  CHECK_FALSE(valid_invariants({7, 0}));
}

TEST_CASE("canonical k") {
  CHECK(canonical_k(3, 64) == 1);
  CHECK(canonical_k(3, -432) == -432);
  CHECK(canonical_k(3, Rational(1, 2)) == 32);
  CHECK(canonical_k(4, 48) == 3);
  CHECK(canonical_k(4, -64) == -4);
  CHECK(canonical_k(7, 12) == 3);
  CHECK(canonical_k(7, Rational(-1, 5)) == -5);
  auto ks = canonical_k_values(7, 6);
  CHECK(ks == std::vector<BigInt>{1, -1, 2, -2, 3, -3, 5, -5, 6, -6});
  CHECK(canonical_k_values(4, 4).size() == 8);
}

TEST_CASE("detect_cm recovers invariants of rescaled models") {
  // (a, b) -> (u^4 a, u^6 b) is an isomorphism over Q.
  std::mt19937_64 rng(12);
  for (const auto& c : cm_classes()) {
    for (const auto& k : canonical_k_values(c.cm, 12)) {
      EllipticCurve E = normal_form({c.cm, k});
      CHECK(detect_cm(E) == CMInvariants{c.cm, k});
      Rational u = make_rational(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 5));
      if (rng() % 2) u = -u;
      EllipticCurve F(E.a() * pow(u, 4), E.b() * pow(u, 6));
      CHECK(detect_cm(F) == CMInvariants{c.cm, k});
    }
  }
  CHECK(detect_cm(EllipticCurve(0, 64)) == CMInvariants{3, 1});
  CHECK(detect_cm(EllipticCurve(-15, 22)) == CMInvariants{12, 1});
  CHECK_THROWS_AS(detect_cm(EllipticCurve(1, 1)), NotCM);
  CHECK_THROWS_AS(detect_cm(EllipticCurve(-1, 1)), NotCM);
}

TEST_CASE("j of y^2 = x^3 + x + 1 is not a CM value") {
  EllipticCurve E(1, 1);
  CHECK(E.j_invariant() == Rational(6912, 31));
  std::set<Rational> js;
  for (const auto& c : cm_classes()) js.insert(c.j);
  CHECK(js.count(E.j_invariant()) == 0);
}

TEST_CASE("torsion over Q from the table agrees with the curve") {
  for (const auto& c : cm_classes()) {
    for (const auto& k : canonical_k_values(c.cm, 40)) {
      CMInvariants inv{c.cm, k};
      CAPTURE(c.cm);
      CAPTURE(k);
      CHECK(torsion_over_Q_table(inv) == torsion_over_base(normal_form(inv)).group);
    }
  }
}

TEST_CASE("condition order: first match wins") {
  CHECK(torsion_over_Q_table({3, 1}).name() == "C6");
  CHECK(torsion_over_Q_table({3, -432}).name() == "C3");
  CHECK(torsion_over_Q_table({3, 16}).name() == "C3");
  CHECK(torsion_over_Q_table({3, -1}).name() == "C2");
  CHECK(torsion_over_Q_table({3, 8}).name() == "C2");
  CHECK(torsion_over_Q_table({3, 2}).name() == "C1");
  CHECK(torsion_over_Q_table({4, 4}).name() == "C4");
  CHECK(torsion_over_Q_table({4, -4}).name() == "C2xC2");
  CHECK(torsion_over_Q_table({4, -9}).name() == "C2xC2");
  CHECK(torsion_over_Q_table({16, 2}).name() == "C4");
  CHECK(torsion_over_Q_table({16, -2}).name() == "C2");
  CHECK(torsion_over_Q_table({27, 1}).name() == "C3");
  CHECK(torsion_over_Q_table({163, -1}).name() == "C1");
}
