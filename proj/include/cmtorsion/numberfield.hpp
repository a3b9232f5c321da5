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
 * @file numberfield.hpp
 * @brief Cubic number fields K = Q[x]/(g) and the few algorithms the torsion
 * code needs over them: norms, square roots, roots of rational polynomials,
 * and isomorphism testing.
 *
 * Factoring over K uses Trager's norm method on top of factor_poly.
 */

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmtorsion/poly.hpp"
#include "cmtorsion/polyfactor.hpp"

namespace cmtorsion {

class FieldElem;

/// Q[x]/(g) for a monic irreducible cubic g. Cheap to copy; copies share the
/// same field.
class CubicField {
 public:
  /// g is scaled to be monic. Throws std::invalid_argument unless g is an
  /// irreducible cubic over Q.
  explicit CubicField(const Poly& g);

  const Poly& defining_poly() const;
  /// The class of x, written alpha below.
  FieldElem generator() const;
  FieldElem element(const Rational& c0, const Rational& c1 = 0, const Rational& c2 = 0) const;

  friend bool operator==(const CubicField& a, const CubicField& b);

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  friend class FieldElem;
};

/// c0 + c1*alpha + c2*alpha^2.
class FieldElem {
 public:
  FieldElem(const CubicField& K, const Rational& q);
  FieldElem(const CubicField& K, std::array<Rational, 3> coords);

  const CubicField& field() const { return K_; }
  const std::array<Rational, 3>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  /// Throws std::domain_error for zero.
  FieldElem inverse() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator*=(const Rational& q);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator*(FieldElem a, const Rational& q) { return a *= q; }
  friend FieldElem operator*(const Rational& q, FieldElem a) { return a *= q; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  void check_same(const FieldElem& o) const;
  CubicField K_;
  std::array<Rational, 3> c_;
};

/// Integer powers; negative exponents invert.
FieldElem pow(const FieldElem& e, long long n);

/// Product of the three conjugates.
Rational norm(const FieldElem& e);

/// det(x I - M_e), where M_e is multiplication by e on the basis 1, a, a^2.
Poly characteristic_poly(const FieldElem& e);

/// Some w with w*w == e, or nothing. The witness is normalized so that its
/// first nonzero coordinate is positive.
std::optional<FieldElem> is_square(const FieldElem& e);

class NoSquarefreeTwist : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TwistWitness {
  BigInt d;  // squarefree
  FieldElem beta;
};

/// Writes e = d * beta^2 with d the squarefree part of norm(e). Throws
/// std::domain_error for zero and NoSquarefreeTwist when e/d is not a square.
TwistWitness twist_witness(const FieldElem& e);

/// Distinct roots of f in K, sorted by coordinates.
std::vector<FieldElem> roots_in_field(const Poly& f, const CubicField& K);
/// Same, for a polynomial already factored over Q.
std::vector<FieldElem> roots_in_field(const FactorList& fl, const CubicField& K);

/// Whether the splitting field of the irreducible cubic g has degree 3.
bool galois_cubic_test(const Poly& g);

bool fields_isomorphic(const CubicField& a, const CubicField& b);

/// An integral monic defining polynomial of K of small height: the
/// characteristic polynomial of a short element of a reduced order basis.
/// The result defines K itself (its root is an explicit element of K).
Poly reduced_defining_poly(const CubicField& K);

/// Polynomial in "a", e.g. "2*a^2 - 1/3".
std::string to_string(const FieldElem& e);
/// The coordinates as "num/den" strings.
std::array<std::string, 3> to_coord_strings(const FieldElem& e);

/// Value of f at e.
FieldElem evaluate(const Poly& f, const FieldElem& e);

}  // namespace cmtorsion
