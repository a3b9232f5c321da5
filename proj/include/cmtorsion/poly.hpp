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

#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmtorsion/exactnum.hpp"

namespace cmtorsion {

/// Raised by exact_div when the divisor leaves a nonzero remainder.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  const Rational& operator[](int i) const;
  const Rational& lead() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& at) const;
  Poly derivative() const;
  Poly monic() const;
  /// p(c * x)
  Poly scale_arg(const Rational& c) const;
  /// True when every coefficient is an integer.
  bool is_integral() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly pow(const Poly& p, unsigned e);

struct PolyDivRem {
  Poly quot;
  Poly rem;
};

/// Euclidean division over Q. Throws std::domain_error for a zero divisor.
PolyDivRem divrem(const Poly& a, const Poly& b);
/// a / b; throws InexactDivision when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);

/// Monic gcd over Q[x], computed by a primitive pseudo-remainder sequence
/// over Z. Throws std::domain_error when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Resultant over Q.
Rational resultant(const Poly& a, const Poly& b);

/// (-1)^(n(n-1)/2) * Res(f, f') / lc(f). Requires degree >= 2.
Rational discriminant(const Poly& f);

/// All rational roots, repeated according to multiplicity, ascending.
std::vector<Rational> rational_roots(const Poly& f);

/// Sparse human form, e.g. "x^3 - 3*x - 1", "1/2*x^2 + 1".
std::string to_string(const Poly& f, const std::string& var = "x");

/// Dense form: coefficients lowest degree first, each as "num/den".
std::vector<std::string> to_dense(const Poly& f);
Poly from_dense(const std::vector<std::string>& coeffs);

/// Splits f into content * primitive integer polynomial with positive
/// leading coefficient. f must be nonzero.
struct IntegerPrimitive {
  Rational content;
  std::vector<BigInt> coeffs;
};
IntegerPrimitive integer_primitive(const Poly& f);
Poly from_integers(const std::vector<BigInt>& coeffs);

}  // namespace cmtorsion
