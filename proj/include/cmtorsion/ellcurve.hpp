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
 * @file ellcurve.hpp
 * @brief Curves y^2 = x^3 + a x + b with rational a, b; points over Q or a
 * cubic field; division polynomials; torsion subgroups.
 */

#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmtorsion/numberfield.hpp"
#include "cmtorsion/poly.hpp"
#include "cmtorsion/polyfactor.hpp"

namespace cmtorsion {

class SingularCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EllipticCurve {
 public:
  /// Throws SingularCurve when 4a^3 + 27b^2 == 0.
  EllipticCurve(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// -16(4a^3 + 27b^2)
  Rational discriminant() const;
  /// 1728 * 4a^3 / (4a^3 + 27b^2)
  Rational j_invariant() const;
  /// x^3 + a x + b
  Poly rhs() const;

  friend bool operator==(const EllipticCurve& l, const EllipticCurve& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  Rational a_, b_;
};

std::string to_string(const EllipticCurve& E);

/// y^2 = x^3 + d^2 a x + d^3 b. d must be a nonzero squarefree integer.
EllipticCurve quadratic_twist(const EllipticCurve& E, const BigInt& d);

namespace detail {
inline Rational embed(const Rational&, const Rational& q) { return q; }
inline FieldElem embed(const FieldElem& like, const Rational& q) { return FieldElem(like.field(), q); }
inline bool scalar_is_zero(const Rational& q) { return q == 0; }
inline bool scalar_is_zero(const FieldElem& e) { return e.is_zero(); }
}  // namespace detail

/// Affine point or the point at infinity, coordinates in T (Rational or
/// FieldElem).
template <typename T>
class Point {
 public:
  static Point infinity() { return Point(); }
  Point(T x, T y) : xy_(std::array<T, 2>{std::move(x), std::move(y)}) {}

  bool is_infinity() const { return !xy_.has_value(); }
  const T& x() const { return (*xy_)[0]; }
  const T& y() const { return (*xy_)[1]; }

  friend bool operator==(const Point& p, const Point& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
    return p.x() == q.x() && p.y() == q.y();
  }

 private:
  Point() = default;
  std::optional<std::array<T, 2>> xy_;
};

template <typename T>
bool on_curve(const EllipticCurve& E, const Point<T>& P) {
  if (P.is_infinity()) return true;
  const T& x = P.x();
  return P.y() * P.y() == x * x * x + x * E.a() + detail::embed(x, E.b());
}

namespace detail {

template <typename T>
Point<T> add_unchecked(const EllipticCurve& E, const Point<T>& P, const Point<T>& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  T lambda = P.x();
  if (P.x() == Q.x()) {
    if (scalar_is_zero(P.y() + Q.y())) return Point<T>::infinity();
    T num = P.x() * P.x() * Rational(3) + embed(P.x(), E.a());
    lambda = num / (P.y() * Rational(2));
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  T x3 = lambda * lambda - P.x() - Q.x();
  T y3 = lambda * (P.x() - x3) - P.y();
  return Point<T>(std::move(x3), std::move(y3));
}

template <typename T>
void require_on_curve(const EllipticCurve& E, const Point<T>& P) {
  if (!on_curve(E, P)) throw std::invalid_argument("point is not on the curve " + to_string(E));
}

}  // namespace detail

template <typename T>
Point<T> point_neg(const Point<T>& P) {
  if (P.is_infinity()) return P;
  return Point<T>(P.x(), -P.y());
}

/// Throws std::invalid_argument if either point is not on E.
template <typename T>
Point<T> point_add(const EllipticCurve& E, const Point<T>& P, const Point<T>& Q) {
  detail::require_on_curve(E, P);
  detail::require_on_curve(E, Q);
  return detail::add_unchecked(E, P, Q);
}

/// n * P by double-and-add; negative n allowed.
template <typename T>
Point<T> point_mul(const EllipticCurve& E, long long n, const Point<T>& P) {
  detail::require_on_curve(E, P);
  Point<T> base = n < 0 ? point_neg(P) : P;
  unsigned long long k = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  Point<T> acc = Point<T>::infinity();
  while (k) {
    if (k & 1) acc = detail::add_unchecked(E, acc, base);
    k >>= 1;
    if (k) base = detail::add_unchecked(E, base, base);
  }
  return acc;
}

/// Exact order of P if it is at most `bound`, else 0.
template <typename T>
int point_order(const EllipticCurve& E, const Point<T>& P, int bound = 64) {
  detail::require_on_curve(E, P);
  Point<T> Q = P;
  for (int n = 1; n <= bound; ++n) {
    if (Q.is_infinity()) return n;
    Q = detail::add_unchecked(E, Q, P);
  }
  return 0;
}

/// Polynomial in x whose roots are the x-coordinates of the nonzero n-torsion
/// points: f_n for odd n, (x^3 + a x + b) f_n for even n, where psi_n = f_n
/// (odd n) or 2y f_n (even n). division_polynomial(E, 2) is x^3 + a x + b.
Poly division_polynomial(const EllipticCurve& E, int n);

/// Roots are the x-coordinates of the points of exact order n. Degree
/// (n^2/2) prod_{p | n} (1 - 1/p^2) for n > 2, and 3 for n = 2.
Poly primitive_division_polynomial(const EllipticCurve& E, int n);

/// Expected degree of primitive_division_polynomial(E, n).
int primitive_division_degree(int n);

/// Per-curve cache of division polynomials and their factorizations over Q.
/// Not thread-safe; use one per thread.
class DivisionTower {
 public:
  explicit DivisionTower(EllipticCurve E);

  const EllipticCurve& curve() const { return E_; }
  /// f_n of the recurrence (psi_n without its 2y factor for even n).
  const Poly& f(int n);
  const Poly& classical(int n);
  const Poly& primitive(int n);
  const FactorList& factorization(int n);

 private:
  EllipticCurve E_;
  std::map<int, Poly> f_, classical_, primitive_;
  std::map<int, FactorList> factors_;
};

/// C_{n1} x C_{n2} with n1 | n2.
struct TorsionGroup {
  int n1 = 1;
  int n2 = 1;

  static TorsionGroup cyclic(int n) { return {1, n}; }
  int order() const { return n1 * n2; }
  /// "C6", "C1", "C2xC2".
  std::string name() const;
  /// Inverse of name(); throws std::invalid_argument.
  static TorsionGroup parse(const std::string& s);

  friend bool operator==(const TorsionGroup& a, const TorsionGroup& b) {
    return a.n1 == b.n1 && a.n2 == b.n2;
  }
  friend bool operator<(const TorsionGroup& a, const TorsionGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.n1 < b.n1;
  }
};

/// Number of elements of exact order m in the group.
int elements_of_order(const TorsionGroup& G, int m);

template <typename T>
struct TorsionResult {
  TorsionGroup group;
  /// Empty for the trivial group; one point of order n2 for cyclic groups;
  /// for n1 = 2 a point of order n2 followed by a point of order 2 outside
  /// the subgroup it generates.
  std::vector<Point<T>> generators;
};

/// Orders searched by default; this covers every torsion group of a CM
/// curve over a field of degree at most 3.
const std::vector<int>& default_torsion_orders();

/// Torsion of E(Q) from points of the given exact orders. Throws
/// std::logic_error if the counts found are inconsistent with any group.
TorsionResult<Rational> torsion_over_base(const EllipticCurve& E, DivisionTower& tower,
                                          const std::vector<int>& orders = default_torsion_orders());
TorsionResult<FieldElem> torsion_over_base(const EllipticCurve& E, const CubicField& K,
                                           DivisionTower& tower,
                                           const std::vector<int>& orders = default_torsion_orders());

/// Convenience overloads with a private tower.
TorsionResult<Rational> torsion_over_base(const EllipticCurve& E);
TorsionResult<FieldElem> torsion_over_base(const EllipticCurve& E, const CubicField& K);

}  // namespace cmtorsion
