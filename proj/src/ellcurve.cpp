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

#include "cmtorsion/ellcurve.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cmtorsion {

EllipticCurve::EllipticCurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (4 * a_ * a_ * a_ + 27 * b_ * b_ == 0) {
    throw SingularCurve("singular curve: 4a^3 + 27b^2 = 0 for a = " + to_string(a_) +
                        ", b = " + to_string(b_));
  }
}

Rational EllipticCurve::discriminant() const { return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_); }

Rational EllipticCurve::j_invariant() const {
  Rational a3 = 4 * a_ * a_ * a_;
  return 1728 * a3 / (a3 + 27 * b_ * b_);
}

Poly EllipticCurve::rhs() const { return Poly{b_, a_, 0, 1}; }

std::string to_string(const EllipticCurve& E) { return "y^2 = " + to_string(E.rhs()); }

EllipticCurve quadratic_twist(const EllipticCurve& E, const BigInt& d) {
  if (d == 0) throw std::invalid_argument("quadratic_twist: d must be nonzero");
  if (squarefree_part(Rational(d)) != d) {
    throw std::invalid_argument("quadratic_twist: d = " + to_string(d) + " is not squarefree");
  }
  Rational dq(d);
  return EllipticCurve(dq * dq * E.a(), dq * dq * dq * E.b());
}

int primitive_division_degree(int n) {
  if (n < 2) throw std::invalid_argument("primitive_division_degree: n must be at least 2");
  if (n == 2) return 3;
  long long d = static_cast<long long>(n) * n;
  int m = n;
  for (int p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    d = d / (p * p) * (p * p - 1);
  }
  return static_cast<int>(d / 2);
}

DivisionTower::DivisionTower(EllipticCurve E) : E_(std::move(E)) {}

const Poly& DivisionTower::f(int n) {
  if (n < 0) throw std::invalid_argument("division polynomial index must be non-negative");
  auto it = f_.find(n);
  if (it != f_.end()) return it->second;
  const Rational& a = E_.a();
  const Rational& b = E_.b();
  Poly out;
  if (n == 0) {
    out = Poly();
  } else if (n <= 2) {
    out = Poly::constant(1);
  } else if (n == 3) {
    out = Poly{-a * a, 12 * b, 6 * a, 0, 3};
  } else if (n == 4) {
    out = Poly{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1} * Rational(2);
  } else if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    Poly F = E_.rhs();
    Poly F2 = F * F * Rational(16);
    const Poly &fm2 = f(m + 2), &fm1 = f(m + 1), &fm = f(m), &fm_1 = f(m - 1);
    if (m % 2 == 0) {
      out = F2 * fm2 * pow(fm, 3) - fm_1 * pow(fm1, 3);
    } else {
      out = fm2 * pow(fm, 3) - F2 * fm_1 * pow(fm1, 3);
    }
  } else {
    const int m = n / 2;
    const Poly &fm2 = f(m + 2), &fm1 = f(m + 1), &fm = f(m), &fm_1 = f(m - 1), &fm_2 = f(m - 2);
    out = fm * (fm2 * fm_1 * fm_1 - fm_2 * fm1 * fm1);
  }
  return f_.emplace(n, std::move(out)).first->second;
}

const Poly& DivisionTower::classical(int n) {
  if (n < 1) throw std::invalid_argument("division_polynomial: n must be at least 1");
  auto it = classical_.find(n);
  if (it != classical_.end()) return it->second;
  Poly out = n % 2 == 1 ? f(n) : E_.rhs() * f(n);
  return classical_.emplace(n, std::move(out)).first->second;
}

const Poly& DivisionTower::primitive(int n) {
  if (n < 2) throw std::invalid_argument("primitive_division_polynomial: n must be at least 2");
  auto it = primitive_.find(n);
  if (it != primitive_.end()) return it->second;
  Poly out = classical(n);
  for (int m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    Poly pm = primitive(m);
    try {
      out = exact_div(out, pm);
    } catch (const InexactDivision&) {
      throw std::logic_error("primitive division polynomial " + std::to_string(m) +
                             " does not divide division polynomial " + std::to_string(n));
    }
  }
  if (out.degree() != primitive_division_degree(n)) {
    throw std::logic_error("primitive division polynomial " + std::to_string(n) + " has degree " +
                           std::to_string(out.degree()) + ", expected " +
                           std::to_string(primitive_division_degree(n)));
  }
  return primitive_.emplace(n, std::move(out)).first->second;
}

const FactorList& DivisionTower::factorization(int n) {
  auto it = factors_.find(n);
  if (it != factors_.end()) return it->second;
  FactorList fl = factor_poly(primitive(n));
  return factors_.emplace(n, std::move(fl)).first->second;
}

Poly division_polynomial(const EllipticCurve& E, int n) {
  DivisionTower t(E);
  return t.classical(n);
}

Poly primitive_division_polynomial(const EllipticCurve& E, int n) {
  DivisionTower t(E);
  return t.primitive(n);
}

std::string TorsionGroup::name() const {
  if (n1 == 1) return "C" + std::to_string(n2);
  return "C" + std::to_string(n1) + "xC" + std::to_string(n2);
}

TorsionGroup TorsionGroup::parse(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("malformed group name '" + s + "'"); };
  auto read = [&](std::size_t& i) {
    if (i >= s.size() || s[i] != 'C') throw bad();
    ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || i - start > 6) throw bad();
    int v = std::stoi(s.substr(start, i - start));
    if (v < 1) throw bad();
    return v;
  };
  std::size_t i = 0;
  int first = read(i);
  if (i == s.size()) return cyclic(first);
  if (s[i] != 'x') throw bad();
  ++i;
  int second = read(i);
  if (i != s.size() || first < 2 || second % first != 0) throw bad();
  return {first, second};
}

int elements_of_order(const TorsionGroup& G, int m) {
  int count = 0;
  for (int i = 0; i < G.n1; ++i) {
    for (int j = 0; j < G.n2; ++j) {
      int oi = G.n1 / std::gcd(i, G.n1);
      int oj = G.n2 / std::gcd(j, G.n2);
      if (std::lcm(oi, oj) == m) ++count;
    }
  }
  return count;
}

const std::vector<int>& default_torsion_orders() {
  static const std::vector<int> orders{2, 3, 4, 7, 9};
  return orders;
}

namespace {

bool is_prime_small(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Prime p with n = p^k, k >= 1, else 0.
int prime_base(int n) {
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    int m = n;
    while (m % p == 0) m /= p;
    return (m == 1 && is_prime_small(p)) ? p : 0;
  }
  return 0;
}

template <typename T, typename RootsFn, typename SqrtFn>
TorsionResult<T> compute_torsion(const EllipticCurve& E, DivisionTower& tower, const std::vector<int>& orders,
                                 RootsFn roots_of, SqrtFn sqrt_of) {
  std::map<int, std::vector<Point<T>>> points;
  for (int m : orders) {
    auto& pts = points[m];
    for (const T& x : roots_of(tower.factorization(m))) {
      T v = x * x * x + x * E.a() + detail::embed(x, E.b());
      if (m == 2) {
        pts.emplace_back(x, v);  // v == 0
        continue;
      }
      auto y = sqrt_of(v);
      if (!y) continue;
      pts.emplace_back(x, *y);
      pts.emplace_back(x, -*y);
    }
  }

  // Infer each primary part from the counts of points of order p and p^k.
  TorsionGroup G;
  std::map<int, int> exponent;  // prime -> largest order found
  for (int m : orders) {
    const int p = prime_base(m);
    if (p == 0 || m != p) continue;
    const int c = static_cast<int>(points[p].size());
    int rank;
    if (c == 0) {
      rank = 0;
    } else if (c == p - 1) {
      rank = 1;
    } else if (c == p * p - 1) {
      rank = 2;
    } else {
      throw std::logic_error("torsion: " + std::to_string(c) + " points of order " + std::to_string(p));
    }
    if (rank == 0) continue;
    int top = p;
    for (int q : orders) {
      if (prime_base(q) == p && q > top && !points[q].empty()) top = q;
    }
    exponent[p] = top;
    G.n2 *= top;
    if (rank == 2) G.n1 *= p;
  }
  for (int m : orders) {
    if (elements_of_order(G, m) != static_cast<int>(points[m].size())) {
      throw std::logic_error("torsion: " + std::to_string(points[m].size()) + " points of order " +
                             std::to_string(m) + " do not fit " + G.name());
    }
  }

  TorsionResult<T> out;
  out.group = G;
  if (G.n2 == 1) return out;
  std::optional<Point<T>> Q;
  for (const auto& [p, top] : exponent) {
    const Point<T>& P = points[top].front();
    Q = Q ? detail::add_unchecked(E, *Q, P) : P;
  }
  if (point_order(E, *Q, G.n2) != G.n2) throw std::logic_error("torsion: generator has the wrong order");
  out.generators.push_back(*Q);
  if (G.n1 > 1) {
    std::optional<Point<T>> R;
    for (const auto& [p, top] : exponent) {
      if ((G.n1 % p) != 0) continue;
      Point<T> sub = point_mul(E, G.n2 / p, *Q);
      for (const auto& cand : points[p]) {
        bool inside = false;
        Point<T> mult = Point<T>::infinity();
        for (int i = 0; i < p; ++i) {
          if (mult == cand) inside = true;
          mult = detail::add_unchecked(E, mult, sub);
        }
        if (!inside) {
          R = R ? detail::add_unchecked(E, *R, cand) : cand;
          break;
        }
      }
    }
    if (!R || point_order(E, *R, G.n1) != G.n1) {
      throw std::logic_error("torsion: no second generator of order " + std::to_string(G.n1));
    }
    out.generators.push_back(*R);
  }
  return out;
}

}  // namespace

TorsionResult<Rational> torsion_over_base(const EllipticCurve& E, DivisionTower& tower,
                                          const std::vector<int>& orders) {
  if (!(tower.curve() == E)) throw std::invalid_argument("torsion_over_base: tower belongs to another curve");
  auto roots = [](const FactorList& fl) {
    std::vector<Rational> r;
    for (const auto& [p, mult] : fl.factors) {
      if (p.degree() == 1) r.push_back(-p[0]);
    }
    std::sort(r.begin(), r.end());
    return r;
  };
  auto sqrt = [](const Rational& v) { return is_perfect_power(v, 2); };
  return compute_torsion<Rational>(E, tower, orders, roots, sqrt);
}

TorsionResult<FieldElem> torsion_over_base(const EllipticCurve& E, const CubicField& K, DivisionTower& tower,
                                           const std::vector<int>& orders) {
  if (!(tower.curve() == E)) throw std::invalid_argument("torsion_over_base: tower belongs to another curve");
  auto roots = [&K](const FactorList& fl) { return roots_in_field(fl, K); };
  auto sqrt = [](const FieldElem& v) { return is_square(v); };
  return compute_torsion<FieldElem>(E, tower, orders, roots, sqrt);
}

TorsionResult<Rational> torsion_over_base(const EllipticCurve& E) {
  DivisionTower tower(E);
  return torsion_over_base(E, tower);
}

TorsionResult<FieldElem> torsion_over_base(const EllipticCurve& E, const CubicField& K) {
  DivisionTower tower(E);
  return torsion_over_base(E, K, tower);
}

}  // namespace cmtorsion
