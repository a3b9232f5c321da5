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

#include "cmtorsion/numberfield.hpp"

#include <algorithm>

#include "cmtorsion/polyfactor.hpp"
#include "modp.hpp"

namespace cmtorsion {

struct CubicField::Data {
  Poly g;
  // alpha^3 and alpha^4 in the basis 1, alpha, alpha^2.
  std::array<Rational, 3> x3, x4;
};

namespace {

using KPoly = std::vector<FieldElem>;

constexpr int kPrefilterPrimes = 6;
constexpr std::uint64_t kPrefilterLimit = 2000;

void ktrim(KPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int kdeg(const KPoly& f) { return static_cast<int>(f.size()) - 1; }

KPoly kmonic(KPoly f) {
  FieldElem inv = f.back().inverse();
  for (auto& c : f) c *= inv;
  return f;
}

KPoly kfrom(const Poly& f, const CubicField& K) {
  KPoly out;
  for (const auto& c : f.coeffs()) out.emplace_back(K, c);
  return out;
}

KPoly kmod(KPoly a, const KPoly& b) {
  const int db = kdeg(b);
  const FieldElem inv = b.back().inverse();
  ktrim(a);
  while (kdeg(a) >= db) {
    const int shift = kdeg(a) - db;
    FieldElem t = a.back() * inv;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= t * b[static_cast<std::size_t>(j)];
    a.pop_back();
    ktrim(a);
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    KPoly r = kmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return kmonic(std::move(a));
}

// f(y + c)
KPoly kshift(const KPoly& f, const FieldElem& c) {
  const CubicField& K = c.field();
  KPoly out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    // out = out * (y + c) + coef
    KPoly next(out.size() + 1, FieldElem(K, 0));
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] += out[i] * c;
    }
    next[0] += *it;
    out = std::move(next);
  }
  ktrim(out);
  return out;
}

// Matrix of multiplication by e in the basis 1, alpha, alpha^2; column j holds
// the coordinates of e * alpha^j.
std::array<std::array<Rational, 3>, 3> mult_matrix(const FieldElem& e) {
  std::array<std::array<Rational, 3>, 3> m;
  FieldElem col = e;
  const FieldElem a = e.field().generator();
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) m[i][j] = col.coords()[static_cast<std::size_t>(i)];
    if (j < 2) col *= a;
  }
  return m;
}

template <typename T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Norm from K[y] down to Q[y].
Poly norm_poly(const KPoly& f) {
  std::array<std::array<Poly, 3>, 3> m;
  for (std::size_t j = 0; j < f.size(); ++j) {
    auto mj = mult_matrix(f[j]);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (mj[r][c] != 0) m[r][c] += Poly::monomial(mj[r][c], static_cast<int>(j));
      }
    }
  }
  return det3(m);
}

bool squarefree(const Poly& f) { return gcd(f, f.derivative()).degree() == 0; }

// Monic irreducible factors over K of a squarefree f of positive degree.
std::vector<KPoly> trager_factor(const KPoly& f0, const CubicField& K) {
  KPoly f = kmonic(f0);
  if (kdeg(f) == 1) return {f};
  const FieldElem alpha = K.generator();
  for (int s = 0; s < 64; ++s) {
    const FieldElem shift = alpha * Rational(-s);
    KPoly fs = s == 0 ? f : kshift(f, shift);
    Poly n = norm_poly(fs);
    if (!squarefree(n)) continue;
    FactorList fl = factor_poly(n);
    if (fl.factors.size() == 1) return {f};
    std::vector<KPoly> out;
    for (const auto& [ni, mult] : fl.factors) {
      KPoly h = kgcd(fs, kfrom(ni, K));
      if (kdeg(h) <= 0) continue;
      out.push_back(s == 0 ? h : kmonic(kshift(h, alpha * Rational(s))));
    }
    int total = 0;
    for (const auto& h : out) total += kdeg(h);
    if (total != kdeg(f)) throw std::logic_error("trager_factor: factor degrees do not add up");
    return out;
  }
  throw std::logic_error("trager_factor: no squarefree norm found");
}

bool coord_less(const FieldElem& a, const FieldElem& b) {
  return a.coords() < b.coords();
}

FieldElem normalize_sign(FieldElem w) {
  for (const auto& c : w.coords()) {
    if (c != 0) {
      if (c < 0) w = -w;
      break;
    }
  }
  return w;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  return num * detail::mod_inv(den, p) % p;
}

bool p_integral(const Rational& q, std::uint64_t p) {
  return !mpz_divisible_ui_p(q.get_den_mpz_t(), p);
}

// A rigorous non-square certificate: in a residue field F_p[x]/(g) with g
// irreducible mod p, e^((p^3-1)/2) = -1.
bool modular_nonsquare(const FieldElem& e) {
  const Poly& g = e.field().defining_poly();
  int tried = 0;
  for (std::uint64_t p = 5; p < kPrefilterLimit && tried < kPrefilterPrimes; p += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    bool ok = true;
    for (const auto& c : g.coeffs()) ok = ok && p_integral(c, p);
    for (const auto& c : e.coords()) ok = ok && p_integral(c, p);
    if (!ok) continue;
    detail::ModPoly gp, ep;
    for (const auto& c : g.coeffs()) gp.push_back(reduce_mod(c, p));
    for (const auto& c : e.coords()) ep.push_back(reduce_mod(c, p));
    detail::mtrim(gp);
    detail::mtrim(ep);
    if (ep.empty()) continue;
    if (detail::mfactor_degrees(gp, p) != std::vector<int>{3}) continue;
    ++tried;
    BigInt ex;
    mpz_ui_pow_ui(ex.get_mpz_t(), p, 3);
    ex = (ex - 1) / 2;
    detail::ModPoly r = detail::mpowmod(ep, ex, gp, p);
    if (r.size() == 1 && r[0] == p - 1) return true;
  }
  return false;
}

}  // namespace

CubicField::CubicField(const Poly& g0) {
  if (g0.degree() != 3) throw std::invalid_argument("CubicField: defining polynomial must be cubic");
  Poly g = g0.monic();
  FactorList fl = factor_poly(g);
  if (fl.factors.size() != 1 || fl.factors[0].second != 1) {
    throw std::invalid_argument("CubicField: defining polynomial " + to_string(g) + " is reducible");
  }
  auto d = std::make_shared<Data>();
  d->g = g;
  d->x3 = {-g[0], -g[1], -g[2]};
  // alpha^4 = alpha * alpha^3
  d->x4 = {Rational(0) + d->x3[2] * d->x3[0], d->x3[0] + d->x3[2] * d->x3[1],
           d->x3[1] + d->x3[2] * d->x3[2]};
  d_ = std::move(d);
}

const Poly& CubicField::defining_poly() const { return d_->g; }

FieldElem CubicField::generator() const { return FieldElem(*this, {Rational(0), Rational(1), Rational(0)}); }

FieldElem CubicField::element(const Rational& c0, const Rational& c1, const Rational& c2) const {
  return FieldElem(*this, {c0, c1, c2});
}

bool operator==(const CubicField& a, const CubicField& b) {
  return a.d_ == b.d_ || a.d_->g == b.d_->g;
}

FieldElem::FieldElem(const CubicField& K, const Rational& q) : K_(K), c_{q, 0, 0} {}

FieldElem::FieldElem(const CubicField& K, std::array<Rational, 3> coords) : K_(K), c_(std::move(coords)) {}

bool FieldElem::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

bool FieldElem::is_rational() const { return c_[1] == 0 && c_[2] == 0; }

void FieldElem::check_same(const FieldElem& o) const {
  if (!(K_ == o.K_)) throw std::invalid_argument("field elements from different fields");
}

FieldElem FieldElem::operator-() const { return FieldElem(K_, {-c_[0], -c_[1], -c_[2]}); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  const auto& a = c_;
  const auto& b = o.c_;
  Rational p0 = a[0] * b[0];
  Rational p1 = a[0] * b[1] + a[1] * b[0];
  Rational p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  Rational p3 = a[1] * b[2] + a[2] * b[1];
  Rational p4 = a[2] * b[2];
  const auto& d = *K_.d_;
  std::array<Rational, 3> out{p0, p1, p2};
  for (int i = 0; i < 3; ++i) {
    if (p3 != 0) out[i] += p3 * d.x3[i];
    if (p4 != 0) out[i] += p4 * d.x4[i];
  }
  c_ = std::move(out);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (is_rational()) return FieldElem(K_, Rational(1 / c_[0]));
  // Solve M x = e_0 by Cramer's rule.
  auto m = mult_matrix(*this);
  Rational det = det3(m);
  std::array<Rational, 3> x;
  for (int k = 0; k < 3; ++k) {
    auto mk = m;
    for (int r = 0; r < 3; ++r) mk[r][k] = r == 0 ? 1 : 0;
    x[k] = det3(mk) / det;
  }
  return FieldElem(K_, x);
}

bool operator==(const FieldElem& a, const FieldElem& b) { return a.K_ == b.K_ && a.c_ == b.c_; }

FieldElem pow(const FieldElem& e, long long n) {
  FieldElem base = n < 0 ? e.inverse() : e;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  FieldElem out(e.field(), Rational(1));
  while (k) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return out;
}

Rational norm(const FieldElem& e) { return det3(mult_matrix(e)); }

std::optional<FieldElem> is_square(const FieldElem& e) {
  const CubicField& K = e.field();
  if (e.is_zero()) return e;
  if (e.is_rational()) {
    // An odd degree field has no quadratic subfield.
    auto r = is_perfect_power(e.coords()[0], 2);
    if (!r) return std::nullopt;
    return FieldElem(K, *r);
  }
  auto n = is_perfect_power(norm(e), 2);
  if (!n) return std::nullopt;
  if (modular_nonsquare(e)) return std::nullopt;
  KPoly f{-e, FieldElem(K, 0), FieldElem(K, 1)};
  for (const auto& h : trager_factor(f, K)) {
    if (kdeg(h) != 1) continue;
    FieldElem w = normalize_sign(-h[0]);
    if (!(w * w == e)) throw std::logic_error("is_square: witness does not square to the input");
    return w;
  }
  return std::nullopt;
}

TwistWitness twist_witness(const FieldElem& e) {
  if (e.is_zero()) throw std::domain_error("twist_witness: zero element");
  BigInt d = squarefree_part(norm(e));
  FieldElem q = e * Rational(1 / Rational(d));
  auto w = is_square(q);
  if (!w) throw NoSquarefreeTwist("twist_witness: " + to_string(e) + " is not d times a square");
  return {d, *w};
}

std::vector<FieldElem> roots_in_field(const Poly& f, const CubicField& K) {
  if (f.is_zero()) throw std::domain_error("roots_in_field: zero polynomial");
  if (f.degree() < 1) return {};
  auto roots = roots_in_field(factor_poly(f), K);
  for (const auto& r : roots) {
    if (!evaluate(f, r).is_zero()) throw std::logic_error("roots_in_field: reported root is not a root");
  }
  return roots;
}

std::vector<FieldElem> roots_in_field(const FactorList& fl, const CubicField& K) {
  std::vector<FieldElem> roots;
  for (const auto& [p, mult] : fl.factors) {
    if (p.degree() == 1) {
      roots.emplace_back(K, -p[0]);
    } else if (p.degree() == 3) {
      // The minimal polynomial of an element of K has degree 1 or 3.
      for (const auto& h : trager_factor(kfrom(p, K), K)) {
        if (kdeg(h) != 1) continue;
        FieldElem r = -h[0];
        if (!evaluate(p, r).is_zero()) throw std::logic_error("roots_in_field: reported root is not a root");
        roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), coord_less);
  return roots;
}

bool galois_cubic_test(const Poly& g) {
  if (g.degree() != 3) throw std::invalid_argument("galois_cubic_test: cubic required");
  FactorList fl = factor_poly(g);
  if (fl.factors.size() != 1 || fl.factors[0].second != 1) {
    throw std::invalid_argument("galois_cubic_test: reducible cubic");
  }
  return is_perfect_power(discriminant(g), 2).has_value();
}

bool fields_isomorphic(const CubicField& a, const CubicField& b) {
  if (a == b) return true;
  // Discriminants of the defining polynomials agree up to rational squares.
  Rational ratio = discriminant(a.defining_poly()) / discriminant(b.defining_poly());
  if (!is_perfect_power(ratio, 2)) return false;
  return !roots_in_field(b.defining_poly(), a).empty();
}

std::string to_string(const FieldElem& e) {
  Poly p({e.coords()[0], e.coords()[1], e.coords()[2]});
  return to_string(p, "a");
}

std::array<std::string, 3> to_coord_strings(const FieldElem& e) {
  return {to_fraction_string(e.coords()[0]), to_fraction_string(e.coords()[1]),
          to_fraction_string(e.coords()[2])};
}

FieldElem evaluate(const Poly& f, const FieldElem& e) {
  FieldElem acc(e.field(), Rational(0));
  for (int i = f.degree(); i >= 0; --i) {
    acc *= e;
    acc += FieldElem(e.field(), f[i]);
  }
  return acc;
}

Poly characteristic_poly(const FieldElem& e) {
  auto m = mult_matrix(e);
  std::array<std::array<Poly, 3>, 3> xm;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) xm[r][c] = Poly::constant(-m[r][c]) + (r == c ? Poly::x() : Poly());
  }
  return det3(xm);
}

}  // namespace cmtorsion
