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

#include "cmtorsion/poly.hpp"

#include <algorithm>

#include "cmtorsion/polyfactor.hpp"
#include "zpoly.hpp"

namespace cmtorsion {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::lead() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  Rational inv = 1 / lead();
  out *= inv;
  return out;
}

Poly Poly::scale_arg(const Rational& c) const {
  Poly out = *this;
  Rational f = 1;
  for (auto& coef : out.c_) {
    coef *= f;
    f *= c;
  }
  out.trim();
  return out;
}

bool Poly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  // Multiply over Z after clearing denominators; far fewer gcds than
  // coefficient-wise rational products.
  if (a.is_integral() && b.is_integral()) {
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    std::vector<BigInt> acc(out.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), a.c_[i].get_num_mpz_t(), b.c_[j].get_num_mpz_t());
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = Rational(acc[k]);
    return Poly(std::move(out));
  }
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Poly pow(const Poly& p, unsigned e) {
  Poly out = Poly::constant(1), base = p;
  while (e) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

PolyDivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv = 1 / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational t = top * inv;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * b[j];
    quot[static_cast<std::size_t>(i - db)] = t;
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InexactDivision("exact_div: nonzero remainder " + to_string(r));
  return q;
}

Poly mod(const Poly& a, const Poly& b) { return divrem(a, b).rem; }

IntegerPrimitive integer_primitive(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("integer_primitive: zero polynomial");
  BigInt den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> z;
  z.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) z.push_back(c.get_num() * (den / c.get_den()));
  BigInt g = detail::zcontent(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {make_rational(g, den), std::move(z)};
}

Poly from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto za = integer_primitive(a).coeffs;
  auto zb = integer_primitive(b).coeffs;
  return from_integers(detail::zgcd(za, zb)).monic();
}

Rational resultant(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  Poly a = a0, b = b0;
  Rational acc = 1;
  // Res(a, b) = (-1)^(deg a deg b) Res(b, a); Res(b, a) = lc(b)^(deg a - deg r) Res(b, r).
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return acc * pow(b.lead(), static_cast<unsigned>(m));
    if (m == 0) return acc * pow(a.lead(), static_cast<unsigned>(n));
    Poly r = mod(a, b);
    if (r.is_zero()) return 0;
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc *= pow(b.lead(), static_cast<unsigned>(m - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const Poly& f) {
  const int n = f.degree();
  if (n < 2) throw std::invalid_argument("discriminant: degree must be at least 2");
  Rational r = resultant(f, f.derivative()) / f.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::vector<Rational> rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  FactorList fl = factor_poly(f);
  for (const auto& [p, mult] : fl.factors) {
    if (p.degree() != 1) continue;
    for (unsigned i = 0; i < mult; ++i) roots.push_back(-p[0]);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string term;
    if (i == 0) {
      term = to_string(mag);
    } else {
      if (mag != 1) term = to_string(mag) + "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out;
}

std::vector<std::string> to_dense(const Poly& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(to_fraction_string(c));
  return out;
}

Poly from_dense(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  for (const auto& s : coeffs) v.push_back(parse_rational(s));
  return Poly(std::move(v));
}

}  // namespace cmtorsion
