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

// Small defining polynomials for cubic fields. The order Z[a] is enlarged at
// small primes, its basis is LLL-reduced for the quadratic form
// T2(x) = sum |sigma_i(x)|^2, and short lattice elements are tried as
// generators. Floating point only steers the search; every candidate is an
// exact element of K whose characteristic polynomial is checked to be
// squarefree, so it defines K itself.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "cmtorsion/numberfield.hpp"

namespace cmtorsion {

namespace {

using Vec = std::array<Rational, 3>;
using Mat = std::array<Vec, 3>;
using Cplx = std::complex<long double>;

constexpr long kMaxOrderPrime = 500;
constexpr int kSearchRadius = 2;

Mat matrix_of(const FieldElem& e) {
  Mat m;
  FieldElem col = e;
  const FieldElem a = e.field().generator();
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) m[i][j] = col.coords()[i];
    if (j < 2) col *= a;
  }
  return m;
}

// Trace, sum of principal 2-minors and determinant.
std::array<Rational, 3> invariants(const Mat& m) {
  Rational tr = m[0][0] + m[1][1] + m[2][2];
  Rational s2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                m[1][1] * m[2][2] - m[1][2] * m[2][1];
  Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return {tr, s2, det};
}

unsigned long mod_inverse(unsigned long a, unsigned long p) {
  BigInt r, A(a), P(p);
  mpz_invert(r.get_mpz_t(), A.get_mpz_t(), P.get_mpz_t());
  return r.get_ui();
}

bool integral(const std::array<Rational, 3>& inv) {
  return inv[0].get_den() == 1 && inv[1].get_den() == 1 && inv[2].get_den() == 1;
}

// Hermite basis of the Z-span of rows (full rank assumed).
std::array<Vec, 3> hermite(const std::vector<Vec>& rows) {
  BigInt L = 1;
  for (const auto& r : rows) {
    for (const auto& c : r) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<std::array<BigInt, 3>> z;
  for (const auto& r : rows) {
    std::array<BigInt, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = Rational(r[i] * L).get_num();
    z.push_back(v);
  }
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = j + 1; i < z.size(); ++i) {
      while (z[i][j] != 0) {
        BigInt q = z[j][j] / z[i][j];
        for (int c = 0; c < 3; ++c) z[j][c] -= q * z[i][c];
        std::swap(z[j], z[i]);
      }
    }
  }
  std::array<Vec, 3> out;
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 3; ++c) out[i][c] = make_rational(z[i][c], L);
  }
  return out;
}

// h(x + t) Eisenstein at p for some t: Z[a] is then p-maximal.
bool shifted_eisenstein(const Poly& h, long p) {
  const BigInt P(p), P2 = P * P;
  for (long t = 0; t < p; ++t) {
    Poly s = Poly();
    for (int i = h.degree(); i >= 0; --i) s = s * Poly{Rational(t), 1} + Poly::constant(h[i]);
    bool ok = mpz_divisible_p(s[0].get_num_mpz_t(), P2.get_mpz_t()) == 0;
    for (int i = 0; i < 3 && ok; ++i) ok = mpz_divisible_p(s[i].get_num_mpz_t(), P.get_mpz_t()) != 0;
    if (ok) return true;
  }
  return false;
}

// An element of (1/p) * span(b) that is integral but outside span(b).
std::optional<Vec> p_integral_element(const CubicField& K, const std::array<Vec, 3>& b, long p) {
  std::array<Mat, 3> m;
  std::array<long, 3> tr;
  for (int i = 0; i < 3; ++i) {
    m[i] = matrix_of(FieldElem(K, b[i]));
    BigInt t = invariants(m[i])[0].get_num();
    tr[i] = static_cast<long>(mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(p)));
  }
  auto test = [&](const std::array<long, 3>& c) -> std::optional<Vec> {
    Mat n;
    for (int r = 0; r < 3; ++r) {
      for (int col = 0; col < 3; ++col) {
        n[r][col] = (c[0] * m[0][r][col] + c[1] * m[1][r][col] + c[2] * m[2][r][col]) / p;
      }
    }
    if (!integral(invariants(n))) return std::nullopt;
    Vec v;
    for (int i = 0; i < 3; ++i) v[i] = (c[0] * b[0][i] + c[1] * b[1][i] + c[2] * b[2][i]) / p;
    return v;
  };
  // The trace of the new element must be integral, which fixes one
  // coordinate modulo p once the other two are chosen.
  int pivot = -1;
  for (int i = 0; i < 3; ++i) {
    if (tr[i] != 0) pivot = i;
  }
  if (pivot < 0) {
    if (p > 50) return std::nullopt;
    for (long c2 = 0; c2 < p; ++c2) {
      for (long c1 = 0; c1 < p; ++c1) {
        for (long c0 = 0; c0 < p; ++c0) {
          if (c0 == 0 && c1 == 0 && c2 == 0) continue;
          if (auto v = test({c0, c1, c2})) return v;
        }
      }
    }
    return std::nullopt;
  }
  const int i1 = (pivot + 1) % 3, i2 = (pivot + 2) % 3;
  const long inv = static_cast<long>(
      mod_inverse(static_cast<unsigned long>(tr[pivot]), static_cast<unsigned long>(p)));
  for (long u = 0; u < p; ++u) {
    for (long w = 0; w < p; ++w) {
      std::array<long, 3> c{};
      c[i1] = u;
      c[i2] = w;
      long rest = (u * tr[i1] + w * tr[i2]) % p;
      c[pivot] = ((p - rest) % p) * inv % p;
      if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
      if (auto v = test(c)) return v;
    }
  }
  return std::nullopt;
}

std::array<Vec, 3> enlarge_order(const CubicField& K) {
  const Poly& h = K.defining_poly();
  std::array<Vec, 3> b{Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}};
  BigInt d = abs(discriminant(h).get_num());
  for (long p = 2; p <= kMaxOrderPrime; ++p) {
    if (!is_probable_prime(BigInt(p))) continue;
    const unsigned long p2 = static_cast<unsigned long>(p * p);
    if (!mpz_divisible_ui_p(d.get_mpz_t(), p2) || shifted_eisenstein(h, p)) continue;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p2)) {
      auto found = p_integral_element(K, b, p);
      if (!found) break;
      b = hermite({b[0], b[1], b[2], *found});
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p2);
    }
  }
  return b;
}

// Durand-Kerner on a monic cubic.
std::array<Cplx, 3> complex_roots(const Poly& g) {
  const long double c0 = g[0].get_d(), c1 = g[1].get_d(), c2 = g[2].get_d();
  long double radius = 1 + std::max({std::fabs(c0), std::fabs(c1), std::fabs(c2)});
  std::array<Cplx, 3> z;
  for (int i = 0; i < 3; ++i) z[i] = std::polar(radius, 0.4L + 2.0943951L * i);
  auto f = [&](Cplx x) { return ((x + c2) * x + c1) * x + c0; };
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (int i = 0; i < 3; ++i) {
      Cplx den = 1;
      for (int j = 0; j < 3; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      Cplx step = f(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

struct T2Form {
  std::array<Cplx, 3> roots;

  std::array<Cplx, 3> embed(const Vec& v) const {
    std::array<Cplx, 3> e;
    const long double a = v[0].get_d(), b = v[1].get_d(), c = v[2].get_d();
    for (int i = 0; i < 3; ++i) e[i] = a + roots[i] * (b + roots[i] * c);
    return e;
  }
  long double dot(const Vec& u, const Vec& v) const {
    auto eu = embed(u), ev = embed(v);
    long double s = 0;
    for (int i = 0; i < 3; ++i) s += (eu[i] * std::conj(ev[i])).real();
    return s;
  }
};

void lll(std::array<Vec, 3>& b, const T2Form& q) {
  auto sub = [](Vec& x, const Vec& y, const BigInt& k) {
    for (int i = 0; i < 3; ++i) x[i] -= Rational(k) * y[i];
  };
  int k = 1;
  for (int guard = 0; k < 3 && guard < 1000; ++guard) {
    // Gram-Schmidt from scratch; dimension 3 makes this cheap.
    long double mu[3][3] = {}, bn[3];
    std::array<std::array<long double, 3>, 3> g;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g[i][j] = q.dot(b[i], b[j]);
    }
    for (int i = 0; i < 3; ++i) {
      bn[i] = g[i][i];
      for (int j = 0; j < i; ++j) {
        long double s = g[i][j];
        for (int l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * bn[l];
        mu[i][j] = s / bn[j];
        bn[i] -= mu[i][j] * mu[i][j] * bn[j];
      }
    }
    bool reduced = false;
    for (int j = k - 1; j >= 0; --j) {
      long double r = std::nearbyint(mu[k][j]);
      if (r != 0 && std::isfinite(r)) {
        BigInt rr;
        mpz_set_d(rr.get_mpz_t(), static_cast<double>(r));
        sub(b[k], b[j], rr);
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    if (bn[k] >= (0.99L - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      k = std::max(k - 1, 1);
    }
  }
}

bool squarefree_cubic(const Poly& f) { return f.degree() == 3 && gcd(f, f.derivative()).degree() == 0; }

}  // namespace

Poly reduced_defining_poly(const CubicField& K) {
  const Poly& g = K.defining_poly();
  // alpha' = d * alpha has an integral minimal polynomial.
  BigInt d = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  const CubicField Kz(g.scale_arg(Rational(1, d)) * Rational(d * d * d));
  const Poly& h = Kz.defining_poly();

  auto basis = enlarge_order(Kz);
  lll(basis, T2Form{complex_roots(h)});

  Poly best = h;
  auto better = [](const Poly& a, const Poly& b) {
    BigInt ha = 0, hb = 0;
    for (const auto& c : a.coeffs()) ha = std::max<BigInt>(ha, abs(c.get_num()) * c.get_den());
    for (const auto& c : b.coeffs()) hb = std::max<BigInt>(hb, abs(c.get_num()) * c.get_den());
    if (ha != hb) return ha < hb;
    for (int i = 2; i >= 0; --i) {
      if (abs(a[i]) != abs(b[i])) return abs(a[i]) < abs(b[i]);
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  };
  const int R = kSearchRadius;
  for (int x = -R; x <= R; ++x) {
    for (int y = -R; y <= R; ++y) {
      for (int z = -R; z <= R; ++z) {
        Vec v;
        for (int i = 0; i < 3; ++i) v[i] = x * basis[0][i] + y * basis[1][i] + z * basis[2][i];
        Poly cp = characteristic_poly(FieldElem(Kz, v));
        if (squarefree_cubic(cp) && better(cp, best)) best = cp;
      }
    }
  }
  return best;
}

}  // namespace cmtorsion
