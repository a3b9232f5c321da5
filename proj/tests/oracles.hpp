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

// Slow, simple reference implementations used only by the tests. None of
// them call into the library algorithms they are checking.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "cmtorsion/exactnum.hpp"
#include "cmtorsion/poly.hpp"

namespace oracle {

using cmtorsion::BigInt;
using cmtorsion::Poly;
using cmtorsion::Rational;

inline bool is_prime_naive(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Prime factorization by trial division; n must be small.
inline std::map<long, int> factor_naive(long n) {
  std::map<long, int> out;
  n = n < 0 ? -n : n;
  for (long d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// ------------------------------------------------------------------ F_p[x]

using Fp = std::vector<long>;  // lowest degree first, trimmed

inline void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Fp reduce(const Poly& f, long p) {
  Fp out;
  for (const auto& c : f.coeffs()) {
    BigInt num = c.get_num(), den = c.get_den(), inv;
    BigInt P(p);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    BigInt v = num * inv;
    out.push_back(static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p))));
  }
  trim(out);
  return out;
}

inline long inv_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Remainder of a by b over F_p; b nonzero.
inline Fp rem(Fp a, const Fp& b, long p) {
  const long inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    long t = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - t * b[i]) % p + p) % p;
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline Fp quot(Fp a, const Fp& b, long p) {
  const long inv = inv_mod(b.back(), p);
  Fp q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    long t = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - t * b[i]) % p + p) % p;
    trim(a);
  }
  return q;
}

/// Degrees of the irreducible factors of f modulo p, with multiplicity,
/// found by trial division by every monic polynomial in increasing degree.
/// f must not vanish modulo p. Exponential in deg f; keep p and deg f small.
inline std::vector<int> factor_degrees_brute(const Poly& f, long p) {
  Fp g = reduce(f, p);
  std::vector<int> out;
  for (int d = 1; static_cast<int>(g.size()) - 1 >= d;) {
    if (2 * d > static_cast<int>(g.size()) - 1) {
      out.push_back(static_cast<int>(g.size()) - 1);
      break;
    }
    bool found = false;
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count && !found; ++idx) {
      Fp h(static_cast<std::size_t>(d) + 1, 0);
      long v = idx;
      for (int i = 0; i < d; ++i) {
        h[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      h[static_cast<std::size_t>(d)] = 1;
      if (rem(g, h, p).empty()) {
        g = quot(g, h, p);
        out.push_back(d);
        found = true;
      }
    }
    if (!found) ++d;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------- resultants

/// Determinant by Gaussian elimination over Q.
inline Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational t = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= t * m[c][k];
    }
  }
  return d;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Rational sylvester_resultant(const Poly& f, const Poly& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(N, std::vector<Rational>(N));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[m - i];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g[n - i];
  }
  return det(s);
}

// ------------------------------------------------------------ torsion / Q

/// Order of E(Q)_tors for y^2 = x^3 + a x + b with integer a, b, by the
/// Nagell-Lutz theorem: torsion points are integral with y = 0 or
/// y^2 | 4a^3 + 27b^2. Candidates are enumerated and kept when some multiple
/// up to 12 is the identity (every torsion order over Q is at most 12).
inline int torsion_order_nagell_lutz(long a, long b) {
  const long D = 4 * a * a * a + 27 * b * b;
  const long absD = D < 0 ? -D : D;
  struct Pt {
    Rational x, y;
    bool inf;
  };
  auto add = [&](const Pt& P, const Pt& Q) -> Pt {
    if (P.inf) return Q;
    if (Q.inf) return P;
    Rational lam;
    if (P.x == Q.x) {
      if (P.y + Q.y == 0) return {0, 0, true};
      lam = (3 * P.x * P.x + a) / (2 * P.y);
    } else {
      lam = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x3 = lam * lam - P.x - Q.x;
    return {x3, lam * (P.x - x3) - P.y, false};
  };
  std::set<long> ys{0};
  for (long y = 1; y * y <= absD; ++y) {
    if (absD % (y * y) == 0) ys.insert(y);
  }
  int count = 1;  // the identity
  for (long y : ys) {
    // Integer roots x of x^3 + a x + b - y^2 divide its constant term, or
    // the constant term is zero.
    const long c = b - y * y;
    std::set<long> xs;
    auto consider = [&](long x) {
      BigInt X(x);
      if (X * X * X + a * X + c == 0) xs.insert(x);
    };
    if (c == 0) {
      consider(0);
      for (long x = -std::abs(a) - 1; x <= std::abs(a) + 1; ++x) consider(x);
    } else {
      const long ac = std::abs(c);
      for (long d = 1; d * d <= ac; ++d) {
        if (ac % d) continue;
        for (long e : {d, ac / d}) {
          consider(e);
          consider(-e);
        }
      }
    }
    for (long x : xs) {
      for (long sy : (y == 0 ? std::vector<long>{0} : std::vector<long>{y, -y})) {
        Pt P{Rational(x), Rational(sy), false}, Q = P;
        bool torsion = false;
        for (int n = 1; n <= 12 && !torsion; ++n) {
          if (Q.inf) {
            torsion = true;
            break;
          }
          if (Q.x.get_den() != 1) break;  // a non-integral multiple means infinite order
          Q = add(Q, P);
        }
        if (torsion) ++count;
      }
    }
  }
  return count;
}

}  // namespace oracle
