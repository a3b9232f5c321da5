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

#include "cmtorsion/polyfactor.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "modp.hpp"
#include "zpoly.hpp"

namespace cmtorsion {

namespace {

using detail::ModPoly;
using detail::u64;
using detail::ZPoly;

thread_local ScopedFactorObserver* g_observers = nullptr;
thread_local bool g_notifying = false;

constexpr int kCandidatePrimes = 10;

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 next_odd_prime(u64 p) {
  if (p < 3) return 3;
  do {
    p += 2;
  } while (!is_small_prime(p));
  return p;
}

ZPoly to_z(const ModPoly& a) {
  ZPoly out;
  out.reserve(a.size());
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// Prime p is usable for f when it keeps the degree and f stays squarefree.
bool usable_prime(const ZPoly& f, u64 p, ModPoly* reduced) {
  if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) return false;
  ModPoly fp = detail::mreduce(f, p);
  if (!detail::msquarefree(fp, p)) return false;
  if (reduced) *reduced = std::move(fp);
  return true;
}

bool quick_squarefree(const ZPoly& f) {
  u64 p = 3;
  for (int tries = 0; tries < 8; ++tries, p = next_odd_prime(p)) {
    if (usable_prime(f, p, nullptr)) return true;
  }
  return false;
}

std::vector<std::pair<Poly, unsigned>> yun(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly fp = f.derivative();
  Poly a0 = gcd(f, fp);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(fp, a0);
  Poly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

std::vector<char> subset_sums(const std::vector<int>& degs, int n) {
  std::vector<char> ok(static_cast<std::size_t>(n) + 1, 0);
  ok[0] = 1;
  for (int d : degs) {
    for (int s = n; s >= d; --s) {
      if (ok[static_cast<std::size_t>(s - d)]) ok[static_cast<std::size_t>(s)] = 1;
    }
  }
  return ok;
}

// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the same
// relations modulo m2 = m^2. h stays monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m2) {
  using namespace detail;
  ZPoly e = zsub_mod(f, zmul_mod(g, h, m2), m2);
  ZPoly q, r;
  zdivrem_monic_mod(zmul_mod(s, e, m2), h, m2, &q, &r);
  ZPoly g2 = zadd_mod(g, zadd_mod(zmul_mod(t, e, m2), zmul_mod(q, g, m2), m2), m2);
  ZPoly h2 = zadd_mod(h, r, m2);
  ZPoly b = zsub_mod(zadd_mod(zmul_mod(s, g2, m2), zmul_mod(t, h2, m2), m2), ZPoly{BigInt(1)}, m2);
  ZPoly c, d;
  zdivrem_monic_mod(zmul_mod(s, b, m2), h2, m2, &c, &d);
  s = zsub_mod(s, d, m2);
  t = zsub_mod(t, zadd_mod(zmul_mod(t, b, m2), zmul_mod(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts F = lc(F) * prod us[lo..hi) (mod p) to modulus M = p^(2^j); writes the
// monic lifted factors to out[lo..hi).
void hensel_tree(const ZPoly& F, const std::vector<ModPoly>& us, std::size_t lo, std::size_t hi,
                 u64 p, const BigInt& M, std::vector<ZPoly>& out) {
  using namespace detail;
  if (hi - lo == 1) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), M.get_mpz_t()) == 0) {
      throw std::logic_error("hensel_tree: leading coefficient not invertible");
    }
    ZPoly monic = F;
    for (auto& c : monic) c *= inv;
    zreduce(monic, M);
    out[lo] = std::move(monic);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  ModPoly g0{static_cast<u64>(mpz_fdiv_ui(F.back().get_mpz_t(), p))};
  for (std::size_t i = lo; i < mid; ++i) g0 = mmul(g0, us[i], p);
  ModPoly h0{1};
  for (std::size_t i = mid; i < hi; ++i) h0 = mmul(h0, us[i], p);
  ModPoly s0, t0;
  mbezout(g0, h0, p, &s0, &t0);
  ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
  BigInt m = static_cast<unsigned long>(p);
  while (m < M) {
    BigInt m2 = m * m;
    ZPoly Fm = F;
    zreduce(Fm, m2);
    hensel_step(Fm, g, h, s, t, m2);
    m = std::move(m2);
  }
  if (m != M) throw std::logic_error("hensel_tree: modulus overshoot");
  hensel_tree(g, us, lo, mid, p, M, out);
  hensel_tree(h, us, mid, hi, p, M, out);
}

// Next subset of {0..r-1} of the same size in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t r) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < r - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors over Z of a primitive squarefree f with lc(f) > 0 and
// f(0) != 0.
std::vector<ZPoly> zassenhaus(const ZPoly& f, std::mt19937_64& rng) {
  using namespace detail;
  const int n = zdeg(f);
  if (n <= 1) return {f};

  // Candidate primes: keep the one with fewest modular factors, intersect the
  // achievable factor degrees over all of them.
  std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 1);
  u64 best_p = 0;
  ModPoly best_f;
  std::size_t best_count = 0;
  u64 p = 3;
  for (int found = 0; found < kCandidatePrimes; p = next_odd_prime(p)) {
    ModPoly fp;
    if (!usable_prime(f, p, &fp)) continue;
    ++found;
    std::vector<int> degs = mfactor_degrees(fp, p);
    if (degs.size() == 1) return {f};
    auto sums = subset_sums(degs, n);
    int inner = 0;
    for (int s = 0; s <= n; ++s) {
      allowed[static_cast<std::size_t>(s)] &= sums[static_cast<std::size_t>(s)];
      if (s > 0 && s < n && allowed[static_cast<std::size_t>(s)]) ++inner;
    }
    if (inner == 0) return {f};
    if (best_p == 0 || degs.size() < best_count) {
      best_p = p;
      best_f = std::move(fp);
      best_count = degs.size();
    }
  }
  p = best_p;
  std::vector<ModPoly> us = mfactor(mmonic(best_f, p), p, rng);

  // Landau-Mignotte: every factor has coefficients below 2^n sqrt(n+1) max|f_i|.
  BigInt maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, BigInt(abs(c)));
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), BigInt(n + 1).get_mpz_t());
  BigInt bound = (maxc * (root + 1)) << n;
  bound *= 2 * f.back();
  BigInt M = static_cast<unsigned long>(p);
  while (M <= bound) M *= M;

  ZPoly fM = f;
  zreduce(fM, M);
  std::vector<ZPoly> lifted(us.size());
  hensel_tree(fM, us, 0, us.size(), p, M, lifted);

  std::vector<ZPoly> result;
  std::vector<ZPoly> remaining = std::move(lifted);
  ZPoly fstar = f;
  for (std::size_t s = 1; 2 * s <= remaining.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool restart;
    do {
      restart = false;
      int dsum = 0;
      for (std::size_t i : idx) dsum += zdeg(remaining[i]);
      if (!allowed[static_cast<std::size_t>(dsum)]) continue;
      const BigInt& b = fstar.back();
      // Constant term of b * prod must divide b * f*(0).
      BigInt c0 = b;
      for (std::size_t i : idx) {
        c0 *= remaining[i][0];
        mpz_mod(c0.get_mpz_t(), c0.get_mpz_t(), M.get_mpz_t());
      }
      if (c0 > M / 2) c0 -= M;
      if (c0 == 0 || !mpz_divisible_p(BigInt(b * fstar[0]).get_mpz_t(), c0.get_mpz_t())) continue;
      ZPoly g{b};
      for (std::size_t i : idx) g = zmul_mod(g, remaining[i], M);
      zsymmetric(g, M);
      ztrim(g);
      g = zprimitive(g);
      ZPoly q;
      if (!zexact_div(fstar, g, &q)) continue;
      result.push_back(g);
      fstar = zprimitive(q);
      std::vector<ZPoly> rest;
      for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
        if (j < idx.size() && idx[j] == i) {
          ++j;
          continue;
        }
        rest.push_back(std::move(remaining[i]));
      }
      remaining = std::move(rest);
      if (2 * s > remaining.size()) break;
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      restart = true;
    } while (restart || next_combination(idx, remaining.size()));
  }
  if (zdeg(fstar) > 0) result.push_back(fstar);
  return result;
}

std::vector<ZPoly> factor_squarefree_primitive(ZPoly f, std::mt19937_64& rng) {
  std::vector<ZPoly> out;
  if (detail::zdeg(f) >= 1 && f[0] == 0) {
    out.push_back(ZPoly{BigInt(0), BigInt(1)});
    f.erase(f.begin());
  }
  if (detail::zdeg(f) >= 1) {
    auto rest = zassenhaus(f, rng);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void notify(const Poly& f, const FactorList& fl);

}  // namespace

void notify_factor_observers(const Poly& f, const FactorList& fl) {
  if (g_notifying) return;
  g_notifying = true;
  try {
    for (ScopedFactorObserver* o = g_observers; o; o = o->prev_) o->fn_(f, fl);
  } catch (...) {
    g_notifying = false;
    throw;
  }
  g_notifying = false;
}

namespace {
void notify(const Poly& f, const FactorList& fl) {
  if (g_observers) notify_factor_observers(f, fl);
}
}  // namespace

ScopedFactorObserver::ScopedFactorObserver(Callback fn) : fn_(std::move(fn)), prev_(g_observers) {
  g_observers = this;
}

ScopedFactorObserver::~ScopedFactorObserver() { g_observers = prev_; }

std::uint64_t factorization_seed() {
  static const std::uint64_t seed = [] {
    const char* env = std::getenv("CMTORSION_SEED");
    if (env && *env) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 0);
      if (end && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(0x5eed1e55);
  }();
  return seed;
}

Poly FactorList::expand() const {
  Poly out = Poly::constant(content);
  for (const auto& [p, e] : factors) out *= pow(p, e);
  return out;
}

FactorList factor_poly(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factor_poly: zero polynomial");
  FactorList out;
  out.content = f.lead();
  if (f.degree() >= 1) {
    std::mt19937_64 rng(factorization_seed());
    Poly m = f.monic();
    std::vector<std::pair<Poly, unsigned>> parts;
    if (quick_squarefree(integer_primitive(m).coeffs)) {
      parts.emplace_back(m, 1);
    } else {
      parts = yun(m);
    }
    for (const auto& [part, mult] : parts) {
      for (const auto& z : factor_squarefree_primitive(integer_primitive(part).coeffs, rng)) {
        out.factors.emplace_back(from_integers(z).monic(), mult);
      }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
      if (poly_less(a.first, b.first)) return true;
      if (poly_less(b.first, a.first)) return false;
      return a.second < b.second;
    });
  }
  if (!(out.expand() == f)) throw std::logic_error("factor_poly: factors do not reassemble the input");
  notify(f, out);
  return out;
}

std::vector<Poly> irreducible_factors_of_degree(const FactorList& fl, int d) {
  std::vector<Poly> out;
  for (const auto& [p, e] : fl.factors) {
    if (p.degree() == d) out.push_back(p);
  }
  return out;
}

std::vector<Poly> irreducible_factors_of_degree(const Poly& f, int d) {
  return irreducible_factors_of_degree(factor_poly(f), d);
}

std::vector<int> factor_degrees_mod_p(const Poly& f, std::uint64_t p) {
  if (!f.is_integral()) throw UnsuitablePrime("factor_degrees_mod_p: non-integral coefficients");
  if (p < 3 || p >= (1ULL << 31) || !is_small_prime(p)) {
    throw UnsuitablePrime("factor_degrees_mod_p: p must be an odd prime below 2^31");
  }
  if (f.degree() < 1) return {};
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(c.get_num());
  ModPoly fp;
  if (!usable_prime(z, p, &fp)) {
    throw UnsuitablePrime("factor_degrees_mod_p: p divides lc(f) or f is not squarefree mod p");
  }
  return detail::mfactor_degrees(fp, p);
}

bool degrees_consistent_mod_p(const FactorList& fl, int primes) {
  if (fl.factors.empty()) return true;
  Poly prod = Poly::constant(1);
  std::vector<ZPoly> parts;
  for (const auto& [p, e] : fl.factors) {
    prod *= p;
    parts.push_back(integer_primitive(p).coeffs);
  }
  ZPoly whole = integer_primitive(prod).coeffs;
  u64 p = 3;
  for (int used = 0; used < primes; p = next_odd_prime(p)) {
    if (p > 100000) return false;
    ModPoly fp;
    if (!usable_prime(whole, p, &fp)) continue;
    ++used;
    std::vector<int> expect = detail::mfactor_degrees(fp, p);
    std::vector<int> got;
    for (const auto& z : parts) {
      auto d = detail::mfactor_degrees(detail::mreduce(z, p), p);
      got.insert(got.end(), d.begin(), d.end());
    }
    std::sort(got.begin(), got.end());
    if (got != expect) return false;
  }
  return true;
}

}  // namespace cmtorsion
