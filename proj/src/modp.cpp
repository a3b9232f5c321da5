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

#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmtorsion::detail {

u64 mod_pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inv: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mreduce(const ZPoly& a, u64 p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  }
  mtrim(out);
  return out;
}

ModPoly madd(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    u64 s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    out[i] = s % p;
  }
  mtrim(out);
  return out;
}

ModPoly msub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    u64 s = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0);
    out[i] = s % p;
  }
  mtrim(out);
  return out;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  mtrim(out);
  return out;
}

ModPoly mscale(const ModPoly& a, u64 c, u64 p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c % p;
  mtrim(out);
  return out;
}

void mdivrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  if (b.empty()) throw std::domain_error("mdivrem: zero divisor");
  ModPoly rem = a;
  mtrim(rem);
  const int db = mdeg(b);
  const u64 inv = mod_inv(b.back(), p);
  ModPoly quot(std::max(0, mdeg(rem) - db + 1), 0);
  while (mdeg(rem) >= db) {
    const int shift = mdeg(rem) - db;
    u64 t = rem.back() * inv % p;
    quot[shift] = t;
    for (int j = 0; j <= db; ++j) {
      rem[j + shift] = (rem[j + shift] + (p - t) * b[j]) % p;
    }
    mtrim(rem);
  }
  mtrim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(rem);
}

ModPoly mrem(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  mdivrem(a, b, p, nullptr, &r);
  return r;
}

ModPoly mmonic(const ModPoly& a, u64 p) {
  if (a.empty()) return a;
  return mscale(a, mod_inv(a.back(), p), p);
}

ModPoly mgcd(const ModPoly& a0, const ModPoly& b0, u64 p) {
  ModPoly a = a0, b = b0;
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

ModPoly mderiv(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * (i % p) % p;
  mtrim(out);
  return out;
}

ModPoly mpowmod(const ModPoly& base, const BigInt& e, const ModPoly& m, u64 p) {
  ModPoly result{1};
  ModPoly b = mrem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return mrem(result, m, p);
  for (std::size_t i = bits; i-- > 0;) {
    result = mrem(mmul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mrem(mmul(result, b, p), m, p);
  }
  return result;
}

void mbezout(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t) {
  // Extended Euclid on (a, b) tracking the coefficients of a and b.
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  mtrim(r0);
  mtrim(r1);
  while (!r1.empty()) {
    ModPoly q, r;
    mdivrem(r0, r1, p, &q, &r);
    ModPoly s2 = msub(s0, mmul(q, s1, p), p);
    ModPoly t2 = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (mdeg(r0) != 0) throw std::domain_error("mbezout: inputs are not coprime");
  u64 inv = mod_inv(r0[0], p);
  *s = mscale(s0, inv, p);
  *t = mscale(t0, inv, p);
}

bool msquarefree(const ModPoly& f, u64 p) {
  ModPoly d = mderiv(f, p);
  if (d.empty()) return mdeg(f) <= 0;
  return mdeg(mgcd(f, d, p)) == 0;
}

std::vector<std::pair<int, ModPoly>> mddf(const ModPoly& f0, u64 p) {
  std::vector<std::pair<int, ModPoly>> out;
  ModPoly f = mmonic(f0, p);
  const ModPoly x{0, 1};
  ModPoly h = mrem(x, f, p);
  const BigInt pp = static_cast<unsigned long>(p);
  for (int d = 1; 2 * d <= mdeg(f); ++d) {
    h = mpowmod(h, pp, f, p);
    ModPoly g = mgcd(msub(h, x, p), f, p);
    if (mdeg(g) > 0) {
      out.emplace_back(d, g);
      ModPoly q;
      mdivrem(f, g, p, &q, nullptr);
      f = std::move(q);
      h = mrem(h, f, p);
    }
  }
  if (mdeg(f) > 0) out.emplace_back(mdeg(f), f);
  return out;
}

std::vector<int> mfactor_degrees(const ModPoly& f, u64 p) {
  std::vector<int> degs;
  for (const auto& [d, g] : mddf(f, p)) {
    for (int i = 0; i < mdeg(g) / d; ++i) degs.push_back(d);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

namespace {

void equal_degree_split(const ModPoly& g, int d, u64 p, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  const int n = mdeg(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    mtrim(a);
    if (mdeg(a) < 1) continue;
    ModPoly u = mgcd(a, g, p);
    if (mdeg(u) > 0 && mdeg(u) < n) {
      ModPoly q;
      mdivrem(g, u, p, &q, nullptr);
      equal_degree_split(u, d, p, rng, out);
      equal_degree_split(mmonic(q, p), d, p, rng, out);
      return;
    }
    ModPoly b = msub(mpowmod(a, e, g, p), ModPoly{1}, p);
    u = mgcd(b, g, p);
    if (mdeg(u) > 0 && mdeg(u) < n) {
      ModPoly q;
      mdivrem(g, u, p, &q, nullptr);
      equal_degree_split(u, d, p, rng, out);
      equal_degree_split(mmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> mfactor(const ModPoly& f, u64 p, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  for (const auto& [d, g] : mddf(f, p)) equal_degree_split(mmonic(g, p), d, p, rng, out);
  return out;
}

}  // namespace cmtorsion::detail
