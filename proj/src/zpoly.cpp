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

#include "zpoly.hpp"

#include <stdexcept>

namespace cmtorsion::detail {

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt zcontent(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zprimitive(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  BigInt g = zcontent(a);
  if (a.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  ztrim(out);
  return out;
}

ZPoly zderivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<unsigned long>(i);
  ztrim(out);
  return out;
}

ZPoly zprem(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("zprem: zero divisor");
  ZPoly r = a;
  ztrim(r);
  const int db = zdeg(b);
  const BigInt& lb = b.back();
  int steps = zdeg(r) - db + 1;
  if (steps <= 0) return r;
  while (zdeg(r) >= db) {
    const int shift = zdeg(r) - db;
    BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[j + shift].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    --steps;
  }
  if (steps > 0) {
    BigInt f = pow(lb, static_cast<unsigned>(steps));
    for (auto& c : r) c *= f;
  }
  return r;
}

bool zexact_div(const ZPoly& a, const ZPoly& b, ZPoly* q) {
  if (b.empty()) throw std::domain_error("zexact_div: zero divisor");
  ZPoly r = a;
  ztrim(r);
  if (r.empty()) {
    if (q) q->clear();
    return true;
  }
  const int db = zdeg(b);
  if (zdeg(r) < db) return false;
  // Cheap necessary conditions first.
  if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
  if (b[0] != 0 && !mpz_divisible_p(r[0].get_mpz_t(), b[0].get_mpz_t())) return false;
  ZPoly quot(zdeg(r) - db + 1);
  BigInt t;
  while (zdeg(r) >= db) {
    const int shift = zdeg(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    quot[shift] = t;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[j + shift].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    if (r.empty()) break;
  }
  if (!r.empty()) return false;
  if (q) *q = std::move(quot);
  return true;
}

ZPoly zgcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = zprimitive(a0), b = zprimitive(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (zdeg(b) == 0) return ZPoly{1};
    ZPoly r = zprimitive(zprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return zprimitive(a);
}

void zreduce(ZPoly& a, const BigInt& m) {
  for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

void zsymmetric(ZPoly& a, const BigInt& m) {
  BigInt half = m / 2;
  for (auto& c : a) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out = zmul(a, b);
  zreduce(out, m);
  return out;
}

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  zreduce(out, m);
  return out;
}

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = a[i];
    if (i < b.size()) out[i] += b[i];
  }
  zreduce(out, m);
  return out;
}

void zdivrem_monic_mod(const ZPoly& a, const ZPoly& b, const BigInt& m, ZPoly* q, ZPoly* r) {
  ZPoly rem = a;
  zreduce(rem, m);
  const int db = zdeg(b);
  if (db < 0) throw std::domain_error("zdivrem_monic_mod: zero divisor");
  ZPoly quot(std::max(0, zdeg(rem) - db + 1));
  BigInt t;
  while (zdeg(rem) >= db) {
    const int shift = zdeg(rem) - db;
    t = rem.back();
    quot[shift] = t;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[j + shift].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
      mpz_mod(rem[j + shift].get_mpz_t(), rem[j + shift].get_mpz_t(), m.get_mpz_t());
    }
    ztrim(rem);
  }
  ztrim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(rem);
}

}  // namespace cmtorsion::detail
