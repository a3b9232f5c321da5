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

#include "cmtorsion/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace cmtorsion {

namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  out.set_str(digits, 10);
  return true;
}

// Brent's variant of Pollard rho; n odd composite, not a perfect power of a
// small prime. Returns a nontrivial factor.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const BigInt& v) {
      BigInt t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const BigInt& n, std::map<BigInt, unsigned>& acc) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++acc[n];
    return;
  }
  BigInt root;
  for (unsigned long e = 2; e <= 64; ++e) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      std::map<BigInt, unsigned> sub;
      split_into(root, sub);
      for (auto& [p, k] : sub) acc[p] += k * e;
      return;
    }
  }
  BigInt d = pollard_brent(n);
  split_into(d, acc);
  split_into(n / d, acc);
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  } else {
    auto dtext = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || dtext.empty() ||
        !std::isdigit(static_cast<unsigned char>(dtext[0])) || !parse_integer(dtext, den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

int sign(const BigInt& n) { return sgn(n); }
int sign(const Rational& q) { return sgn(q); }

BigInt Factorization::product() const {
  BigInt out = unit;
  for (const auto& [p, e] : primes) out *= pow(p, e);
  return out;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : bases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const BigInt nm1 = n - 1;
  for (unsigned long b : bases) {
    BigInt x, base = b;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factor_integer(const BigInt& n) {
  if (n == 0) throw std::domain_error("factor_integer: zero has no factorization");
  Factorization out;
  out.unit = n < 0 ? -1 : 1;
  BigInt m = abs(n);
  std::map<BigInt, unsigned> acc;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (m < BigInt(p) * p) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    acc[BigInt(p)] += e;
  }
  split_into(m, acc);
  for (auto& [p, e] : acc) {
    if (!is_probable_prime(p)) throw std::logic_error("factor_integer: composite factor survived");
    out.primes.emplace_back(p, e);
  }
  return out;
}

BigInt power_free_part(const Rational& q, unsigned n) {
  if (q == 0) throw std::domain_error("power_free_part: zero");
  if (n < 2) throw std::invalid_argument("power_free_part: exponent must be >= 2");
  // num * den^(n-1) differs from q by the n-th power den^n.
  BigInt m = q.get_num() * pow(BigInt(q.get_den()), n - 1);
  Factorization f = factor_integer(m);
  BigInt out = f.unit;
  for (const auto& [p, e] : f.primes) out *= pow(p, e % n);
  return out;
}

BigInt squarefree_part(const Rational& q) { return power_free_part(q, 2); }

std::optional<Rational> is_perfect_power(const Rational& q, unsigned n) {
  if (n < 2) throw std::invalid_argument("is_perfect_power: exponent must be >= 2");
  if (q == 0) return Rational(0);
  if (q < 0 && n % 2 == 0) return std::nullopt;
  BigInt num = abs(q.get_num()), den = q.get_den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
  Rational r = make_rational(q < 0 ? BigInt(-rn) : rn, rd);
  return r;
}

Rational pow(const Rational& q, unsigned e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return out;
}

BigInt pow(const BigInt& q, unsigned e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), e);
  return out;
}

}  // namespace cmtorsion
