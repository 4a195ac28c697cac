// Copyright 2026 The psigraph Authors
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

#include "psigraph/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace psigraph {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witness loop shared by both widths.
template <typename Int, typename PowMod, typename MulMod>
bool miller_rabin(const Int& n, std::initializer_list<unsigned> bases, PowMod powm, MulMod mulm) {
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : bases) {
    Int base = Int(a) % n;
    if (base == 0) continue;
    Int x = powm(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulm(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void split_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].exponent == 0) throw std::invalid_argument("Factorization: zero exponent");
    if (!is_prime(parts_[i].prime)) {
      throw std::invalid_argument("Factorization: " + parts_[i].prime.to_string() + " is not prime");
    }
    if (i > 0 && !(parts_[i - 1].prime < parts_[i].prime)) {
      throw std::invalid_argument("Factorization: primes must be strictly increasing");
    }
  }
}

Natural Factorization::value() const {
  Natural n{1};
  for (const auto& pp : parts_) n *= pow(pp.prime, pp.exponent);
  return n;
}

bool Factorization::is_square_free() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::uint64_t Factorization::divisor_count() const {
  std::uint64_t count = 1;
  for (const auto& pp : parts_) count *= pp.exponent + 1;
  return count;
}

std::string Factorization::to_string() const {
  if (parts_.empty()) return "1";
  std::string s;
  for (const auto& pp : parts_) {
    if (!s.empty()) s += '*';
    s += pp.prime.to_string();
    if (pp.exponent > 1) s += '^' + std::to_string(pp.exponent);
  }
  return s;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  return miller_rabin<std::uint64_t>(n, {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, powmod, mulmod);
}

bool is_prime(const Natural& n) {
  if (auto small = n.to_u64()) return is_prime(*small);
  // Bases 2..41 are deterministic below 3317044064679887385961981.
  static const Natural::Big kLimit("3317044064679887385961981");
  Natural::Big big = n.to_big();
  if (big >= kLimit) throw std::domain_error("is_prime: " + n.to_string() + " exceeds the deterministic range");
  for (unsigned p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
    if (big % p == 0) return false;
  }
  using Big = Natural::Big;
  auto powm = [](const Big& b, const Big& e, const Big& m) { return Big(boost::multiprecision::powm(b, e, m)); };
  auto mulm = [](const Big& a, const Big& b, const Big& m) { return Big(a * b % m); };
  return miller_rabin<Big>(big, {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}, powm, mulm);
}

Factorization factorize(std::uint64_t n) { return factorize(Natural{n}); }

Factorization factorize(const Natural& n) {
  if (n.is_zero()) throw std::invalid_argument("factorize: n must be at least 1");
  std::map<std::uint64_t, unsigned> small_parts;
  std::vector<PrimePower> parts;

  if (auto v = n.to_u64()) {
    std::uint64_t m = *v;
    for (std::uint64_t d : {2ULL, 3ULL}) {
      while (m % d == 0) {
        ++small_parts[d];
        m /= d;
      }
    }
    for (std::uint64_t d = 5; d <= kTrialDivisionLimit && d * d <= m; d += 6) {
      for (std::uint64_t q : {d, d + 2}) {
        while (m % q == 0) {
          ++small_parts[q];
          m /= q;
        }
      }
    }
    split_u64(m, small_parts);
    for (auto [p, e] : small_parts) parts.push_back({Natural{p}, e});
    return Factorization(std::move(parts));
  }

  Natural m = n;
  auto strip = [&](std::uint64_t q) {
    const Natural nq{q};
    while (divides(nq, m)) {
      ++small_parts[q];
      m /= nq;
    }
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= kTrialDivisionLimit; d += 6) {
    if (Natural{d} * Natural{d} > m) break;
    strip(d);
    strip(d + 2);
  }
  if (auto rest = m.to_u64()) {
    split_u64(*rest, small_parts);
    for (auto [p, e] : small_parts) parts.push_back({Natural{p}, e});
    return Factorization(std::move(parts));
  }
  for (auto [p, e] : small_parts) parts.push_back({Natural{p}, e});
  if (!is_prime(m)) {
    throw std::domain_error("factorize: cofactor " + m.to_string() + " has no small factors and is composite");
  }
  parts.push_back({m, 1});
  return Factorization(std::move(parts));
}

std::vector<Natural> divisors(const Factorization& f) {
  std::vector<Natural> result{Natural{1}};
  for (const auto& pp : f.parts()) {
    const std::size_t base = result.size();
    Natural power{1};
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Natural totient(const Factorization& f) {
  Natural phi{1};
  for (const auto& pp : f.parts()) {
    phi *= pow(pp.prime, pp.exponent - 1) * (pp.prime - Natural{1});
  }
  return phi;
}

std::uint64_t tau(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("tau: n must be positive");
  std::uint64_t count = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

PrimeTable sieve_primes(std::size_t count) {
  if (count == 0) throw std::invalid_argument("sieve_primes: count must be positive");
  // p_k < k (ln k + ln ln k) for k >= 6.
  std::size_t limit = 15;
  if (count >= 6) {
    const double k = static_cast<double>(count);
    limit = static_cast<std::size_t>(k * (std::log(k) + std::log(std::log(k)))) + 1;
  }
  std::vector<bool> composite(limit + 1, false);
  PrimeTable primes;
  primes.reserve(count);
  for (std::size_t i = 2; i <= limit && primes.size() < count; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace psigraph
