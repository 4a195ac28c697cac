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

#ifndef PSIGRAPH_ARITH_HPP
#define PSIGRAPH_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psigraph/natural.hpp"

namespace psigraph {

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents positive.
/// The empty factorization denotes 1.
class Factorization {
 public:
  Factorization() = default;
  /// Validates primality, ordering and positivity of every part.
  explicit Factorization(std::vector<PrimePower> parts);

  const std::vector<PrimePower>& parts() const { return parts_; }
  std::size_t prime_count() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Natural value() const;
  bool is_square_free() const;
  /// Product of (exponent + 1).
  std::uint64_t divisor_count() const;
  /// Compact form such as "2^3*3*5"; "1" for the empty factorization.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> parts_;
};

bool is_prime(std::uint64_t n);
/// Deterministic for every value below 3.3e24; throws std::domain_error above.
bool is_prime(const Natural& n);

/// Rejects n = 0. Throws std::domain_error if n has a cofactor beyond the
/// deterministic primality range that trial division and Pollard rho cannot split.
Factorization factorize(const Natural& n);
Factorization factorize(std::uint64_t n);

/// All divisors in increasing order, including 1 and n.
std::vector<Natural> divisors(const Factorization& f);

Natural totient(const Factorization& f);

/// Number of positive divisors of a machine-size integer.
std::uint64_t tau(std::uint64_t n);

using PrimeTable = std::vector<std::uint64_t>;

/// The first `count` primes, ascending. Throws std::invalid_argument for 0.
PrimeTable sieve_primes(std::size_t count);

}  // namespace psigraph

#endif  // PSIGRAPH_ARITH_HPP
