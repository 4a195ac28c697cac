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

#ifndef PSIGRAPH_FAMILY_HPP
#define PSIGRAPH_FAMILY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "psigraph/arith.hpp"

namespace psigraph {

/// Bounds for families of cyclic orders n = p_1^a_1 ... p_k^a_k.
struct FamilyBounds {
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  /// Primes used for the single-prime instances p^a.
  std::vector<std::uint64_t> power_primes{2, 3, 5};
  unsigned max_power_exponent = 30;
  unsigned max_pair_exponent = 4;
  unsigned max_triple_exponent = 3;
  unsigned max_quad_exponent = 2;
  /// Orders with more than four primes are square-free.
  unsigned max_primes = 4;
};

/// Deterministic family: prime powers, then every subset of `primes` of size
/// 2..max_primes with each exponent in 1..(bound for that subset size).
std::vector<Factorization> cyclic_family(const FamilyBounds& bounds);

/// Every n > 1 of the form prod p^e over `primes` with 0 <= e <= max_exponent.
std::vector<Factorization> exponent_grid(std::span<const std::uint64_t> primes, unsigned max_exponent);

}  // namespace psigraph

#endif  // PSIGRAPH_FAMILY_HPP
