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

#ifndef PSIGRAPH_PARSE_HPP
#define PSIGRAPH_PARSE_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "psigraph/arith.hpp"
#include "psigraph/group.hpp"

namespace psigraph {

/// Decimal (`360`) or factored (`2^3*3^2*5`) positive integer. Factored bases
/// need not be prime; repeated primes are merged. Throws std::invalid_argument.
Factorization parse_order(std::string_view text);

/// `cyclic:n`, `abelian:q1,q2,...` (prime powers), `dihedral:n`,
/// `quaternion:2^k` and `product:<spec>x<spec>`. Orders accept the same
/// forms as parse_order. Throws std::invalid_argument or CapExceeded.
FiniteGroup parse_group(std::string_view text, const GroupLimits& limits = {});

/// Comma-separated primes, e.g. `2,3,5`.
std::vector<std::uint64_t> parse_prime_list(std::string_view text);

}  // namespace psigraph

#endif  // PSIGRAPH_PARSE_HPP
