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

#ifndef PSIGRAPH_THEOREMS_HPP
#define PSIGRAPH_THEOREMS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "psigraph/graph.hpp"
#include "psigraph/group.hpp"

namespace psigraph {

/// Instance-family bounds. Every statement documents which fields it reads.
struct VerifyParams {
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  /// Primes for the single-prime family p^a (the first three of `primes`
  /// when empty).
  std::vector<std::uint64_t> power_primes;
  unsigned max_power_exponent = 30;
  /// Exponent bound for orders with two primes; three-prime orders use
  /// min(this, 3), four-prime orders min(this, 2), more primes exponent 1.
  unsigned max_exponent = 4;
  /// Non-cyclic catalog groups (abelian, dihedral, quaternion, products).
  std::size_t max_order = 64;
  std::size_t max_cyclic_order = 200;
  /// Bound for the square-free scan over cyclic orders.
  std::uint64_t max_n = 100000;
  std::size_t threads = 0;
  /// Test-only hook: build graphs with a different edge rule.
  EdgeRule edge_rule = EdgeRule::kPsiDivisibility;
  GroupLimits limits{};
};

struct VerificationFailure {
  /// Replayable instance: a group spec string such as `cyclic:2^2*3^2`.
  std::string instance;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string statement_id;
  std::string bounds;
  std::size_t instances_checked = 0;
  /// Sorted by instance.
  std::vector<VerificationFailure> failures;
  /// Statement-specific aggregates (for example a girth histogram).
  nlohmann::json observations = nlohmann::json::object();
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

struct StatementInfo {
  std::string_view id;
  std::string_view alias;
  std::string_view summary;
};

const std::vector<StatementInfo>& statements();
/// Accepts an id or its alias; throws std::invalid_argument otherwise.
const StatementInfo& find_statement(std::string_view id);

/// Deterministic for fixed params. Throws CapExceeded when a bound exceeds
/// its cap.
VerificationReport verify(std::string_view statement_id, const VerifyParams& params = {});

/// Elapsed time is omitted so output is reproducible.
nlohmann::json to_json(const VerificationReport& r);

/// Catalog used by the group-level statements: cyclic groups of order
/// 2..max_cyclic_order, then non-cyclic abelian, dihedral, quaternion and a
/// few direct products of order <= max_order.
std::vector<FiniteGroup> group_catalog(const VerifyParams& params);

/// Every abelian group of order 2..max_order, cyclic ones included, as
/// invariant prime-power lists.
std::vector<std::vector<std::uint64_t>> abelian_types(std::size_t max_order);

}  // namespace psigraph

#endif  // PSIGRAPH_THEOREMS_HPP
