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

#ifndef PSIGRAPH_SEARCH_HPP
#define PSIGRAPH_SEARCH_HPP

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "psigraph/natural.hpp"
#include "psigraph/psi.hpp"

namespace psigraph {

using PrimePair = std::pair<std::uint64_t, std::uint64_t>;

struct ScanOptions {
  /// Worker threads; 0 means default_thread_count().
  std::size_t threads = 0;
  /// Scans over more primes than this throw CapExceeded.
  std::size_t max_prime_count = 100000;
};

struct ScanResult {
  std::string condition;
  std::size_t prime_count = 0;
  /// Ordered pairs (p, q), p != q, sorted lexicographically.
  std::vector<PrimePair> matches;
  std::size_t count = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// psi(p), psi(p^2), psi(p^3) for each prime of a table. Values are held in
/// 128 bits while every entry of the table fits; otherwise `wide` holds them.
class PsiCache {
 public:
  explicit PsiCache(std::span<const std::uint64_t> primes);

  std::size_t size() const { return primes_.size(); }
  std::uint64_t prime(std::size_t i) const { return primes_[i]; }
  bool inline_values() const { return wide_.empty(); }
  /// Requires inline_values().
  unsigned __int128 psi(std::size_t i, unsigned exponent) const { return narrow_[i][exponent - 1]; }
  Natural psi_natural(std::size_t i, unsigned exponent) const;

 private:
  std::vector<std::uint64_t> primes_;
  std::vector<std::array<unsigned __int128, 3>> narrow_;
  std::vector<std::array<Natural, 3>> wide_;
};

/// True when every relation of `c` holds for the pair (i, j) of the cache.
bool condition_holds(const PsiCache& cache, const Condition& c, std::size_t i, std::size_t j);

/// All ordered pairs among the first `prime_count` primes satisfying the
/// condition, computed on OpenMP threads over p-index ranges.
ScanResult scan_pairs(std::string_view condition, std::size_t prime_count, const ScanOptions& options = {});

/// Single-threaded reference for scan_pairs.
ScanResult scan_pairs_serial(std::string_view condition, std::size_t prime_count, const ScanOptions& options = {});

/// One row per match: header `p,q` then `p,q` lines.
std::string to_csv(const ScanResult& r);
/// Elapsed time is omitted so output is reproducible.
nlohmann::json to_json(const ScanResult& r);

/// Girth histogram over exponent_grid(primes, max_exponent). The key
/// std::nullopt stands for an acyclic graph.
struct GirthHistogram {
  std::map<std::optional<std::size_t>, std::size_t> counts;
  /// Smallest n (in family order) observed for each girth value.
  std::map<std::optional<std::size_t>, std::string> witnesses;
  std::size_t graphs = 0;
};

GirthHistogram scan_girth(std::span<const std::uint64_t> primes, unsigned max_exponent,
                          const ScanOptions& options = {});

struct Diameter2Hit {
  std::string n;
  bool square_free = false;
};

struct Diameter2Report {
  /// Sorted by n.
  std::vector<Diameter2Hit> hits;
  std::size_t graphs = 0;
  /// Hits whose order is not square-free.
  std::vector<std::string> counterexample_candidates;
};

Diameter2Report scan_diameter2(std::span<const std::uint64_t> primes, unsigned max_exponent,
                               const ScanOptions& options = {});

nlohmann::json to_json(const GirthHistogram& h);
nlohmann::json to_json(const Diameter2Report& r);

}  // namespace psigraph

#endif  // PSIGRAPH_SEARCH_HPP
