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

#include "psigraph/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "psigraph/parallel.hpp"

#include <omp.h>

namespace psigraph {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("PSIGRAPH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
}

namespace {

std::vector<std::uint64_t> sorted_primes(std::span<const std::uint64_t> primes) {
  std::vector<std::uint64_t> out(primes.begin(), primes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (auto p : out) {
    if (!is_prime(p)) throw std::invalid_argument("family: " + std::to_string(p) + " is not prime");
  }
  return out;
}

// All exponent vectors over `primes` with entries in [lo, hi], first prime
// varying slowest.
void append_grid(const std::vector<std::uint64_t>& primes, unsigned lo, unsigned hi,
                 std::vector<Factorization>& out) {
  const std::size_t k = primes.size();
  std::vector<unsigned> exps(k, lo);
  while (true) {
    std::vector<PrimePower> parts;
    for (std::size_t i = 0; i < k; ++i) {
      if (exps[i] > 0) parts.push_back({Natural{primes[i]}, exps[i]});
    }
    if (!parts.empty()) out.emplace_back(std::move(parts));
    std::size_t i = k;
    while (i > 0 && exps[i - 1] == hi) exps[--i] = lo;
    if (i == 0) break;
    ++exps[i - 1];
  }
}

}  // namespace

std::vector<Factorization> cyclic_family(const FamilyBounds& bounds) {
  std::vector<Factorization> out;
  for (auto p : sorted_primes(bounds.power_primes)) {
    for (unsigned a = 1; a <= bounds.max_power_exponent; ++a) out.emplace_back(std::vector<PrimePower>{{Natural{p}, a}});
  }
  const auto primes = sorted_primes(bounds.primes);
  const std::size_t n = primes.size();
  for (std::size_t k = 2; k <= std::min<std::size_t>(bounds.max_primes, n); ++k) {
    unsigned hi = 1;
    if (k == 2) hi = bounds.max_pair_exponent;
    if (k == 3) hi = bounds.max_triple_exponent;
    if (k == 4) hi = bounds.max_quad_exponent;
    // Subsets of size k in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<std::uint64_t> subset;
      for (auto i : idx) subset.push_back(primes[i]);
      append_grid(subset, 1, hi, out);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Factorization> exponent_grid(std::span<const std::uint64_t> primes, unsigned max_exponent) {
  std::vector<Factorization> out;
  append_grid(sorted_primes(primes), 0, max_exponent, out);
  return out;
}

}  // namespace psigraph
