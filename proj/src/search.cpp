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

#include "psigraph/search.hpp"

#include <algorithm>
#include <sstream>

#include "psigraph/analysis.hpp"
#include "psigraph/family.hpp"
#include "psigraph/graph.hpp"
#include "psigraph/group.hpp"
#include "psigraph/parallel.hpp"

namespace psigraph {

namespace {

using u128 = unsigned __int128;

// Most scan operands fit in 64 bits; the 64-bit remainder is much cheaper.
inline bool divides_u128(u128 a, u128 b) {
  if (((a | b) >> 64) == 0) return static_cast<std::uint64_t>(b) % static_cast<std::uint64_t>(a) == 0;
  return b % a == 0;
}

// p-indices per work unit of the parallel scan.
constexpr std::size_t kRangeSize = 64;

void scan_row(const PsiCache& cache, const Condition& c, std::size_t i, std::vector<PrimePair>& out) {
  for (std::size_t j = 0; j < cache.size(); ++j) {
    if (j != i && condition_holds(cache, c, i, j)) out.emplace_back(cache.prime(i), cache.prime(j));
  }
}

PsiCache make_cache(std::size_t prime_count, const ScanOptions& options) {
  if (prime_count == 0) throw std::invalid_argument("scan: prime count must be positive");
  if (prime_count > options.max_prime_count) {
    throw CapExceeded("scan: prime count " + std::to_string(prime_count) + " exceeds cap " +
                      std::to_string(options.max_prime_count));
  }
  return PsiCache(sieve_primes(prime_count));
}

nlohmann::json girth_key(const std::optional<std::size_t>& g) {
  if (g) return std::to_string(*g);
  return "inf";
}

}  // namespace

PsiCache::PsiCache(std::span<const std::uint64_t> primes) : primes_(primes.begin(), primes.end()) {
  const std::uint64_t limit = max_inline_psi_base(3);
  const bool fits = std::all_of(primes_.begin(), primes_.end(), [limit](std::uint64_t p) { return p <= limit; });
  if (fits) {
    narrow_.reserve(primes_.size());
    for (auto p : primes_) {
      std::array<u128, 3> row{};
      for (unsigned a = 1; a <= 3; ++a) row[a - 1] = *psi_prime_power(Natural{p}, a).to_u128();
      narrow_.push_back(row);
    }
  } else {
    wide_.reserve(primes_.size());
    for (auto p : primes_) {
      wide_.push_back({psi_prime_power(Natural{p}, 1), psi_prime_power(Natural{p}, 2), psi_prime_power(Natural{p}, 3)});
    }
  }
}

Natural PsiCache::psi_natural(std::size_t i, unsigned exponent) const {
  if (inline_values()) return Natural::from_u128(narrow_[i][exponent - 1]);
  return wide_[i][exponent - 1];
}

bool condition_holds(const PsiCache& cache, const Condition& c, std::size_t i, std::size_t j) {
  for (const auto& r : c.relations) {
    const std::size_t a = r.reverse ? j : i;
    const std::size_t b = r.reverse ? i : j;
    bool ok;
    if (cache.inline_values()) {
      ok = divides_u128(cache.psi(a, r.lhs), cache.psi(b, r.rhs));
    } else {
      ok = divides(cache.psi_natural(a, r.lhs), cache.psi_natural(b, r.rhs));
    }
    if (!ok) return false;
  }
  return true;
}

ScanResult scan_pairs(std::string_view condition, std::size_t prime_count, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Condition& c = find_condition(condition);
  const PsiCache cache = make_cache(prime_count, options);

  const std::size_t ranges = (cache.size() + kRangeSize - 1) / kRangeSize;
  std::vector<std::vector<PrimePair>> partial(ranges);
  parallel_for(ranges, options.threads, [&](std::size_t r) {
    const std::size_t end = std::min(cache.size(), (r + 1) * kRangeSize);
    for (std::size_t i = r * kRangeSize; i < end; ++i) scan_row(cache, c, i, partial[r]);
  });

  ScanResult result;
  result.condition = std::string(c.id);
  result.prime_count = prime_count;
  for (auto& part : partial) result.matches.insert(result.matches.end(), part.begin(), part.end());
  result.count = result.matches.size();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

ScanResult scan_pairs_serial(std::string_view condition, std::size_t prime_count, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Condition& c = find_condition(condition);
  const PsiCache cache = make_cache(prime_count, options);

  ScanResult result;
  result.condition = std::string(c.id);
  result.prime_count = prime_count;
  for (std::size_t i = 0; i < cache.size(); ++i) scan_row(cache, c, i, result.matches);
  result.count = result.matches.size();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::string to_csv(const ScanResult& r) {
  std::ostringstream os;
  os << "p,q\n";
  for (const auto& [p, q] : r.matches) os << p << ',' << q << '\n';
  return os.str();
}

nlohmann::json to_json(const ScanResult& r) {
  nlohmann::json j;
  j["condition"] = r.condition;
  j["prime_count"] = r.prime_count;
  j["count"] = r.count;
  j["matches"] = nlohmann::json::array();
  for (const auto& [p, q] : r.matches) j["matches"].push_back({p, q});
  return j;
}

GirthHistogram scan_girth(std::span<const std::uint64_t> primes, unsigned max_exponent, const ScanOptions& options) {
  const auto family = exponent_grid(primes, max_exponent);
  std::vector<std::optional<std::size_t>> girths(family.size());
  parallel_for(family.size(), options.threads, [&](std::size_t i) { girths[i] = girth(build_cyclic(family[i])); });

  GirthHistogram h;
  h.graphs = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    ++h.counts[girths[i]];
    h.witnesses.try_emplace(girths[i], family[i].to_string());
  }
  return h;
}

Diameter2Report scan_diameter2(std::span<const std::uint64_t> primes, unsigned max_exponent,
                               const ScanOptions& options) {
  auto family = exponent_grid(primes, max_exponent);
  std::sort(family.begin(), family.end(),
            [](const Factorization& a, const Factorization& b) { return a.value() < b.value(); });
  std::vector<char> hit(family.size(), 0);
  parallel_for(family.size(), options.threads, [&](std::size_t i) {
    const auto d = diameter(build_cyclic(family[i]));
    hit[i] = d && *d == 2;
  });

  Diameter2Report r;
  r.graphs = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!hit[i]) continue;
    Diameter2Hit h{family[i].value().to_string(), family[i].is_square_free()};
    if (!h.square_free) r.counterexample_candidates.push_back(h.n);
    r.hits.push_back(std::move(h));
  }
  return r;
}

nlohmann::json to_json(const GirthHistogram& h) {
  nlohmann::json j;
  j["graphs"] = h.graphs;
  j["histogram"] = nlohmann::json::object();
  j["witnesses"] = nlohmann::json::object();
  for (const auto& [g, count] : h.counts) j["histogram"][girth_key(g).get<std::string>()] = count;
  for (const auto& [g, n] : h.witnesses) j["witnesses"][girth_key(g).get<std::string>()] = n;
  return j;
}

nlohmann::json to_json(const Diameter2Report& r) {
  nlohmann::json j;
  j["graphs"] = r.graphs;
  j["hits"] = nlohmann::json::array();
  for (const auto& h : r.hits) j["hits"].push_back({{"n", h.n}, {"square_free", h.square_free}});
  j["counterexample_candidates"] = r.counterexample_candidates;
  return j;
}

}  // namespace psigraph
