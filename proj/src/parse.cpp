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

#include "psigraph/parse.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <stdexcept>
#include <string>

namespace psigraph {

namespace {

constexpr unsigned kMaxExponent = 1u << 16;
constexpr std::array<std::string_view, 5> kKinds = {"cyclic:", "abelian:", "dihedral:", "quaternion:", "product:"};

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw std::invalid_argument(std::string(what) + ": '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

unsigned parse_exponent(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (!all_digits(s) || ec != std::errc{} || ptr != s.data() + s.size() || v == 0 || v > kMaxExponent) {
    bad("invalid exponent", whole);
  }
  return v;
}

std::size_t to_size(const Factorization& f, std::string_view text) {
  const auto v = f.value().to_u64();
  if (!v) throw CapExceeded("group order too large: " + std::string(text));
  return static_cast<std::size_t>(*v);
}

bool starts_with_kind(std::string_view s) {
  return std::any_of(kKinds.begin(), kKinds.end(), [s](std::string_view k) { return s.starts_with(k); });
}

}  // namespace

Factorization parse_order(std::string_view text) {
  if (text.empty()) bad("empty order", text);
  if (all_digits(text)) {
    const Natural n = Natural::parse(text);
    if (n.is_zero()) bad("order must be positive", text);
    return factorize(n);
  }
  std::map<Natural, unsigned> merged;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('*', start), text.size());
    const std::string_view term = text.substr(start, end - start);
    const std::size_t caret = term.find('^');
    const std::string_view base = term.substr(0, caret);
    const unsigned e = caret == std::string_view::npos ? 1 : parse_exponent(term.substr(caret + 1), text);
    if (!all_digits(base)) bad("invalid factor", text);
    const Natural b = Natural::parse(base);
    if (b.is_zero()) bad("order must be positive", text);
    const Factorization fb = factorize(b);
    for (const auto& pp : fb.parts()) merged[pp.prime] += pp.exponent * e;
    start = end + 1;
  }
  std::vector<PrimePower> parts;
  for (const auto& [p, e] : merged) parts.push_back({p, e});
  return Factorization(std::move(parts));
}

FiniteGroup parse_group(std::string_view text, const GroupLimits& limits) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) bad("invalid group spec", text);
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);

  if (kind == "cyclic") return cyclic_group(to_size(parse_order(arg), text), limits);
  if (kind == "dihedral") return dihedral_group(to_size(parse_order(arg), text), limits);
  if (kind == "quaternion") return quaternion_group(to_size(parse_order(arg), text), limits);
  if (kind == "abelian") {
    std::vector<std::uint64_t> powers;
    std::size_t start = 0;
    while (start <= arg.size()) {
      const std::size_t end = std::min(arg.find(',', start), arg.size());
      const Factorization f = parse_order(arg.substr(start, end - start));
      if (f.prime_count() != 1) bad("abelian factors must be prime powers", text);
      powers.push_back(to_size(f, text));
      start = end + 1;
    }
    return abelian_group(powers, limits);
  }
  if (kind == "product") {
    // Split at the first 'x' whose both sides parse.
    for (std::size_t pos = arg.find('x'); pos != std::string_view::npos; pos = arg.find('x', pos + 1)) {
      const std::string_view right = arg.substr(pos + 1);
      if (!starts_with_kind(right)) continue;
      try {
        const FiniteGroup a = parse_group(arg.substr(0, pos), limits);
        const FiniteGroup b = parse_group(right, limits);
        return direct_product(a, b, limits);
      } catch (const std::invalid_argument&) {
      }
    }
    bad("invalid product spec", text);
  }
  bad("unknown group kind", text);
}

std::vector<std::uint64_t> parse_prime_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, end - start);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
    if (!all_digits(item) || ec != std::errc{} || ptr != item.data() + item.size()) bad("invalid prime list", text);
    if (!is_prime(p)) bad("not a prime in list", text);
    out.push_back(p);
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace psigraph
