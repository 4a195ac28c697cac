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

#include "psigraph/psi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace psigraph {

namespace {

// Horner evaluation of x^{2a} - x^{2a-1} + ... - x + 1. Every intermediate
// value is at most the final value plus one.
Natural alternating_sum(const Natural& x, unsigned a) {
  Natural h{1};
  const Natural one{1};
  for (unsigned k = 1; k <= 2 * a; ++k) {
    h *= x;
    if (k % 2 == 1) {
      h -= one;
    } else {
      h += one;
    }
  }
  return h;
}

std::vector<Condition> make_p1() {
  return {
      {"psi_p_div_psi_q", "psi(p) | psi(q)", {{false, 1, 1}}},
      {"psi_p_div_psi_q2", "psi(p) | psi(q^2)", {{false, 1, 2}}},
      {"psi_q_div_psi_p", "psi(q) | psi(p)", {{true, 1, 1}}},
      {"psi_q_div_psi_p2", "psi(q) | psi(p^2)", {{true, 1, 2}}},
  };
}

std::vector<Condition> make_p2() {
  return {
      {"p2_conj1", "psi(p) | psi(q^2) and psi(q) | psi(p^2)", {{false, 1, 2}, {true, 1, 2}}},
      {"p2_conj2", "psi(p) | psi(q^2) and psi(q) | psi(p^3)", {{false, 1, 2}, {true, 1, 3}}},
      {"p2_conj3", "psi(p^2) | psi(q^2) and psi(q) | psi(p^3)", {{false, 2, 2}, {true, 1, 3}}},
  };
}

std::vector<Condition> make_p3() {
  return {
      {"p3_conj1", "psi(p) | psi(q^2) and psi(q) | psi(p^2)", {{false, 1, 2}, {true, 1, 2}}},
      {"p3_conj2", "psi(p) | psi(q^3) and psi(q) | psi(p^3)", {{false, 1, 3}, {true, 1, 3}}},
      {"p3_conj3", "psi(p) | psi(q^3) and psi(q) | psi(p^2)", {{false, 1, 3}, {true, 1, 2}}},
      {"p3_conj4", "psi(p) | psi(q^2) and psi(q) | psi(p^3)", {{false, 1, 2}, {true, 1, 3}}},
      {"p3_conj5", "psi(p^2) | psi(q^3) and psi(q^2) | psi(p^3)", {{false, 2, 3}, {true, 2, 3}}},
      {"p3_conj6", "psi(p^2) | psi(q^3) and psi(q) | psi(p^3)", {{false, 2, 3}, {true, 1, 3}}},
      {"p3_conj7", "psi(p) | psi(q^3) and psi(q^2) | psi(p^3)", {{false, 1, 3}, {true, 2, 3}}},
      {"p3_conj8", "psi(p) | psi(q^3) and psi(q^2) | psi(p^2)", {{false, 1, 3}, {true, 2, 2}}},
      {"p3_conj9", "psi(p^2) | psi(q^2) and psi(q) | psi(p^3)", {{false, 2, 2}, {true, 1, 3}}},
  };
}

}  // namespace

Natural psi_prime_power(const Natural& p, unsigned a) {
  if (!is_prime(p)) throw std::invalid_argument("psi_prime_power: " + p.to_string() + " is not prime");
  return alternating_sum(p, a);
}

Natural psi_cyclic(const Factorization& f) {
  Natural psi{1};
  for (const auto& pp : f.parts()) psi *= alternating_sum(pp.prime, pp.exponent);
  return psi;
}

Natural psi_cyclic_oracle(const Natural& n) {
  Natural sum{0};
  for (const Natural& d : divisors(factorize(n))) sum += d * totient(factorize(d));
  return sum;
}

bool prime_power_psi_divides(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw std::invalid_argument("prime_power_psi_divides: exponents must be positive");
  return (2 * b + 1) % (2 * a + 1) == 0;
}

std::uint64_t max_inline_psi_base(unsigned a) {
  auto fits = [a](std::uint64_t x) { return alternating_sum(Natural{x}, a).to_u128().has_value(); };
  std::uint64_t lo = 2;
  std::uint64_t hi = ~std::uint64_t{0};
  if (fits(hi)) return hi;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

const std::vector<Condition>& condition_family(ConditionFamily family) {
  static const std::vector<Condition> p1 = make_p1();
  static const std::vector<Condition> p2 = make_p2();
  static const std::vector<Condition> p3 = make_p3();
  switch (family) {
    case ConditionFamily::kP1:
      return p1;
    case ConditionFamily::kP2:
      return p2;
    case ConditionFamily::kP3:
      return p3;
  }
  throw std::logic_error("condition_family: bad family");
}

const std::vector<Condition>& all_conditions() {
  static const std::vector<Condition> all = [] {
    std::vector<Condition> v;
    for (auto fam : {ConditionFamily::kP1, ConditionFamily::kP2, ConditionFamily::kP3}) {
      const auto& f = condition_family(fam);
      v.insert(v.end(), f.begin(), f.end());
    }
    return v;
  }();
  return all;
}

const Condition& find_condition(std::string_view id) {
  for (const auto& c : all_conditions()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown condition id: " + std::string(id));
}

bool ConditionProfile::holds(const Relation& r) const {
  if (r.lhs < 1 || r.lhs > 3 || r.rhs < 1 || r.rhs > 3) {
    throw std::out_of_range("ConditionProfile: exponent outside 1..3");
  }
  return r.reverse ? grid_rev[r.lhs - 1][r.rhs - 1] : grid[r.lhs - 1][r.rhs - 1];
}

bool ConditionProfile::holds(const Condition& c) const {
  return std::all_of(c.relations.begin(), c.relations.end(), [this](const Relation& r) { return holds(r); });
}

ConditionProfile condition_profile(const Natural& p, const Natural& q) {
  if (p == q) throw std::invalid_argument("condition_profile: primes must be distinct");
  std::array<Natural, 3> psi_p;
  std::array<Natural, 3> psi_q;
  for (unsigned e = 1; e <= 3; ++e) {
    psi_p[e - 1] = psi_prime_power(p, e);
    psi_q[e - 1] = psi_prime_power(q, e);
  }
  ConditionProfile prof;
  prof.p = p;
  prof.q = q;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      prof.grid[i][j] = divides(psi_p[i], psi_q[j]);
      prof.grid_rev[i][j] = divides(psi_q[i], psi_p[j]);
    }
  }
  auto any_of = [&prof](ConditionFamily fam) {
    const auto& f = condition_family(fam);
    return std::any_of(f.begin(), f.end(), [&prof](const Condition& c) { return prof.holds(c); });
  };
  prof.p1_any = any_of(ConditionFamily::kP1);
  prof.p2_any = any_of(ConditionFamily::kP2);
  prof.p3_any = any_of(ConditionFamily::kP3);
  return prof;
}

}  // namespace psigraph
