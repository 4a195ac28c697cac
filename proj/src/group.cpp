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

#include "psigraph/group.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "psigraph/arith.hpp"

namespace psigraph {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 64;
constexpr std::size_t kSampledTriples = 20'000;

void check_cap(std::size_t order, const GroupLimits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw CapExceeded(what + ": order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(limits.max_order));
  }
}

// Subgroup membership as a bitset over element indices.
using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : b) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool test_bit(const Bits& b, Element x) { return (b[x / 64] >> (x % 64)) & 1U; }
void set_bit(Bits& b, Element x) { b[x / 64] |= std::uint64_t{1} << (x % 64); }

// Subgroup generated by `gens`: closure of {e} under right multiplication by
// generators, which is the whole generated subgroup in a finite group.
Bits closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  Bits bits((g.order() + 63) / 64, 0);
  std::vector<Element> queue{0};
  set_bit(bits, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element y = queue[head];
    for (Element s : gens) {
      Element z = g.mul(y, s);
      if (!test_bit(bits, z)) {
        set_bit(bits, z);
        queue.push_back(z);
      }
    }
  }
  return bits;
}

std::vector<Element> bits_to_elements(const Bits& b, std::size_t order) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < order; ++x) {
    if (test_bit(b, static_cast<Element>(x))) out.push_back(static_cast<Element>(x));
  }
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  if (order_ == 0) throw std::invalid_argument("FiniteGroup: order must be positive");
  if (table_.size() != order_ * order_) throw std::invalid_argument("FiniteGroup: table size mismatch");
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(0, static_cast<Element>(a)) != a || mul(static_cast<Element>(a), 0) != a) {
      throw std::invalid_argument("FiniteGroup: element 0 is not the identity");
    }
  }
  std::vector<char> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      Element c = mul(static_cast<Element>(a), static_cast<Element>(b));
      if (c >= order_ || seen[c]) throw std::invalid_argument("FiniteGroup: row is not a permutation");
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      Element c = mul(static_cast<Element>(b), static_cast<Element>(a));
      if (seen[c]) throw std::invalid_argument("FiniteGroup: column is not a permutation");
      seen[c] = 1;
    }
  }
  auto assoc = [this](Element a, Element b, Element c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (order_ <= kExhaustiveAssociativityLimit) {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        for (Element c = 0; c < order_; ++c) {
          if (!assoc(a, b, c)) throw std::invalid_argument("FiniteGroup: table is not associative");
        }
      }
    }
  } else {
    std::mt19937_64 rng(order_);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
    for (std::size_t i = 0; i < kSampledTriples; ++i) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) {
        throw std::invalid_argument("FiniteGroup: table is not associative");
      }
    }
  }
}

Element FiniteGroup::inverse(Element a) const {
  for (Element b = 0; b < order_; ++b) {
    if (mul(a, b) == 0) return b;
  }
  throw std::logic_error("FiniteGroup: element without inverse");
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

FiniteGroup cyclic_group(std::size_t n, const GroupLimits& limits) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  check_cap(n, limits, "cyclic_group");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(n, std::move(table), "cyclic:" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n, const GroupLimits& limits) {
  if (n == 0) throw std::invalid_argument("dihedral_group: n must be positive");
  check_cap(2 * n, limits, "dihedral_group");
  // Element r^i s^e has index i + n*e; s r^j = r^{-j} s.
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
      std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
      table[x * order + y] = static_cast<Element>(rot + n * ((a + b) % 2));
    }
  }
  return FiniteGroup(order, std::move(table), "dihedral:" + std::to_string(n));
}

FiniteGroup quaternion_group(std::size_t order, const GroupLimits& limits) {
  if (order < 8 || (order & (order - 1)) != 0) {
    throw std::invalid_argument("quaternion_group: order must be 2^k with k >= 3");
  }
  check_cap(order, limits, "quaternion_group");
  // Element x^i y^e has index i + m*e with m = order/2; y x y^-1 = x^-1 and
  // y^2 = x^{m/2}.
  const std::size_t m = order / 2;
  std::vector<Element> table(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      std::size_t i = u % m, a = u / m, j = v % m, b = v / m;
      std::size_t rot = a == 0 ? (i + j) % m : (i + m - j) % m;
      std::size_t e = a + b;
      if (e == 2) {
        rot = (rot + m / 2) % m;
        e = 0;
      }
      table[u * order + v] = static_cast<Element>(rot + m * e);
    }
  }
  return FiniteGroup(order, std::move(table), "quaternion:" + std::to_string(order));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const GroupLimits& limits) {
  const std::size_t order = g.order() * h.order();
  check_cap(order, limits, "direct_product");
  std::vector<Element> table(order * order);
  const std::size_t m = h.order();
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      Element gx = static_cast<Element>(x / m), hx = static_cast<Element>(x % m);
      Element gy = static_cast<Element>(y / m), hy = static_cast<Element>(y % m);
      table[x * order + y] = static_cast<Element>(g.mul(gx, gy) * m + h.mul(hx, hy));
    }
  }
  return FiniteGroup(order, std::move(table), "product:" + g.label() + "x" + h.label());
}

FiniteGroup abelian_group(std::span<const std::uint64_t> prime_powers, const GroupLimits& limits) {
  if (prime_powers.empty()) throw std::invalid_argument("abelian_group: empty type");
  std::size_t order = 1;
  std::string label = "abelian:";
  for (std::size_t i = 0; i < prime_powers.size(); ++i) {
    std::uint64_t q = prime_powers[i];
    if (q < 2 || factorize(q).prime_count() != 1) {
      throw std::invalid_argument("abelian_group: " + std::to_string(q) + " is not a prime power");
    }
    order *= q;
    check_cap(order, limits, "abelian_group");
    if (i > 0) label += ',';
    label += factorize(q).to_string();
  }
  FiniteGroup result = cyclic_group(prime_powers[0], limits);
  for (std::size_t i = 1; i < prime_powers.size(); ++i) {
    result = direct_product(result, cyclic_group(prime_powers[i], limits), limits);
  }
  return result.with_label(label);
}

std::vector<std::uint64_t> element_orders(const FiniteGroup& g) {
  std::vector<std::uint64_t> orders(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::uint64_t k = 1;
    Element y = static_cast<Element>(x);
    while (y != 0) {
      y = g.mul(y, static_cast<Element>(x));
      ++k;
    }
    orders[x] = k;
  }
  return orders;
}

Natural psi_group(const FiniteGroup& g) {
  Natural sum{0};
  for (auto o : element_orders(g)) sum += Natural{o};
  return sum;
}

Subgroup::Subgroup(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, const GroupLimits& limits) {
  struct Entry {
    Bits bits;
    std::vector<Element> gens;
  };
  std::vector<Entry> found;
  std::unordered_set<Bits, BitsHash> seen;
  auto add = [&](Bits bits, std::vector<Element> gens) {
    if (!seen.insert(bits).second) return;
    if (found.size() >= limits.max_subgroups) {
      throw CapExceeded("enumerate_subgroups: more than " + std::to_string(limits.max_subgroups) +
                        " subgroups in " + g.label());
    }
    found.push_back({std::move(bits), std::move(gens)});
  };

  // Cyclic subgroups first; one generator per distinct cyclic subgroup.
  std::vector<Element> cyclic_generators;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t before = found.size();
    add(closure(g, {static_cast<Element>(x)}), {static_cast<Element>(x)});
    if (found.size() != before && x != 0) cyclic_generators.push_back(static_cast<Element>(x));
  }

  // Join every known subgroup with every cyclic subgroup until nothing new
  // appears. Any subgroup is a join of cyclic subgroups, so this reaches the
  // full lattice.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element x : cyclic_generators) {
      if (test_bit(found[i].bits, x)) continue;
      std::vector<Element> gens = found[i].gens;
      gens.push_back(x);
      Bits joined = closure(g, gens);
      add(std::move(joined), std::move(gens));
    }
  }

  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (const auto& e : found) result.emplace_back(bits_to_elements(e.bits, g.order()));
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return result;
}

Natural psi_subgroup(const Subgroup& h, std::span<const std::uint64_t> orders) {
  Natural sum{0};
  for (Element x : h.elements()) sum += Natural{orders[x]};
  return sum;
}

bool is_psi_divisible(const FiniteGroup& g, const GroupLimits& limits) {
  const auto orders = element_orders(g);
  const Natural whole = psi_group(g);
  for (const auto& h : enumerate_subgroups(g, limits)) {
    if (!divides(psi_subgroup(h, orders), whole)) return false;
  }
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  const auto orders = element_orders(g);
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

}  // namespace psigraph
