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

#include "psigraph/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "psigraph/analysis.hpp"
#include "psigraph/family.hpp"
#include "psigraph/parallel.hpp"
#include "psigraph/psi.hpp"

namespace psigraph {

namespace {

using Failures = std::vector<VerificationFailure>;

constexpr std::size_t kMaxPrimes = 10;
constexpr unsigned kMaxExponent = 12;
constexpr unsigned kMaxPowerExponent = 200;
constexpr std::uint64_t kMaxN = 10000000;

const std::vector<StatementInfo> kStatements = {
    {"complete-graph", "prop2.2", "the graph is complete exactly for groups of prime order"},
    {"degree-formula", "prop2.3", "closed-form degrees of prime-power and Sylow vertices"},
    {"cycle", "prop2.4", "the graph is a cycle exactly for C_{p^2 q^2} with no (P1) relation"},
    {"bipartite", "prop2.5", "bipartite cyclic cases: p^a with 2 <= a <= 12, small two-prime patterns, (P2)/(P3) exceptions"},
    {"girth", "cor2.6", "girth of a cyclic graph is 3, 4, 8 or infinite"},
    {"connectivity", "thm2.7", "two or more primes: connected with diameter 2..4; p^n, n >= 4: components = 1 + isolated"},
    {"tree", "cor2.8", "tree cases: C_p, C_pq, C_{p^2 q} and C_{p^3 q} under non-divisibility side conditions"},
    {"nonplanar", "prop2.9", "four or more primes: |E| > 3|V| - 6; square-free four-prime graphs have 15 vertices and 50 edges"},
    {"universal-vertex", "thm2.10", "a group is psi-divisible exactly when its graph has a universal vertex"},
    {"abelian-divisible", "cor2.11", "abelian: psi-divisible, cyclic square-free and universal vertex coincide"},
};

std::string yes_no(bool b, std::string_view what) { return (b ? "" : "not ") + std::string(what); }

std::string join_u64(const std::vector<std::uint64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string cyclic_descriptor(const Factorization& f) { return "cyclic:" + f.to_string(); }

// Two-prime order p^a q^b with a >= b: the prime with the larger exponent
// comes first (the smaller prime on ties).
struct TwoPrimePattern {
  std::uint64_t p, q;
  unsigned a, b;
};

TwoPrimePattern two_prime_pattern(const Factorization& f) {
  const auto& parts = f.parts();
  TwoPrimePattern t{parts[0].prime.to_u64().value(), parts[1].prime.to_u64().value(), parts[0].exponent,
                    parts[1].exponent};
  if (t.b > t.a) {
    std::swap(t.p, t.q);
    std::swap(t.a, t.b);
  }
  return t;
}

std::vector<std::uint64_t> power_primes(const VerifyParams& params) {
  if (!params.power_primes.empty()) return params.power_primes;
  auto primes = params.primes;
  std::sort(primes.begin(), primes.end());
  primes.resize(std::min<std::size_t>(primes.size(), 3));
  return primes;
}

void validate(const VerifyParams& params) {
  if (params.primes.empty()) throw std::invalid_argument("verify: prime set is empty");
  for (auto p : params.primes) {
    if (!is_prime(p)) throw std::invalid_argument("verify: " + std::to_string(p) + " is not prime");
  }
  if (params.primes.size() > kMaxPrimes) {
    throw CapExceeded("verify: at most " + std::to_string(kMaxPrimes) + " primes");
  }
  if (params.max_exponent == 0 || params.max_power_exponent == 0) {
    throw std::invalid_argument("verify: exponent bounds must be positive");
  }
  if (params.max_exponent > kMaxExponent) {
    throw CapExceeded("verify: max exponent above " + std::to_string(kMaxExponent));
  }
  if (params.max_power_exponent > kMaxPowerExponent) {
    throw CapExceeded("verify: max power exponent above " + std::to_string(kMaxPowerExponent));
  }
  if (params.max_order > params.limits.max_order || params.max_cyclic_order > params.limits.max_order) {
    throw CapExceeded("verify: catalog order above " + std::to_string(params.limits.max_order));
  }
  if (params.max_n > kMaxN) throw CapExceeded("verify: max n above " + std::to_string(kMaxN));
}

FamilyBounds standard_bounds(const VerifyParams& params) {
  FamilyBounds b;
  b.primes = params.primes;
  b.power_primes = power_primes(params);
  b.max_power_exponent = params.max_power_exponent;
  b.max_pair_exponent = params.max_exponent;
  b.max_triple_exponent = std::min(params.max_exponent, 3u);
  b.max_quad_exponent = std::min(params.max_exponent, 2u);
  b.max_primes = static_cast<unsigned>(params.primes.size());
  return b;
}

std::string bounds_text(const VerifyParams& params) {
  std::ostringstream os;
  os << "primes=" << join_u64(params.primes) << " power_primes=" << join_u64(power_primes(params))
     << " max_power_exponent=" << params.max_power_exponent << " max_exponent=" << params.max_exponent
     << " max_order=" << params.max_order << " max_cyclic_order=" << params.max_cyclic_order
     << " max_n=" << params.max_n;
  return os.str();
}

// Runs check(i, failures) for every item index in parallel and merges the
// failures sorted by instance.
void run_checks(VerificationReport& report, std::size_t count, std::size_t threads,
                const std::function<void(std::size_t, Failures&)>& check) {
  std::vector<Failures> per_item(count);
  parallel_for(count, threads, [&](std::size_t i) { check(i, per_item[i]); });
  for (auto& fs : per_item) {
    for (auto& f : fs) report.failures.push_back(std::move(f));
  }
  report.instances_checked += count;
}

void check_cyclic_family(VerificationReport& report, const std::vector<Factorization>& family,
                         const VerifyParams& params,
                         const std::function<void(const Factorization&, const PsiGraph&, Failures&)>& check) {
  const BuildOptions options{params.edge_rule, params.limits};
  run_checks(report, family.size(), params.threads, [&](std::size_t i, Failures& out) {
    check(family[i], build_cyclic(family[i], options), out);
  });
}

void expect(Failures& out, const std::string& instance, const std::string& expected, const std::string& actual) {
  if (expected != actual) out.push_back({instance, expected, actual});
}

// ---------------------------------------------------------------------------

void verify_complete(VerificationReport& report, const VerifyParams& params) {
  const auto catalog = group_catalog(params);
  const BuildOptions options{params.edge_rule, params.limits};
  run_checks(report, catalog.size(), params.threads, [&](std::size_t i, Failures& out) {
    const FiniteGroup& g = catalog[i];
    const bool prime_order = is_prime(static_cast<std::uint64_t>(g.order()));
    expect(out, g.label(), yes_no(prime_order, "complete"), yes_no(is_complete(build_from_group(g, options)), "complete"));
  });
}

void verify_degrees(VerificationReport& report, const VerifyParams& params) {
  std::vector<Factorization> powers;
  for (auto p : power_primes(params)) {
    for (unsigned a = 1; a <= params.max_power_exponent; ++a) powers.emplace_back(std::vector<PrimePower>{{Natural{p}, a}});
  }
  check_cyclic_family(report, powers, params, [](const Factorization& f, const PsiGraph& g, Failures& out) {
    const auto& pp = f.parts()[0];
    for (unsigned b = 1; b <= pp.exponent; ++b) {
      const auto v = g.find(pow(pp.prime, b));
      const auto want = degree_formula_prime_power(pp.exponent, b);
      const auto got = static_cast<std::int64_t>(degree(g, *v));
      expect(out, cyclic_descriptor(f), "d(" + pp.prime.to_string() + "^" + std::to_string(b) + ")=" + std::to_string(want),
             "d(" + pp.prime.to_string() + "^" + std::to_string(b) + ")=" + std::to_string(got));
    }
  });

  FamilyBounds b = standard_bounds(params);
  const unsigned e = std::min(params.max_exponent, 3u);
  b.power_primes.clear();
  b.max_pair_exponent = b.max_triple_exponent = b.max_quad_exponent = e;
  b.max_primes = std::min<unsigned>(b.max_primes, 4);
  check_cyclic_family(report, cyclic_family(b), params, [](const Factorization& f, const PsiGraph& g, Failures& out) {
    for (std::size_t i = 0; i < f.prime_count(); ++i) {
      const auto& pp = f.parts()[i];
      const auto v = g.find(pow(pp.prime, pp.exponent));
      const std::string at = "d(" + pp.prime.to_string() + "^" + std::to_string(pp.exponent) + ")=";
      expect(out, cyclic_descriptor(f), at + std::to_string(degree_formula_sylow(f, i)),
             at + std::to_string(degree(g, *v)));
    }
  });
}

void verify_cycle(VerificationReport& report, const VerifyParams& params) {
  check_cyclic_family(report, cyclic_family(standard_bounds(params)), params,
                      [](const Factorization& f, const PsiGraph& g, Failures& out) {
                        bool want = false;
                        if (f.prime_count() == 2) {
                          const auto t = two_prime_pattern(f);
                          want = t.a == 2 && t.b == 2 && !condition_profile(Natural{t.p}, Natural{t.q}).p1_any;
                        }
                        expect(out, cyclic_descriptor(f), yes_no(want, "cycle"), yes_no(is_cycle(g), "cycle"));
                      });
}

bool classified_bipartite(const Factorization& f) {
  if (f.prime_count() == 1) {
    const unsigned a = f.parts()[0].exponent;
    return a >= 2 && a <= 12;
  }
  if (f.prime_count() != 2) return false;
  const auto t = two_prime_pattern(f);
  if (t.a <= 2 || (t.a == 3 && t.b == 1)) return true;
  const auto profile = condition_profile(Natural{t.p}, Natural{t.q});
  if (t.a == 3 && t.b == 2) return !profile.p2_any;
  if (t.a == 3 && t.b == 3) return !profile.p3_any;
  return false;
}

void verify_bipartite(VerificationReport& report, const VerifyParams& params) {
  check_cyclic_family(report, cyclic_family(standard_bounds(params)), params,
                      [](const Factorization& f, const PsiGraph& g, Failures& out) {
                        expect(out, cyclic_descriptor(f), yes_no(classified_bipartite(f), "bipartite"),
                               yes_no(is_bipartite(g), "bipartite"));
                      });
}

std::string girth_text(const std::optional<std::size_t>& g) { return g ? std::to_string(*g) : "inf"; }

void verify_girth(VerificationReport& report, const VerifyParams& params) {
  const auto family = cyclic_family(standard_bounds(params));
  std::vector<std::optional<std::size_t>> girths(family.size());
  check_cyclic_family(report, family, params, [&](const Factorization& f, const PsiGraph& g, Failures& out) {
    const auto value = girth(g);
    const auto i = static_cast<std::size_t>(&f - family.data());
    girths[i] = value;
    if (value && *value != 3 && *value != 4 && *value != 8) {
      out.push_back({cyclic_descriptor(f), "girth in {3,4,8,inf}", "girth " + girth_text(value)});
    }
  });
  nlohmann::json histogram = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::object();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto key = girth_text(girths[i]);
    histogram[key] = histogram.value(key, 0) + 1;
    if (!witnesses.contains(key)) witnesses[key] = cyclic_descriptor(family[i]);
  }
  report.observations["girth_histogram"] = histogram;
  report.observations["girth_witnesses"] = witnesses;
}

void verify_connectivity(VerificationReport& report, const VerifyParams& params) {
  check_cyclic_family(report, cyclic_family(standard_bounds(params)), params,
                      [](const Factorization& f, const PsiGraph& g, Failures& out) {
                        const std::string id = cyclic_descriptor(f);
                        const auto comps = connected_components(g).size();
                        if (f.prime_count() >= 2) {
                          const auto d = diameter(g);
                          const bool ok = d && *d >= 2 && *d <= 4;
                          expect(out, id, "connected, diameter in [2,4]",
                                 ok ? "connected, diameter in [2,4]" : "diameter " + girth_text(d));
                          return;
                        }
                        const unsigned n = f.parts()[0].exponent;
                        const auto isolated = isolated_vertices(g).size();
                        if (n == 1) {
                          expect(out, id, "connected, diameter 0",
                                 comps == 1 && diameter(g) == 0 ? "connected, diameter 0" : "diameter " + girth_text(diameter(g)));
                        } else if (n <= 3) {
                          expect(out, id, std::to_string(n) + " components", std::to_string(comps) + " components");
                        } else {
                          expect(out, id, "components = " + std::to_string(1 + isolated),
                                 "components = " + std::to_string(comps));
                          expect(out, id, "isolated = " + std::to_string(isolated_count_prime_power(n)),
                                 "isolated = " + std::to_string(isolated));
                          expect(out, id, "disconnected", comps > 1 ? "disconnected" : "connected");
                        }
                      });
}

bool classified_tree(const Factorization& f) {
  if (f.prime_count() == 1) return f.parts()[0].exponent == 1;
  if (f.prime_count() != 2) return false;
  const auto t = two_prime_pattern(f);
  if (t.b != 1) return false;
  if (t.a == 1) return true;
  const auto profile = condition_profile(Natural{t.p}, Natural{t.q});
  const bool p_q = profile.grid[0][0];
  const bool p2_q = profile.grid[1][0];
  if (t.a == 2) return !p_q;
  if (t.a == 3) return !p_q && !p2_q;
  return false;
}

void verify_tree(VerificationReport& report, const VerifyParams& params) {
  check_cyclic_family(report, cyclic_family(standard_bounds(params)), params,
                      [](const Factorization& f, const PsiGraph& g, Failures& out) {
                        expect(out, cyclic_descriptor(f), yes_no(classified_tree(f), "tree"), yes_no(is_tree(g), "tree"));
                      });
}

void verify_nonplanar(VerificationReport& report, const VerifyParams& params) {
  auto family = cyclic_family(standard_bounds(params));
  std::erase_if(family, [](const Factorization& f) { return f.prime_count() < 4; });
  check_cyclic_family(report, family, params, [](const Factorization& f, const PsiGraph& g, Failures& out) {
    const std::string id = cyclic_descriptor(f);
    expect(out, id, "|E| > 3|V| - 6", euler_nonplanar(g) ? "|E| > 3|V| - 6" : "|E| = " + std::to_string(g.edge_count()));
    if (f.prime_count() == 4 && f.is_square_free()) {
      expect(out, id, "|V|=15 |E|=50",
             "|V|=" + std::to_string(g.vertex_count()) + " |E|=" + std::to_string(g.edge_count()));
      std::map<std::size_t, std::size_t> hist;
      for (auto d : degree_sequence(g)) ++hist[d];
      std::string got;
      for (auto [d, c] : hist) got += (got.empty() ? "" : " ") + std::to_string(c) + "x" + std::to_string(d);
      expect(out, id, "6x5 8x7 1x14", got);
    }
  });
}

void verify_universal(VerificationReport& report, const VerifyParams& params) {
  const auto catalog = group_catalog(params);
  const BuildOptions options{params.edge_rule, params.limits};
  run_checks(report, catalog.size(), params.threads, [&](std::size_t i, Failures& out) {
    const FiniteGroup& g = catalog[i];
    expect(out, g.label(), yes_no(is_psi_divisible(g, params.limits), "universal vertex"),
           yes_no(has_universal_vertex(build_from_group(g, options)), "universal vertex"));
  });
}

// Does psi(d) divide psi(n) for every divisor d of n? n <= kMaxN keeps every
// value below 2^64.
bool all_divisors_psi_divide(const std::vector<std::pair<std::uint64_t, unsigned>>& parts) {
  std::vector<std::vector<std::uint64_t>> psi_powers;
  std::uint64_t psi_n = 1;
  for (auto [p, e] : parts) {
    std::vector<std::uint64_t> row{1};
    for (unsigned j = 1; j <= e; ++j) row.push_back(psi_prime_power(Natural{p}, j).to_u64().value());
    psi_n *= row[e];
    psi_powers.push_back(std::move(row));
  }
  std::vector<unsigned> exps(parts.size(), 0);
  while (true) {
    std::uint64_t psi_d = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) psi_d *= psi_powers[i][exps[i]];
    if (psi_n % psi_d != 0) return false;
    std::size_t i = 0;
    while (i < parts.size() && exps[i] == parts[i].second) exps[i++] = 0;
    if (i == parts.size()) break;
    ++exps[i];
  }
  return true;
}

void verify_abelian(VerificationReport& report, const VerifyParams& params) {
  const auto types = abelian_types(params.max_order);
  const BuildOptions options{params.edge_rule, params.limits};
  run_checks(report, types.size(), params.threads, [&](std::size_t i, Failures& out) {
    const FiniteGroup g = abelian_group(types[i], params.limits);
    const bool divisible = is_psi_divisible(g, params.limits);
    const bool cyclic_square_free = is_cyclic(g) && factorize(static_cast<std::uint64_t>(g.order())).is_square_free();
    const bool universal = has_universal_vertex(build_from_group(g, options));
    auto text = [](bool a, bool b, bool c) {
      return yes_no(a, "psi-divisible") + ", " + yes_no(b, "cyclic square-free") + ", " + yes_no(c, "universal vertex");
    };
    if (divisible != cyclic_square_free || divisible != universal) {
      out.push_back({g.label(), "all three equivalent", text(divisible, cyclic_square_free, universal)});
    }
  });

  // Square-free scan over cyclic orders with a smallest-prime-factor sieve.
  const std::uint64_t max_n = params.max_n;
  std::vector<std::uint32_t> spf(max_n + 1, 0);
  for (std::uint64_t i = 2; i <= max_n; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= max_n; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  constexpr std::uint64_t kBlock = 4096;
  const std::size_t blocks = max_n < 2 ? 0 : static_cast<std::size_t>((max_n - 1 + kBlock - 1) / kBlock);
  std::vector<std::uint64_t> first_negative(blocks, 0);
  run_checks(report, blocks, params.threads, [&](std::size_t b, Failures& out) {
    const std::uint64_t lo = 2 + b * kBlock;
    const std::uint64_t hi = std::min(max_n, lo + kBlock - 1);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      std::vector<std::pair<std::uint64_t, unsigned>> parts;
      bool square_free = true;
      for (std::uint64_t m = n; m > 1;) {
        const std::uint64_t p = spf[m];
        unsigned e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        if (e > 1) square_free = false;
        parts.emplace_back(p, e);
      }
      const bool divisible = all_divisors_psi_divide(parts);
      if (!divisible && first_negative[b] == 0) first_negative[b] = n;
      if (divisible != square_free) {
        out.push_back({"cyclic:" + std::to_string(n), yes_no(square_free, "psi-divisible"), yes_no(divisible, "psi-divisible")});
      }
    }
  });
  // run_checks counted blocks; count orders instead.
  report.instances_checked += (max_n >= 2 ? max_n - 1 : 0) - blocks;
  const auto it = std::find_if(first_negative.begin(), first_negative.end(), [](std::uint64_t n) { return n != 0; });
  report.observations["abelian_types"] = types.size();
  report.observations["cyclic_orders_scanned"] = max_n >= 2 ? max_n - 1 : 0;
  if (it != first_negative.end()) report.observations["smallest_non_divisible_order"] = *it;
}

}  // namespace

const std::vector<StatementInfo>& statements() { return kStatements; }

const StatementInfo& find_statement(std::string_view id) {
  for (const auto& s : kStatements) {
    if (s.id == id || s.alias == id) return s;
  }
  throw std::invalid_argument("unknown statement id: " + std::string(id));
}

std::vector<std::vector<std::uint64_t>> abelian_types(std::size_t max_order) {
  // Partitions of a, largest part first.
  std::function<void(unsigned, unsigned, std::vector<unsigned>&, std::vector<std::vector<unsigned>>&)> partitions =
      [&](unsigned rest, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
        if (rest == 0) {
          out.push_back(cur);
          return;
        }
        for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
          cur.push_back(part);
          partitions(rest - part, part, cur, out);
          cur.pop_back();
        }
      };

  std::vector<std::vector<std::uint64_t>> types;
  for (std::uint64_t m = 2; m <= max_order; ++m) {
    std::vector<std::vector<std::uint64_t>> acc{{}};
    const Factorization f = factorize(m);
    for (const auto& pp : f.parts()) {
      const std::uint64_t p = pp.prime.to_u64().value();
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(pp.exponent, pp.exponent, cur, parts);
      std::vector<std::vector<std::uint64_t>> next;
      for (const auto& base : acc) {
        for (const auto& partition : parts) {
          auto t = base;
          for (unsigned e : partition) {
            std::uint64_t q = 1;
            for (unsigned k = 0; k < e; ++k) q *= p;
            t.push_back(q);
          }
          next.push_back(std::move(t));
        }
      }
      acc = std::move(next);
    }
    for (auto& t : acc) types.push_back(std::move(t));
  }
  return types;
}

std::vector<FiniteGroup> group_catalog(const VerifyParams& params) {
  const auto& limits = params.limits;
  std::vector<FiniteGroup> out;
  for (std::size_t n = 2; n <= params.max_cyclic_order; ++n) out.push_back(cyclic_group(n, limits));
  for (const auto& t : abelian_types(params.max_order)) {
    const FiniteGroup g = abelian_group(t, limits);
    if (!is_cyclic(g)) out.push_back(g);
  }
  for (std::size_t n = 3; 2 * n <= params.max_order; ++n) out.push_back(dihedral_group(n, limits));
  for (std::size_t order = 8; order <= params.max_order; order *= 2) out.push_back(quaternion_group(order, limits));
  const std::vector<std::pair<FiniteGroup, FiniteGroup>> products = {
      {dihedral_group(3), cyclic_group(3)},    {dihedral_group(4), cyclic_group(2)},
      {quaternion_group(8), cyclic_group(2)},  {quaternion_group(8), cyclic_group(3)},
      {dihedral_group(3), dihedral_group(3)},  {quaternion_group(8), cyclic_group(5)},
      {dihedral_group(5), cyclic_group(3)},    {dihedral_group(4), cyclic_group(3)},
  };
  for (const auto& [a, b] : products) {
    if (a.order() * b.order() <= params.max_order) out.push_back(direct_product(a, b, limits));
  }
  return out;
}

VerificationReport verify(std::string_view statement_id, const VerifyParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const StatementInfo& info = find_statement(statement_id);
  validate(params);

  VerificationReport report;
  report.statement_id = std::string(info.id);
  report.bounds = bounds_text(params);
  static const std::map<std::string_view, void (*)(VerificationReport&, const VerifyParams&)> kRunners = {
      {"complete-graph", verify_complete}, {"degree-formula", verify_degrees},
      {"cycle", verify_cycle},             {"bipartite", verify_bipartite},
      {"girth", verify_girth},             {"connectivity", verify_connectivity},
      {"tree", verify_tree},               {"nonplanar", verify_nonplanar},
      {"universal-vertex", verify_universal}, {"abelian-divisible", verify_abelian},
  };
  kRunners.at(info.id)(report, params);
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const VerificationFailure& a, const VerificationFailure& b) { return a.instance < b.instance; });
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["statement_id"] = r.statement_id;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["bounds"] = r.bounds;
  j["instances_checked"] = r.instances_checked;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
  }
  j["observations"] = r.observations;
  return j;
}

}  // namespace psigraph
