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

#include "psigraph/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "psigraph/parse.hpp"
#include "psigraph/psi.hpp"
#include "psigraph/report.hpp"
#include "psigraph/search.hpp"
#include "psigraph/theorems.hpp"

namespace psigraph::cli {

namespace {

struct CliConfig {
  std::string order;
  std::string group;
  std::string format;
  std::string out_path;
  std::size_t max_order = 512;
  std::size_t max_vertices = 4096;

  std::string statement;
  std::string primes;
  VerifyParams verify;

  std::string condition;
  std::size_t prime_count = 0;
  std::size_t max_prime_count = 100000;

  std::string explorer;
  std::string explore_primes = "2,3,5,7";
  unsigned explore_exponent = 3;
};

// Families larger than this are refused by the explorers.
constexpr std::size_t kMaxExploreGraphs = 100000;

GroupLimits limits_of(const CliConfig& cfg) {
  GroupLimits limits;
  limits.max_order = cfg.max_order;
  limits.max_subgroups = cfg.max_vertices + 1;
  return limits;
}

void add_target_options(CLI::App* cmd, CliConfig& cfg) {
  auto* n = cmd->add_option("n", cfg.order, "order of the cyclic group, decimal or factored (2^3*3*5)");
  auto* g = cmd->add_option("--group", cfg.group,
                            "group spec: cyclic:n, abelian:q1,q2,..., dihedral:n, quaternion:2^k, product:AxB");
  n->excludes(g);
  cmd->add_option("--max-order", cfg.max_order, "largest group order accepted by --group")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-vertices", cfg.max_vertices, "largest graph built")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

PsiGraph build_target(const CliConfig& cfg) {
  if (cfg.order.empty() == cfg.group.empty()) throw std::invalid_argument("give exactly one of <n> and --group");
  if (!cfg.group.empty()) return build_from_group(parse_group(cfg.group, limits_of(cfg)), {EdgeRule::kPsiDivisibility, limits_of(cfg)});
  const Factorization f = parse_order(cfg.order);
  if (f.empty()) throw std::invalid_argument("n must be at least 2");
  if (f.divisor_count() - 1 > cfg.max_vertices) {
    throw CapExceeded("psi graph of " + cfg.order + " has more than " + std::to_string(cfg.max_vertices) + " vertices");
  }
  return build_cyclic(f);
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open " + cfg.out_path);
  file << text;
  if (!file.flush()) throw std::invalid_argument("cannot write " + cfg.out_path);
}

void report_elapsed(std::ostream& err, std::chrono::nanoseconds elapsed) {
  err << "elapsed: " << std::fixed << std::setprecision(3) << std::chrono::duration<double>(elapsed).count() << "s\n";
}

int cmd_psi(const CliConfig& cfg, std::ostream& out) {
  if (cfg.order.empty() == cfg.group.empty()) throw std::invalid_argument("give exactly one of <n> and --group");
  if (!cfg.group.empty()) {
    out << psi_group(parse_group(cfg.group, limits_of(cfg))) << '\n';
  } else {
    out << psi_cyclic(parse_order(cfg.order)) << '\n';
  }
  return kSuccess;
}

int cmd_graph(const CliConfig& cfg, std::ostream& out) {
  const PsiGraph g = build_target(cfg);
  emit(cfg, cfg.format == "json" ? to_json(analyze(g)).dump(2) + "\n" : to_dot(g), out);
  return kSuccess;
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
  const GraphReport r = analyze(build_target(cfg));
  emit(cfg, cfg.format == "text" ? to_text(r) : to_json(r).dump(2) + "\n", out);
  return kSuccess;
}

std::string verify_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "statement: " << r.statement_id << '\n'
     << "verdict: " << (r.passed() ? "pass" : "fail") << '\n'
     << "instances: " << r.instances_checked << '\n'
     << "bounds: " << r.bounds << '\n';
  for (const auto& f : r.failures) os << "failure: " << f.instance << ": expected " << f.expected << ", got " << f.actual << '\n';
  return os.str();
}

int cmd_verify(CliConfig cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.primes.empty()) cfg.verify.primes = parse_prime_list(cfg.primes);
  const VerificationReport r = verify(cfg.statement, cfg.verify);
  emit(cfg, cfg.format == "text" ? verify_text(r) : to_json(r).dump(2) + "\n", out);
  report_elapsed(err, r.elapsed);
  return r.passed() ? kSuccess : kFailure;
}

int cmd_search(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ScanOptions options;
  options.max_prime_count = cfg.max_prime_count;
  const ScanResult r = scan_pairs(cfg.condition, cfg.prime_count, options);
  out << "condition: " << r.condition << '\n' << "prime_count: " << r.prime_count << '\n' << "count: " << r.count << '\n';
  if (!cfg.out_path.empty()) emit(cfg, cfg.format == "json" ? to_json(r).dump(2) + "\n" : to_csv(r), out);
  report_elapsed(err, r.elapsed);
  return kSuccess;
}

int cmd_explore(const CliConfig& cfg, std::ostream& out) {
  const auto primes = parse_prime_list(cfg.explore_primes);
  double graphs = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) graphs *= cfg.explore_exponent + 1;
  if (graphs > static_cast<double>(kMaxExploreGraphs)) {
    throw CapExceeded("explore: family has more than " + std::to_string(kMaxExploreGraphs) + " orders");
  }
  if (cfg.explorer == "diameter2") {
    const Diameter2Report r = scan_diameter2(primes, cfg.explore_exponent);
    emit(cfg, to_json(r).dump(2) + "\n", out);
    return r.counterexample_candidates.empty() ? kSuccess : kFailure;
  }
  const GirthHistogram h = scan_girth(primes, cfg.explore_exponent);
  emit(cfg, to_json(h).dump(2) + "\n", out);
  for (const auto& [g, count] : h.counts) {
    if (g && *g != 3 && *g != 4 && *g != 8) return kFailure;
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-of-element-orders divisibility graphs of finite groups.", "psigraph"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* psi = app.add_subcommand("psi", "print the sum of element orders of C_n or of a group");
  add_target_options(psi, cfg);

  auto* graph = app.add_subcommand("graph", "export the psi graph of C_n or of a group");
  add_target_options(graph, cfg);
  graph->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"dot", "json"}))->default_val("dot");
  graph->add_option("--out", cfg.out_path, "write to FILE instead of standard output");

  auto* analyze_cmd = app.add_subcommand("analyze", "print the full invariant report");
  add_target_options(analyze_cmd, cfg);
  analyze_cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}))->default_val("json");
  analyze_cmd->add_option("--out", cfg.out_path, "write to FILE instead of standard output");

  std::vector<std::string> statement_ids;
  for (const auto& s : statements()) {
    statement_ids.emplace_back(s.id);
    statement_ids.emplace_back(s.alias);
  }
  auto* verify_cmd = app.add_subcommand("verify", "check a classification statement over an instance family");
  verify_cmd->add_option("statement_id", cfg.statement, "statement to check")
      ->required()
      ->check(CLI::IsMember(statement_ids));
  verify_cmd->add_option("--primes", cfg.primes, "comma-separated prime set")->default_str("2,3,5,7,11,13");
  verify_cmd->add_option("--power-primes", cfg.verify.power_primes, "primes for the p^a family")->delimiter(',');
  verify_cmd->add_option("--max-exponent", cfg.verify.max_exponent, "exponent bound for two-prime orders")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-power-exponent", cfg.verify.max_power_exponent, "exponent bound for p^a")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-order", cfg.verify.max_order, "largest non-cyclic catalog group")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-cyclic-order", cfg.verify.max_cyclic_order, "largest cyclic catalog group")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", cfg.verify.max_n, "bound for the square-free scan over cyclic orders")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}))->default_val("json");
  verify_cmd->add_option("--out", cfg.out_path, "write to FILE instead of standard output");

  std::vector<std::string> condition_ids;
  for (const auto& c : all_conditions()) condition_ids.emplace_back(c.id);
  auto* search = app.add_subcommand("search", "scan ordered prime pairs for a divisibility condition");
  search->add_option("--condition", cfg.condition, "condition id")->required()->check(CLI::IsMember(condition_ids));
  search->add_option("--prime-count", cfg.prime_count, "number of leading primes")->required()->check(CLI::PositiveNumber);
  search->add_option("--max-prime-count", cfg.max_prime_count, "cap on --prime-count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search->add_option("--out", cfg.out_path, "write the match list to FILE");
  search->add_option("--format", cfg.format, "match list format")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  auto* explore = app.add_subcommand("explore", "search cyclic orders for diameter-2 or girth outliers");
  explore->add_option("kind", cfg.explorer, "explorer")->required()->check(CLI::IsMember({"diameter2", "girth"}));
  explore->add_option("--primes", cfg.explore_primes, "comma-separated prime set")->capture_default_str();
  explore->add_option("--max-exponent", cfg.explore_exponent, "exponent bound per prime")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  explore->add_option("--out", cfg.out_path, "write to FILE instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (psi->parsed()) return cmd_psi(cfg, out);
    if (graph->parsed()) return cmd_graph(cfg, out);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (search->parsed()) return cmd_search(cfg, out, err);
    if (explore->parsed()) return cmd_explore(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"psigraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace psigraph::cli
