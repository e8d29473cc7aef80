// posetlab command-line front end. Exit codes: 0 pass, 1 violations, 2 usage
// or input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "posetlab/analyze.hpp"
#include "posetlab/generate.hpp"
#include "posetlab/grading.hpp"
#include "posetlab/io.hpp"
#include "posetlab/partition.hpp"
#include "posetlab/structure.hpp"
#include "posetlab/suites.hpp"

using namespace posetlab;
using nlohmann::json;

namespace {

int cmd_analyze(const std::string& path, bool pretty) {
  const json report = analyze(read_poset_file(path));
  std::cout << (pretty ? report.dump(2) : report.dump()) << '\n';
  return 0;
}

int cmd_wpoly(const std::string& path) {
  const IntPolynomial w = w_polynomial(read_poset_file(path));
  std::cout << w.to_string() << '\n';
  return 0;
}

int cmd_decompose(const std::string& path) {
  const LabeledPoset lp = read_poset_file(path);
  const auto decomposition = saturated_decomposition(lp);
  json out = json::array();
  for (const auto& part : decomposition.parts) {
    json entry = poset_file_json(part);
    entry["w_polynomial"] = polynomial_json(w_polynomial(part));
    if (is_canonical(part)) {
      const auto spec = antichain_decomposition(part);
      entry["antichain_blocks"] = spec.block_sizes();
      entry["glue"] = spec.glue;
    }
    out.push_back(std::move(entry));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_cd(const std::string& path) {
  const LabeledPoset lp = read_poset_file(path);
  const BigInt cd = charney_davis(lp);
  const BigInt count = reverse_alternating_count(canonical_labeling(lp));
  std::cout << json{{"charney_davis", cd.get_str()}, {"reverse_alternating_count", count.get_str()}}.dump() << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteBounds& bounds) {
  const VerificationReport report = run_suite(suite, bounds);
  std::cout << report.to_json().dump(2) << '\n';
  return report.pass() ? 0 : 1;
}

int cmd_gen(std::size_t size, std::optional<std::size_t> random, std::uint64_t seed) {
  const auto posets = random ? random_posets(size, seed, *random) : exhaustive_posets(size);
  for (const auto& p : posets) std::cout << serialize(p) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labeled poset invariants and property suites"};
  app.require_subcommand(1);

  std::string file;
  bool pretty = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full invariant report as JSON");
  analyze_cmd->add_option("file", file, "Poset file")->required();
  auto* format = analyze_cmd->add_option_group("format");
  format->add_flag("--json", "Compact JSON (default)");
  format->add_flag("--pretty", pretty, "Indented JSON");
  format->require_option(0, 1);

  auto* wpoly_cmd = app.add_subcommand("wpoly", "Print the W-polynomial");
  wpoly_cmd->add_option("file", file, "Poset file")->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "Saturated decomposition");
  decompose_cmd->add_option("file", file, "Poset file")->required();
  auto* cd_cmd = app.add_subcommand("cd", "Charney-Davis quantity and permutation count");
  cd_cmd->add_option("file", file, "Poset file")->required();

  std::string suite;
  SuiteBounds bounds;
  std::size_t max_size = 0;
  std::size_t random_count = 0;
  long partition_bound = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--suite", suite, "Suite id")->required()->check(CLI::IsMember(suite_ids()));
  auto* max_opt = verify_cmd->add_option("--max-size", max_size, "Largest poset size");
  verify_cmd->add_option("--seed", bounds.seed, "Seed for random corpora");
  auto* random_opt = verify_cmd->add_option("--random", random_count, "Random posets per size");
  auto* bound_opt = verify_cmd->add_option("--bound", partition_bound, "Largest part for partition checks");
  verify_cmd->add_option("--threads", bounds.threads, "Worker threads (0 = all cores)");

  std::size_t gen_size = 0;
  std::size_t gen_random = 0;
  std::uint64_t gen_seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Emit poset files, one per line");
  gen_cmd->add_option("--size", gen_size, "Number of elements")->required();
  auto* gen_random_opt = gen_cmd->add_option("--random", gen_random, "Random posets instead of all classes");
  gen_cmd->add_option("--seed", gen_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, pretty);
    if (*wpoly_cmd) return cmd_wpoly(file);
    if (*decompose_cmd) return cmd_decompose(file);
    if (*cd_cmd) return cmd_cd(file);
    if (*verify_cmd) {
      if (*max_opt) bounds.max_size = max_size;
      if (*random_opt) bounds.random_count = random_count;
      if (*bound_opt) bounds.partition_bound = partition_bound;
      return cmd_verify(suite, bounds);
    }
    if (*gen_cmd) return cmd_gen(gen_size, *gen_random_opt ? std::optional(gen_random) : std::nullopt, gen_seed);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
