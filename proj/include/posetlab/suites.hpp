#pragma once

// Property suites run over generated corpora. Each suite id names the
// statement it checks; "conjecture" suites report findings rather than bugs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace posetlab {

struct Violation {
  std::string poset;  ///< canonical poset file JSON
  std::string theorem;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::string kind;  ///< "theorem", "conjecture" or "oracle"
  std::size_t max_size = 0;
  std::size_t posets_examined = 0;
  std::size_t labelings_examined = 0;
  std::vector<Violation> violations;
  double elapsed_seconds = 0.0;

  bool pass() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

struct SuiteBounds {
  /// Defaults per suite: 5 for the reciprocity family, 6 for other all-sign
  /// suites, 7 for canonical-labeling suites.
  std::optional<std::size_t> max_size;
  /// Random corpus of this many posets per size instead of the exhaustive one.
  std::optional<std::size_t> random_count;
  std::uint64_t seed = 1;
  /// Largest part for suites that enumerate partitions.
  std::optional<long> partition_bound;
  /// 0 = hardware concurrency.
  std::size_t threads = 0;
};

const std::vector<std::string>& suite_ids();

/// Throws UnknownSuite.
VerificationReport run_suite(const std::string& suite, const SuiteBounds& bounds = {});

}  // namespace posetlab
