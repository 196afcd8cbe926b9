#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mnp/core.hpp"

namespace mnp {

/// Weights drawn uniformly from [min_weight, max_weight], size uniform
/// in [min_n, max_n].
Instance random_instance(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n,
                         std::int64_t min_weight, std::int64_t max_weight);

/// A uniformly random (not necessarily canonical) k-slot partition.
Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t k);

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  /// First violation, if any.
  std::string first_violation;

  bool passed() const { return violations == 0; }
};

struct VerifyConfig {
  std::uint64_t seed = 0;
  /// Random instances for the exactness and two-smallest suites; the
  /// other suites scale from it.
  std::size_t trials = 200;
  std::size_t max_n = 10;
  /// Extra instance checked by every per-instance suite.
  std::optional<Instance> instance;
  std::size_t k = 2;
};

/// Runs every property suite with seeded randomness.
std::vector<SuiteResult> run_verification(const VerifyConfig& config);

}  // namespace mnp
