#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mnp/solver.hpp"

namespace mnp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyViolation = 1,
  kInputError = 2,
  kSizeGuard = 3,
};

enum class Format { human, json };

struct RunConfig {
  std::optional<std::string> list;
  std::optional<std::string> file;
  std::size_t k = 2;
  Objective objective = Objective::compression;
  bool oracle = false;
  bool greedy = false;
  std::uint64_t seed = 0;
  Format format = Format::human;
  std::size_t trials = 200;
  bool trials_set = false;
  std::size_t max_n = 10;
};

/// Runs one subcommand (solve, trace, oracle, verify, bench). `args`
/// excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mnp::cli
