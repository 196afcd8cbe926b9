#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mnp/core.hpp"

namespace mnp {

struct MergeStep {
  std::int64_t first = 0;
  std::int64_t second = 0;
  std::int64_t merged = 0;

  bool operator==(const MergeStep&) const = default;
};

struct MergeTrace {
  std::vector<MergeStep> steps;
  /// Values left when the loop stops, smallest first.
  std::vector<std::int64_t> final_list;
};

struct StoppedHuffmanResult {
  Partition partition;
  MergeTrace trace;
};

struct StoppedHuffmanOptions {
  /// When set, ties between equal values are broken by a seeded random
  /// key instead of the list order.
  std::optional<std::uint64_t> tie_seed;
};

/// Merges the two smallest values until k remain; elements merged
/// together share a group. Runs in O(n log n).
///
/// Ties follow the order of a list kept sorted by a stable sort with each
/// merged value placed in front: merged values precede equal leaves, newer
/// merges precede older ones, and leaves keep input order. With n <= k
/// every element gets its own group and no merge happens.
StoppedHuffmanResult stopped_huffman(const Instance& inst, std::size_t k,
                                     const StoppedHuffmanOptions& options = {});

/// Descending-weight greedy: each weight goes to the group with the
/// smallest current sum, lowest label on ties. Returned canonical.
Partition greedy_baseline(const Instance& inst, std::size_t k);

enum class Objective {
  min_diff,
  min_max,
  max_min,
  entropy,
  min_entropy,
  product_of_sums,
  compression,
};

std::string_view to_string(Objective objective);
/// Throws InputError for unknown names.
Objective parse_objective(std::string_view name);
bool is_maximized(Objective objective);
/// True when the objective's value is an exact integer.
bool is_exact(Objective objective);

using ObjectiveValue = std::variant<std::int64_t, double>;

struct OracleResult {
  Objective objective;
  ObjectiveValue best_value;
  /// Canonical, padded to k slots, in lexicographic order.
  std::vector<Partition> optimal_partitions;
  std::uint64_t partitions_searched = 0;
};

inline constexpr std::size_t kOracleMaxElements = 14;
inline constexpr std::size_t kOracleMaxGroups = 6;

/// Calls `visit(labels)` for every set partition of n elements into at
/// most k nonempty blocks, as restricted growth strings in lexicographic
/// order. `labels` is only valid during the call.
template <typename Visitor>
void for_each_set_partition(std::size_t n, std::size_t k, Visitor&& visit) {
  if (n == 0) {
    std::vector<std::size_t> none;
    visit(std::span<const std::size_t>(none));
    return;
  }
  std::vector<std::size_t> labels(n, 0);
  // used[i]: number of distinct labels among labels[0..i].
  std::vector<std::size_t> used(n, 1);
  std::size_t i = n - 1;
  while (true) {
    visit(std::span<const std::size_t>(labels));
    // Find the rightmost position that can be incremented.
    while (i > 0 && (labels[i] == used[i - 1] || labels[i] + 1 >= k)) --i;
    if (i == 0) return;
    ++labels[i];
    used[i] = std::max(used[i - 1], labels[i] + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      labels[j] = 0;
      used[j] = used[i];
    }
    i = n - 1;
  }
}

/// Exhaustive search over all partitions into at most k nonempty blocks.
/// Requires n <= 14 and k <= 6 (SizeGuardError otherwise).
///
/// Integer objectives are compared exactly. Entropy is compared with a
/// 1e-9 tolerance; min-entropy through the exact largest subset sum.
/// product_of_sums throws OverflowError if any product exceeds 64 bits.
OracleResult brute_force(const Instance& inst, std::size_t k, Objective objective);

struct Lemma2Report {
  std::int64_t unconstrained_min = 0;
  std::int64_t constrained_min = 0;
  /// Indices of the two smallest weights (ties by index).
  std::size_t smallest = 0;
  std::size_t second_smallest = 0;
  std::uint64_t partitions_searched = 0;

  bool holds() const { return unconstrained_min == constrained_min; }
};

/// Compares min L*M over all partitions against the minimum over those
/// placing the two smallest weights together. Requires n > k.
Lemma2Report verify_lemma2(const Instance& inst, std::size_t k);

struct RecombinationReport {
  double global_optimum = 0.0;
  std::size_t optima_checked = 0;
  std::size_t splits_checked = 0;
  std::size_t combinations_checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> violation_details;

  RecombinationReport& operator+=(const RecombinationReport& other);
};

inline constexpr double kEntropyTolerance = 1e-9;

/// Splits the labels of `optimum` into `first_side` (bit a set: label a)
/// and the rest, re-optimizes each side's elements over its own labels,
/// and checks every recombination reaches `global_optimum` in H(A).
/// Throws DegenerateSplitError when either side has no labels.
RecombinationReport check_recombination(const Instance& inst, const Partition& optimum,
                                        std::uint32_t first_side, double global_optimum);

/// Runs check_recombination for every entropic optimum (the first
/// `max_optima` of them when nonzero) and every bipartition of the labels.
RecombinationReport verify_principle_of_optimality(const Instance& inst, std::size_t k,
                                                   std::size_t max_optima = 0);

}  // namespace mnp
