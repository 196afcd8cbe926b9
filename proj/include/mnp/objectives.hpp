#pragma once

#include <cstdint>
#include <optional>

#include "mnp/core.hpp"

namespace mnp {

/// Every objective value for one instance/partition pair.
///
/// The classical objectives (min_diff, min_max, max_min) range over all k
/// slots, so an empty group counts as q_i = 0.
struct ObjectiveReport {
  std::int64_t min_diff = 0;
  std::int64_t min_max = 0;
  std::int64_t max_min = 0;
  double entropy_bits = 0.0;
  double min_entropy_bits = 0.0;
  /// Product of all k subset sums; nullopt when it overflows 64 bits.
  std::optional<std::int64_t> product_of_sums;
  /// L(X|A) * M, exact.
  std::int64_t compression_numerator = 0;
  double compression_bits = 0.0;
};

ObjectiveReport evaluate(const Instance& inst, const Partition& p);

/// L(X|A) * M: sum over nonempty groups of the group's Huffman cost.
std::int64_t compression_cost(const Instance& inst, const Partition& p);

/// Product of the subset sums with overflow reported as nullopt.
std::optional<std::int64_t> product_of_sums(const SubsetSums& sums);

}  // namespace mnp
