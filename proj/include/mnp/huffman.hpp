#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mnp {

/// Binary Huffman code lengths for a list of integer weights.
struct HuffmanCode {
  /// Codeword length per symbol, in input order.
  std::vector<std::uint32_t> lengths;
  /// Sum of weight * length, equal to the sum of all merge-node weights.
  std::int64_t cost_numerator = 0;
  std::int64_t weight_total = 0;
};

/// Two-queue Huffman construction over the stably sorted weights.
///
/// Among equal weights the earliest-created node is taken first: leaves
/// (in input order) before merge nodes, merge nodes in creation order.
/// A single symbol gets length 0. Throws InputError on an empty list or
/// a non-positive weight.
HuffmanCode build_huffman(std::span<const std::int64_t> weights);

/// Huffman cost (sum of merge weights) only, without building lengths.
/// Zero for fewer than two weights.
std::int64_t huffman_cost(std::span<const std::int64_t> weights);

/// cost_numerator / weight_total.
double expected_length_bits(const HuffmanCode& code);

}  // namespace mnp
