#include "mnp/huffman.hpp"

#include <algorithm>
#include <numeric>

#include "mnp/core.hpp"

namespace mnp {

HuffmanCode build_huffman(std::span<const std::int64_t> weights) {
  const std::size_t n = weights.size();
  if (n == 0) {
    throw InputError("Huffman code needs at least one weight");
  }
  HuffmanCode code;
  code.lengths.assign(n, 0);
  for (std::int64_t w : weights) {
    if (w <= 0) throw InputError("Huffman weights must be positive");
    code.weight_total = checked_add(code.weight_total, w);
  }
  if (n == 1) return code;

  std::vector<std::size_t> leaves(n);
  std::iota(leaves.begin(), leaves.end(), std::size_t{0});
  std::stable_sort(leaves.begin(), leaves.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });

  // Node ids: [0, n) are leaves, n + j is the j-th merge.
  std::vector<std::int64_t> merged_weight;
  std::vector<std::size_t> parent(2 * n - 1, 0);
  merged_weight.reserve(n - 1);

  std::size_t next_leaf = 0;
  std::size_t next_merged = 0;
  auto pop_min = [&]() -> std::pair<std::size_t, std::int64_t> {
    const bool leaf_left = next_leaf < n;
    const bool merged_left = next_merged < merged_weight.size();
    if (leaf_left && (!merged_left || weights[leaves[next_leaf]] <= merged_weight[next_merged])) {
      std::size_t id = leaves[next_leaf++];
      return {id, weights[id]};
    }
    std::size_t j = next_merged++;
    return {n + j, merged_weight[j]};
  };

  for (std::size_t step = 0; step + 1 < n; ++step) {
    auto [a, wa] = pop_min();
    auto [b, wb] = pop_min();
    const std::int64_t w = checked_add(wa, wb);
    const std::size_t id = n + merged_weight.size();
    parent[a] = id;
    parent[b] = id;
    merged_weight.push_back(w);
    code.cost_numerator = checked_add(code.cost_numerator, w);
  }

  // Root is the last merge; parents always have larger ids than children.
  std::vector<std::uint32_t> depth(2 * n - 1, 0);
  for (std::size_t id = 2 * n - 2; id-- > 0;) {
    depth[id] = depth[parent[id]] + 1;
  }
  std::copy_n(depth.begin(), n, code.lengths.begin());
  return code;
}

std::int64_t huffman_cost(std::span<const std::int64_t> weights) {
  const std::size_t n = weights.size();
  if (n < 2) return 0;
  thread_local std::vector<std::int64_t> sorted;
  thread_local std::vector<std::int64_t> merged;
  sorted.assign(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  merged.clear();

  std::size_t next_leaf = 0;
  std::size_t next_merged = 0;
  auto pop_min = [&]() {
    if (next_leaf < n && (next_merged == merged.size() || sorted[next_leaf] <= merged[next_merged])) {
      return sorted[next_leaf++];
    }
    return merged[next_merged++];
  };
  std::int64_t cost = 0;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    const std::int64_t a = pop_min();
    const std::int64_t w = checked_add(a, pop_min());
    merged.push_back(w);
    cost = checked_add(cost, w);
  }
  return cost;
}

double expected_length_bits(const HuffmanCode& code) {
  if (code.weight_total == 0) return 0.0;
  return static_cast<double>(code.cost_numerator) / static_cast<double>(code.weight_total);
}

}  // namespace mnp
