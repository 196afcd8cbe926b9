#include "mnp/objectives.hpp"

#include <algorithm>
#include <vector>

#include "mnp/entropy.hpp"
#include "mnp/huffman.hpp"

namespace mnp {

std::int64_t compression_cost(const Instance& inst, const Partition& p) {
  if (p.size() != inst.size()) {
    throw InputError("partition length does not match instance");
  }
  std::vector<std::vector<std::int64_t>> groups(p.k());
  for (std::size_t i = 0; i < p.size(); ++i) groups[p[i]].push_back(inst.weight(i));
  std::int64_t cost = 0;
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    cost = checked_add(cost, build_huffman(g).cost_numerator);
  }
  return cost;
}

std::optional<std::int64_t> product_of_sums(const SubsetSums& sums) {
  std::int64_t product = 1;
  for (std::int64_t q : sums.sums) {
    if (__builtin_mul_overflow(product, q, &product)) return std::nullopt;
  }
  return product;
}

ObjectiveReport evaluate(const Instance& inst, const Partition& p) {
  const SubsetSums sums = subset_sums(inst, p);
  const auto [lo, hi] = std::minmax_element(sums.sums.begin(), sums.sums.end());
  const Dist marginal(sums.sums, sums.total);

  ObjectiveReport r;
  r.min_max = *hi;
  r.max_min = *lo;
  r.min_diff = *hi - *lo;
  r.entropy_bits = shannon_entropy(marginal).value;
  r.min_entropy_bits = min_entropy(marginal).value;
  r.product_of_sums = product_of_sums(sums);
  r.compression_numerator = compression_cost(inst, p);
  r.compression_bits =
      static_cast<double>(r.compression_numerator) / static_cast<double>(inst.total());
  return r;
}

}  // namespace mnp
