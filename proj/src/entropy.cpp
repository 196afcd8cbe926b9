#include "mnp/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace mnp {

double entropy_of_counts(std::span<const std::int64_t> counts) {
  std::int64_t total = 0;
  for (std::int64_t c : counts) total = checked_add(total, c);
  if (total <= 0) return 0.0;
  // Summing in sorted order makes the result bit-identical under relabeling.
  std::vector<std::int64_t> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(total);
  double h = 0.0;
  for (std::int64_t c : sorted) {
    if (c == 0) continue;
    const double q = static_cast<double>(c);
    h += (q / m) * std::log2(m / q);
  }
  return h;
}

Bits shannon_entropy(const Dist& d) {
  return Bits{entropy_of_counts(d.numerators())};
}

Bits min_entropy(const Dist& d) {
  auto nums = d.numerators();
  const std::int64_t largest = *std::max_element(nums.begin(), nums.end());
  if (largest == 0) {
    throw InputError("min-entropy of an all-zero distribution");
  }
  if (largest == d.denominator()) return Bits{0.0};
  return Bits{std::log2(static_cast<double>(d.denominator()) / static_cast<double>(largest))};
}

Bits conditional_entropy(const Instance& inst, const Partition& p) {
  const double hx = shannon_entropy(instance_dist(inst)).value;
  const double ha = shannon_entropy(marginal_dist(inst, p)).value;
  return Bits{std::max(0.0, hx - ha)};
}

double grouping_identity_residual(const Dist& d, std::size_t r) {
  const std::size_t k = d.size();
  if (r < 1 || r >= k) {
    throw DegenerateSplitError("split point must satisfy 1 <= r <= k-1 (r=" + std::to_string(r) +
                               ", k=" + std::to_string(k) + ")");
  }
  auto nums = d.numerators();
  auto head = nums.first(r);
  auto tail = nums.subspan(r);
  std::int64_t head_mass = 0;
  for (std::int64_t v : head) head_mass += v;
  const std::int64_t tail_mass = d.denominator() - head_mass;
  if (head_mass == 0 || tail_mass == 0) {
    throw DegenerateSplitError("grouping split with a zero-mass side");
  }
  const double total = static_cast<double>(d.denominator());
  const double p_head = static_cast<double>(head_mass) / total;
  const double p_tail = static_cast<double>(tail_mass) / total;

  const std::int64_t coarse[] = {head_mass, tail_mass};
  const double lhs = entropy_of_counts(nums);
  const double rhs = entropy_of_counts(coarse) + p_head * entropy_of_counts(head) +
                     p_tail * entropy_of_counts(tail);
  return std::abs(lhs - rhs);
}

}  // namespace mnp
