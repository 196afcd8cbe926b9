#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

#include "mnp/core.hpp"

namespace mnp {

/// An information quantity in bits (log base 2).
struct Bits {
  double value = 0.0;

  auto operator<=>(const Bits&) const = default;
};

/// A split point for the grouping identity left one side with no mass.
class DegenerateSplitError : public Error {
 public:
  using Error::Error;
};

/// Shannon entropy of counts / sum(counts). Zero counts contribute 0.
/// The result depends only on the multiset of counts.
double entropy_of_counts(std::span<const std::int64_t> counts);

Bits shannon_entropy(const Dist& d);
/// -log2 of the largest probability.
Bits min_entropy(const Dist& d);

/// H(X|A) = H(X) - H(A), clamped at zero.
Bits conditional_entropy(const Instance& inst, const Partition& p);

/// |H(p) - [H(p1+..+pr, rest) + P1 H(head) + P2 H(tail)]| for split point r.
/// Throws DegenerateSplitError when either side has zero mass.
double grouping_identity_residual(const Dist& d, std::size_t r);

}  // namespace mnp
