#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mnp {

/// Base of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad token, non-positive weight, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit arithmetic failed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run on an instance beyond its guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::int64_t kMaxWeight = std::int64_t{1} << 40;
inline constexpr std::size_t kMaxElements = std::size_t{1} << 20;

/// a + b, throwing OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
/// a * b, throwing OverflowError instead of wrapping.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// The list of positive integer weights to be partitioned, with its total.
///
/// Duplicate weights are distinct elements, identified by index.
class Instance {
 public:
  /// Validates 1 <= n <= 2^20 and 1 <= w <= 2^40 for every weight.
  explicit Instance(std::vector<std::int64_t> weights);

  std::span<const std::int64_t> weights() const { return weights_; }
  std::int64_t weight(std::size_t i) const { return weights_[i]; }
  std::int64_t total() const { return total_; }
  std::size_t size() const { return weights_.size(); }

  bool operator==(const Instance&) const = default;

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t total_ = 0;
};

/// Parses decimal integers separated by whitespace and/or commas.
/// `#` starts a comment running to the end of the line.
Instance parse_instance(std::string_view text);

/// Assignment of each element index to one of k group labels.
/// Groups may be empty.
class Partition {
 public:
  Partition(std::size_t k, std::vector<std::size_t> assignment);

  std::size_t k() const { return k_; }
  std::size_t size() const { return assignment_.size(); }
  std::span<const std::size_t> assignment() const { return assignment_; }
  std::size_t operator[](std::size_t i) const { return assignment_[i]; }

  /// Relabels groups in order of first occurrence; unused labels trail.
  Partition canonical() const;
  bool is_canonical() const;
  /// Number of labels with at least one member.
  std::size_t nonempty_groups() const;
  /// Element indices of group `label`, ascending.
  std::vector<std::size_t> members(std::size_t label) const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::size_t k_;
  std::vector<std::size_t> assignment_;
};

/// True when both partitions induce the same grouping (labels ignored).
bool same_grouping(const Partition& a, const Partition& b);

/// Every element in its own group, padded with empty slots up to k >= n.
Partition singleton_partition(std::size_t n, std::size_t k);

/// Exact probability vector: numerators over a common denominator.
class Dist {
 public:
  /// Requires non-negative numerators summing exactly to a positive
  /// denominator.
  Dist(std::vector<std::int64_t> numerators, std::int64_t denominator);

  std::span<const std::int64_t> numerators() const { return numerators_; }
  std::int64_t denominator() const { return denominator_; }
  std::size_t size() const { return numerators_.size(); }
  double probability(std::size_t i) const {
    return static_cast<double>(numerators_[i]) / static_cast<double>(denominator_);
  }

  bool operator==(const Dist&) const = default;

 private:
  std::vector<std::int64_t> numerators_;
  std::int64_t denominator_;
};

/// The instance as a distribution: P[X=i] = w_i / M.
Dist instance_dist(const Instance& inst);

struct SubsetSums {
  std::vector<std::int64_t> sums;
  std::int64_t total = 0;
};

SubsetSums subset_sums(const Instance& inst, const Partition& p);
Dist marginal_dist(const Instance& inst, const Partition& p);

/// Distribution of X restricted to one group, with the member indices.
struct ConditionalDist {
  Dist dist;
  std::vector<std::size_t> members;
};

ConditionalDist conditional_dist(const Instance& inst, const Partition& p, std::size_t label);

}  // namespace mnp
