#include "mnp/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

namespace mnp {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

Instance::Instance(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw InputError("instance must contain at least one weight");
  }
  if (weights_.size() > kMaxElements) {
    throw InputError("instance has more than 2^20 elements");
  }
  for (std::int64_t w : weights_) {
    if (w < 1) {
      throw InputError("weights must be positive integers, got " + std::to_string(w));
    }
    if (w > kMaxWeight) {
      throw InputError("weight " + std::to_string(w) + " exceeds 2^40");
    }
    total_ = checked_add(total_, w);
  }
}

namespace {

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<std::int64_t> weights;
  std::int64_t running = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    if (is_separator(c)) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_separator(text[end]) && text[end] != '#') ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      throw OverflowError("value out of 64-bit range: '" + std::string(token) + "'");
    }
    if (ec != std::errc{} || ptr != last || first == last) {
      throw InputError("not an integer: '" + std::string(token) + "'");
    }
    if (value <= 0) {
      throw InputError("zero or negative value: " + std::string(token));
    }
    if (value > kMaxWeight) {
      throw InputError("weight " + std::string(token) + " exceeds 2^40");
    }
    running = checked_add(running, value);
    weights.push_back(value);
  }
  if (weights.empty()) {
    throw InputError("empty input: no weights found");
  }
  return Instance(std::move(weights));
}

Partition::Partition(std::size_t k, std::vector<std::size_t> assignment)
    : k_(k), assignment_(std::move(assignment)) {
  if (k_ == 0) {
    throw InputError("partition needs k >= 1");
  }
  for (std::size_t label : assignment_) {
    if (label >= k_) {
      throw InputError("group label " + std::to_string(label) + " out of range for k=" +
                       std::to_string(k_));
    }
  }
}

Partition Partition::canonical() const {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> relabel(k_, kUnset);
  std::size_t next = 0;
  std::vector<std::size_t> out(assignment_.size());
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    std::size_t& r = relabel[assignment_[i]];
    if (r == kUnset) r = next++;
    out[i] = r;
  }
  return Partition(k_, std::move(out));
}

bool Partition::is_canonical() const {
  std::size_t next = 0;
  for (std::size_t label : assignment_) {
    if (label > next) return false;
    if (label == next) ++next;
  }
  return true;
}

std::size_t Partition::nonempty_groups() const {
  std::vector<bool> used(k_, false);
  for (std::size_t label : assignment_) used[label] = true;
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

std::vector<std::size_t> Partition::members(std::size_t label) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] == label) out.push_back(i);
  }
  return out;
}

bool same_grouping(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  auto ca = a.canonical();
  auto cb = b.canonical();
  return std::equal(ca.assignment().begin(), ca.assignment().end(), cb.assignment().begin());
}

Partition singleton_partition(std::size_t n, std::size_t k) {
  if (k < n) {
    throw InputError("singleton partition needs k >= n");
  }
  std::vector<std::size_t> a(n);
  std::iota(a.begin(), a.end(), std::size_t{0});
  return Partition(k, std::move(a));
}

Dist::Dist(std::vector<std::int64_t> numerators, std::int64_t denominator)
    : numerators_(std::move(numerators)), denominator_(denominator) {
  if (denominator_ <= 0) {
    throw InputError("distribution denominator must be positive");
  }
  std::int64_t sum = 0;
  for (std::int64_t v : numerators_) {
    if (v < 0) throw InputError("distribution numerators must be non-negative");
    sum = checked_add(sum, v);
  }
  if (sum != denominator_) {
    throw InputError("distribution numerators sum to " + std::to_string(sum) +
                     ", expected " + std::to_string(denominator_));
  }
}

Dist instance_dist(const Instance& inst) {
  return Dist({inst.weights().begin(), inst.weights().end()}, inst.total());
}

namespace {

void check_length(const Instance& inst, const Partition& p) {
  if (p.size() != inst.size()) {
    throw InputError("partition covers " + std::to_string(p.size()) +
                     " elements but instance has " + std::to_string(inst.size()));
  }
}

}  // namespace

SubsetSums subset_sums(const Instance& inst, const Partition& p) {
  check_length(inst, p);
  SubsetSums out{std::vector<std::int64_t>(p.k(), 0), inst.total()};
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.sums[p[i]] = checked_add(out.sums[p[i]], inst.weight(i));
  }
  return out;
}

Dist marginal_dist(const Instance& inst, const Partition& p) {
  auto sums = subset_sums(inst, p);
  return Dist(std::move(sums.sums), sums.total);
}

ConditionalDist conditional_dist(const Instance& inst, const Partition& p, std::size_t label) {
  check_length(inst, p);
  if (label >= p.k()) {
    throw InputError("group label out of range");
  }
  auto members = p.members(label);
  if (members.empty()) {
    throw InputError("conditional distribution of an empty group is undefined");
  }
  std::vector<std::int64_t> nums;
  nums.reserve(members.size());
  std::int64_t total = 0;
  for (std::size_t i : members) {
    nums.push_back(inst.weight(i));
    total = checked_add(total, inst.weight(i));
  }
  return ConditionalDist{Dist(std::move(nums), total), std::move(members)};
}

}  // namespace mnp
