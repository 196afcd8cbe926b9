#include "mnp/solver.hpp"

#include <algorithm>
#include <limits>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

#include "mnp/entropy.hpp"
#include "mnp/huffman.hpp"

namespace mnp {

namespace {

using Leaf = std::pair<std::int64_t, std::uint32_t>;

/// LSD radix sort on the weight; stable, so equal weights keep index order.
void sort_by_weight_stable(std::vector<Leaf>& leaves) {
  if (leaves.size() < 256) {
    std::sort(leaves.begin(), leaves.end());
    return;
  }
  constexpr int kBits = 11;
  constexpr std::size_t kBuckets = std::size_t{1} << kBits;
  std::int64_t largest = 0;
  for (const auto& leaf : leaves) largest = std::max(largest, leaf.first);
  std::vector<Leaf> scratch(leaves.size());
  std::vector<std::size_t> offsets(kBuckets);
  for (int shift = 0; (largest >> shift) > 0; shift += kBits) {
    std::fill(offsets.begin(), offsets.end(), 0);
    for (const auto& leaf : leaves) ++offsets[(leaf.first >> shift) & (kBuckets - 1)];
    std::size_t running = 0;
    for (auto& o : offsets) running += std::exchange(o, running);
    for (const auto& leaf : leaves) scratch[offsets[(leaf.first >> shift) & (kBuckets - 1)]++] = leaf;
    leaves.swap(scratch);
  }
}

/// Sorted leaves plus merged values in nondecreasing creation order.
/// Equal merged values form a run popped newest first, and a merged value
/// wins a tie against a leaf. Leaf node ids are sorted positions.
class ListOrderQueue {
 public:
  explicit ListOrderQueue(const Instance& inst) {
    leaves_.reserve(inst.size());
    for (std::uint32_t i = 0; i < inst.size(); ++i) leaves_.emplace_back(inst.weight(i), i);
    sort_by_weight_stable(leaves_);
    entries_.reserve(inst.size());
    runs_.reserve(inst.size());
  }

  std::size_t size() const { return leaves_.size() - next_leaf_ + merged_count_; }
  std::size_t element(std::size_t leaf_node) const { return leaves_[leaf_node].second; }

  std::pair<std::int64_t, std::size_t> pop() {
    const bool has_run = next_run_ < runs_.size();
    if (has_run && (next_leaf_ == leaves_.size() || runs_[next_run_].value <= leaves_[next_leaf_].first)) {
      Run& run = runs_[next_run_];
      const Entry& top = entries_[run.top];
      const std::pair<std::int64_t, std::size_t> out{run.value, top.node};
      run.top = top.below;
      if (--run.count == 0) ++next_run_;
      --merged_count_;
      return out;
    }
    const std::size_t position = next_leaf_++;
    return {leaves_[position].first, position};
  }

  void push(std::int64_t value, std::size_t node) {
    if (next_run_ == runs_.size() || runs_.back().value != value) {
      runs_.push_back({value, kNone, 0});
    }
    Run& run = runs_.back();
    entries_.push_back({static_cast<std::uint32_t>(node), run.top});
    run.top = static_cast<std::uint32_t>(entries_.size() - 1);
    ++run.count;
    ++merged_count_;
  }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  struct Entry {
    std::uint32_t node;
    std::uint32_t below;
  };
  struct Run {
    std::int64_t value;
    std::uint32_t top;
    std::uint32_t count;
  };

  std::vector<Leaf> leaves_;
  std::size_t next_leaf_ = 0;
  std::vector<Entry> entries_;
  std::vector<Run> runs_;
  std::size_t next_run_ = 0;
  std::size_t merged_count_ = 0;
};

/// Binary heap keyed by (value, random key).
class RandomTieQueue {
 public:
  RandomTieQueue(const Instance& inst, std::uint64_t seed) : rng_(seed) {
    std::vector<Item> items;
    items.reserve(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) items.emplace_back(inst.weight(i), rng_(), i);
    heap_ = Heap(std::greater<>{}, std::move(items));
  }

  std::size_t size() const { return heap_.size(); }
  std::size_t element(std::size_t leaf_node) const { return leaf_node; }

  std::pair<std::int64_t, std::size_t> pop() {
    auto [value, key, node] = heap_.top();
    heap_.pop();
    return {value, node};
  }

  void push(std::int64_t value, std::size_t node) { heap_.emplace(value, rng_(), node); }

 private:
  using Item = std::tuple<std::int64_t, std::uint64_t, std::size_t>;
  using Heap = std::priority_queue<Item, std::vector<Item>, std::greater<>>;
  std::mt19937_64 rng_;
  Heap heap_;
};

/// Node ids: leaves below n (as numbered by the queue), merge j is n + j.
/// Group labels flow from the k survivors down the merge tree.
template <typename Queue>
StoppedHuffmanResult run_stopped_huffman(const Instance& inst, std::size_t k, Queue& queue) {
  const std::size_t n = inst.size();
  const std::size_t merges = n - k;
  MergeTrace trace;
  trace.steps.reserve(merges);
  std::vector<std::array<std::uint32_t, 2>> children;
  children.reserve(merges);
  while (queue.size() > k) {
    auto [va, a] = queue.pop();
    auto [vb, b] = queue.pop();
    const std::int64_t merged = checked_add(va, vb);
    trace.steps.push_back({va, vb, merged});
    children.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    queue.push(merged, n + children.size() - 1);
  }

  std::vector<std::uint32_t> label(n + merges);
  for (std::uint32_t group = 0; queue.size() > 0; ++group) {
    auto [value, node] = queue.pop();
    trace.final_list.push_back(value);
    label[node] = group;
  }
  for (std::size_t j = merges; j-- > 0;) {
    label[children[j][0]] = label[n + j];
    label[children[j][1]] = label[n + j];
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t leaf = 0; leaf < n; ++leaf) assignment[queue.element(leaf)] = label[leaf];
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> relabel(k, kUnset);
  std::size_t next = 0;
  for (auto& a : assignment) {
    if (relabel[a] == kUnset) relabel[a] = next++;
    a = relabel[a];
  }
  return {Partition(k, std::move(assignment)), std::move(trace)};
}

}  // namespace

StoppedHuffmanResult stopped_huffman(const Instance& inst, std::size_t k,
                                     const StoppedHuffmanOptions& options) {
  if (k < 1) {
    throw InputError("stopped Huffman needs k >= 1");
  }
  const std::size_t n = inst.size();
  if (n <= k) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inst.weight(a) < inst.weight(b); });
    MergeTrace trace;
    for (std::size_t i : order) trace.final_list.push_back(inst.weight(i));
    return {singleton_partition(n, k), std::move(trace)};
  }
  if (options.tie_seed) {
    RandomTieQueue queue(inst, *options.tie_seed);
    return run_stopped_huffman(inst, k, queue);
  }
  ListOrderQueue queue(inst);
  return run_stopped_huffman(inst, k, queue);
}

Partition greedy_baseline(const Instance& inst, std::size_t k) {
  if (k < 1) {
    throw InputError("greedy baseline needs k >= 1");
  }
  const std::size_t n = inst.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.weight(a) > inst.weight(b); });
  std::vector<std::int64_t> sums(k, 0);
  std::vector<std::size_t> assignment(n, 0);
  for (std::size_t i : order) {
    const auto g = static_cast<std::size_t>(std::min_element(sums.begin(), sums.end()) - sums.begin());
    sums[g] += inst.weight(i);
    assignment[i] = g;
  }
  return Partition(k, std::move(assignment)).canonical();
}

namespace {

struct ObjectiveName {
  Objective objective;
  std::string_view name;
};

constexpr ObjectiveName kObjectiveNames[] = {
    {Objective::min_diff, "min_diff"},
    {Objective::min_max, "min_max"},
    {Objective::max_min, "max_min"},
    {Objective::entropy, "entropy"},
    {Objective::min_entropy, "min_entropy"},
    {Objective::product_of_sums, "product_of_sums"},
    {Objective::compression, "compression"},
};

}  // namespace

std::string_view to_string(Objective objective) {
  for (const auto& entry : kObjectiveNames) {
    if (entry.objective == objective) return entry.name;
  }
  return "unknown";
}

Objective parse_objective(std::string_view name) {
  for (const auto& entry : kObjectiveNames) {
    if (entry.name == name) return entry.objective;
  }
  throw InputError("unknown objective '" + std::string(name) + "'");
}

bool is_maximized(Objective objective) {
  switch (objective) {
    case Objective::max_min:
    case Objective::entropy:
    case Objective::min_entropy:
    case Objective::product_of_sums:
      return true;
    default:
      return false;
  }
}

bool is_exact(Objective objective) {
  return objective != Objective::entropy && objective != Objective::min_entropy;
}

namespace {

void check_oracle_size(std::size_t n, std::size_t k) {
  if (k < 1) {
    throw InputError("oracle needs k >= 1");
  }
  if (n > kOracleMaxElements || k > kOracleMaxGroups) {
    throw SizeGuardError("exhaustive search limited to n <= " + std::to_string(kOracleMaxElements) +
                         " and k <= " + std::to_string(kOracleMaxGroups) + " (got n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

/// Per-partition scratch shared by the exhaustive routines.
class PartitionScorer {
 public:
  PartitionScorer(const Instance& inst, std::size_t k) : inst_(inst), sums_(k), groups_(k) {}

  const std::vector<std::int64_t>& sums(std::span<const std::size_t> labels) {
    std::fill(sums_.begin(), sums_.end(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) sums_[labels[i]] += inst_.weight(i);
    return sums_;
  }

  std::int64_t compression(std::span<const std::size_t> labels) {
    for (auto& g : groups_) g.clear();
    for (std::size_t i = 0; i < labels.size(); ++i) groups_[labels[i]].push_back(inst_.weight(i));
    std::int64_t cost = 0;
    for (const auto& g : groups_) cost += huffman_cost(g);
    return cost;
  }

 private:
  const Instance& inst_;
  std::vector<std::int64_t> sums_;
  std::vector<std::vector<std::int64_t>> groups_;
};

std::int64_t exact_score(Objective objective, PartitionScorer& scorer,
                         std::span<const std::size_t> labels) {
  if (objective == Objective::compression) return scorer.compression(labels);
  const auto& sums = scorer.sums(labels);
  const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
  switch (objective) {
    case Objective::min_diff:
      return *hi - *lo;
    case Objective::min_max:
    case Objective::min_entropy:
      return *hi;
    case Objective::max_min:
      return *lo;
    case Objective::product_of_sums: {
      std::int64_t product = 1;
      for (std::int64_t q : sums) product = checked_mul(product, q);
      return product;
    }
    default:
      throw InputError("objective has no exact score");
  }
}

}  // namespace

OracleResult brute_force(const Instance& inst, std::size_t k, Objective objective) {
  const std::size_t n = inst.size();
  check_oracle_size(n, k);
  PartitionScorer scorer(inst, k);
  OracleResult result{objective, std::int64_t{0}, {}, 0};

  auto keep = [&](std::span<const std::size_t> labels) {
    result.optimal_partitions.emplace_back(k, std::vector<std::size_t>(labels.begin(), labels.end()));
  };

  if (objective == Objective::entropy) {
    // Candidates within tolerance of the running best; filtered at the end.
    double best = -1.0;
    std::vector<double> scores;
    for_each_set_partition(n, k, [&](std::span<const std::size_t> labels) {
      ++result.partitions_searched;
      const double h = entropy_of_counts(scorer.sums(labels));
      if (h >= best - kEntropyTolerance) {
        best = std::max(best, h);
        keep(labels);
        scores.push_back(h);
      }
    });
    std::vector<Partition> optima;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] >= best - kEntropyTolerance) optima.push_back(std::move(result.optimal_partitions[i]));
    }
    result.optimal_partitions = std::move(optima);
    result.best_value = best;
    return result;
  }

  // min_entropy is maximized exactly by minimizing the largest subset sum.
  const bool maximize = is_maximized(objective) && objective != Objective::min_entropy;
  bool have_best = false;
  std::int64_t best = 0;
  for_each_set_partition(n, k, [&](std::span<const std::size_t> labels) {
    ++result.partitions_searched;
    const std::int64_t score = exact_score(objective, scorer, labels);
    const bool better = !have_best || (maximize ? score > best : score < best);
    if (better) {
      have_best = true;
      best = score;
      result.optimal_partitions.clear();
    }
    if (score == best) keep(labels);
  });

  if (objective == Objective::min_entropy) {
    const double total = static_cast<double>(inst.total());
    result.best_value = best == inst.total() ? 0.0 : std::log2(total / static_cast<double>(best));
  } else {
    result.best_value = best;
  }
  return result;
}

Lemma2Report verify_lemma2(const Instance& inst, std::size_t k) {
  const std::size_t n = inst.size();
  if (k < 1 || n <= k) {
    throw InputError("two-smallest check requires n > k (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  check_oracle_size(n, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.weight(a) < inst.weight(b); });

  Lemma2Report report;
  report.smallest = order[0];
  report.second_smallest = order[1];
  bool have_any = false;
  bool have_constrained = false;
  PartitionScorer scorer(inst, k);
  for_each_set_partition(n, k, [&](std::span<const std::size_t> labels) {
    ++report.partitions_searched;
    const std::int64_t cost = scorer.compression(labels);
    if (!have_any || cost < report.unconstrained_min) {
      report.unconstrained_min = cost;
      have_any = true;
    }
    if (labels[report.smallest] == labels[report.second_smallest] &&
        (!have_constrained || cost < report.constrained_min)) {
      report.constrained_min = cost;
      have_constrained = true;
    }
  });
  return report;
}

RecombinationReport& RecombinationReport::operator+=(const RecombinationReport& other) {
  optima_checked += other.optima_checked;
  splits_checked += other.splits_checked;
  combinations_checked += other.combinations_checked;
  violations += other.violations;
  violation_details.insert(violation_details.end(), other.violation_details.begin(),
                           other.violation_details.end());
  return *this;
}

namespace {

/// One side of a label bipartition: its elements, its labels, and all
/// entropic optima of the restricted instance over those labels.
struct Side {
  std::vector<std::size_t> elements;
  std::vector<std::size_t> labels;
  std::vector<Partition> optima;
};

Side optimize_side(const Instance& inst, const Partition& f, std::uint32_t mask) {
  Side side;
  for (std::size_t a = 0; a < f.k(); ++a) {
    if ((mask >> a) & 1U) side.labels.push_back(a);
  }
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((mask >> f[i]) & 1U) {
      side.elements.push_back(i);
      weights.push_back(inst.weight(i));
    }
  }
  if (side.elements.empty()) {
    side.optima.emplace_back(side.labels.size(), std::vector<std::size_t>{});
  } else {
    side.optima = brute_force(Instance(std::move(weights)), side.labels.size(), Objective::entropy)
                      .optimal_partitions;
  }
  return side;
}

std::string describe(const Partition& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ']';
  return out.str();
}

}  // namespace

RecombinationReport check_recombination(const Instance& inst, const Partition& optimum,
                                        std::uint32_t first_side, double global_optimum) {
  const std::size_t k = optimum.k();
  if (k > 31) {
    throw InputError("label bipartitions supported for k <= 31");
  }
  const std::uint32_t all = (std::uint32_t{1} << k) - 1;
  first_side &= all;
  if (first_side == 0 || first_side == all) {
    throw DegenerateSplitError("label bipartition must leave labels on both sides");
  }
  if (optimum.size() != inst.size()) {
    throw InputError("partition length does not match instance");
  }

  const Side one = optimize_side(inst, optimum, first_side);
  const Side two = optimize_side(inst, optimum, all & ~first_side);

  RecombinationReport report;
  report.global_optimum = global_optimum;
  report.splits_checked = 1;
  std::vector<std::size_t> combined(inst.size());
  for (const Partition& f1 : one.optima) {
    for (std::size_t j = 0; j < one.elements.size(); ++j) combined[one.elements[j]] = one.labels[f1[j]];
    for (const Partition& f2 : two.optima) {
      for (std::size_t j = 0; j < two.elements.size(); ++j) {
        combined[two.elements[j]] = two.labels[f2[j]];
      }
      ++report.combinations_checked;
      const Partition fc(k, combined);
      const double h = shannon_entropy(marginal_dist(inst, fc)).value;
      if (std::abs(h - global_optimum) > kEntropyTolerance) {
        ++report.violations;
        std::ostringstream msg;
        msg << "optimum " << describe(optimum) << " split " << first_side << " recombined "
            << describe(fc) << " has H(A)=" << h << " vs optimum " << global_optimum;
        report.violation_details.push_back(msg.str());
      }
    }
  }
  return report;
}

RecombinationReport verify_principle_of_optimality(const Instance& inst, std::size_t k,
                                                   std::size_t max_optima) {
  check_oracle_size(inst.size(), k);
  const OracleResult global = brute_force(inst, k, Objective::entropy);
  const double best = std::get<double>(global.best_value);

  RecombinationReport report;
  report.global_optimum = best;
  if (k < 2) return report;
  const std::uint32_t all = (std::uint32_t{1} << k) - 1;
  std::size_t checked = 0;
  for (const Partition& f : global.optimal_partitions) {
    if (max_optima != 0 && checked == max_optima) break;
    ++checked;
    ++report.optima_checked;
    // Label 0 always on the first side: each unordered bipartition once.
    for (std::uint32_t mask = 1; mask < all; mask += 2) {
      report += check_recombination(inst, f, mask, best);
    }
  }
  return report;
}

}  // namespace mnp
