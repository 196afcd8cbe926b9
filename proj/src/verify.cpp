#include "mnp/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mnp/entropy.hpp"
#include "mnp/huffman.hpp"
#include "mnp/objectives.hpp"
#include "mnp/solver.hpp"

namespace mnp {

Instance random_instance(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n,
                         std::int64_t min_weight, std::int64_t max_weight) {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_int_distribution<std::int64_t> weight(min_weight, max_weight);
  std::vector<std::int64_t> weights(size(rng));
  for (auto& w : weights) w = weight(rng);
  return Instance(std::move(weights));
}

Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<std::size_t> label(0, k - 1);
  std::vector<std::size_t> a(n);
  for (auto& x : a) x = label(rng);
  return Partition(k, std::move(a));
}

namespace {

std::string show(const Instance& inst, std::size_t k) {
  std::ostringstream out;
  out << "k=" << k << " S=(";
  for (std::size_t i = 0; i < inst.size(); ++i) out << (i ? "," : "") << inst.weight(i);
  out << ')';
  return out.str();
}

void record(SuiteResult& suite, bool ok, const std::string& what) {
  ++suite.cases;
  if (!ok) {
    if (suite.violations == 0) suite.first_violation = what;
    ++suite.violations;
  }
}

struct Case {
  Instance inst;
  std::size_t k;
};

std::vector<Case> exactness_cases(const VerifyConfig& config, std::mt19937_64& rng) {
  const std::size_t max_n = std::clamp<std::size_t>(config.max_n, 3, kOracleMaxElements);
  std::vector<Case> cases;
  for (std::size_t t = 0; t < config.trials; ++t) {
    Instance inst = random_instance(rng, 3, max_n, 1, 30);
    std::uniform_int_distribution<std::size_t> kd(2, std::min<std::size_t>(4, inst.size() - 1));
    const std::size_t k = kd(rng);
    cases.push_back({std::move(inst), k});
  }
  if (config.instance && config.instance->size() <= kOracleMaxElements &&
      config.k <= kOracleMaxGroups) {
    cases.push_back({*config.instance, config.k});
  }
  return cases;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<SuiteResult> results;
  const std::vector<Case> cases = exactness_cases(config, rng);

  SuiteResult exact{"stopped_huffman_exact"};
  for (const auto& c : cases) {
    const auto solved = stopped_huffman(c.inst, c.k);
    const std::int64_t algo = compression_cost(c.inst, solved.partition);
    const auto oracle = std::get<std::int64_t>(brute_force(c.inst, c.k, Objective::compression).best_value);
    record(exact, algo == oracle,
           show(c.inst, c.k) + ": algorithm " + std::to_string(algo) + " vs oracle " +
               std::to_string(oracle));
  }
  results.push_back(exact);

  SuiteResult pairing{"two_smallest_cogrouped"};
  for (const auto& c : cases) {
    if (c.inst.size() <= c.k) continue;
    const auto r = verify_lemma2(c.inst, c.k);
    record(pairing, r.holds(),
           show(c.inst, c.k) + ": unconstrained " + std::to_string(r.unconstrained_min) +
               " vs constrained " + std::to_string(r.constrained_min));
  }
  results.push_back(pairing);

  SuiteResult recombine{"principle_of_optimality"};
  const std::size_t recombination_trials = std::max<std::size_t>(1, config.trials * 3 / 20);
  const std::size_t recombination_max_n = std::clamp<std::size_t>(config.max_n, 2, kOracleMaxElements);
  std::vector<Case> recombination_cases;
  for (std::size_t t = 0; t < recombination_trials; ++t) {
    Instance inst = random_instance(rng, 2, recombination_max_n, 1, 30);
    std::uniform_int_distribution<std::size_t> kd(2, 4);
    const std::size_t k = kd(rng);
    recombination_cases.push_back({std::move(inst), k});
  }
  if (config.instance && config.instance->size() <= kOracleMaxElements && config.k >= 2 &&
      config.k <= kOracleMaxGroups) {
    recombination_cases.push_back({*config.instance, config.k});
  }
  for (const auto& c : recombination_cases) {
    const auto r = verify_principle_of_optimality(c.inst, c.k);
    ++recombine.cases;
    if (r.violations > 0) {
      if (recombine.violations == 0) recombine.first_violation = show(c.inst, c.k) + ": " + r.violation_details.front();
      recombine.violations += r.violations;
    }
  }
  results.push_back(recombine);

  SuiteResult sandwich{"sandwich_bounds"};
  const std::size_t pairs = config.trials * 5;
  for (std::size_t t = 0; t < pairs; ++t) {
    Instance inst = random_instance(rng, 1, std::max<std::size_t>(config.max_n, 1) * 2, 1, 1000);
    std::uniform_int_distribution<std::size_t> kd(1, inst.size());
    const Partition p = random_partition(rng, inst.size(), kd(rng));
    const double l = evaluate(inst, p).compression_bits;
    const double h = conditional_entropy(inst, p).value;
    bool ok = l - 1.0 < h - kEntropyTolerance && h <= l + kEntropyTolerance;
    for (std::size_t a = 0; a < p.k() && ok; ++a) {
      const auto members = p.members(a);
      if (members.empty()) continue;
      const auto cd = conditional_dist(inst, p, a);
      const double el = expected_length_bits(build_huffman(cd.dist.numerators()));
      const double hg = shannon_entropy(cd.dist).value;
      ok = el - 1.0 < hg - kEntropyTolerance && hg <= el + kEntropyTolerance;
    }
    record(sandwich, ok, show(inst, p.k()) + ": L=" + std::to_string(l) + " H(X|A)=" + std::to_string(h));
  }
  results.push_back(sandwich);

  SuiteResult grouping{"grouping_axiom"};
  for (std::size_t t = 0; t < config.trials * 5; ++t) {
    const Instance inst = random_instance(rng, 2, 20, 1, 100);
    const Dist d = instance_dist(inst);
    for (std::size_t r = 1; r < d.size(); ++r) {
      const double residual = grouping_identity_residual(d, r);
      record(grouping, residual < 1e-12,
             show(inst, 0) + " r=" + std::to_string(r) + " residual " + std::to_string(residual));
    }
  }
  results.push_back(grouping);

  SuiteResult k2{"k2_entropy_matches_min_diff"};
  for (const auto& c : cases) {
    const auto balanced = brute_force(c.inst, 2, Objective::min_diff);
    const auto informative = brute_force(c.inst, 2, Objective::entropy);
    record(k2, balanced.optimal_partitions == informative.optimal_partitions,
           show(c.inst, 2) + ": " + std::to_string(balanced.optimal_partitions.size()) +
               " min-difference optima vs " + std::to_string(informative.optimal_partitions.size()) +
               " entropic optima");
  }
  results.push_back(k2);

  SuiteResult greedy{"oracle_not_worse_than_greedy"};
  for (const auto& c : cases) {
    const double oracle = std::get<double>(brute_force(c.inst, c.k, Objective::entropy).best_value);
    const double baseline = evaluate(c.inst, greedy_baseline(c.inst, c.k)).entropy_bits;
    record(greedy, oracle >= baseline - kEntropyTolerance,
           show(c.inst, c.k) + ": oracle " + std::to_string(oracle) + " < greedy " + std::to_string(baseline));
  }
  results.push_back(greedy);

  return results;
}

}  // namespace mnp
