#include "mnp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "mnp/entropy.hpp"
#include "mnp/json_io.hpp"
#include "mnp/objectives.hpp"
#include "mnp/verify.hpp"

namespace mnp::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxTraceListing = 10000;

Instance load_instance(const RunConfig& cfg) {
  if (cfg.list && cfg.file) {
    throw InputError("give either --list or --file, not both");
  }
  if (cfg.list) return parse_instance(*cfg.list);
  if (cfg.file) {
    std::ifstream in(*cfg.file);
    if (!in) throw InputError("cannot read instance file '" + *cfg.file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str());
  }
  throw InputError("an instance is required (--list or --file)");
}

std::string join(std::span<const std::int64_t> values, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

json solution_json(const Instance& inst, const RunConfig& cfg, const Partition& p,
                   std::string_view method) {
  const auto sums = subset_sums(inst, p.canonical());
  return json{{"instance", to_json(inst)},
              {"k", cfg.k},
              {"objective", std::string(to_string(cfg.objective))},
              {"method", std::string(method)},
              {"partition", to_json(p)},
              {"subset_sums", sums.sums},
              {"report", to_json(evaluate(inst, p.canonical()))}};
}

void print_solution(std::ostream& out, const Instance& inst, const Partition& partition,
                    std::string_view method) {
  const Partition p = partition.canonical();
  const auto sums = subset_sums(inst, p);
  const auto report = evaluate(inst, p);
  out << "instance: n=" << inst.size() << " M=" << inst.total() << " k=" << p.k() << '\n';
  out << "method: " << method << '\n';
  out << "groups:\n";
  for (std::size_t a = 0; a < p.k(); ++a) {
    const auto members = p.members(a);
    std::vector<std::int64_t> values;
    for (std::size_t i : members) values.push_back(inst.weight(i));
    out << "  group " << a << ": {" << join(values) << "} elements [";
    for (std::size_t j = 0; j < members.size(); ++j) out << (j ? "," : "") << members[j];
    out << "] sum " << sums.sums[a] << '\n';
  }
  out << "subset sums: " << join(sums.sums, " ") << '\n';
  out << "min_diff: " << report.min_diff << '\n';
  out << "min_max: " << report.min_max << '\n';
  out << "max_min: " << report.max_min << '\n';
  out << std::setprecision(12);
  out << "H(A): " << report.entropy_bits << " bits\n";
  out << "H_inf(A): " << report.min_entropy_bits << " bits\n";
  out << "product_of_sums: ";
  if (report.product_of_sums) {
    out << *report.product_of_sums << '\n';
  } else {
    out << "overflow\n";
  }
  out << "L(X|A): " << report.compression_numerator << '/' << inst.total() << " = "
      << report.compression_bits << " bits\n";
}

std::string format_value(const ObjectiveValue& v) {
  std::ostringstream out;
  out << std::setprecision(12);
  std::visit([&](auto x) { out << x; }, v);
  return out.str();
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  if (cfg.greedy) {
    const Partition p = greedy_baseline(inst, cfg.k);
    if (cfg.format == Format::json) {
      out << solution_json(inst, cfg, p, "greedy").dump() << '\n';
    } else {
      print_solution(out, inst, p, "greedy");
    }
    return kSuccess;
  }
  if (cfg.objective == Objective::compression && !cfg.oracle) {
    const auto solved = stopped_huffman(inst, cfg.k);
    if (cfg.format == Format::json) {
      auto j = solution_json(inst, cfg, solved.partition, "stopped_huffman");
      j["trace"] = to_json(solved.trace);
      out << j.dump() << '\n';
    } else {
      print_solution(out, inst, solved.partition, "stopped_huffman");
    }
    return kSuccess;
  }
  const OracleResult result = brute_force(inst, cfg.k, cfg.objective);
  const Partition& best = result.optimal_partitions.front();
  if (cfg.format == Format::json) {
    auto j = solution_json(inst, cfg, best, "oracle");
    j["oracle"] = json{{"best_value", to_json(result.best_value)},
                       {"optimal_count", result.optimal_partitions.size()},
                       {"partitions_searched", result.partitions_searched}};
    out << j.dump() << '\n';
  } else {
    print_solution(out, inst, best, "oracle");
    out << "oracle: best " << to_string(cfg.objective) << " = " << format_value(result.best_value)
        << " (" << result.optimal_partitions.size() << " optima, " << result.partitions_searched
        << " partitions searched)\n";
  }
  return kSuccess;
}

struct ListEntry {
  std::int64_t value;
  bool merged;
};

/// Replays the merge steps on an explicitly sorted list, each merged
/// value inserted in front of its equal run.
std::vector<std::vector<ListEntry>> replay_lists(const Instance& inst, const MergeTrace& trace) {
  std::vector<ListEntry> list;
  for (std::int64_t w : inst.weights()) list.push_back({w, false});
  std::stable_sort(list.begin(), list.end(),
                   [](const ListEntry& a, const ListEntry& b) { return a.value < b.value; });
  std::vector<std::vector<ListEntry>> lists{list};
  for (const auto& step : trace.steps) {
    list.erase(list.begin(), list.begin() + 2);
    auto at = std::lower_bound(list.begin(), list.end(), step.merged,
                               [](const ListEntry& e, std::int64_t v) { return e.value < v; });
    list.insert(at, {step.merged, true});
    lists.push_back(list);
  }
  return lists;
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  if (inst.size() > kMaxTraceListing) {
    throw SizeGuardError("trace listing limited to n <= " + std::to_string(kMaxTraceListing));
  }
  const auto solved = stopped_huffman(inst, cfg.k);
  const auto lists = replay_lists(inst, solved.trace);
  if (cfg.format == Format::json) {
    auto j = solution_json(inst, cfg, solved.partition, "stopped_huffman");
    j["trace"] = to_json(solved.trace);
    json rendered = json::array();
    for (const auto& l : lists) {
      json row = json::array();
      for (const auto& e : l) row.push_back(json{{"value", e.value}, {"merged", e.merged}});
      rendered.push_back(row);
    }
    j["trace"]["lists"] = rendered;
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "merge steps: " << solved.trace.steps.size() << '\n';
  for (std::size_t s = 0; s < lists.size(); ++s) {
    out << (s ? "-> (" : "   (");
    for (std::size_t i = 0; i < lists[s].size(); ++i) {
      const auto& e = lists[s][i];
      out << (i ? "," : "");
      if (e.merged) {
        out << '*' << e.value << '*';
      } else {
        out << e.value;
      }
    }
    out << ")\n";
  }
  return kSuccess;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const OracleResult result = brute_force(inst, cfg.k, cfg.objective);
  if (cfg.format == Format::json) {
    auto j = solution_json(inst, cfg, result.optimal_partitions.front(), "oracle");
    json optima = json::array();
    for (const auto& p : result.optimal_partitions) optima.push_back(to_json(p));
    j["oracle"] = json{{"best_value", to_json(result.best_value)},
                       {"optimal_count", result.optimal_partitions.size()},
                       {"partitions_searched", result.partitions_searched},
                       {"optimal_partitions", optima}};
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "objective: " << to_string(cfg.objective) << '\n';
  out << "best value: " << format_value(result.best_value) << '\n';
  out << "partitions searched: " << result.partitions_searched << '\n';
  out << "optimal partitions: " << result.optimal_partitions.size() << '\n';
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < result.optimal_partitions.size() && i < kShown; ++i) {
    const auto sums = subset_sums(inst, result.optimal_partitions[i]);
    out << "  [";
    const auto a = result.optimal_partitions[i].assignment();
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? "," : "") << a[j];
    out << "] sums " << join(sums.sums, " ") << '\n';
  }
  if (result.optimal_partitions.size() > kShown) {
    out << "  ... " << result.optimal_partitions.size() - kShown << " more\n";
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.trials = cfg.trials;
  vc.max_n = cfg.max_n;
  vc.k = cfg.k;
  if (cfg.list || cfg.file) vc.instance = load_instance(cfg);
  const auto suites = run_verification(vc);
  const bool ok = std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (const auto& s : suites) {
      rows.push_back(json{{"name", s.name},
                          {"cases", s.cases},
                          {"violations", s.violations},
                          {"first_violation", s.first_violation}});
    }
    out << json{{"seed", cfg.seed}, {"trials", cfg.trials}, {"max_n", cfg.max_n}, {"passed", ok}, {"suites", rows}}
               .dump()
        << '\n';
  } else {
    out << std::left << std::setw(30) << "suite" << std::right << std::setw(10) << "cases"
        << std::setw(12) << "violations" << "  status\n";
    for (const auto& s : suites) {
      out << std::left << std::setw(30) << s.name << std::right << std::setw(10) << s.cases
          << std::setw(12) << s.violations << "  " << (s.passed() ? "PASS" : "FAIL") << '\n';
      if (!s.passed()) out << "    first violation: " << s.first_violation << '\n';
    }
    out << (ok ? "all suites passed" : "property violations found") << " (seed " << cfg.seed << ")\n";
  }
  return ok ? kSuccess : kPropertyViolation;
}

double time_stopped_huffman(const Instance& inst, std::size_t k, std::size_t reps) {
  double best = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = stopped_huffman(inst, k);
    const auto stop = std::chrono::steady_clock::now();
    if (result.partition.size() != inst.size()) throw Error("stopped Huffman returned a short partition");
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  const std::size_t reps = cfg.trials_set ? std::max<std::size_t>(cfg.trials, 1) : 3;
  struct Row {
    std::size_t n;
    double ms;
  };
  std::vector<Row> rows;
  if (cfg.list || cfg.file) {
    const Instance inst = load_instance(cfg);
    rows.push_back({inst.size(), time_stopped_huffman(inst, cfg.k, reps)});
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::int64_t> weight(1, std::int64_t{1} << 20);
    std::vector<Instance> instances;
    for (int e = 10; e <= 20; ++e) {
      std::vector<std::int64_t> w(std::size_t{1} << e);
      for (auto& x : w) x = weight(rng);
      instances.emplace_back(std::move(w));
      rows.push_back({instances.back().size(), std::numeric_limits<double>::infinity()});
    }
    // Reps cycle through all sizes so a slow stretch hits every size alike.
    for (std::size_t rep = 0; rep < reps; ++rep) {
      for (std::size_t i = 0; i < instances.size(); ++i) {
        rows[i].ms = std::min(rows[i].ms, time_stopped_huffman(instances[i], cfg.k, 1));
      }
    }
  }
  if (cfg.format == Format::json) {
    json j = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json row{{"n", rows[i].n}, {"ms", rows[i].ms}};
      if (i > 0 && rows[i - 1].ms > 0) row["ratio"] = rows[i].ms / rows[i - 1].ms;
      j.push_back(row);
    }
    out << json{{"k", cfg.k}, {"seed", cfg.seed}, {"repetitions", reps}, {"rows", j}}.dump() << '\n';
    return kSuccess;
  }
  out << std::setw(10) << "n" << std::setw(14) << "ms" << std::setw(10) << "ratio" << '\n';
  out << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::setw(10) << rows[i].n << std::setw(14) << rows[i].ms;
    if (i > 0 && rows[i - 1].ms > 0) {
      out << std::setw(10) << std::setprecision(2) << rows[i].ms / rows[i - 1].ms << std::setprecision(3);
    }
    out << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiway number partitioning under entropic and compression objectives", "mnp"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string objective_name = "compression";
  bool json_output = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-k", cfg.k, "Number of groups")->check(CLI::PositiveNumber);
    cmd->add_option("--list", cfg.list, "Inline weights, comma or space separated");
    cmd->add_option("--file", cfg.file, "File with weights");
    cmd->add_option("--objective", objective_name,
                    "min_diff|min_max|max_min|entropy|min_entropy|product_of_sums|compression");
    cmd->add_option("--seed", cfg.seed, "Seed for randomized harnesses");
    cmd->add_flag("--json", json_output, "Emit one JSON object");
    cmd->add_flag("--oracle", cfg.oracle, "Solve by exhaustive search");
    cmd->add_flag("--greedy", cfg.greedy, "Use the greedy baseline");
    cmd->add_option("--trials", cfg.trials, "Random instances (verify) or repetitions (bench)");
    cmd->add_option("--max-n", cfg.max_n, "Largest random instance size for verify");
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  CLI::App* trace = app.add_subcommand("trace", "List the stopped-Huffman merge steps");
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search for all optima");
  CLI::App* verify = app.add_subcommand("verify", "Run the seeded property suites");
  CLI::App* bench = app.add_subcommand("bench", "Time stopped Huffman for n = 2^10 .. 2^20");
  for (CLI::App* cmd : {solve, trace, oracle, verify, bench}) add_common(cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    cfg.objective = parse_objective(objective_name);
    cfg.format = json_output ? Format::json : Format::human;
    for (CLI::App* cmd : {verify, bench}) {
      if (cmd->parsed() && cmd->count("--trials") > 0) cfg.trials_set = true;
    }
    if (cfg.oracle && cfg.greedy) throw InputError("--oracle and --greedy are exclusive");
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (trace->parsed()) return cmd_trace(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_bench(cfg, out);
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace mnp::cli
