// Benchmark harness: retrieval capacity sweeps and learner runs, as CSV.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_common.hpp"

using namespace alcache;

namespace {

struct RetrieveArgs {
  std::string kb;
  std::size_t count = 1000;
  std::size_t max_length = 10;
  std::uint64_t seed = 1;
  double dup = 0.5;
  std::string strategies = "none,simple,semantic";
  std::string policies = "lru,mru,fifo,lifo,random";
  std::string fractions = "0.1..1.0";
  std::string warm = "both";
  long latency_get_us = 1000;
  long latency_check_us = 10;
  bool real_sleep = false;
  bool strict = false;
  std::string out;
};

struct LearnArgs {
  std::string kb;
  std::vector<std::string> lps;
  std::string strategies = "none,simple,semantic";
  std::size_t capacity = 1024;
  std::string policy = "lru";
  bool warm = false;
  std::size_t max_iterations = 200;
  std::size_t max_length = 10;
  long latency_get_us = 1000;
  long latency_check_us = 10;
  bool strict = false;
  std::string out;
};

ReasonerConfig reasoner_config(long get_us, long check_us, bool real_sleep) {
  if (get_us < 0 || check_us < 0) throw cli::UsageError("latencies must be >= 0");
  return {std::chrono::microseconds(get_us), std::chrono::microseconds(check_us), real_sleep};
}

void write_output(const std::string& path, const std::string& csv) {
  if (path.empty()) {
    std::cout << csv;
  } else {
    write_text_file(path, csv);
  }
}

int run_retrieve(const RetrieveArgs& a) {
  RetrievalGrid grid;
  grid.strategies = cli::parse_strategies(a.strategies);
  grid.policies = cli::parse_policies(a.policies);
  grid.fractions = cli::parse_fractions(a.fractions);
  grid.warm = cli::parse_warm(a.warm);
  grid.rng_seed = a.seed;
  const auto rcfg = reasoner_config(a.latency_get_us, a.latency_check_us, a.real_sleep);
  if (a.dup < 0.0 || a.dup >= 1.0) throw cli::UsageError("--dup must lie in [0, 1)");
  if (a.count == 0) throw cli::UsageError("--count must be >= 1");
  if (a.max_length == 0) throw cli::UsageError("--max-length must be >= 1");

  auto kb = std::make_shared<const KnowledgeBase>(load_kb(a.kb, {a.strict}));
  const auto interp = materialize(kb);
  const auto workload = generate_workload(*kb, {a.count, a.max_length, a.seed, a.dup});
  const auto rows = run_retrieval_benchmark(interp, cli::kb_name_of(a.kb), workload, grid, rcfg);
  write_output(a.out, format_csv(std::span<const MetricsRow>(rows)));
  return cli::kSuccess;
}

int run_learn(const LearnArgs& a) {
  LearningGrid grid;
  grid.strategies = cli::parse_strategies(a.strategies);
  auto policy = parse_policy(a.policy);
  if (!policy) throw cli::UsageError("unknown policy '" + a.policy + "'");
  if (a.max_length == 0) throw cli::UsageError("--max-length must be >= 1");
  grid.learner.cache = CacheConfig{a.capacity, *policy, a.warm, 0};
  grid.learner.max_iterations = a.max_iterations;
  grid.learner.max_length = a.max_length;
  const auto rcfg = reasoner_config(a.latency_get_us, a.latency_check_us, false);

  auto kb = std::make_shared<const KnowledgeBase>(load_kb(a.kb, {a.strict}));
  const auto interp = materialize(kb);
  std::vector<NamedProblem> problems;
  for (const auto& path : a.lps) {
    problems.push_back({cli::kb_name_of(path), load_learning_problem(path, *kb)});
  }
  const auto rows = run_learning_benchmark(interp, cli::kb_name_of(a.kb), problems, grid, rcfg);
  write_output(a.out, format_csv(std::span<const LearningRow>(rows)));
  return cli::kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic cache benchmark harness"};
  app.require_subcommand(1);

  RetrieveArgs ra;
  auto* retrieve = app.add_subcommand("retrieve", "Replay a generated workload over a grid of cache settings");
  retrieve->add_option("--kb", ra.kb, "Knowledge base file")->required();
  retrieve->add_option("--count", ra.count, "Workload size");
  retrieve->add_option("--max-length", ra.max_length, "Maximum concept length");
  retrieve->add_option("--seed", ra.seed, "Workload and RANDOM-policy seed");
  retrieve->add_option("--dup", ra.dup, "Duplicate fraction in [0,1)");
  retrieve->add_option("--strategies", ra.strategies, "Comma list of none,simple,semantic");
  retrieve->add_option("--policies", ra.policies, "Comma list of lru,mru,fifo,lifo,random");
  retrieve->add_option("--fractions", ra.fractions, "Comma list or range like 0.1..1.0");
  retrieve->add_option("--warm", ra.warm, "both|on|off");
  retrieve->add_option("--latency-get-us", ra.latency_get_us, "Simulated cost of getInstances");
  retrieve->add_option("--latency-check-us", ra.latency_check_us, "Simulated cost of a check");
  retrieve->add_flag("--real-sleep", ra.real_sleep, "Actually sleep for the simulated latency");
  retrieve->add_flag("--strict", ra.strict, "Reject undeclared names in the KB");
  retrieve->add_option("--out", ra.out, "Output CSV (stdout if omitted)");

  LearnArgs la;
  auto* learn_cmd = app.add_subcommand("learn", "Run the concept learner under each retrieval strategy");
  learn_cmd->add_option("--kb", la.kb, "Knowledge base file")->required();
  learn_cmd->add_option("--lp", la.lps, "Learning problem file(s)")->required();
  learn_cmd->add_option("--strategies", la.strategies, "Comma list of none,simple,semantic");
  learn_cmd->add_option("--capacity", la.capacity, "Cache capacity in concepts");
  learn_cmd->add_option("--policy", la.policy, "Eviction policy");
  learn_cmd->add_flag("--warm", la.warm, "Initialize the cache before searching");
  learn_cmd->add_option("--max-iterations", la.max_iterations, "Search expansions");
  learn_cmd->add_option("--max-length", la.max_length, "Maximum concept length");
  learn_cmd->add_option("--latency-get-us", la.latency_get_us, "Simulated cost of getInstances");
  learn_cmd->add_option("--latency-check-us", la.latency_check_us, "Simulated cost of a check");
  learn_cmd->add_flag("--strict", la.strict, "Reject undeclared names in the KB");
  learn_cmd->add_option("--out", la.out, "Output CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  return cli::guarded([&] { return retrieve->parsed() ? run_retrieve(ra) : run_learn(la); });
}
