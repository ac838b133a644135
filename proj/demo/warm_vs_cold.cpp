// Replays one workload through a cold and a warm semantic cache and prints
// the reasoner cost of each next to the uncached baseline.
//
//   warm_vs_cold <kb-file> [count] [seed]

#include <cstdio>
#include <iostream>
#include <string>

#include "alcache/alcache.hpp"

using namespace alcache;
using namespace std::chrono_literals;

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: warm_vs_cold <kb-file> [count] [seed]\n";
    return 1;
  }
  const std::size_t count = argc > 2 ? std::stoul(argv[2]) : 500;
  const std::uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 1;

  auto kb = std::make_shared<const KnowledgeBase>(load_kb(argv[1]));
  const auto interp = materialize(kb);
  const auto workload = generate_workload(*kb, {count, 10, seed, 0.5});

  RetrievalGrid grid;
  grid.policies = {EvictionPolicy::LRU};
  grid.fractions = {0.5};
  const auto rows = run_retrieval_benchmark(interp, "demo", workload, grid, {1000us, 10us, false});

  std::printf("%-9s %-5s %12s %8s %13s %10s\n", "strategy", "warm", "getInstances", "checks",
              "simulated_ms", "hit_ratio");
  for (const auto& r : rows) {
    const auto ratio = r.hit_ratio ? std::to_string(*r.hit_ratio) : std::string("-");
    std::printf("%-9s %-5s %12llu %8llu %13.2f %10s\n", std::string(to_string(r.strategy)).c_str(),
                r.warm ? "on" : "off", static_cast<unsigned long long>(r.get_instances_calls),
                static_cast<unsigned long long>(r.check_calls), r.sim_us / 1000.0, ratio.c_str());
  }
  return 0;
}
