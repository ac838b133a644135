// One-shot retrieval: prints the instances of a concept, sorted, one per line.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_common.hpp"

using namespace alcache;

int main(int argc, char** argv) {
  CLI::App app{"Concept retrieval"};
  app.require_subcommand(1);

  std::string kb_path, expr, strategy_name = "semantic";
  bool strict = false, warm = false;
  auto* eval = app.add_subcommand("eval", "Retrieve the instances of one concept");
  eval->add_option("--kb", kb_path, "Knowledge base file")->required();
  eval->add_option("--concept", expr, "Concept expression")->required();
  eval->add_option("--strategy", strategy_name, "none|simple|semantic");
  eval->add_flag("--warm", warm, "Initialize the cache first");
  eval->add_flag("--strict", strict, "Reject undeclared names in the KB");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  return cli::guarded([&] {
    const auto strategy = parse_strategy(strategy_name);
    if (!strategy) throw cli::UsageError("unknown strategy '" + strategy_name + "'");
    const auto query = parse(expr);
    auto kb = std::make_shared<const KnowledgeBase>(load_kb(kb_path, {strict}));
    const auto interp = materialize(kb);
    InstrumentedReasoner reasoner(interp);
    RetrievalContext ctx(reasoner, *strategy, CacheConfig{1024, EvictionPolicy::LRU, warm, 0});
    ctx.prepare();
    const auto result = ctx.retrieve(query);

    std::vector<std::string> names;
    for (auto x : result) names.push_back(interp.individual_name(x));
    std::sort(names.begin(), names.end());
    for (const auto& n : names) std::cout << n << "\n";
    return cli::kSuccess;
  });
}
