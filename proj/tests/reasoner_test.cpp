#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "alcache/parser.hpp"
#include "alcache/reasoner.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace alcache;
using namespace std::chrono_literals;

namespace {

class ToyFamily : public ::testing::Test {
 protected:
  ToyFamily()
      : kb_(std::make_shared<const KnowledgeBase>(
            load_kb(std::string(ALCACHE_DATA_DIR) + "/toy-family.kb"))),
        interp_(materialize(kb_)),
        oracle_(*kb_) {}

  std::set<std::string> eval(const char* text) const {
    std::set<std::string> out;
    for (auto x : evaluate(interp_, parse(text))) out.insert(interp_.individual_name(x));
    return out;
  }

  std::shared_ptr<const KnowledgeBase> kb_;
  Interpretation interp_;
  oracle::BruteForce oracle_;
};

using Names = std::set<std::string>;

}  // namespace

TEST_F(ToyFamily, EvaluateTableRows) {
  EXPECT_EQ(eval("Top"), (Names{"anna", "bob", "cara"}));
  EXPECT_EQ(eval("Bottom"), Names{});
  // expected sets from the brute-force oracle over all (individual, successor) pairs
  EXPECT_EQ(oracle_.retrieve_names(parse("hasChild some Female")), (Names{"anna", "bob"}));
  EXPECT_EQ(eval("hasChild some Female"), (Names{"anna", "bob"}));
  EXPECT_EQ(oracle_.retrieve_names(parse("hasChild only Female")), (Names{"anna", "bob", "cara"}));
  EXPECT_EQ(eval("hasChild only Female"), (Names{"anna", "bob", "cara"}));
  EXPECT_EQ(oracle_.retrieve_names(parse("not Male")), (Names{"anna", "cara"}));
  EXPECT_EQ(eval("not Male"), (Names{"anna", "cara"}));
  EXPECT_EQ(eval("Female or Male"), (Names{"anna", "bob", "cara"}));
  EXPECT_EQ(eval("Female and Male"), Names{});
  EXPECT_EQ(eval("hasChild only Male"), (Names{"cara"}));
}

TEST_F(ToyFamily, UnknownNamesRejected) {
  EXPECT_THROW(evaluate(interp_, parse("Dog")), UnknownNameError);
  EXPECT_THROW(evaluate(interp_, parse("likes some Top")), UnknownNameError);
  EXPECT_THROW(is_instance(interp_, parse("Dog"), 0), UnknownNameError);
}

TEST_F(ToyFamily, GetInstancesCountsAndMatchesOracle) {
  InstrumentedReasoner r(interp_);
  const auto c = parse("hasChild some Female");
  const auto first = r.get_instances(c);
  const auto second = r.get_instances(c);
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, evaluate(interp_, c));
  EXPECT_EQ(r.snapshot_stats().get_instances_calls, 2u);
  EXPECT_EQ(r.snapshot_stats().simulated_latency, 0us);
}

TEST_F(ToyFamily, Check) {
  InstrumentedReasoner r(interp_, {.latency_get_instances = 0us, .latency_check = 10us});
  EXPECT_TRUE(r.check("hasChild", "anna", "cara"));
  EXPECT_FALSE(r.check("hasChild", "cara", "anna"));
  EXPECT_THROW(r.check("likes", "anna", "cara"), UnknownNameError);
  const auto s = r.snapshot_stats();
  EXPECT_EQ(s.check_calls, 3u);  // the failing call is counted too
  EXPECT_EQ(s.simulated_latency, 30us);
}

TEST_F(ToyFamily, StatsResetAndLatencyAccounting) {
  InstrumentedReasoner r(interp_, {.latency_get_instances = 100us, .latency_check = 7us});
  r.get_instances(parse("Female"));
  EXPECT_EQ(r.snapshot_stats().simulated_latency, 100us);
  for (int i = 0; i < 9; ++i) r.get_instances(parse("Male"));
  r.check("hasChild", 0, 2);
  r.instance_check(parse("Female"), 0);
  auto s = r.snapshot_stats();
  EXPECT_EQ(s.get_instances_calls, 10u);
  EXPECT_EQ(s.check_calls, 2u);
  EXPECT_EQ(s.instance_checks, 1u);
  EXPECT_EQ(s.simulated_latency, 10 * 100us + 2 * 7us);
  r.reset_stats();
  s = r.snapshot_stats();
  EXPECT_EQ(s.get_instances_calls, 0u);
  EXPECT_EQ(s.check_calls, 0u);
  EXPECT_EQ(s.simulated_latency, 0us);
  EXPECT_EQ(s.wall_time.count(), 0);
}

TEST_F(ToyFamily, ConcurrentCallsAreAllCounted) {
  InstrumentedReasoner r(interp_, {.latency_get_instances = 1us, .latency_check = 0us});
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&] {
      for (int i = 0; i < 250; ++i) r.get_instances(parse("Person"));
    });
  }
  for (auto& t : pool) t.join();
  EXPECT_EQ(r.snapshot_stats().get_instances_calls, 1000u);
  EXPECT_EQ(r.snapshot_stats().simulated_latency, 1000us);
}

TEST(Reasoner, RealSleepWaits) {
  const auto interp = materialize(parse_kb(std::string_view("type a A\n")));
  InstrumentedReasoner r(interp, {.latency_get_instances = 2000us, .latency_check = 0us, .real_sleep = true});
  const auto start = std::chrono::steady_clock::now();
  r.get_instances(Concept::atomic("A"));
  EXPECT_GE(std::chrono::steady_clock::now() - start, 2ms);
}

TEST(Reasoner, EvaluateAndInstanceCheckAgreeWithBruteForce) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto kb = gen::random_kb(seed);
    const auto interp = materialize(kb);
    const oracle::BruteForce bf(kb);
    Rng rng(seed * 7919);
    for (int i = 0; i < 150; ++i) {
      const auto c = gen::random_concept(rng, kb, 10);
      const auto got = evaluate(interp, c);
      EXPECT_EQ(std::set<Individual>(got.begin(), got.end()), bf.retrieve(c)) << render(c);
      for (Individual x = 0; x < kb.individuals.size(); ++x) {
        EXPECT_EQ(is_instance(interp, c, x), got.contains(x));
      }
    }
  }
}

TEST(Reasoner, UniversalIsDualOfExistential) {
  for (std::uint64_t seed = 11; seed <= 20; ++seed) {
    const auto kb = gen::random_kb(seed);
    const auto interp = materialize(kb);
    Rng rng(seed);
    for (int i = 0; i < 100; ++i) {
      const auto filler = gen::random_concept(rng, kb, 6);
      const auto& role = kb.roles[static_cast<std::uint32_t>(i % kb.roles.size())];
      EXPECT_EQ(evaluate(interp, Concept::forall(role, filler)),
                evaluate(interp, Concept::negation(
                                     Concept::exists(role, Concept::negation(filler)))));
    }
  }
}
