#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alcache/learner.hpp"
#include "alcache/retrieval.hpp"
#include "alcache/workload.hpp"

namespace alcache {

/// One benchmark observation (one CSV row).
struct MetricsRow {
  std::string kb;
  RetrievalStrategy strategy = RetrievalStrategy::None;
  EvictionPolicy policy = EvictionPolicy::LRU;
  std::optional<double> capacity_fraction;
  bool warm = false;
  std::uint64_t wall_us = 0;
  std::uint64_t sim_us = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::optional<double> hit_ratio;
  std::uint64_t evictions = 0;
  std::uint64_t get_instances_calls = 0;
  std::uint64_t check_calls = 0;
  std::size_t memory_bytes = 0;
  /// Cache capacity in entries that produced this row.
  std::size_t max_size = 0;
};

struct LearningRow {
  MetricsRow metrics;
  std::string lp;
  std::string learned_concept;
  double f1 = 0.0;
  std::size_t iterations = 0;
};

inline constexpr const char* kRetrievalCsvHeader =
    "kb,strategy,policy,capacity_fraction,warm,wall_us,sim_us,hits,misses,hit_ratio,"
    "evictions,get_instances_calls,check_calls,memory_bytes";
inline constexpr const char* kLearningCsvExtra = ",lp,capacity,learned_concept,f1";

/// floor(fraction × distinct), tolerant of binary rounding (0.7 × 10 = 7).
inline std::size_t capacity_for(double fraction, std::size_t distinct) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(distinct) + 1e-9));
}

struct RetrievalGrid {
  std::vector<RetrievalStrategy> strategies{RetrievalStrategy::None, RetrievalStrategy::Simple,
                                            RetrievalStrategy::Semantic};
  std::vector<EvictionPolicy> policies{EvictionPolicy::LRU};
  std::vector<double> fractions{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<bool> warm{false, true};
  std::uint64_t rng_seed = 0;
};

namespace detail {

inline MetricsRow finish_row(std::string kb, RetrievalStrategy strategy, EvictionPolicy policy,
                             std::optional<double> fraction, bool warm, std::size_t max_size,
                             std::chrono::steady_clock::duration wall,
                             const ReasonerStats& rs, const CacheStats& cs) {
  MetricsRow row;
  row.kb = std::move(kb);
  row.strategy = strategy;
  row.policy = policy;
  row.capacity_fraction = fraction;
  row.warm = warm;
  row.wall_us = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(wall).count());
  row.sim_us = static_cast<std::uint64_t>(rs.simulated_latency.count());
  row.hits = cs.hits;
  row.misses = cs.misses;
  row.hit_ratio = try_hit_ratio(cs);
  row.evictions = cs.evictions;
  row.get_instances_calls = rs.get_instances_calls;
  row.check_calls = rs.check_calls;
  row.memory_bytes = cs.memory_bytes;
  row.max_size = max_size;
  return row;
}

}  // namespace detail

/// Full factorial over strategies × policies × fractions × warm. Each cell
/// gets a fresh reasoner and cache; warm start (when on) runs before the
/// replay and its reasoner calls are part of the row.
inline std::vector<MetricsRow> run_retrieval_benchmark(const Interpretation& interp,
                                                       const std::string& kb_name,
                                                       const std::vector<Concept>& workload,
                                                       const RetrievalGrid& grid,
                                                       ReasonerConfig reasoner_cfg) {
  const std::size_t distinct = distinct_count(workload);
  std::vector<MetricsRow> rows;
  for (auto strategy : grid.strategies) {
    for (auto policy : grid.policies) {
      for (double fraction : grid.fractions) {
        for (bool warm : grid.warm) {
          const auto max_size = capacity_for(fraction, distinct);
          InstrumentedReasoner reasoner(interp, reasoner_cfg);
          RetrievalContext ctx(reasoner, strategy,
                               CacheConfig{max_size, policy, warm, grid.rng_seed});
          const auto start = std::chrono::steady_clock::now();
          ctx.prepare();
          for (const auto& c : workload) ctx.retrieve(c);
          const auto wall = std::chrono::steady_clock::now() - start;
          rows.push_back(detail::finish_row(kb_name, strategy, policy, fraction, warm, max_size,
                                            wall, reasoner.snapshot_stats(), ctx.cache_stats()));
        }
      }
    }
  }
  return rows;
}

struct NamedProblem {
  std::string name;
  LearningProblem problem;
};

struct LearningGrid {
  std::vector<RetrievalStrategy> strategies{RetrievalStrategy::None, RetrievalStrategy::Simple,
                                            RetrievalStrategy::Semantic};
  LearnerConfig learner;
};

/// One learner run per problem × strategy.
inline std::vector<LearningRow> run_learning_benchmark(const Interpretation& interp,
                                                       const std::string& kb_name,
                                                       std::span<const NamedProblem> problems,
                                                       const LearningGrid& grid,
                                                       ReasonerConfig reasoner_cfg) {
  std::vector<LearningRow> rows;
  for (const auto& p : problems) {
    for (auto strategy : grid.strategies) {
      auto cfg = grid.learner;
      cfg.strategy = strategy;
      const auto start = std::chrono::steady_clock::now();
      const auto res = learn(interp, p.problem, cfg, reasoner_cfg);
      const auto wall = std::chrono::steady_clock::now() - start;
      LearningRow row;
      row.metrics = detail::finish_row(kb_name, strategy, cfg.cache.policy, std::nullopt,
                                       cfg.cache.warm_start, cfg.cache.max_size, wall,
                                       res.reasoner_stats, res.cache_stats);
      row.lp = p.name;
      row.learned_concept = render(res.best.expr);
      row.f1 = res.best.quality;
      row.iterations = res.iterations;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace detail {

inline std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

/// RFC 4180 quoting, only when needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline void append_metrics(std::string& out, const MetricsRow& r) {
  out += csv_field(r.kb);
  out += ',';
  out += to_string(r.strategy);
  out += ',';
  out += to_string(r.policy);
  out += ',';
  if (r.capacity_fraction) out += fixed(*r.capacity_fraction, 2);
  out += ',';
  out += r.warm ? "true" : "false";
  for (auto v : {r.wall_us, r.sim_us, r.hits, r.misses}) {
    out += ',';
    out += std::to_string(v);
  }
  out += ',';
  if (r.hit_ratio) out += fixed(*r.hit_ratio, 6);
  for (auto v : {r.evictions, r.get_instances_calls, r.check_calls,
                 static_cast<std::uint64_t>(r.memory_bytes)}) {
    out += ',';
    out += std::to_string(v);
  }
}

}  // namespace detail

inline std::string format_csv(std::span<const MetricsRow> rows) {
  std::string out = kRetrievalCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    detail::append_metrics(out, r);
    out += '\n';
  }
  return out;
}

inline std::string format_csv(std::span<const LearningRow> rows) {
  std::string out = kRetrievalCsvHeader;
  out += kLearningCsvExtra;
  out += '\n';
  for (const auto& r : rows) {
    detail::append_metrics(out, r.metrics);
    out += ',';
    out += detail::csv_field(r.lp);
    out += ',';
    out += std::to_string(r.metrics.max_size);
    out += ',';
    out += detail::csv_field(r.learned_concept);
    out += ',';
    out += detail::fixed(r.f1, 6);
    out += '\n';
  }
  return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

template <class Row>
void emit_csv(std::span<const Row> rows, const std::string& path) {
  write_text_file(path, format_csv(rows));
}

}  // namespace alcache
