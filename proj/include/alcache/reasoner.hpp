#pragma once

#include <chrono>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>

#include "alcache/concept.hpp"
#include "alcache/instance_set.hpp"
#include "alcache/knowledge_base.hpp"

namespace alcache {

class UnknownNameError : public std::invalid_argument {
 public:
  UnknownNameError(const std::string& kind, const std::string& name)
      : std::invalid_argument("unknown " + kind + " '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

namespace detail {

inline std::uint32_t concept_index(const Interpretation& interp, const std::string& name) {
  auto idx = interp.kb().concepts.find(name);
  if (!idx) throw UnknownNameError("concept", name);
  return *idx;
}

inline std::uint32_t role_index(const Interpretation& interp, const std::string& name) {
  auto idx = interp.kb().roles.find(name);
  if (!idx) throw UnknownNameError("role", name);
  return *idx;
}

}  // namespace detail

/// Direct set-semantics evaluation of an ALC concept. This is the
/// correctness oracle every cached retrieval path is checked against.
inline InstanceSet evaluate(const Interpretation& interp, const Concept& c) {
  const std::size_t n = interp.domain_size();
  switch (c.kind()) {
    case ConceptKind::Top: return InstanceSet::all(n);
    case ConceptKind::Bottom: return {};
    case ConceptKind::Atomic: return interp.extension(detail::concept_index(interp, c.name()));
    case ConceptKind::Not: return complement(evaluate(interp, c.operand()), n);
    case ConceptKind::And: return intersect(evaluate(interp, c.left()), evaluate(interp, c.right()));
    case ConceptKind::Or: return unite(evaluate(interp, c.left()), evaluate(interp, c.right()));
    case ConceptKind::Exists:
    case ConceptKind::ForAll: {
      const auto r = detail::role_index(interp, c.role());
      const auto filler = evaluate(interp, c.filler());
      const bool universal = c.kind() == ConceptKind::ForAll;
      std::vector<Individual> out;
      for (Individual x = 0; x < n; ++x) {
        const auto& succ = interp.successors(r, x);
        bool member = universal;
        for (auto y : succ) {
          if (filler.contains(y) != universal) {
            member = !universal;
            break;
          }
        }
        if (member) out.push_back(x);
      }
      return InstanceSet(std::move(out));
    }
  }
  return {};
}

/// Instance check: is `x` an instance of `c`? Evaluates only what the
/// membership of `x` depends on.
inline bool is_instance(const Interpretation& interp, const Concept& c, Individual x) {
  switch (c.kind()) {
    case ConceptKind::Top: return true;
    case ConceptKind::Bottom: return false;
    case ConceptKind::Atomic:
      return interp.extension(detail::concept_index(interp, c.name())).contains(x);
    case ConceptKind::Not: return !is_instance(interp, c.operand(), x);
    case ConceptKind::And:
      return is_instance(interp, c.left(), x) && is_instance(interp, c.right(), x);
    case ConceptKind::Or:
      return is_instance(interp, c.left(), x) || is_instance(interp, c.right(), x);
    case ConceptKind::Exists: {
      const auto r = detail::role_index(interp, c.role());
      for (auto y : interp.successors(r, x)) {
        if (is_instance(interp, c.filler(), y)) return true;
      }
      return false;
    }
    case ConceptKind::ForAll: {
      const auto r = detail::role_index(interp, c.role());
      for (auto y : interp.successors(r, x)) {
        if (!is_instance(interp, c.filler(), y)) return false;
      }
      return true;
    }
  }
  return false;
}

struct ReasonerConfig {
  std::chrono::microseconds latency_get_instances{0};
  std::chrono::microseconds latency_check{0};
  /// Sleep for the configured latency instead of only accruing it.
  bool real_sleep = false;
};

struct ReasonerStats {
  std::uint64_t get_instances_calls = 0;
  /// Role checks plus instance checks; both are billed at latency_check.
  std::uint64_t check_calls = 0;
  /// The subset of check_calls that were concept instance checks.
  std::uint64_t instance_checks = 0;
  std::chrono::microseconds simulated_latency{0};
  std::chrono::nanoseconds wall_time{0};
};

/// Wraps the oracle evaluator, counting calls and charging a synthetic
/// latency per call. It never memoizes, so any saving comes from the cache.
/// Safe for concurrent use; counter updates are serialized.
class InstrumentedReasoner {
 public:
  explicit InstrumentedReasoner(const Interpretation& interp, ReasonerConfig cfg = {})
      : interp_(&interp), cfg_(cfg) {}

  const Interpretation& interpretation() const { return *interp_; }
  const ReasonerConfig& config() const { return cfg_; }

  InstanceSet get_instances(const Concept& c) {
    const auto start = std::chrono::steady_clock::now();
    charge(cfg_.latency_get_instances, [](ReasonerStats& s) { ++s.get_instances_calls; });
    auto out = evaluate(*interp_, c);
    record_wall(start);
    return out;
  }

  /// true iff (a, b) is asserted for `role`.
  bool check(std::string_view role, Individual a, Individual b) {
    const auto start = std::chrono::steady_clock::now();
    charge(cfg_.latency_check, [](ReasonerStats& s) { ++s.check_calls; });
    const auto r = detail::role_index(*interp_, std::string(role));
    const bool out = interp_->has_edge(r, a, b);
    record_wall(start);
    return out;
  }

  bool check(std::string_view role, std::string_view a, std::string_view b) {
    const auto& inds = interp_->kb().individuals;
    auto ia = inds.find(a);
    auto ib = inds.find(b);
    if (!ia) throw UnknownNameError("individual", std::string(a));
    if (!ib) throw UnknownNameError("individual", std::string(b));
    return check(role, *ia, *ib);
  }

  /// Membership of one individual in `c`, billed like a role check.
  bool instance_check(const Concept& c, Individual x) {
    const auto start = std::chrono::steady_clock::now();
    charge(cfg_.latency_check, [](ReasonerStats& s) {
      ++s.check_calls;
      ++s.instance_checks;
    });
    const bool out = is_instance(*interp_, c, x);
    record_wall(start);
    return out;
  }

  void reset_stats() {
    std::lock_guard lock(mu_);
    stats_ = {};
  }

  ReasonerStats snapshot_stats() const {
    std::lock_guard lock(mu_);
    return stats_;
  }

 private:
  template <class Bump>
  void charge(std::chrono::microseconds latency, Bump bump) {
    {
      std::lock_guard lock(mu_);
      bump(stats_);
      stats_.simulated_latency += latency;
    }
    if (cfg_.real_sleep && latency.count() > 0) std::this_thread::sleep_for(latency);
  }

  void record_wall(std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    std::lock_guard lock(mu_);
    stats_.wall_time += std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
  }

  const Interpretation* interp_;
  ReasonerConfig cfg_;
  mutable std::mutex mu_;
  ReasonerStats stats_;
};

}  // namespace alcache
