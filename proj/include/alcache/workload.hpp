#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "alcache/concept.hpp"
#include "alcache/knowledge_base.hpp"
#include "alcache/learner.hpp"
#include "alcache/rng.hpp"

namespace alcache {

struct WorkloadSpec {
  std::size_t count = 1000;
  std::size_t max_length = 10;
  std::uint64_t seed = 1;
  /// Fraction of the workload made of repeated queries, in [0, 1).
  double duplication_factor = 0.5;
};

/// Number of distinct concepts a workload of `spec` aims for.
inline std::size_t distinct_target(const WorkloadSpec& spec) {
  const double raw = static_cast<double>(spec.count) * (1.0 - spec.duplication_factor);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(raw + 1e-9)));
}

/// Samples concepts from the refinement tree rooted at ⊤ by seeded random
/// walks, then pads with uniformly drawn repeats up to `spec.count` and
/// shuffles. A pure function of (kb, spec).
///
/// If the tree runs dry before the distinct target is reached, the workload
/// has fewer distinct concepts and proportionally more repeats.
inline std::vector<Concept> generate_workload(const KnowledgeBase& kb, const WorkloadSpec& spec) {
  if (spec.count == 0) throw std::invalid_argument("workload count must be >= 1");
  if (spec.duplication_factor < 0.0 || spec.duplication_factor >= 1.0) {
    throw std::invalid_argument("duplication factor must lie in [0, 1)");
  }
  Rng rng(spec.seed);
  const std::size_t target = std::min(distinct_target(spec), spec.count);

  std::unordered_map<CanonicalKey, std::vector<Concept>> children;
  auto refinements = [&](const Concept& c) -> const std::vector<Concept>& {
    auto key = canonicalize(c);
    auto it = children.find(key);
    if (it == children.end()) it = children.emplace(key, refine(c, kb, spec.max_length)).first;
    return it->second;
  };

  constexpr double stop_probability = 0.3;
  const std::size_t max_steps = 2 * spec.max_length;
  const std::size_t max_walks = 50 * target + 100;

  std::vector<Concept> distinct;
  std::unordered_set<CanonicalKey> seen;
  for (std::size_t walk = 0; walk < max_walks && distinct.size() < target; ++walk) {
    Concept cur = Concept::top();
    for (std::size_t step = 0; step < max_steps; ++step) {
      const auto& next = refinements(cur);
      if (next.empty()) break;
      cur = next[uniform_index(rng, next.size())];
      if (uniform_unit(rng) < stop_probability) break;
    }
    if (cur.is_top()) continue;
    if (seen.insert(canonicalize(cur)).second) distinct.push_back(cur);
  }
  if (distinct.empty()) distinct.push_back(Concept::top());

  std::vector<Concept> out = distinct;
  while (out.size() < spec.count) out.push_back(distinct[uniform_index(rng, distinct.size())]);
  shuffle(out, rng);
  return out;
}

/// Distinct canonical keys in a workload.
inline std::size_t distinct_count(const std::vector<Concept>& workload) {
  std::unordered_set<CanonicalKey> keys;
  for (const auto& c : workload) keys.insert(canonicalize(c));
  return keys.size();
}

}  // namespace alcache
