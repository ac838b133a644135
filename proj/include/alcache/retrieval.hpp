#pragma once

#include <optional>
#include <string_view>

#include "alcache/semantic_cache.hpp"

namespace alcache {

enum class RetrievalStrategy { None, Simple, Semantic };

inline std::string_view to_string(RetrievalStrategy s) {
  switch (s) {
    case RetrievalStrategy::None: return "none";
    case RetrievalStrategy::Simple: return "simple";
    case RetrievalStrategy::Semantic: return "semantic";
  }
  return "?";
}

inline std::optional<RetrievalStrategy> parse_strategy(std::string_view s) {
  if (s == "none") return RetrievalStrategy::None;
  if (s == "simple") return RetrievalStrategy::Simple;
  if (s == "semantic") return RetrievalStrategy::Semantic;
  return std::nullopt;
}

/// A reasoner paired with a caching strategy. Callers retrieve through this
/// and stay agnostic of whether a cache is in front of the reasoner.
class RetrievalContext {
 public:
  RetrievalContext(InstrumentedReasoner& reasoner, RetrievalStrategy strategy, CacheConfig cfg)
      : reasoner_(&reasoner), strategy_(strategy) {
    if (strategy != RetrievalStrategy::None) cache_.emplace(cfg);
  }

  /// Runs the warm-start pass if a cache exists and the config asks for it.
  /// Both cache variants get the same entries; their keys coincide for these
  /// shapes.
  void prepare() {
    if (cache_ && cache_->config().warm_start) cache_->initialize(*reasoner_);
  }

  InstanceSet retrieve(const Concept& c) {
    switch (strategy_) {
      case RetrievalStrategy::None: return reasoner_->get_instances(c);
      case RetrievalStrategy::Simple: return cache_->simple_fetch(c, *reasoner_);
      case RetrievalStrategy::Semantic: return cache_->fetch_instances(c, *reasoner_);
    }
    return {};
  }

  RetrievalStrategy strategy() const { return strategy_; }
  InstrumentedReasoner& reasoner() { return *reasoner_; }
  const SemanticCache* cache() const { return cache_ ? &*cache_ : nullptr; }
  CacheStats cache_stats() const { return cache_ ? cache_->stats() : CacheStats{}; }

 private:
  InstrumentedReasoner* reasoner_;
  RetrievalStrategy strategy_;
  std::optional<SemanticCache> cache_;
};

}  // namespace alcache
