#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alcache/concept.hpp"
#include "alcache/instance_set.hpp"
#include "alcache/reasoner.hpp"
#include "alcache/rng.hpp"

namespace alcache {

enum class EvictionPolicy { LRU, MRU, FIFO, LIFO, Random };

inline std::string_view to_string(EvictionPolicy p) {
  switch (p) {
    case EvictionPolicy::LRU: return "lru";
    case EvictionPolicy::MRU: return "mru";
    case EvictionPolicy::FIFO: return "fifo";
    case EvictionPolicy::LIFO: return "lifo";
    case EvictionPolicy::Random: return "random";
  }
  return "?";
}

inline std::optional<EvictionPolicy> parse_policy(std::string_view s) {
  if (s == "lru") return EvictionPolicy::LRU;
  if (s == "mru") return EvictionPolicy::MRU;
  if (s == "fifo") return EvictionPolicy::FIFO;
  if (s == "lifo") return EvictionPolicy::LIFO;
  if (s == "random" || s == "rp") return EvictionPolicy::Random;
  return std::nullopt;
}

struct CacheConfig {
  /// Capacity in entries (concepts). 0 disables caching.
  std::size_t max_size = 1024;
  EvictionPolicy policy = EvictionPolicy::LRU;
  bool warm_start = false;
  std::uint64_t rng_seed = 0;
};

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t evictions = 0;
  std::size_t entry_count = 0;
  std::size_t memory_bytes = 0;
};

class UndefinedRatioError : public std::domain_error {
 public:
  UndefinedRatioError() : std::domain_error("hit ratio undefined: no cache lookups recorded") {}
};

/// H / (H + M).
inline double hit_ratio(const CacheStats& s) {
  const auto probes = s.hits + s.misses;
  if (probes == 0) throw UndefinedRatioError();
  return static_cast<double>(s.hits) / static_cast<double>(probes);
}

inline std::optional<double> try_hit_ratio(const CacheStats& s) {
  if (s.hits + s.misses == 0) return std::nullopt;
  return hit_ratio(s);
}

// Memory accounting model: key bytes + per-instance reference + fixed
// per-entry overhead.
inline constexpr std::size_t kBytesPerReference = 8;
inline constexpr std::size_t kBytesPerEntryOverhead = 64;

inline std::size_t entry_footprint(std::size_t key_bytes, std::size_t instance_count) {
  return key_bytes + instance_count * kBytesPerReference + kBytesPerEntryOverhead;
}

struct CacheEntry {
  CanonicalKey key;
  InstanceSet instances;
  std::uint64_t last_access = 0;
  std::uint64_t inserted_at = 0;
  std::uint64_t access_count = 0;
};

/// Syntactic superconcepts of `c` (after stripping leading ¬¬ pairs):
/// D ⊓ E yields D and E; ∃r.C yields ∃r.⊤. Nothing else, and no reasoning.
inline std::vector<Concept> candidate_superconcepts(const Concept& c) {
  Concept head = c;
  while (head.kind() == ConceptKind::Not && head.operand().kind() == ConceptKind::Not) {
    head = head.operand().operand();
  }
  switch (head.kind()) {
    case ConceptKind::And: return {head.left(), head.right()};
    case ConceptKind::Exists: return {Concept::exists(head.role(), Concept::top())};
    default: return {};
  }
}

/// Bounded map from concept keys to instance sets with pluggable eviction,
/// plus the retrieval procedures that consult it.
///
/// Not internally synchronized: one operation at a time per instance.
class SemanticCache {
 public:
  explicit SemanticCache(CacheConfig cfg) : cfg_(cfg), rng_(cfg.rng_seed) {}

  const CacheConfig& config() const { return cfg_; }
  std::size_t size() const { return entries_.size(); }

  CacheStats stats() const {
    return {hits_, misses_, evictions_, entries_.size(), memory_bytes_};
  }

  std::size_t memory_estimate() const { return memory_bytes_; }

  /// Exact-key probe on the canonical key. Counts a hit or a miss.
  std::optional<InstanceSet> lookup(const Concept& c) { return lookup_key(canonicalize(c)); }

  std::optional<InstanceSet> lookup_key(const CanonicalKey& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    touch(it->second);
    return it->second.instances;
  }

  /// Read-only access; no statistics or recency updates.
  const CacheEntry* peek(const CanonicalKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }
  bool contains(const Concept& c) const { return peek(canonicalize(c)) != nullptr; }

  /// Keys in insertion order.
  std::vector<CanonicalKey> keys() const {
    std::vector<CanonicalKey> out;
    out.reserve(by_insert_.size());
    for (const auto& [ts, key] : by_insert_) out.push_back(key);
    return out;
  }

  void store(const Concept& c, InstanceSet instances) {
    store_key(canonicalize(c), std::move(instances));
  }

  /// Inserts or overwrites. An overwrite refreshes last_access but keeps
  /// inserted_at. A new key first makes room for itself.
  void store_key(const CanonicalKey& key, InstanceSet instances) {
    if (cfg_.max_size == 0) return;
    if (auto it = entries_.find(key); it != entries_.end()) {
      auto& e = it->second;
      memory_bytes_ -= entry_footprint(key.value.size(), e.instances.size());
      memory_bytes_ += entry_footprint(key.value.size(), instances.size());
      e.instances = std::move(instances);
      touch(e);
      return;
    }
    if (entries_.size() + 1 > cfg_.max_size) purge(1);
    const auto ts = ++clock_;
    memory_bytes_ += entry_footprint(key.value.size(), instances.size());
    entries_.emplace(key, CacheEntry{key, std::move(instances), ts, ts, 0});
    by_access_.emplace(ts, key);
    by_insert_.emplace(ts, key);
  }

  /// Evicts entries per policy until `slots_needed` slots are free (or the
  /// cache is empty).
  void purge(std::size_t slots_needed) {
    while (!entries_.empty() && free_slots() < slots_needed) evict_one();
  }

  /// Warm start: ∃r.⊤ for every role, then per atomic A: A, ¬A (by
  /// complement, no reasoner call) and ∃r.A for every role.
  void initialize(InstrumentedReasoner& reasoner) {
    if (!entries_.empty()) throw std::logic_error("initialize requires an empty cache");
    const auto& interp = reasoner.interpretation();
    const auto& kb = interp.kb();
    for (const auto& r : kb.roles.names()) {
      const auto e = Concept::exists(r, Concept::top());
      store(e, reasoner.get_instances(e));
    }
    for (const auto& name : kb.concepts.names()) {
      const auto a = Concept::atomic(name);
      auto ret = reasoner.get_instances(a);
      auto neg = complement(ret, interp.domain_size());
      store(a, std::move(ret));
      store(Concept::negation(a), std::move(neg));
      for (const auto& r : kb.roles.names()) {
        const auto e = Concept::exists(r, a);
        store(e, reasoner.get_instances(e));
      }
    }
  }

  /// Retrieval of `c` restricted to S = ∩ Ret(D) over the cached
  /// `candidates` (S = N_I when there are none): one instance check per
  /// member of S. Every candidate must be cached and subsume `c`.
  InstanceSet restricted_retrieval(const Concept& c, std::span<const Concept> candidates,
                                   InstrumentedReasoner& reasoner) const {
    std::vector<const InstanceSet*> sets;
    for (const auto& d : candidates) {
      const auto* e = peek(canonicalize(d));
      if (!e) throw std::invalid_argument("candidate not cached: " + render(d));
      sets.push_back(&e->instances);
    }
    return restrict_to(c, sets, reasoner);
  }

  /// Semantics-aware retrieval. The result always equals evaluate(c).
  ///
  /// ⊤/⊥ are answered directly. Anything else probes the cache first. On a
  /// miss: atomic concepts go to the reasoner; ∀r.D is answered as
  /// ¬∃r.¬D; other composites use cached syntactic superconcepts to restrict
  /// instance checks when any is present and otherwise decompose (complement,
  /// intersection, union, successor scan). The result is stored under the
  /// composite's key.
  InstanceSet fetch_instances(const Concept& c, InstrumentedReasoner& reasoner) {
    return fetch_canonical(canonical_form(c), reasoner);
  }

  /// Non-semantic memoization: keyed by the literal rendering, one
  /// get_instances call per miss for the whole expression.
  InstanceSet simple_fetch(const Concept& c, InstrumentedReasoner& reasoner) {
    CanonicalKey key{render(c)};
    if (auto hit = lookup_key(key)) return std::move(*hit);
    auto result = reasoner.get_instances(c);
    store_key(key, result);
    return result;
  }

 private:
  std::size_t free_slots() const {
    return entries_.size() >= cfg_.max_size ? 0 : cfg_.max_size - entries_.size();
  }

  void touch(CacheEntry& e) {
    by_access_.erase(e.last_access);
    e.last_access = ++clock_;
    ++e.access_count;
    by_access_.emplace(e.last_access, e.key);
  }

  void evict_one() {
    CanonicalKey victim;
    switch (cfg_.policy) {
      case EvictionPolicy::LRU: victim = by_access_.begin()->second; break;
      case EvictionPolicy::MRU: victim = by_access_.rbegin()->second; break;
      case EvictionPolicy::FIFO: victim = by_insert_.begin()->second; break;
      case EvictionPolicy::LIFO: victim = by_insert_.rbegin()->second; break;
      case EvictionPolicy::Random: {
        auto it = by_insert_.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(uniform_index(rng_, by_insert_.size())));
        victim = it->second;
        break;
      }
    }
    auto it = entries_.find(victim);
    by_access_.erase(it->second.last_access);
    by_insert_.erase(it->second.inserted_at);
    memory_bytes_ -= entry_footprint(victim.value.size(), it->second.instances.size());
    entries_.erase(it);
    ++evictions_;
  }

  InstanceSet restrict_to(const Concept& c, const std::vector<const InstanceSet*>& sets,
                          InstrumentedReasoner& reasoner) const {
    InstanceSet scope;
    if (sets.empty()) {
      scope = reasoner.interpretation().domain();
    } else {
      scope = *sets.front();
      for (std::size_t i = 1; i < sets.size(); ++i) scope = intersect(scope, *sets[i]);
    }
    std::vector<Individual> out;
    for (auto a : scope) {
      if (reasoner.instance_check(c, a)) out.push_back(a);
    }
    return InstanceSet(std::move(out));
  }

  // `c` is in canonical form, so its rendering is its key and every
  // sub-concept is canonical as well.
  InstanceSet fetch_canonical(const Concept& c, InstrumentedReasoner& reasoner) {
    const auto& interp = reasoner.interpretation();
    if (c.is_top()) return interp.domain();
    if (c.is_bottom()) return {};

    CanonicalKey key{render(c)};
    if (auto hit = lookup_key(key)) return std::move(*hit);

    InstanceSet result;
    switch (c.kind()) {
      case ConceptKind::Atomic: result = reasoner.get_instances(c); break;
      case ConceptKind::ForAll:
        result = fetch_canonical(
            canonical_form(Concept::negation(
                Concept::exists(c.role(), Concept::negation(c.filler())))),
            reasoner);
        break;
      default: result = fetch_composite(c, reasoner); break;
    }
    store_key(key, result);
    return result;
  }

  InstanceSet fetch_composite(const Concept& c, InstrumentedReasoner& reasoner) {
    std::vector<InstanceSet> cached;
    for (const auto& d : candidate_superconcepts(c)) {
      if (d.is_top() || d.is_bottom()) continue;
      if (auto hit = lookup_key(CanonicalKey{render(d)})) cached.push_back(std::move(*hit));
    }
    if (!cached.empty()) {
      std::vector<const InstanceSet*> sets;
      for (const auto& s : cached) sets.push_back(&s);
      return restrict_to(c, sets, reasoner);
    }

    const std::size_t n = reasoner.interpretation().domain_size();
    switch (c.kind()) {
      case ConceptKind::Not: return complement(fetch_canonical(c.operand(), reasoner), n);
      case ConceptKind::And:
        return intersect(fetch_canonical(c.left(), reasoner), fetch_canonical(c.right(), reasoner));
      case ConceptKind::Or:
        return unite(fetch_canonical(c.left(), reasoner), fetch_canonical(c.right(), reasoner));
      case ConceptKind::Exists: {
        const auto fillers = fetch_canonical(c.filler(), reasoner);
        std::vector<Individual> out;
        for (Individual a = 0; a < n; ++a) {
          for (auto b : fillers) {
            if (reasoner.check(c.role(), a, b)) {
              out.push_back(a);
              break;
            }
          }
        }
        return InstanceSet(std::move(out));
      }
      default: throw std::logic_error("unexpected concept kind in decomposition");
    }
  }

  CacheConfig cfg_;
  Rng rng_;
  std::unordered_map<CanonicalKey, CacheEntry> entries_;
  // Timestamps are unique (one global counter), so these order entries by
  // recency and by insertion.
  std::map<std::uint64_t, CanonicalKey> by_access_;
  std::map<std::uint64_t, CanonicalKey> by_insert_;
  std::uint64_t clock_ = 0;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
  std::uint64_t evictions_ = 0;
  std::size_t memory_bytes_ = 0;
};

}  // namespace alcache
