#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "alcache/concept.hpp"
#include "alcache/knowledge_base.hpp"
#include "alcache/reasoner.hpp"
#include "alcache/retrieval.hpp"

namespace alcache {

namespace detail {

inline bool contains_disjunction(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Or: return true;
    case ConceptKind::And: return contains_disjunction(c.left()) || contains_disjunction(c.right());
    case ConceptKind::Not: return contains_disjunction(c.operand());
    case ConceptKind::Exists:
    case ConceptKind::ForAll: return contains_disjunction(c.filler());
    default: return false;
  }
}

inline std::vector<Concept> refinements_of_top(const KnowledgeBase& kb) {
  std::vector<Concept> out;
  for (const auto& a : kb.concepts.names()) out.push_back(Concept::atomic(a));
  for (const auto& a : kb.concepts.names()) out.push_back(Concept::negation(Concept::atomic(a)));
  for (const auto& r : kb.roles.names()) out.push_back(Concept::exists(r, Concept::top()));
  for (const auto& r : kb.roles.names()) out.push_back(Concept::forall(r, Concept::top()));
  return out;
}

// Unfiltered downward steps. `allow_or` is false once the root already holds
// a disjunction, so C ⊔ A is introduced at most once per concept.
inline std::vector<Concept> refine_step(const Concept& c, const KnowledgeBase& kb,
                                        std::size_t max_length, bool allow_or) {
  std::vector<Concept> out;
  const std::size_t len = length(c);
  auto inner = [&](const Concept& part) {
    return refine_step(part, kb, max_length - (len - length(part)), allow_or);
  };

  switch (c.kind()) {
    case ConceptKind::Top: return refinements_of_top(kb);
    case ConceptKind::Bottom: return out;
    case ConceptKind::Atomic: {
      const auto self = kb.concepts.find(c.name());
      if (self) {
        for (const auto& ax : kb.subclass_axioms) {
          if (ax.super == *self && ax.sub != *self) {
            out.push_back(Concept::atomic(kb.concepts[ax.sub]));
          }
        }
      }
      for (const auto& d : refinements_of_top(kb)) {
        if (d == c) continue;
        out.push_back(Concept::conjunction(c, d));
      }
      break;
    }
    case ConceptKind::Not: {
      // ¬A → ¬B for A ⊑ B
      const auto arg = c.operand();
      if (arg.is_atomic()) {
        if (const auto self = kb.concepts.find(arg.name())) {
          for (const auto& ax : kb.subclass_axioms) {
            if (ax.sub == *self && ax.super != *self) {
              out.push_back(Concept::negation(Concept::atomic(kb.concepts[ax.super])));
            }
          }
        }
      }
      break;
    }
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
      for (auto& f : inner(c.filler())) {
        out.push_back(c.kind() == ConceptKind::Exists ? Concept::exists(c.role(), std::move(f))
                                                      : Concept::forall(c.role(), std::move(f)));
      }
      break;
    case ConceptKind::And:
      for (auto& l : inner(c.left())) out.push_back(Concept::conjunction(std::move(l), c.right()));
      for (auto& r : inner(c.right())) out.push_back(Concept::conjunction(c.left(), std::move(r)));
      break;
    case ConceptKind::Or:
      for (auto& l : inner(c.left())) out.push_back(Concept::disjunction(std::move(l), c.right()));
      for (auto& r : inner(c.right())) out.push_back(Concept::disjunction(c.left(), std::move(r)));
      break;
  }

  if (allow_or && !c.is_top() && !c.is_bottom()) {
    for (const auto& a : kb.concepts.names()) {
      if (c.is_atomic() && c.name() == a) continue;
      out.push_back(Concept::disjunction(c, Concept::atomic(a)));
    }
  }
  return out;
}

}  // namespace detail

/// Top-down refinement operator. Deterministic order, duplicates (by
/// canonical key) and `c` itself removed, everything longer than
/// `max_length` dropped.
///
///   ⊤      → A, ¬A for each class; ∃r.⊤, ∀r.⊤ for each role
///   A      → direct subclasses of A; A ⊓ D for D in refine(⊤)
///   ¬A     → ¬B for direct superclasses B of A
///   ∃r.D   → ∃r.D' ;  ∀r.D → ∀r.D'
///   C ⊓ D  → C' ⊓ D, C ⊓ D' ;  C ⊔ D likewise
///   C      → C ⊔ A for each class, if C holds no disjunction yet
inline std::vector<Concept> refine(const Concept& c, const KnowledgeBase& kb,
                                   std::size_t max_length) {
  std::vector<Concept> out;
  if (length(c) > max_length) return out;
  std::unordered_set<CanonicalKey> seen{canonicalize(c)};
  for (auto& r : detail::refine_step(c, kb, max_length, !detail::contains_disjunction(c))) {
    if (length(r) > max_length) continue;
    if (!seen.insert(canonicalize(r)).second) continue;
    out.push_back(std::move(r));
  }
  return out;
}

struct LearningProblem {
  InstanceSet positives;
  InstanceSet negatives;
};

/// Throws std::invalid_argument unless E+ is non-empty, disjoint from E−,
/// and both lie inside the domain.
inline void validate(const LearningProblem& lp, std::size_t domain_size) {
  if (lp.positives.empty()) throw std::invalid_argument("learning problem has no positive examples");
  if (!intersect(lp.positives, lp.negatives).empty()) {
    throw std::invalid_argument("positive and negative examples overlap");
  }
  auto out_of_range = [&](const InstanceSet& s) { return !s.empty() && s.values().back() >= domain_size; };
  if (out_of_range(lp.positives) || out_of_range(lp.negatives)) {
    throw std::invalid_argument("example outside the individual domain");
  }
}

/// Lines of `positive <individual>` or `negative <individual>`; `#` comments.
inline LearningProblem parse_learning_problem(std::istream& in, const KnowledgeBase& kb) {
  std::vector<Individual> pos, neg;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(std::move(w));
    if (tok.empty()) continue;
    if (tok.size() != 2 || (tok[0] != "positive" && tok[0] != "negative")) {
      throw KbParseError("expected 'positive <individual>' or 'negative <individual>'", line_no);
    }
    const auto who = kb.individuals.find(tok[1]);
    if (!who) throw DanglingNameError("unknown individual '" + tok[1] + "'", line_no);
    (tok[0] == "positive" ? pos : neg).push_back(*who);
  }
  LearningProblem lp{InstanceSet(std::move(pos)), InstanceSet(std::move(neg))};
  validate(lp, kb.individuals.size());
  return lp;
}

inline LearningProblem load_learning_problem(const std::string& path, const KnowledgeBase& kb) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open learning problem '" + path + "'");
  return parse_learning_problem(in, kb);
}

/// F1 = 2tp / (2tp + fp + fn), 0 when the denominator is 0.
inline double f1(const InstanceSet& retrieved, const LearningProblem& lp) {
  const auto tp = intersect(retrieved, lp.positives).size();
  const auto fp = intersect(retrieved, lp.negatives).size();
  const auto fn = lp.positives.size() - tp;
  const auto denom = 2 * tp + fp + fn;
  return denom == 0 ? 0.0 : static_cast<double>(2 * tp) / static_cast<double>(denom);
}

struct SearchNode {
  Concept expr;
  double quality = 0.0;
  std::size_t length_bound = 0;
  double heuristic_score = 0.0;
};

struct LearnerConfig {
  std::size_t max_iterations = 200;
  std::size_t max_length = 10;
  RetrievalStrategy strategy = RetrievalStrategy::Semantic;
  CacheConfig cache{1024, EvictionPolicy::LRU, false, 0};
  double length_penalty = 0.02;
};

struct LearnResult {
  SearchNode best;
  ReasonerStats reasoner_stats;
  CacheStats cache_stats;
  std::size_t iterations = 0;
  std::size_t evaluated = 0;
};

/// Best-first search from ⊤. Each iteration expands the frontier node with
/// the highest quality − penalty·length (ties: smaller rendering first) and
/// scores every new refinement by F1. Stops at F1 = 1 or after
/// `max_iterations` expansions. The retrieval strategy affects cost only:
/// the trajectory and the result are identical for all strategies.
inline LearnResult learn(const Interpretation& interp, const LearningProblem& lp,
                         const LearnerConfig& cfg, ReasonerConfig reasoner_cfg = {}) {
  validate(lp, interp.domain_size());
  InstrumentedReasoner reasoner(interp, reasoner_cfg);
  RetrievalContext ctx(reasoner, cfg.strategy, cfg.cache);
  ctx.prepare();

  struct Item {
    SearchNode node;
    std::string text;
  };
  auto score = [&](const Concept& c) {
    const double q = f1(ctx.retrieve(c), lp);
    const auto len = length(c);
    return Item{SearchNode{c, q, cfg.max_length, q - cfg.length_penalty * static_cast<double>(len)},
                render(c)};
  };
  auto frontier_order = [](const Item& a, const Item& b) {
    if (a.node.heuristic_score != b.node.heuristic_score) {
      return a.node.heuristic_score > b.node.heuristic_score;
    }
    return a.text < b.text;
  };
  auto improves = [](const Item& cand, const Item& best) {
    if (cand.node.quality != best.node.quality) return cand.node.quality > best.node.quality;
    const auto lc = length(cand.node.expr), lb = length(best.node.expr);
    if (lc != lb) return lc < lb;
    return cand.text < best.text;
  };

  LearnResult result;
  std::set<Item, decltype(frontier_order)> frontier(frontier_order);
  std::unordered_set<CanonicalKey> visited;

  Item best = score(Concept::top());
  ++result.evaluated;
  visited.insert(canonicalize(best.node.expr));
  frontier.insert(best);

  bool solved = best.node.quality >= 1.0;
  while (!solved && result.iterations < cfg.max_iterations && !frontier.empty()) {
    const Item current = *frontier.begin();
    frontier.erase(frontier.begin());
    ++result.iterations;
    for (const auto& r : refine(current.node.expr, interp.kb(), cfg.max_length)) {
      if (!visited.insert(canonicalize(r)).second) continue;
      Item next = score(r);
      ++result.evaluated;
      if (improves(next, best)) best = next;
      if (next.node.quality >= 1.0) {
        solved = true;
        break;
      }
      frontier.insert(std::move(next));
    }
  }

  result.best = best.node;
  result.reasoner_stats = reasoner.snapshot_stats();
  result.cache_stats = ctx.cache_stats();
  return result;
}

}  // namespace alcache
