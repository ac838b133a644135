#pragma once

// Seeded random knowledge bases and concepts for property-style tests.

#include <memory>
#include <string>

#include "alcache/concept.hpp"
#include "alcache/knowledge_base.hpp"
#include "alcache/rng.hpp"

namespace gen {

using alcache::Concept;
using alcache::KnowledgeBase;
using alcache::Rng;
using alcache::uniform_index;
using alcache::uniform_unit;

struct KbShape {
  std::size_t individuals = 20;
  std::size_t concepts = 6;
  std::size_t roles = 2;
  double type_density = 0.25;
  double edge_density = 0.08;
  std::size_t subclass_axioms = 5;
};

/// Random KB; subclass axioms may form cycles.
inline KnowledgeBase random_kb(std::uint64_t seed, const KbShape& shape = {}) {
  Rng rng(seed);
  KnowledgeBase kb;
  for (std::size_t i = 0; i < shape.individuals; ++i) kb.individuals.add("i" + std::to_string(i));
  for (std::size_t i = 0; i < shape.concepts; ++i) kb.concepts.add("C" + std::to_string(i));
  for (std::size_t i = 0; i < shape.roles; ++i) kb.roles.add("r" + std::to_string(i));
  for (std::uint32_t a = 0; a < shape.concepts; ++a)
    for (std::uint32_t x = 0; x < shape.individuals; ++x)
      if (uniform_unit(rng) < shape.type_density) kb.class_assertions.push_back({a, x});
  for (std::uint32_t r = 0; r < shape.roles; ++r)
    for (std::uint32_t x = 0; x < shape.individuals; ++x)
      for (std::uint32_t y = 0; y < shape.individuals; ++y)
        if (uniform_unit(rng) < shape.edge_density) kb.role_assertions.push_back({r, x, y});
  if (shape.concepts > 1) {
    for (std::size_t k = 0; k < shape.subclass_axioms; ++k) {
      const auto a = static_cast<std::uint32_t>(uniform_index(rng, shape.concepts));
      auto b = static_cast<std::uint32_t>(uniform_index(rng, shape.concepts));
      if (a == b) b = (b + 1) % shape.concepts;
      alcache::SubclassAxiom ax{a, b};
      bool dup = false;
      for (const auto& e : kb.subclass_axioms) dup = dup || e == ax;
      if (!dup) kb.subclass_axioms.push_back(ax);
    }
  }
  return kb;
}

/// Random concept over the KB's signature with length <= max_length.
inline Concept random_concept(Rng& rng, const KnowledgeBase& kb, std::size_t max_length) {
  const auto atom = [&] {
    const auto pick = uniform_index(rng, kb.concepts.size() + 2);
    if (pick == kb.concepts.size()) return Concept::top();
    if (pick == kb.concepts.size() + 1) return Concept::bottom();
    return Concept::atomic(kb.concepts[static_cast<std::uint32_t>(pick)]);
  };
  if (max_length <= 1 || uniform_unit(rng) < 0.2) return atom();
  const auto role = [&] { return kb.roles[static_cast<std::uint32_t>(uniform_index(rng, kb.roles.size()))]; };
  std::size_t choice = uniform_index(rng, 5);
  if (kb.roles.empty() && choice >= 3) choice = 0;
  if (max_length < 3 && choice != 0) choice = 0;
  switch (choice) {
    case 0: return Concept::negation(random_concept(rng, kb, max_length - 1));
    case 1:
    case 2: {
      const auto budget = max_length - 1;
      const auto left_max = 1 + uniform_index(rng, budget - 1);
      auto l = random_concept(rng, kb, left_max);
      auto r = random_concept(rng, kb, budget - alcache::length(l));
      return choice == 1 ? Concept::conjunction(std::move(l), std::move(r))
                         : Concept::disjunction(std::move(l), std::move(r));
    }
    case 3: return Concept::exists(role(), random_concept(rng, kb, max_length - 2));
    default: return Concept::forall(role(), random_concept(rng, kb, max_length - 2));
  }
}

}  // namespace gen
