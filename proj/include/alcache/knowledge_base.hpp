#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alcache/instance_set.hpp"

namespace alcache {

/// Insertion-ordered set of names with O(1) index lookup.
class NameTable {
 public:
  /// Returns the index of `name`, adding it if absent.
  std::uint32_t add(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  std::optional<std::uint32_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(std::string_view name) const { return find(name).has_value(); }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& operator[](std::uint32_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const NameTable& a, const NameTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

struct ClassAssertion {
  std::uint32_t concept_name;
  Individual individual;
  friend auto operator<=>(const ClassAssertion&, const ClassAssertion&) = default;
};

struct RoleAssertion {
  std::uint32_t role;
  Individual from;
  Individual to;
  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

/// sub ⊑ super between atomic concepts.
struct SubclassAxiom {
  std::uint32_t sub;
  std::uint32_t super;
  friend auto operator<=>(const SubclassAxiom&, const SubclassAxiom&) = default;
};

/// Finite knowledge base: signature, ABox and atomic TBox. Assertions and
/// axioms are duplicate-free and kept in first-seen order.
struct KnowledgeBase {
  NameTable individuals;
  NameTable concepts;
  NameTable roles;
  std::vector<ClassAssertion> class_assertions;
  std::vector<RoleAssertion> role_assertions;
  std::vector<SubclassAxiom> subclass_axioms;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

class KbError : public std::runtime_error {
 public:
  KbError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Malformed line.
class KbParseError : public KbError {
 public:
  using KbError::KbError;
};

/// Strict mode only: an assertion or axiom mentions an undeclared name.
class DanglingNameError : public KbError {
 public:
  using KbError::KbError;
};

struct KbLoadOptions {
  bool strict = false;
};

/// Reads the line-based KB format:
///
///   class <Name> | role <Name> | individual <Name>
///   subclass <A> <B> | type <Individual> <Class> | rel <Role> <From> <To>
///
/// `#` starts a comment. Outside strict mode, names used before (or without)
/// declaration join the signature in order of first appearance.
inline KnowledgeBase parse_kb(std::istream& in, KbLoadOptions opts = {}) {
  KnowledgeBase kb;
  std::set<ClassAssertion> seen_types;
  std::set<RoleAssertion> seen_rels;
  std::set<SubclassAxiom> seen_axioms;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(std::move(w));
    if (tok.empty()) continue;

    const std::string& kw = tok[0];
    auto expect_args = [&](std::size_t n) {
      if (tok.size() != n + 1) {
        throw KbParseError("'" + kw + "' expects " + std::to_string(n) + " argument(s), got " +
                               std::to_string(tok.size() - 1),
                           line_no);
      }
    };
    auto use = [&](NameTable& table, const std::string& name, const char* what) {
      if (opts.strict && !table.contains(name)) {
        throw DanglingNameError(std::string("undeclared ") + what + " '" + name + "'", line_no);
      }
      return table.add(name);
    };

    if (kw == "class") {
      expect_args(1);
      kb.concepts.add(tok[1]);
    } else if (kw == "role") {
      expect_args(1);
      kb.roles.add(tok[1]);
    } else if (kw == "individual") {
      expect_args(1);
      kb.individuals.add(tok[1]);
    } else if (kw == "subclass") {
      expect_args(2);
      SubclassAxiom ax{use(kb.concepts, tok[1], "class"), use(kb.concepts, tok[2], "class")};
      if (seen_axioms.insert(ax).second) kb.subclass_axioms.push_back(ax);
    } else if (kw == "type") {
      expect_args(2);
      const auto who = use(kb.individuals, tok[1], "individual");
      ClassAssertion ca{use(kb.concepts, tok[2], "class"), who};
      if (seen_types.insert(ca).second) kb.class_assertions.push_back(ca);
    } else if (kw == "rel") {
      expect_args(3);
      const auto r = use(kb.roles, tok[1], "role");
      const auto from = use(kb.individuals, tok[2], "individual");
      RoleAssertion ra{r, from, use(kb.individuals, tok[3], "individual")};
      if (seen_rels.insert(ra).second) kb.role_assertions.push_back(ra);
    } else {
      throw KbParseError("unknown directive '" + kw + "'", line_no);
    }
  }
  return kb;
}

inline KnowledgeBase parse_kb(std::string_view text, KbLoadOptions opts = {}) {
  std::istringstream in{std::string(text)};
  return parse_kb(in, opts);
}

inline KnowledgeBase load_kb(const std::string& path, KbLoadOptions opts = {}) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knowledge base '" + path + "'");
  return parse_kb(in, opts);
}

/// Closed-world interpretation over the named individuals: materialized
/// atomic extensions and role successor lists.
class Interpretation {
 public:
  explicit Interpretation(std::shared_ptr<const KnowledgeBase> kb) : kb_(std::move(kb)) {}

  const KnowledgeBase& kb() const { return *kb_; }
  std::size_t domain_size() const { return kb_->individuals.size(); }
  InstanceSet domain() const { return InstanceSet::all(domain_size()); }

  const InstanceSet& extension(std::uint32_t concept_index) const {
    return extensions_[concept_index];
  }
  /// Sorted successors of `x` under role `role_index`.
  const std::vector<Individual>& successors(std::uint32_t role_index, Individual x) const {
    return successors_[role_index][x];
  }
  bool has_edge(std::uint32_t role_index, Individual a, Individual b) const {
    const auto& s = successors_[role_index][a];
    return std::binary_search(s.begin(), s.end(), b);
  }

  const std::string& individual_name(Individual x) const { return kb_->individuals[x]; }

 private:
  friend Interpretation materialize(std::shared_ptr<const KnowledgeBase> kb);

  std::shared_ptr<const KnowledgeBase> kb_;
  std::vector<InstanceSet> extensions_;
  std::vector<std::vector<std::vector<Individual>>> successors_;
};

namespace detail {

/// Tarjan's algorithm over the subclass graph. Components come out sinks
/// first (reverse topological order of the condensation).
inline std::vector<std::vector<std::uint32_t>> strongly_connected_components(
    const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::uint32_t unvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> components;
  std::uint32_t counter = 0;

  // Iterative to avoid deep recursion on long hierarchies.
  struct Frame {
    std::uint32_t node;
    std::size_t next_edge;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.next_edge < adj[f.node].size()) {
        const auto w = adj[f.node][f.next_edge++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const auto v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> comp;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

}  // namespace detail

/// extension(A) = { a | B(a) asserted and B ⊑* A }, with ⊑* the
/// reflexive-transitive closure of the subclass axioms. Cycles are collapsed
/// into equivalence classes first. Role extensions are copied verbatim.
inline Interpretation materialize(std::shared_ptr<const KnowledgeBase> kb) {
  Interpretation interp(kb);
  const std::size_t nc = kb->concepts.size();

  std::vector<std::vector<std::uint32_t>> supers(nc);
  for (const auto& ax : kb->subclass_axioms) supers[ax.sub].push_back(ax.super);
  const auto components = detail::strongly_connected_components(supers);

  std::vector<std::uint32_t> component_of(nc);
  for (std::uint32_t ci = 0; ci < components.size(); ++ci) {
    for (auto v : components[ci]) component_of[v] = ci;
  }

  std::vector<std::vector<Individual>> direct(components.size());
  for (const auto& ca : kb->class_assertions) {
    direct[component_of[ca.concept_name]].push_back(ca.individual);
  }

  // Sources first: every component is complete before it is pushed upward.
  std::vector<InstanceSet> comp_ext(components.size());
  for (std::size_t k = components.size(); k-- > 0;) {
    comp_ext[k] = unite(comp_ext[k], InstanceSet(std::move(direct[k])));
    for (auto v : components[k]) {
      for (auto sup : supers[v]) {
        const auto target = component_of[sup];
        if (target != k) comp_ext[target] = unite(comp_ext[target], comp_ext[k]);
      }
    }
  }

  interp.extensions_.resize(nc);
  for (std::uint32_t a = 0; a < nc; ++a) interp.extensions_[a] = comp_ext[component_of[a]];

  interp.successors_.assign(kb->roles.size(),
                            std::vector<std::vector<Individual>>(kb->individuals.size()));
  for (const auto& ra : kb->role_assertions) interp.successors_[ra.role][ra.from].push_back(ra.to);
  for (auto& per_role : interp.successors_) {
    for (auto& s : per_role) std::sort(s.begin(), s.end());
  }
  return interp;
}

inline Interpretation materialize(const KnowledgeBase& kb) {
  return materialize(std::make_shared<const KnowledgeBase>(kb));
}

}  // namespace alcache
