#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace alcache {

enum class ConceptKind : std::uint8_t {
  Top,
  Bottom,
  Atomic,
  Not,
  And,
  Or,
  Exists,
  ForAll,
};

/// Immutable ALC concept expression.
///
/// Nodes are shared between copies, so a Concept is cheap to copy and safe
/// to hand to other threads. Names are not checked against any signature
/// here; that happens when a concept is evaluated against a knowledge base.
class Concept {
 public:
  /// Default-constructs Top.
  Concept() : node_(top_node()) {}

  static Concept top() { return Concept(); }
  static Concept bottom() {
    static const auto node = std::make_shared<const Node>(Node{ConceptKind::Bottom, {}, {}, {}});
    return Concept(node);
  }
  static Concept atomic(std::string name) {
    return Concept(std::make_shared<const Node>(Node{ConceptKind::Atomic, std::move(name), {}, {}}));
  }
  static Concept negation(Concept arg) {
    return Concept(std::make_shared<const Node>(Node{ConceptKind::Not, {}, std::move(arg.node_), {}}));
  }
  static Concept conjunction(Concept lhs, Concept rhs) {
    return binary(ConceptKind::And, std::move(lhs), std::move(rhs));
  }
  static Concept disjunction(Concept lhs, Concept rhs) {
    return binary(ConceptKind::Or, std::move(lhs), std::move(rhs));
  }
  static Concept exists(std::string role, Concept filler) {
    return restriction(ConceptKind::Exists, std::move(role), std::move(filler));
  }
  static Concept forall(std::string role, Concept filler) {
    return restriction(ConceptKind::ForAll, std::move(role), std::move(filler));
  }

  ConceptKind kind() const { return node_->kind; }

  bool is_top() const { return kind() == ConceptKind::Top; }
  bool is_bottom() const { return kind() == ConceptKind::Bottom; }
  bool is_atomic() const { return kind() == ConceptKind::Atomic; }

  /// Concept name for Atomic, role name for Exists/ForAll, empty otherwise.
  const std::string& name() const { return node_->name; }
  const std::string& role() const { return node_->name; }

  /// Argument of Not, filler of Exists/ForAll, left operand of And/Or.
  Concept operand() const { return Concept(node_->first); }
  Concept filler() const { return Concept(node_->first); }
  Concept left() const { return Concept(node_->first); }
  Concept right() const { return Concept(node_->second); }

  /// Structural equality (no canonicalization).
  friend bool operator==(const Concept& a, const Concept& b) {
    return equal_nodes(a.node_.get(), b.node_.get());
  }

 private:
  struct Node {
    ConceptKind kind;
    std::string name;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
  };

  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<const Node> top_node() {
    static const auto node = std::make_shared<const Node>(Node{ConceptKind::Top, {}, {}, {}});
    return node;
  }
  static Concept binary(ConceptKind kind, Concept lhs, Concept rhs) {
    return Concept(std::make_shared<const Node>(
        Node{kind, {}, std::move(lhs.node_), std::move(rhs.node_)}));
  }
  static Concept restriction(ConceptKind kind, std::string role, Concept filler) {
    return Concept(std::make_shared<const Node>(
        Node{kind, std::move(role), std::move(filler.node_), {}}));
  }
  static bool equal_nodes(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->name != b->name) return false;
    if (static_cast<bool>(a->first) != static_cast<bool>(b->first)) return false;
    if (static_cast<bool>(a->second) != static_cast<bool>(b->second)) return false;
    return (!a->first || equal_nodes(a->first.get(), b->first.get())) &&
           (!a->second || equal_nodes(a->second.get(), b->second.get()));
  }

  std::shared_ptr<const Node> node_;
};

/// Fully parenthesized rendering, e.g. "(r only (not A))". Parses back to
/// the same tree.
inline void render_to(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case ConceptKind::Top: out += "Top"; return;
    case ConceptKind::Bottom: out += "Bottom"; return;
    case ConceptKind::Atomic: out += c.name(); return;
    case ConceptKind::Not:
      out += "(not ";
      render_to(c.operand(), out);
      out += ')';
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      out += '(';
      render_to(c.left(), out);
      out += c.kind() == ConceptKind::And ? " and " : " or ";
      render_to(c.right(), out);
      out += ')';
      return;
    case ConceptKind::Exists:
    case ConceptKind::ForAll:
      out += '(';
      out += c.role();
      out += c.kind() == ConceptKind::Exists ? " some " : " only ";
      render_to(c.filler(), out);
      out += ')';
      return;
  }
}

inline std::string render(const Concept& c) {
  std::string out;
  render_to(c, out);
  return out;
}

/// Structural length: names and Top/Bottom count 1, each unary or binary
/// connective adds 1, each role restriction adds 2.
inline std::size_t length(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic: return 1;
    case ConceptKind::Not: return 1 + length(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or: return 1 + length(c.left()) + length(c.right());
    case ConceptKind::Exists:
    case ConceptKind::ForAll: return 2 + length(c.filler());
  }
  return 1;
}

/// Cache key: the rendering of a concept after canonicalization.
struct CanonicalKey {
  std::string value;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

struct CanonicalPair {
  Concept expr;
  std::string text;
};

inline CanonicalPair canonicalize_impl(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic: return {c, render(c)};
    case ConceptKind::Not: {
      auto inner = canonicalize_impl(c.operand());
      if (inner.expr.kind() == ConceptKind::Not) {
        // inner is already canonical, so its text is "(not X)" for canonical X
        auto arg = inner.expr.operand();
        return {arg, render(arg)};
      }
      return {Concept::negation(inner.expr), "(not " + inner.text + ")"};
    }
    case ConceptKind::And:
    case ConceptKind::Or: {
      auto l = canonicalize_impl(c.left());
      auto r = canonicalize_impl(c.right());
      if (r.text < l.text) std::swap(l, r);
      const bool is_and = c.kind() == ConceptKind::And;
      auto text = "(" + l.text + (is_and ? " and " : " or ") + r.text + ")";
      auto expr = is_and ? Concept::conjunction(std::move(l.expr), std::move(r.expr))
                         : Concept::disjunction(std::move(l.expr), std::move(r.expr));
      return {std::move(expr), std::move(text)};
    }
    case ConceptKind::Exists:
    case ConceptKind::ForAll: {
      auto f = canonicalize_impl(c.filler());
      const bool is_some = c.kind() == ConceptKind::Exists;
      auto text = "(" + c.role() + (is_some ? " some " : " only ") + f.text + ")";
      auto expr = is_some ? Concept::exists(c.role(), std::move(f.expr))
                          : Concept::forall(c.role(), std::move(f.expr));
      return {std::move(expr), std::move(text)};
    }
  }
  return {c, render(c)};
}

}  // namespace detail

/// Bottom-up double-negation elimination and ordering of And/Or operands by
/// their rendered canonical text. Nothing else is rewritten.
inline Concept canonical_form(const Concept& c) {
  return detail::canonicalize_impl(c).expr;
}

inline CanonicalKey canonicalize(const Concept& c) {
  return CanonicalKey{detail::canonicalize_impl(c).text};
}

}  // namespace alcache

template <>
struct std::hash<alcache::CanonicalKey> {
  std::size_t operator()(const alcache::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.value);
  }
};
