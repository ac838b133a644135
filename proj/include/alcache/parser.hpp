#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alcache/concept.hpp"

namespace alcache {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  /// Zero-based character offset of the offending token.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

struct Token {
  enum class Type { Ident, LParen, RParen, End } type;
  std::string_view text;
  std::size_t pos;
};

inline bool is_keyword(std::string_view s) {
  return s == "and" || s == "or" || s == "not" || s == "some" || s == "only" ||
         s == "Top" || s == "Bottom";
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const auto ch = static_cast<unsigned char>(src[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (ch == '(') {
      out.push_back({Token::Type::LParen, src.substr(i, 1), i});
      ++i;
    } else if (ch == ')') {
      out.push_back({Token::Type::RParen, src.substr(i, 1), i});
      ++i;
    } else if (std::isalpha(ch) || ch == '_') {
      const std::size_t start = i;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        ++i;
      }
      out.push_back({Token::Type::Ident, src.substr(start, i - start), start});
    } else {
      throw ParseError(std::string("unexpected character '") + src[i] + "'", i);
    }
  }
  out.push_back({Token::Type::End, {}, src.size()});
  return out;
}

class ConceptParser {
 public:
  explicit ConceptParser(std::string_view src) : tokens_(tokenize(src)) {}

  Concept parse() {
    auto c = disjunction();
    if (peek().type != Token::Type::End) fail("unexpected '" + std::string(peek().text) + "'");
    return c;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_word(std::string_view w, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.type == Token::Type::Ident && t.text == w;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  Concept disjunction() {
    auto lhs = conjunction();
    while (at_word("or")) {
      advance();
      lhs = Concept::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Concept conjunction() {
    auto lhs = unary();
    while (at_word("and")) {
      advance();
      lhs = Concept::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Concept unary() {
    const auto& t = peek();
    switch (t.type) {
      case Token::Type::End: fail("unexpected end of input");
      case Token::Type::RParen: fail("unexpected ')'");
      case Token::Type::LParen: {
        advance();
        auto inner = disjunction();
        if (peek().type != Token::Type::RParen) fail("expected ')'");
        advance();
        return inner;
      }
      case Token::Type::Ident: break;
    }
    if (t.text == "not") {
      advance();
      return Concept::negation(unary());
    }
    if (t.text == "Top") {
      advance();
      return Concept::top();
    }
    if (t.text == "Bottom") {
      advance();
      return Concept::bottom();
    }
    if (is_keyword(t.text)) fail("unexpected keyword '" + std::string(t.text) + "'");
    std::string name(t.text);
    advance();
    if (at_word("some")) {
      advance();
      return Concept::exists(std::move(name), unary());
    }
    if (at_word("only")) {
      advance();
      return Concept::forall(std::move(name), unary());
    }
    return Concept::atomic(std::move(name));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the Manchester-style surface syntax:
///
///   concept := disj
///   disj    := conj { "or" conj }
///   conj    := unary { "and" unary }
///   unary   := "not" unary | ROLE "some" unary | ROLE "only" unary
///            | "(" concept ")" | "Top" | "Bottom" | NAME
///
/// No rewriting is performed; "not not A" yields Not(Not(A)).
inline Concept parse(std::string_view text) {
  return detail::ConceptParser(text).parse();
}

}  // namespace alcache
