#include <gtest/gtest.h>

#include "alcache/concept.hpp"
#include "alcache/parser.hpp"

using namespace alcache;

namespace {

Concept A(const char* n) { return Concept::atomic(n); }

}  // namespace

TEST(Parse, Keywords) {
  EXPECT_EQ(parse("Top"), Concept::top());
  EXPECT_EQ(parse("Bottom"), Concept::bottom());
}

TEST(Parse, ConjunctionWithRestriction) {
  EXPECT_EQ(parse("Female and (hasChild some Male)"),
            Concept::conjunction(A("Female"), Concept::exists("hasChild", A("Male"))));
}

TEST(Parse, DoesNotRewriteDoubleNegation) {
  EXPECT_EQ(parse("not not Female"), Concept::negation(Concept::negation(A("Female"))));
}

TEST(Parse, PrecedenceAndAssociativity) {
  // and binds tighter than or; both left-associative
  EXPECT_EQ(parse("A or B and C"),
            Concept::disjunction(A("A"), Concept::conjunction(A("B"), A("C"))));
  EXPECT_EQ(parse("A and B and C"),
            Concept::conjunction(Concept::conjunction(A("A"), A("B")), A("C")));
  // restrictions bind tighter than and
  EXPECT_EQ(parse("r some A and B"),
            Concept::conjunction(Concept::exists("r", A("A")), A("B")));
  EXPECT_EQ(parse("r only not A"), Concept::forall("r", Concept::negation(A("A"))));
  EXPECT_EQ(parse("r some s only Top"),
            Concept::exists("r", Concept::forall("s", Concept::top())));
}

TEST(Parse, ErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t pos;
  };
  for (auto [text, pos] : {Case{"A and", 5}, Case{"(A", 2}, Case{"A B", 2}, Case{"A $ B", 2},
                           Case{"and A", 0}, Case{")", 0}, Case{"", 0}, Case{"r some", 6}}) {
    try {
      parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text;
    }
  }
}

TEST(Render, FullyParenthesized) {
  EXPECT_EQ(render(Concept::top()), "Top");
  EXPECT_EQ(render(Concept::conjunction(A("A"), A("B"))), "(A and B)");
  EXPECT_EQ(render(Concept::forall("r", Concept::negation(A("A")))), "(r only (not A))");
  EXPECT_EQ(render(Concept::disjunction(Concept::exists("r", Concept::bottom()), A("B"))),
            "((r some Bottom) or B)");
}

TEST(Canonicalize, Commutativity) {
  EXPECT_EQ(canonicalize(Concept::conjunction(A("B"), A("A"))),
            canonicalize(Concept::conjunction(A("A"), A("B"))));
  EXPECT_EQ(canonicalize(Concept::disjunction(A("B"), A("A"))).value, "(A or B)");
}

TEST(Canonicalize, DoubleNegation) {
  EXPECT_EQ(canonicalize(Concept::negation(Concept::negation(A("A")))), canonicalize(A("A")));
  EXPECT_EQ(canonicalize(parse("not not not A")), canonicalize(parse("not A")));
  // eliminated bottom-up, inside other constructors too
  EXPECT_EQ(canonicalize(parse("r some not not (B and A)")).value, "(r some (A and B))");
}

TEST(Canonicalize, DistinguishesConstructors) {
  EXPECT_NE(canonicalize(Concept::exists("r", A("A"))), canonicalize(Concept::forall("r", A("A"))));
  EXPECT_NE(canonicalize(parse("A and B")), canonicalize(parse("A or B")));
}

TEST(Canonicalize, NoOtherRewriting) {
  // no associativity, absorption, or NNF
  EXPECT_NE(canonicalize(parse("(A and B) and C")), canonicalize(parse("A and (B and C)")));
  EXPECT_NE(canonicalize(parse("A and A")), canonicalize(parse("A")));
  EXPECT_NE(canonicalize(parse("not (A and B)")), canonicalize(parse("not A or not B")));
}

TEST(Canonicalize, SortsNestedOperandsAfterTheirOwnCanonicalization) {
  // inner (D and C) becomes (C and D), which then sorts before "E"
  EXPECT_EQ(canonicalize(parse("E and (D and C)")).value, "((C and D) and E)");
}

TEST(Length, Recurrence) {
  EXPECT_EQ(length(A("A")), 1u);
  EXPECT_EQ(length(Concept::exists("r", Concept::conjunction(A("A"), A("B")))), 5u);
  EXPECT_EQ(length(Concept::negation(Concept::top())), 2u);
  EXPECT_EQ(length(parse("(r only A) or not B")), 6u);
}
