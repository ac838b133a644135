#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "alcache/knowledge_base.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace alcache;

namespace {

const std::string kToy = std::string(ALCACHE_DATA_DIR) + "/toy-family.kb";

std::set<std::string> names_of(const Interpretation& interp, const InstanceSet& s) {
  std::set<std::string> out;
  for (auto x : s) out.insert(interp.individual_name(x));
  return out;
}

}  // namespace

TEST(LoadKb, ToyFamilySignature) {
  const auto kb = load_kb(kToy);
  EXPECT_EQ(kb.individuals.size(), 3u);
  EXPECT_EQ(kb.concepts.size(), 3u);
  EXPECT_EQ(kb.roles.size(), 1u);
  EXPECT_EQ(kb.class_assertions.size(), 3u);
  EXPECT_EQ(kb.role_assertions.size(), 2u);
  EXPECT_EQ(kb.subclass_axioms.size(), 2u);
  EXPECT_EQ(kb.concepts.names(), (std::vector<std::string>{"Person", "Female", "Male"}));
}

TEST(LoadKb, EmptyFile) {
  const auto kb = parse_kb(std::string_view(""));
  EXPECT_TRUE(kb.individuals.empty());
  EXPECT_TRUE(kb.concepts.empty());
  EXPECT_TRUE(kb.roles.empty());
}

TEST(LoadKb, StrictModeRejectsDanglingNames) {
  const char* text =
      "role hasChild\nindividual anna\nrel hasChild anna cara\n";
  try {
    parse_kb(std::string_view(text), {.strict = true});
    FAIL() << "expected DanglingNameError";
  } catch (const DanglingNameError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  // lenient mode adds the name
  const auto kb = parse_kb(std::string_view(text));
  EXPECT_TRUE(kb.individuals.contains("cara"));
}

TEST(LoadKb, ParseErrorsCarryLineNumbers) {
  try {
    parse_kb(std::string_view("class A\n# comment\nsubclass A\n"));
    FAIL();
  } catch (const KbParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_kb(std::string_view("frobnicate x\n")), KbParseError);
}

TEST(LoadKb, CommentsAndDuplicates) {
  const auto kb = parse_kb(std::string_view(
      "class A # trailing\n  # whole line\ntype x A\ntype x A\nindividual x\n"));
  EXPECT_EQ(kb.class_assertions.size(), 1u);
  EXPECT_EQ(kb.individuals.size(), 1u);
}

TEST(LoadKb, MissingFile) {
  EXPECT_THROW(load_kb("/nonexistent/file.kb"), std::runtime_error);
}

TEST(Materialize, ToyFamilyExtensions) {
  const auto interp = materialize(load_kb(kToy));
  const auto& kb = interp.kb();
  EXPECT_EQ(names_of(interp, interp.extension(*kb.concepts.find("Female"))),
            (std::set<std::string>{"anna", "cara"}));
  EXPECT_EQ(names_of(interp, interp.extension(*kb.concepts.find("Person"))),
            (std::set<std::string>{"anna", "bob", "cara"}));
  EXPECT_TRUE(interp.has_edge(0, *kb.individuals.find("anna"), *kb.individuals.find("cara")));
}

TEST(Materialize, CyclesCollapseToEquivalence) {
  const auto interp = materialize(parse_kb(std::string_view(
      "subclass A B\nsubclass B A\ntype x A\nclass C\nsubclass C A\n")));
  const InstanceSet just_x{0};
  EXPECT_EQ(interp.extension(0), just_x);
  EXPECT_EQ(interp.extension(1), just_x);
  EXPECT_TRUE(interp.extension(2).empty());
}

TEST(Materialize, LongChainAndDiamond) {
  std::string text;
  for (int i = 0; i < 200; ++i) {
    text += "subclass C" + std::to_string(i) + " C" + std::to_string(i + 1) + "\n";
  }
  text += "subclass C200 C0\n";  // one big cycle
  text += "type x C17\nsubclass D C5\nsubclass D E\ntype y D\n";
  const auto interp = materialize(parse_kb(std::string_view(text)));
  const auto& kb = interp.kb();
  for (std::uint32_t i = 0; i <= 200; ++i) EXPECT_EQ(interp.extension(i).size(), 2u);
  EXPECT_EQ(interp.extension(*kb.concepts.find("E")).size(), 1u);
}

TEST(Materialize, AgreesWithWarshallClosureOnRandomKbs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto kb = gen::random_kb(seed, {.individuals = 15, .concepts = 8, .subclass_axioms = 10});
    const auto interp = materialize(kb);
    const oracle::BruteForce bf(kb);
    for (std::uint32_t a = 0; a < kb.concepts.size(); ++a) {
      const auto expected = bf.retrieve(Concept::atomic(kb.concepts[a]));
      EXPECT_EQ(std::set<Individual>(interp.extension(a).begin(), interp.extension(a).end()),
                expected)
          << "seed " << seed << " concept " << kb.concepts[a];
    }
    // subclass closure
    for (const auto& ax : kb.subclass_axioms) {
      EXPECT_TRUE(interp.extension(ax.sub).is_subset_of(interp.extension(ax.super)));
    }
  }
}

TEST(Materialize, MonotoneInAssertions) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto kb = gen::random_kb(seed);
    const auto before = materialize(kb);
    kb.class_assertions.push_back({static_cast<std::uint32_t>(seed % kb.concepts.size()),
                                   static_cast<Individual>(seed % kb.individuals.size())});
    const auto after = materialize(kb);
    for (std::uint32_t a = 0; a < kb.concepts.size(); ++a) {
      EXPECT_TRUE(before.extension(a).is_subset_of(after.extension(a)));
    }
  }
}

TEST(Materialize, Deterministic) {
  const auto a = load_kb(kToy);
  const auto b = load_kb(kToy);
  EXPECT_EQ(a, b);
  const auto ia = materialize(a), ib = materialize(b);
  for (std::uint32_t c = 0; c < a.concepts.size(); ++c) EXPECT_EQ(ia.extension(c), ib.extension(c));
}
