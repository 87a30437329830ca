#include <gtest/gtest.h>

#include "mbqc/clifford.hpp"
#include "mbqc/dsl.hpp"
#include "mbqc/library.hpp"
#include "mbqc/rewrite.hpp"

using namespace mbqc;

namespace {

std::vector<Pattern> corpus() {
  std::vector<Pattern> out;
  const std::vector<Angle> angles = {Angle::pi_fraction(1, 4), Angle::radians(1.2345678901234),
                                     Angle::radians(0.1).plus_pi(), Angle::pi_fraction(7, 3)};
  for (const auto& name : library::names()) {
    for (int n : {2, 4}) {
      const Pattern wild = library::by_name(name, angles, n);
      out.push_back(wild);
      out.push_back(standardize(wild).pattern);
      out.push_back(standardize_extended(wild).pattern);
    }
  }
  out.push_back(pauli_eliminate(standardize(library::p_half()).pattern));
  // A pattern holding a shift, which no builder produces.
  out.push_back(Pattern({1, 2, 3}, {1}, {3},
                        {Entangle(1, 2), Measure(1, Angle()), Shift{1, Signal(1)},
                         Measure(2, Angle::pi_fraction(1, 3), {}, Signal::outcome(1)),
                         correct_x(3, Signal::outcome(2))}));
  return out;
}

std::string h_document() {
  return "# Hadamard\n"
         "pattern h {\n"
         "  space: 1, 2;\n"
         "  input: 1;\n"
         "  output: 2;\n"
         "  seq: E(1, 2) M(1, 0) X(2, s[1]);\n"
         "}\n";
}

}  // namespace

TEST(Dsl, RoundTripOverLibraryCorpus) {
  for (const Pattern& p : corpus()) {
    for (auto order : {dsl::Order::Execution, dsl::Order::Paper}) {
      const std::string text = dsl::serialize(p, "p", order);
      const dsl::PatternDocument doc = dsl::parse(text);
      EXPECT_EQ(doc.pattern, p) << text;
      EXPECT_EQ(doc.name, "p");
      EXPECT_EQ(dsl::serialize(doc.pattern, "p", order), text);
    }
  }
}

TEST(Dsl, HDocumentIsTheHPattern) {
  EXPECT_EQ(dsl::parse(h_document()).pattern, library::h());
  EXPECT_EQ(dsl::parse(h_document()).name, "h");
}

TEST(Dsl, PaperOrderReversesTheSequence) {
  const std::string text =
      "pattern h { space: 1, 2; input: 1; output: 2; paper_seq: X(2, s[1]) M(1, 0) E(1, 2); }";
  EXPECT_EQ(dsl::parse(text).pattern, library::h());
  EXPECT_EQ(dsl::paper_sequence(library::h()), "X(2, s[1]) M(1, 0) E(1, 2)");
}

TEST(Dsl, Angles) {
  EXPECT_EQ(dsl::parse_angle("1/2 pi"), Angle::pi_fraction(1, 2));
  EXPECT_EQ(dsl::parse_angle("pi/2"), Angle::pi_fraction(1, 2));
  EXPECT_EQ(dsl::parse_angle("pi"), Angle::pi_fraction(1));
  EXPECT_EQ(dsl::parse_angle("-pi"), Angle::pi_fraction(1));
  EXPECT_EQ(dsl::parse_angle("-1/4 pi"), Angle::pi_fraction(7, 4));
  EXPECT_EQ(dsl::parse_angle("0"), Angle());
  EXPECT_TRUE(dsl::parse_angle("0").is_exact());
  EXPECT_EQ(dsl::parse_angle("0.25"), Angle::radians(0.25));
  EXPECT_EQ(dsl::parse_angle("0.5 + 1/1 pi"), Angle::radians(0.5).plus_pi());
  for (const char* bad : {"", "pi/0", "1/0 pi", "abc", "1/2 pie", "1.2.3", "/2 pi"}) {
    EXPECT_THROW(dsl::parse_angle(bad), std::invalid_argument) << bad;
  }
}

TEST(Dsl, YMeasurementLiteral) {
  const auto doc = dsl::parse(
      "pattern y { space: 1, 2; input: 1; output: 2; seq: E(1, 2) M(1, 1/2 pi) X(2, s[1]); }");
  const auto& m = std::get<Measure>(doc.pattern.sequence()[1]);
  EXPECT_TRUE(m.angle().equals_exactly(1, 2));
}

TEST(Dsl, Signals) {
  EXPECT_EQ(dsl::parse_signal("1 + s[2] + s[4]"), Signal(1, {2, 4}));
  EXPECT_EQ(dsl::parse_signal("s[a] + s[a]"), Signal());
  EXPECT_EQ(dsl::parse_signal("0"), Signal());
  EXPECT_THROW(dsl::parse_signal("s[1"), std::invalid_argument);
  EXPECT_THROW(dsl::parse_signal("2"), std::invalid_argument);
}

TEST(Dsl, UnknownQubitIsReportedWithLocation) {
  try {
    dsl::parse("pattern bad {\n  space: 1, 2; input: 1; output: 2;\n  seq: X(2, s[3]);\n}");
    FAIL() << "expected a parse error";
  } catch (const dsl::ParseError& e) {
    EXPECT_EQ(e.line, 3u);
    EXPECT_GT(e.column, 1u);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
}

TEST(Dsl, MalformedDocuments) {
  for (const char* bad : {
           "pattern { space: 1; input: ; output: 1; seq: ; }",
           "pattern p { space: 1; input: ; output: 1; seq: M(1, 1/2 pie); }",
           "pattern p { space: 1; input: ; output: 1; seq: Q(1); }",
           "pattern p { space: 1; input: ; output: 1; seq: E(1, 1); }",
           "pattern p { space: 1; input: ; output: 1; seq: ; ",
           "pattern p { space: 1; output: 1; seq: ; }",
       }) {
    EXPECT_THROW(dsl::parse(bad), dsl::ParseError) << bad;
  }
}
