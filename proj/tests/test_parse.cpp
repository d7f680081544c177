#include <gtest/gtest.h>

#include <conwaykit/parse.hpp>

#include "support.hpp"

using namespace conwaykit;

namespace {
Polynomial a(std::uint32_t j) { return var(j); }

template <class F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError("none", 0);
}
}  // namespace

TEST(CaptionParser, NotationVariants) {
  auto g3 = a(1) * a(2) * a(3) + a(1) + a(3);
  EXPECT_EQ(parse_polynomial("a1 a2 a3 + a1 + a3"), g3);
  EXPECT_EQ(parse_polynomial("a_1 a_2 a_3+a_1+a_3"), g3);
  EXPECT_EQ(parse_polynomial("a_{1}a_{2}a_{3} + a_{1} + a_{3}"), g3);
  EXPECT_EQ(parse_polynomial("a1*a2*a3 + a1 + a3"), g3);
  EXPECT_EQ(parse_polynomial("a1 \xC2\xB7 a2 \xC2\xB7 a3 + a1 + a3"), g3);
  EXPECT_EQ(parse_polynomial("(a1 a2 + 1)(a3 a4 + 1) + a1 a4"),
            a(1) * a(2) * a(3) * a(4) + a(1) * a(2) + a(3) * a(4) + a(1) * a(4) + 1);
  EXPECT_EQ(parse_polynomial("a3 (1 + a1 a2) [a6 (a4 + a5) + 1]"),
            (a(3) + a(1) * a(2) * a(3)) * (a(4) * a(6) + a(5) * a(6) + 1));
  EXPECT_EQ(parse_polynomial("2 a1 + 3"), Polynomial(2) * a(1) + 3);
}

TEST(CaptionParser, ErrorsCarryPositions) {
  auto e = parse_error_of([] { parse_polynomial("a1 + + a2"); });
  EXPECT_EQ(e.position, 6u);
  EXPECT_THROW(parse_polynomial("(a1 + a2"), ParseError);
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("a0"), ParseError);
  EXPECT_THROW(parse_polynomial("b1"), ParseError);
  auto c = parse_error_of([] { parse_polynomial("a1 a2 a1"); });
  EXPECT_EQ(c.position, 7u);
}

TEST(MachineForm, ParsesAndRejects) {
  EXPECT_EQ(parse_polynomial("[[1,[1,2]],[1,[]]]"), a(1) * a(2) + 1);
  EXPECT_EQ(parse_polynomial("[]"), Polynomial());
  EXPECT_EQ(parse_polynomial(R"([["18446744073709551616",[1]]])"),
            Polynomial(Natural(Integer("18446744073709551616"))) * a(1));
  EXPECT_THROW(parse_polynomial("[[0,[1]]]"), ParseError);
  EXPECT_THROW(parse_polynomial("[[1,[1,1]]]"), ParseError);
  EXPECT_THROW(parse_polynomial("[[1,[1]],[2,[1]]]"), ParseError);
  EXPECT_THROW(parse_polynomial("[[1,[0]]]"), ParseError);
  EXPECT_THROW(parse_polynomial("[[1,[1]"), ParseError);
}

TEST(PolynomialText, RoundTripsBothForms) {
  testing_support::Rng rng(0x7E87);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = testing_support::random_polynomial(rng, {1, 2, 3, 4, 5, 6}, 10);
    EXPECT_EQ(parse_polynomial(to_string(p)), p) << to_string(p);
    EXPECT_EQ(parse_polynomial(to_machine(p)), p) << to_machine(p);
    EXPECT_EQ(polynomial_from_json(polynomial_to_json(p)), p);
    EXPECT_EQ(polynomial_to_json(p).dump(), to_machine(p));
  }
}

TEST(ConwayNotation, WorkedExamples) {
  EXPECT_EQ(parse_conway_notation("3 4"), (std::vector<Natural>{3, 4}));
  EXPECT_EQ(parse_conway_notation("2 2"), (std::vector<Natural>{2, 2}));
  EXPECT_EQ(parse_conway_notation("  7 "), (std::vector<Natural>{7}));
}

TEST(ConwayNotation, RejectsWithTokenPosition) {
  auto x = parse_error_of([] { parse_conway_notation("3 x"); });
  EXPECT_EQ(x.position, 2u);
  EXPECT_EQ(x.unit, "token");
  EXPECT_EQ(parse_error_of([] { parse_conway_notation("1 2 0"); }).position, 3u);
  EXPECT_EQ(parse_error_of([] { parse_conway_notation("-3"); }).position, 1u);
  EXPECT_THROW(parse_conway_notation(""), ParseError);
}

TEST(Assignment, AllowsZeroAndCommas) {
  EXPECT_EQ(parse_assignment("1,1,1"), (std::vector<Natural>{1, 1, 1}));
  EXPECT_EQ(parse_assignment("2, 0 3"), (std::vector<Natural>{2, 0, 3}));
  EXPECT_EQ(parse_error_of([] { parse_assignment("1,y"); }).position, 2u);
}

TEST(Fraction, Parses) {
  EXPECT_EQ(parse_fraction("13/4"), (Fraction{13, 4}));
  EXPECT_EQ(parse_fraction(" 5 / 2 "), (Fraction{5, 2}));
  EXPECT_THROW(parse_fraction("13"), ParseError);
  EXPECT_THROW(parse_fraction("13/4x"), ParseError);
  EXPECT_THROW(parse_fraction("/4"), ParseError);
}
