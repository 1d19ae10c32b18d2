#include "glshift/io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace glshift;

namespace {

UEAElement gen(int d, int i, int j) { return UEAElement::generator(d, i, j); }

TEST(Print, CanonicalForms) {
    EXPECT_EQ(print_element(commutator(gen(2, 1, 2), gen(2, 2, 1))), "e[1,1] - e[2,2]");
    EXPECT_EQ(print_element(gen(2, 1, 1) * Rational(2) + UEAElement::one(2)), "2*e[1,1] + 1");
    EXPECT_EQ(print_element(tau(1, 2)), "e[1,1] + e[2,2]");
    EXPECT_EQ(print_element(UEAElement::zero(2)), "0");
    EXPECT_EQ(print_element(UEAElement::scalar(2, Rational(-3, 2))), "-3/2");
}

TEST(Print, LongerWordsComeFirst) {
    const UEAElement e = gen(2, 1, 2) * gen(2, 2, 1) * Rational(3, 2) - gen(2, 1, 1);
    EXPECT_EQ(print_element(e), "3/2*e[1,2]*e[2,1] - e[1,1]");
}

TEST(Print, LeadingNegativeCoefficient) {
    EXPECT_EQ(print_element(gen(2, 1, 1) * Rational(-1) + gen(2, 2, 2)),
              "-e[1,1] + e[2,2]");
}

TEST(Parse, GrammarBasics) {
    EXPECT_EQ(parse_element("e[1,1]", 2), gen(2, 1, 1));
    EXPECT_EQ(parse_element("3/2*e[1,2]*e[2,1] - e[1,1]", 2),
              gen(2, 1, 2) * gen(2, 2, 1) * Rational(3, 2) - gen(2, 1, 1));
    EXPECT_EQ(parse_element("5", 2), UEAElement::scalar(2, 5));
    EXPECT_EQ(parse_element("0", 2), UEAElement::zero(2));
    EXPECT_EQ(parse_element(" -e[1,1] + 2 ", 2), gen(2, 1, 1) * Rational(-1) + UEAElement::scalar(2, 2));
}

TEST(Parse, ProductsAreNormalOrdered) {
    EXPECT_EQ(parse_element("e[2,1]*e[1,2]", 2),
              gen(2, 1, 2) * gen(2, 2, 1) + gen(2, 2, 2) - gen(2, 1, 1));
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        parse_element("e[1,2", 2);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 1);
        EXPECT_GT(e.column, 1);
    }
    EXPECT_THROW(parse_element("e[5,1]", 2), ParseError);
    EXPECT_THROW(parse_element("2**3", 2), ParseError);
    EXPECT_THROW(parse_element("", 2), ParseError);
    EXPECT_THROW(parse_element("1/0", 2), ParseError);
}

TEST(Parse, RoundTripRandomElements) {
    std::mt19937 rng(79);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 100; ++trial) {
            const UEAElement e = support::random_element(rng, d, 5, 4);
            ASSERT_EQ(parse_element(print_element(e), d), e);
        }
}

TEST(SymFormat, CommutativeNormalizationOnParse) {
    EXPECT_EQ(parse_sym_element("e[2,1]*e[1,2]", 2), parse_sym_element("e[1,2]*e[2,1]", 2));
    EXPECT_EQ(print_element(parse_sym_element("e[2,1]*e[1,2]", 2)), "e[1,2]*e[2,1]");
}

TEST(SymFormat, RoundTrip) {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        const SymElement e = support::random_sym_element(rng, 2, 4, 4);
        ASSERT_EQ(parse_sym_element(print_element(e), 2), e);
    }
}

TEST(Json, ElementShape) {
    const nlohmann::json j = to_json(gen(2, 1, 2) * gen(2, 2, 1) * Rational(3, 2) - gen(2, 1, 1));
    EXPECT_EQ(j["d"], 2);
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["coeff"], "3/2");
    EXPECT_EQ(j["terms"][0]["word"], nlohmann::json::parse("[[1,2],[2,1]]"));
    EXPECT_EQ(j["terms"][1]["coeff"], "-1");
    EXPECT_EQ(j["terms"][1]["word"], nlohmann::json::parse("[[1,1]]"));
}

TEST(Json, MatrixIsArrayOfArrays) {
    const nlohmann::json j = to_json(generator_matrix(2));
    ASSERT_EQ(j.size(), 2u);
    ASSERT_EQ(j[0].size(), 2u);
    EXPECT_EQ(j[0][1]["terms"][0]["word"], nlohmann::json::parse("[[1,2]]"));
}

TEST(Json, ReportShape) {
    const ShiftMatrix xi = ShiftMatrix::diagonal({2, 1});
    const Report report = verify_centralizer(xi, gen(2, 1, 2));
    const nlohmann::json j = to_json(report);
    ASSERT_TRUE(j.contains("config"));
    ASSERT_TRUE(j.contains("checks"));
    bool saw_fail_with_witness = false;
    for (const auto& check : j["checks"]) {
        EXPECT_TRUE(check["status"] == "pass" || check["status"] == "fail");
        if (check["status"] == "fail" && check.contains("witness")) saw_fail_with_witness = true;
    }
    EXPECT_TRUE(saw_fail_with_witness);
}

TEST(ShiftMatrixParse, DiagAndFullForms) {
    const ShiftMatrix d1 = parse_shift_matrix("diag:2,1", 2);
    EXPECT_EQ(d1.at(1, 1), Rational(2));
    EXPECT_EQ(d1.at(2, 2), Rational(1));
    EXPECT_TRUE(d1.is_regular_diagonal());

    const ShiftMatrix d2 = parse_shift_matrix("diag:7/2,1/3", 2);
    EXPECT_EQ(d2.at(1, 1), Rational(7, 2));

    const ShiftMatrix f = parse_shift_matrix("full:[[1,2/3],[-4,5]]", 2);
    EXPECT_EQ(f.at(1, 2), Rational(2, 3));
    EXPECT_EQ(f.at(2, 1), Rational(-4));
    EXPECT_FALSE(f.is_diagonal());
}

TEST(ShiftMatrixParse, Errors) {
    EXPECT_THROW(parse_shift_matrix("diag:1", 2), std::invalid_argument);
    EXPECT_THROW(parse_shift_matrix("full:[[1,2],[3]]", 2), std::invalid_argument);
    EXPECT_THROW(parse_shift_matrix("full:[1,2]", 2), std::invalid_argument);
    EXPECT_THROW(parse_shift_matrix("diag:a,b", 2), std::invalid_argument);
    EXPECT_THROW(parse_shift_matrix("nonsense", 2), std::invalid_argument);
}

}  // namespace
