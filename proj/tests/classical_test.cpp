#include "glshift/classical.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace glshift;

namespace {

SymElement sgen(int d, int i, int j) { return SymElement::generator(d, i, j); }
UEAElement ugen(int d, int i, int j) { return UEAElement::generator(d, i, j); }

TEST(PoissonBracket, GeneratorRelation) {
    EXPECT_EQ(poisson_bracket(sgen(2, 1, 2), sgen(2, 2, 1)), sgen(2, 1, 1) - sgen(2, 2, 2));
}

TEST(PoissonBracket, VanishesOnEqualArguments) {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const SymElement f = support::random_sym_element(rng, 2, 4, 3);
        EXPECT_TRUE(poisson_bracket(f, f).is_zero());
    }
}

TEST(PoissonBracket, LeibnizExpansionExample) {
    // {e11 e22, e12} = e11 {e22, e12} + {e11, e12} e22 = -e11 e12 + e12 e22
    const SymElement lhs = poisson_bracket(sgen(2, 1, 1) * sgen(2, 2, 2), sgen(2, 1, 2));
    const SymElement expected =
        sgen(2, 1, 2) * sgen(2, 2, 2) - sgen(2, 1, 1) * sgen(2, 1, 2);
    EXPECT_EQ(lhs, expected);
}

TEST(PoissonBracket, Axioms) {
    std::mt19937 rng(67);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 10; ++trial) {
            const SymElement f = support::random_sym_element(rng, d, 3, 3);
            const SymElement g = support::random_sym_element(rng, d, 3, 3);
            const SymElement h = support::random_sym_element(rng, d, 3, 3);
            // antisymmetry
            EXPECT_TRUE((poisson_bracket(f, g) + poisson_bracket(g, f)).is_zero());
            // Leibniz
            EXPECT_EQ(poisson_bracket(f, g * h),
                      poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
            // Jacobi
            const SymElement jac = poisson_bracket(poisson_bracket(f, g), h) +
                                   poisson_bracket(poisson_bracket(g, h), f) +
                                   poisson_bracket(poisson_bracket(h, f), g);
            EXPECT_TRUE(jac.is_zero());
        }
}

TEST(PoissonBracket, DimensionMismatchThrows) {
    EXPECT_THROW(poisson_bracket(sgen(2, 1, 1), sgen(3, 1, 1)), std::invalid_argument);
}

TEST(ClassicalDerive, UnitMapsToZero) {
    EXPECT_TRUE(classical_derive(ShiftMatrix::identity(2), SymElement::one(2)).is_zero());
}

TEST(ClassicalDerive, DiagonalWeightOnGenerator) {
    EXPECT_EQ(classical_derive(ShiftMatrix::diagonal({2, 1}), sgen(2, 1, 1)),
              SymElement::scalar(2, 2));
}

TEST(ClassicalDerive, SecondDerivativeOfQuadratic) {
    ShiftMatrix xi(2);
    xi.at(1, 1) = Rational(2);
    xi.at(2, 2) = Rational(1);
    xi.at(1, 2) = Rational(3);
    xi.at(2, 1) = Rational(5);
    const SymElement quad = sgen(2, 1, 2) * sgen(2, 2, 1);
    const SymElement second = classical_derive(xi, classical_derive(xi, quad));
    // d_xi e[1,2] = xi(2,1), d_xi e[2,1] = xi(1,2); the second derivative is
    // 2 xi(2,1) xi(1,2).
    EXPECT_EQ(second, SymElement::scalar(2, Rational(2) * xi.at(2, 1) * xi.at(1, 2)));
}

TEST(Symmetrize, DegreeOneIsInclusion) {
    EXPECT_EQ(symmetrize(sgen(2, 1, 1)), ugen(2, 1, 1));
}

TEST(Symmetrize, QuadraticExample) {
    const UEAElement expected = ugen(2, 1, 2) * ugen(2, 2, 1) +
                                (ugen(2, 2, 2) - ugen(2, 1, 1)) * Rational(1, 2);
    EXPECT_EQ(symmetrize(sgen(2, 1, 2) * sgen(2, 2, 1)), expected);
}

TEST(Symmetrize, PoissonCentralMapsToCentral) {
    for (int d = 2; d <= 3; ++d) {
        const auto gens = char_poly_generators(d);
        for (const auto& ik : gens) EXPECT_TRUE(is_central(symmetrize(ik))) << "d=" << d;
    }
}

TEST(Symmetrize, TopSymbolRecoversHomogeneousInput) {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        SymElement f = support::random_sym_element(rng, 2, 3, 3);
        if (f.is_zero()) continue;
        // keep only the top-degree part so the input is homogeneous
        SymTermMap top;
        const int deg = f.degree();
        for (const auto& [m, c] : f.terms())
            if (monomial_degree(m) == deg) top.emplace(m, c);
        f = SymElement::from_terms(2, std::move(top));
        EXPECT_EQ(top_symbol(symmetrize(f)), f);
    }
}

TEST(Symmetrize, DegreeCapEnforced) {
    Monomial m(4, 0);
    m[0] = 9;
    SymElement f(2);
    f.add_term(std::move(m), 1);
    EXPECT_THROW(symmetrize(f), std::invalid_argument);
}

TEST(CharPoly, DimensionTwoGenerators) {
    const auto gens = char_poly_generators(2);
    ASSERT_EQ(gens.size(), 2u);
    EXPECT_EQ(gens[0], sgen(2, 1, 1) + sgen(2, 2, 2));
    EXPECT_EQ(gens[1], sgen(2, 1, 1) * sgen(2, 2, 2) - sgen(2, 1, 2) * sgen(2, 2, 1));
}

TEST(CharPoly, DimensionOne) {
    const auto gens = char_poly_generators(1);
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(gens[0], sgen(1, 1, 1));
}

TEST(CharPoly, GeneratorsArePoissonCentral) {
    for (int d = 1; d <= 3; ++d)
        for (const auto& ik : char_poly_generators(d)) ASSERT_TRUE(is_poisson_central(ik));
}

TEST(CharPoly, DeterminantBracketVanishesExplicitly) {
    const auto gens = char_poly_generators(2);
    EXPECT_TRUE(poisson_bracket(gens[1], sgen(2, 1, 2)).is_zero());
}

TEST(CharPoly, DimensionFourDeterminantIsPoissonCentral) {
    const auto gens = char_poly_generators(4);
    ASSERT_EQ(gens.size(), 4u);
    EXPECT_EQ(gens[3].terms().size(), 24u);  // full 4x4 determinant
    EXPECT_TRUE(is_poisson_central(gens[3]));
}

TEST(CharPoly, DimensionCapEnforced) {
    EXPECT_THROW(char_poly_generators(5), std::invalid_argument);
    EXPECT_THROW(char_poly_generators(0), std::invalid_argument);
}

TEST(TopSymbol, DropsLowerFiltration) {
    const UEAElement f = ugen(2, 1, 2) * ugen(2, 2, 1) + ugen(2, 1, 1);
    EXPECT_EQ(top_symbol(f), sgen(2, 1, 2) * sgen(2, 2, 1));
}

TEST(TopSymbol, ZeroElementThrows) {
    EXPECT_THROW(top_symbol(UEAElement::zero(2)), std::invalid_argument);
}

TEST(TopSymbol, CommutatorDescendsToPoissonBracket) {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        const UEAElement a = support::random_element(rng, 2, 3, 3);
        const UEAElement b = support::random_element(rng, 2, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        const SymElement pb = poisson_bracket(top_symbol(a), top_symbol(b));
        if (pb.is_zero()) continue;
        EXPECT_EQ(top_symbol(commutator(a, b)), pb);
    }
}

TEST(ClassicalShiftCheck, CharPolyPairsCommute) {
    const ShiftMatrix xi = ShiftMatrix::diagonal({2, 1});
    const auto gens = char_poly_generators(2);
    EXPECT_TRUE(classical_shift_check(xi, 1, 0, gens[1], gens[1]));
    EXPECT_TRUE(classical_shift_check(xi, 0, 0, gens[1], gens[1]));
    ShiftMatrix dense(2);
    dense.at(1, 1) = Rational(1, 3);
    dense.at(1, 2) = Rational(4);
    dense.at(2, 1) = Rational(-2, 5);
    dense.at(2, 2) = Rational(6);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            EXPECT_TRUE(classical_shift_check(dense, p, q, gens[1], gens[0]));
}

TEST(ClassicalShiftCheck, RejectsNonCentralInput) {
    const ShiftMatrix xi = ShiftMatrix::diagonal({2, 1});
    EXPECT_THROW(classical_shift_check(xi, 1, 0, sgen(2, 1, 2), sgen(2, 1, 1)),
                 std::invalid_argument);
}

TEST(SymElement, ArithmeticBasics) {
    const SymElement a = sgen(2, 1, 1);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * SymElement::one(2), a);
    EXPECT_EQ((a * a).degree(), 2);
    EXPECT_EQ(SymElement::zero(2).degree(), -1);
    EXPECT_THROW(a + sgen(3, 1, 1), std::invalid_argument);
}

}  // namespace
