#include <gtest/gtest.h>

#include <stdexcept>

#include "finsum/genfun.hpp"
#include "finsum/special_numbers.hpp"
#include "finsum/y_numbers.hpp"
#include "test_support.hpp"

using namespace finsum;
using finsum::testing::Gen;
using finsum::testing::kIterations;

namespace {

void expect_prefix(const LaurentSeries<Rational>& s, const std::vector<Rational>& expected) {
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(s.coeff(static_cast<long>(k)), expected[k]) << "k=" << k;
    }
}

}  // namespace

// Oracles

TEST(GenFun, GAtTwo) {
    expect_prefix(series_G(Rational(2), 3), {Rational(1, 2), Rational(5, 8), Rational(2, 3), Rational(131, 192)});
    expect_prefix(series_g_special(SpecialG::g2, 3), {Rational(1, 2), Rational(5, 8), Rational(2, 3), Rational(131, 192)});
}

TEST(GenFun, GAtHalf) {
    expect_prefix(series_G(Rational(1, 2), 3), {Rational(-1), Rational(-1, 2), Rational(-5, 6), Rational(-7, 12)});
    expect_prefix(series_g_special(SpecialG::g3, 3), {Rational(-1), Rational(-1, 2), Rational(-5, 6), Rational(-7, 12)});
}

TEST(GenFun, GAtMinusOne) {
    expect_prefix(series_g_special(SpecialG::g1, 3), {Rational(2), Rational(4), Rational(20, 3), Rational(32, 3)});
}

TEST(GenFun, GaussSeries) {
    std::vector<Rational> expected;
    for (long k = 0; k <= 6; ++k) expected.emplace_back(1, k + 1);
    expect_prefix(hyper2f1_series(Rational(1), Rational(1), Rational(2), Rational(1), 6), expected);
    EXPECT_THROW(hyper2f1_series(Rational(1), Rational(1), Rational(-2), Rational(1), 4), std::invalid_argument);
    EXPECT_THROW(hyper2f1_series(Rational(1), Rational(1), Rational(0), Rational(1), 4), std::invalid_argument);
}

TEST(GenFun, LogProductAtTwo) {
    const auto P = log_product_series(Rational(2), 3);
    EXPECT_EQ(P.coeff(0), Rational(0));
    EXPECT_EQ(P.coeff(1), Rational(1, 4));
}

TEST(GenFun, HypergeometricPrintedVariantDiffers) {
    EXPECT_EQ(series_G_hypergeometric(Rational(2), 0).coeff(0), Rational(1, 2));
    EXPECT_EQ(series_G_hypergeometric_printed(Rational(2), 0).coeff(0), Rational(0));
}

TEST(GenFun, FibonacciType) {
    const BivariatePolynomial p = fibtype_poly(5, 1, 1, 1);
    const Polynomial one(Rational(1));
    EXPECT_EQ(p.evaluate(one).evaluate(Rational(1)), Rational(8));
    EXPECT_THROW(fibtype_poly(3, 1, 0, 0), std::invalid_argument);
}

TEST(GenFun, LeibnitzPolynomialLowDegrees) {
    EXPECT_EQ(leibnitz_polynomial(0), Polynomial(Rational(1)));
    EXPECT_EQ(leibnitz_polynomial(1), Polynomial({Rational(1, 2), Rational(1, 2)}));
}

// Properties

TEST(GenFunProperty, CoefficientsEncodeY) {
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const Rational lambda = gen.lambda();
        const long T = gen.integer(0, 20);
        const auto G = series_G(lambda, T);
        for (long n = 0; n <= T; ++n) {
            EXPECT_EQ(G.coeff(n), y_direct(n, lambda) * pow(Rational(1) - lambda, n + 2));
        }
    }
}

TEST(GenFunProperty, HypergeometricFormMatches) {
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const Rational lambda = gen.lambda();
        const auto a = series_G(lambda, 12);
        const auto b = series_G_hypergeometric(lambda, 12);
        for (long n = 0; n <= 12; ++n) EXPECT_EQ(a.coeff(n), b.coeff(n));
    }
}

TEST(GenFunProperty, SymbolicSeriesSpecializes) {
    Gen gen;
    const auto G = series_G(RationalFunction::variable(), 8);
    for (int i = 0; i < kIterations / 10; ++i) {
        const Rational lambda = gen.lambda();
        const auto g = series_G(lambda, 8);
        for (long n = 0; n <= 8; ++n) EXPECT_EQ(G.coeff(n).evaluate(lambda), g.coeff(n));
    }
}

TEST(GenFunProperty, LeibnitzSeriesCoefficients) {
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const Rational x = gen.rational();
        const auto s = leibnitz_series(x, 10);
        for (long m = 0; m <= 10; ++m) EXPECT_EQ(s.coeff(m), leibnitz_polynomial(m).evaluate(x));
    }
}

TEST(GenFunProperty, FibonacciTypeFormulaMatchesSeries) {
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const long k = gen.integer(0, 3), m = gen.integer(0, 3), l = gen.integer(0, 3);
        if (m == 0 && l == 0) continue;
        const long n = gen.integer(0, 10);
        EXPECT_EQ(fibtype_poly(n, k, m, l), fibtype_poly_series(n, k, m, l)) << n << " " << k << " " << m << " " << l;
    }
}
