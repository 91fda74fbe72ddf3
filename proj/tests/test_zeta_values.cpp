#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "finsum/special_numbers.hpp"
#include "finsum/zeta_values.hpp"
#include "test_support.hpp"

using namespace finsum;
using finsum::testing::Gen;
using finsum::testing::kIterations;

namespace {

constexpr Section6Identity kCorrected[] = {Section6Identity::ah5z_series, Section6Identity::multinomial_1AAe,
                                           Section6Identity::aHh,         Section6Identity::aH3a1,
                                           Section6Identity::mixed_BE_corrected, Section6Identity::zetaE_n0_corrected};

}  // namespace

// Oracles

TEST(ZetaValues, HurwitzAtNegativeIntegers) {
    EXPECT_EQ(multi_hurwitz_neg(1, 0, Rational(1)), Rational(-1, 2));
    EXPECT_EQ(multi_hurwitz_neg(1, 1, Rational(1)), Rational(-1, 12));
    EXPECT_EQ(multi_hurwitz_neg(1, 3, Rational(1)), Rational(1, 120));
    EXPECT_EQ(multi_eta_neg(1, 1, Rational(0)), Rational(-1, 2));
    EXPECT_EQ(multi_eta_neg(1, 0, Rational(3)), Rational(1));
}

TEST(ZetaValues, LerchAtNegativeIntegers) {
    EXPECT_EQ(lerch_neg(Rational(2), 1, Rational(1)), Rational(-1));
    EXPECT_EQ(lerch_neg(Rational(1, 2), 1, Rational(1)), Rational(2));
    EXPECT_THROW(lerch_neg(Rational(1), 2, Rational(1)), std::domain_error);
}

TEST(ZetaValues, PowerLambdaSeries) {
    const RationalFunction L = RationalFunction::variable();
    const RationalFunction one(1);
    EXPECT_EQ(power_lambda_series_closed(0), one / (one - L));
    EXPECT_EQ(power_lambda_series_closed(1), L / pow(one - L, 2));
}

TEST(ZetaValues, PrintedSection6FormsFailAtOrigin) {
    EXPECT_FALSE(check_section6(Section6Identity::zetaE_n0_printed, 0, 0).passed);
    EXPECT_FALSE(check_section6(Section6Identity::mixed_BE_printed, 0, 0).passed);
    EXPECT_TRUE(check_section6(Section6Identity::zetaE_n0_corrected, 0, 0).passed);
    EXPECT_TRUE(check_section6(Section6Identity::mixed_BE_corrected, 0, 0).passed);
}

TEST(ZetaValues, CosineCalibration) {
    const CosCalibration cal = calibrate_cos_series(0.1);
    EXPECT_GE(cal.M, 1);
    EXPECT_LT(cal.error, 1e-6);
    const CosSeriesResult r = cos_series_partial(0.1, cal.M);
    EXPECT_NEAR(r.corrected_partial, r.closed_form, 1e-6);
    EXPECT_NEAR(r.printed_partial, -0.5 * r.corrected_partial, 1e-12);
    EXPECT_NEAR(r.direct_partial, r.closed_form, 1e-12);
    EXPECT_NEAR(r.fibonacci_partial, r.closed_form, 1e-12);
}

TEST(ZetaValues, CosineAtZeroLambda) {
    const CosSeriesResult r = cos_series_partial(0.0, 5);
    EXPECT_DOUBLE_EQ(r.closed_form, 1.0);
    EXPECT_NEAR(r.corrected_partial, 1.0, 1e-12);
}

TEST(ZetaValues, CosineDomain) {
    EXPECT_THROW(cos_series_partial(0.5, 10), std::invalid_argument);
    EXPECT_THROW(cos_series_partial(0.1, 0), std::invalid_argument);
    EXPECT_THROW(cos_series_partial(0.1, 61), std::invalid_argument);
}

// Properties

TEST(ZetaValuesProperty, CorrectedSection6FormsHold) {
    for (const Section6Identity id : kCorrected) {
        for (long n = 0; n <= 3; ++n) {
            for (long m = 0; m <= 4; ++m) EXPECT_TRUE(check_section6(id, m, n).passed) << static_cast<int>(id) << " " << m << " " << n;
        }
    }
}

TEST(ZetaValuesProperty, HurwitzShiftRelation) {
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const long m = gen.integer(0, 8);
        const Rational x = gen.rational(9);
        EXPECT_EQ(multi_hurwitz_neg(1, m, x) - multi_hurwitz_neg(1, m, x + Rational(1)), pow(x, m));
    }
}

TEST(ZetaValuesProperty, LerchMatchesPowerSeries) {
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const Rational lambda = gen.small();
        if (lambda.is_zero()) continue;
        const long n = gen.integer(1, 6);
        const Rational b = gen.rational(6);
        Rational direct;
        for (long k = 0; k <= n - 1; ++k) {
            direct += Rational(binomial(n - 1, k)) * pow(b, n - 1 - k) * power_lambda_series_closed(k).evaluate(lambda);
        }
        EXPECT_EQ(lerch_neg(lambda, n, b), direct);
    }
}

TEST(ZetaValuesProperty, PowerSeriesFromY) {
    for (long k = 0; k <= 8; ++k) {
        EXPECT_TRUE((power_lambda_series_closed(k) + apostol_from_y(k + 1) / RationalFunction(k + 1)).is_zero()) << k;
    }
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const long M = gen.integer(0, 10);
        const Rational lambda = gen.lambda();
        EXPECT_EQ(apostol_from_y(M, lambda), apostol_bernoulli(M).evaluate(lambda));
    }
}

TEST(ZetaValuesProperty, BoyadzhievPolynomialInstances) {
    Gen gen;
    for (int i = 0; i < kIterations / 10; ++i) {
        const long m = gen.integer(0, 5);
        const Rational lambda = gen.small();
        EXPECT_TRUE(boyadzhiev_poly_check(m, lambda).passed) << "m=" << m << " lambda=" << lambda;
    }
}

TEST(ZetaValuesProperty, ExpLaurentPoleOrder) {
    for (long n = 0; n <= 5; ++n) {
        EXPECT_EQ(y_exp_laurent(n, ExpSign::plus, 1, 3).valuation(), -(n + 1)) << n;
    }
}
