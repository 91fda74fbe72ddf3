#include <gtest/gtest.h>

#include <stdexcept>

#include "finsum/special_numbers.hpp"
#include "finsum/volkenborn.hpp"
#include "test_support.hpp"

using namespace finsum;
using finsum::testing::Gen;
using finsum::testing::kIterations;

// Oracles

TEST(Volkenborn, Limits) {
    EXPECT_EQ(volkenborn_limit(Integrand::power, 1), Rational(-1, 2));
    EXPECT_EQ(volkenborn_limit(Integrand::power, 2), Rational(1, 6));
    EXPECT_EQ(volkenborn_limit(Integrand::falling, 2), daehee(2));
    EXPECT_EQ(volkenborn_limit(Integrand::binom, 3), Rational(-1, 4));
}

TEST(Volkenborn, LinearIntegrandValuations) {
    for (long N = 1; N <= 5; ++N) {
        const VolkenbornSample s = volkenborn_partial_sum(Integrand::power, 1, 3, N);
        EXPECT_EQ(s.partial_sum, (pow(Rational(3), N) - Rational(1)) / Rational(2));
        EXPECT_EQ(s.error_valuation, Valuation::of(N)) << "N=" << N;
    }
}

TEST(Volkenborn, ConstantIntegrandIsExact) {
    const VolkenbornSample s = volkenborn_partial_sum(Integrand::power, 0, 5, 3);
    EXPECT_EQ(s.partial_sum, Rational(1));
    EXPECT_TRUE(s.error_valuation.infinite);
    EXPECT_NE(to_json(s).find("\"inf\""), std::string::npos);
}

TEST(Volkenborn, BudgetIsEnforced) {
    EXPECT_NO_THROW(require_volkenborn_budget(2, 10));
    EXPECT_NO_THROW(require_volkenborn_budget(7, 6));
    EXPECT_THROW(require_volkenborn_budget(4, 2), std::invalid_argument);
    EXPECT_THROW(require_volkenborn_budget(2, 11), std::invalid_argument);
    EXPECT_THROW(require_volkenborn_budget(5, 7), std::invalid_argument);
    EXPECT_THROW(require_volkenborn_budget(3, 0), std::invalid_argument);
    EXPECT_THROW(volkenborn_partial_sum(Integrand::power, 1, 11, 1), std::invalid_argument);
}

TEST(Volkenborn, IntegrandNames) {
    for (const Integrand f : {Integrand::power, Integrand::falling, Integrand::binom}) {
        EXPECT_EQ(parse_integrand(to_string(f)), f);
    }
    EXPECT_THROW(parse_integrand("bogus"), std::invalid_argument);
}

TEST(Volkenborn, SeriesChecks) {
    EXPECT_TRUE(pG_series_check(Rational(2), 10));
    EXPECT_TRUE(pG_series_check(Rational(-1, 3), 10));
    EXPECT_TRUE(pG_series_check_symbolic(6));
    EXPECT_THROW(pG_series_check(Rational(1), 4), std::domain_error);
    EXPECT_THROW(pG_series_check(Rational(0), 4), std::domain_error);
    EXPECT_TRUE(mahler_recurrence_check(Rational(2), 20));
}

// Properties

TEST(VolkenbornProperty, BlockedOrderMatchesLinear) {
    Gen gen;
    for (int i = 0; i < kIterations / 10; ++i) {
        const unsigned long p = gen.coin() ? 2UL : 3UL;
        const long N = gen.integer(1, 5);
        const Integrand f = static_cast<Integrand>(gen.integer(0, 2));
        const long j = gen.integer(0, 6);
        const auto a = volkenborn_partial_sum(f, j, p, N, SumOrder::linear);
        const auto b = volkenborn_partial_sum(f, j, p, N, SumOrder::blocked);
        EXPECT_EQ(a.partial_sum, b.partial_sum);
        EXPECT_EQ(a.error_valuation, b.error_valuation);
    }
}

TEST(VolkenbornProperty, ConvergenceReportsAreClean) {
    for (const unsigned long p : {2UL, 3UL, 5UL}) {
        for (const Integrand f : {Integrand::power, Integrand::falling, Integrand::binom}) {
            for (long j = 0; j <= 5; ++j) {
                const long last = p == 5 ? 5 : 7;
                const ConvergenceReport report = convergence_report(f, j, p, 1, last);
                EXPECT_TRUE(report.ok()) << to_string(f) << " j=" << j << " p=" << p;
                EXPECT_EQ(report.samples.back().limit, volkenborn_limit(f, j));
                EXPECT_EQ(report.samples.size(), static_cast<std::size_t>(last));
            }
        }
    }
}

TEST(VolkenbornProperty, ErrorValuationIsNonDecreasing) {
    Gen gen;
    for (int i = 0; i < kIterations / 10; ++i) {
        const long j = gen.integer(1, 6);
        const auto report = convergence_report(Integrand::falling, j, 2, 1, 8);
        for (std::size_t k = 4; k < report.samples.size(); ++k) {
            EXPECT_LE(report.samples[k - 1].error_valuation, report.samples[k].error_valuation);
        }
    }
}

TEST(VolkenbornProperty, MahlerRecurrenceAtRandomLambdas) {
    Gen gen;
    for (int i = 0; i < kIterations / 10; ++i) EXPECT_TRUE(mahler_recurrence_check(gen.lambda(), 12));
}
