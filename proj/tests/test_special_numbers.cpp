#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "finsum/genfun.hpp"
#include "finsum/special_numbers.hpp"
#include "test_support.hpp"

using namespace finsum;
using finsum::testing::Gen;
using finsum::testing::kIterations;

// Oracles

TEST(SpecialNumbers, BernoulliTable) {
    const std::vector<Rational> expected{1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42)};
    for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(bernoulli(static_cast<long>(n)), expected[n]) << "n=" << n;
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(SpecialNumbers, StirlingTables) {
    EXPECT_EQ(stirling1(4, 2), Rational(11));
    EXPECT_EQ(stirling1(4, 1), Rational(-6));
    EXPECT_EQ(stirling1(5, 5), Rational(1));
    EXPECT_EQ(stirling1(0, 0), Rational(1));
    EXPECT_EQ(stirling1(3, 4), Rational(0));
    EXPECT_EQ(stirling2(5, 2), Rational(15));
    EXPECT_EQ(stirling2(6, 3), Rational(90));
    EXPECT_EQ(stirling2(4, 0), Rational(0));
}

TEST(SpecialNumbers, SmallFamilies) {
    EXPECT_EQ(daehee(2), Rational(2, 3));
    EXPECT_EQ(daehee(3), Rational(-3, 2));
    EXPECT_EQ(derangement(4), Rational(9));
    EXPECT_EQ(derangement(5), Rational(44));
    EXPECT_EQ(harmonic(HarmonicKind::plain, 4), Rational(25, 12));
    EXPECT_EQ(harmonic(HarmonicKind::alternating, 2), Rational(-1, 2));
    EXPECT_EQ(harmonic(HarmonicKind::plain, 0), Rational(0));
    EXPECT_EQ(leibnitz(2, 1), Rational(1, 6));
    EXPECT_EQ(leibnitz(3, 0), Rational(1, 4));
    EXPECT_THROW(leibnitz(2, 3), std::invalid_argument);
    EXPECT_EQ(bernoulli_second_kind(1), Rational(1, 2));
    EXPECT_EQ(bernoulli_second_kind(2), Rational(-1, 6));
    EXPECT_EQ(euler_at_zero(1), Rational(-1, 2));
    EXPECT_EQ(euler_at_zero(2), Rational(0));
    EXPECT_EQ(euler_at_zero(3), Rational(1, 4));
}

TEST(SpecialNumbers, ApostolBernoulli) {
    const RationalFunction L = RationalFunction::variable();
    EXPECT_TRUE(apostol_bernoulli(0).is_zero());
    EXPECT_EQ(apostol_bernoulli(1), RationalFunction(1) / (L - RationalFunction(1)));
    EXPECT_EQ(apostol_bernoulli(2), RationalFunction(-2) * L / pow(L - RationalFunction(1), 2));
}

TEST(SpecialNumbers, HighOrderPolynomials) {
    const Polynomial b1 = high_order_polynomial(HighOrderFamily::bernoulli_high, 1, 2);
    EXPECT_EQ(b1, Polynomial({Rational(1, 6), Rational(-1), Rational(1)}));
    const Polynomial e1 = high_order_polynomial(HighOrderFamily::euler_high, 1, 1);
    EXPECT_EQ(e1, Polynomial({Rational(-1, 2), Rational(1)}));
    EXPECT_EQ(high_order_polynomial(HighOrderFamily::bernoulli_high, 2, 0), Polynomial(Rational(1)));
}

// Cross-method agreement

TEST(SpecialNumbersProperty, IndependentRoutesAgree) {
    for (long n = 0; n <= 30; ++n) {
        EXPECT_EQ(bernoulli(n), uncached::bernoulli_recurrence(n)) << "n=" << n;
        EXPECT_EQ(daehee(n), uncached::daehee_sum(n)) << "n=" << n;
        EXPECT_EQ(derangement(n), uncached::derangement_recurrence(n)) << "n=" << n;
        for (long k = 0; k <= n; ++k) {
            EXPECT_EQ(stirling1(n, k), stirling1(n, k, StirlingMethod::formula)) << n << "," << k;
            EXPECT_EQ(stirling2(n, k), uncached::stirling2_recurrence(n, k)) << n << "," << k;
        }
    }
}

TEST(SpecialNumbersProperty, LeibnitzMethodsAgree) {
    for (long m = 0; m <= 12; ++m) {
        for (long l = 0; l <= m; ++l) {
            const Rational closed = leibnitz(m, l);
            EXPECT_EQ(closed, leibnitz(m, l, LeibnitzMethod::sum));
            EXPECT_EQ(closed, leibnitz(m, l, LeibnitzMethod::bernstein));
        }
    }
}

TEST(SpecialNumbersProperty, ApostolRoutesAgree) {
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(apostol_bernoulli(n), apostol_bernoulli_series(n)) << "n=" << n;
}

TEST(SpecialNumbersProperty, StirlingInversion) {
    for (long n = 0; n <= 15; ++n) {
        for (long m = 0; m <= n; ++m) {
            Rational sum;
            for (long k = m; k <= n; ++k) sum += stirling2(n, k) * stirling1(k, m);
            EXPECT_EQ(sum, Rational(n == m ? 1 : 0)) << n << "," << m;
        }
    }
}

TEST(SpecialNumbersProperty, HarmonicDifferences) {
    Gen gen;
    for (int i = 0; i < kIterations; ++i) {
        const long n = gen.integer(1, 80);
        EXPECT_EQ(harmonic(HarmonicKind::plain, n) - harmonic(HarmonicKind::plain, n - 1), Rational(1, n));
        EXPECT_EQ(harmonic(HarmonicKind::alternating, n) - harmonic(HarmonicKind::alternating, n - 1),
                  Rational(n % 2 == 0 ? 1 : -1, n));
    }
}

TEST(SpecialNumbersProperty, LeibnitzPolynomialRowSum) {
    Gen gen;
    for (int i = 0; i < kIterations / 4; ++i) {
        const long m = gen.integer(0, 15);
        const Rational x = gen.rational();
        Rational sum;
        for (long l = 0; l <= m; ++l) sum += leibnitz(m, l) * pow(x, l);
        EXPECT_EQ(leibnitz_polynomial(m).evaluate(x), sum);
    }
}

// Concurrency

TEST(SpecialNumbersConcurrency, ParallelLookupsMatchSerialValues) {
    constexpr int kThreads = 8;
    std::vector<std::vector<Rational>> results(kThreads);
    std::vector<std::thread> threads;
    for (int t = 0; t < kThreads; ++t) {
        threads.emplace_back([t, &results] {
            for (long n = 0; n <= 60; ++n) {
                const long m = (n * (t + 3)) % 61;
                results[t].push_back(bernoulli(m) + stirling2(m, m / 2) + stirling1(m, m / 3) + derangement(m));
            }
        });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < kThreads; ++t) {
        for (long n = 0; n <= 60; ++n) {
            const long m = (n * (t + 3)) % 61;
            const Rational serial = uncached::bernoulli(m) + uncached::stirling2(m, m / 2) +
                                    uncached::stirling1(m, m / 3, StirlingMethod::recurrence) +
                                    uncached::derangement_recurrence(m);
            EXPECT_EQ(results[t][static_cast<std::size_t>(n)], serial);
        }
    }
}

TEST(SpecialNumbersConcurrency, TableGetIsConsistent) {
    NumberFamilyTable table(NumberFamily::harmonic);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&table] {
            for (long n = 1; n <= 50; ++n) {
                table.get({n, 0}, [n] { return uncached::harmonic(HarmonicKind::plain, n); });
            }
        });
    }
    for (auto& th : threads) th.join();
    EXPECT_EQ(table.size(), 50U);
    EXPECT_EQ(table.get({4, 0}, [] { return Rational(0); }), Rational(25, 12));
}
