#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "finsum/polynomial.hpp"
#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"

namespace finsum::testing {

/// Number of random cases per property.
constexpr int kIterations = 200;

/// Seeded generator of random exact values.
class Gen {
public:
    explicit Gen(std::uint64_t seed = 20240601) : engine_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long bound = 50) {
        return Rational(integer(-bound, bound), integer(1, bound));
    }

    Rational nonzero_rational(long bound = 50) {
        for (;;) {
            Rational q = rational(bound);
            if (!q.is_zero()) return q;
        }
    }

    /// A rational outside {0, 1}.
    Rational lambda(long bound = 12) {
        for (;;) {
            Rational q = rational(bound);
            if (!q.is_zero() && q != Rational(1)) return q;
        }
    }

    /// A rational with |q| < 1, allowing zero.
    Rational small(long bound = 12) {
        const long den = integer(2, bound);
        return Rational(integer(-(den - 1), den - 1), den);
    }

    Polynomial polynomial(long max_degree, long bound = 9) {
        std::vector<Rational> c;
        const long degree = integer(0, max_degree);
        for (long k = 0; k <= degree; ++k) c.push_back(rational(bound));
        return Polynomial(c);
    }

    Polynomial nonzero_polynomial(long max_degree, long bound = 9) {
        for (;;) {
            Polynomial p = polynomial(max_degree, bound);
            if (!p.is_zero()) return p;
        }
    }

    RationalFunction rational_function(long max_degree) {
        return RationalFunction(polynomial(max_degree), nonzero_polynomial(max_degree));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace finsum::testing
