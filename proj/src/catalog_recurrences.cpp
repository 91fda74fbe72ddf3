#include <type_traits>

#include "catalog_support.hpp"

namespace finsum::detail {

namespace {

template <class F>
using field_t = std::decay_t<F>;

// Right side of the first derivative equation with the sign (-1)^{n + shift}.
RationalFunction ode_sum(long n, long shift) {
    const RationalFunction L = RationalFunction::variable();
    RationalFunction sum;
    for (long k = 0; k <= n; ++k) sum += pow(L - RationalFunction(1), k - n - 1) / pow(L, k + 2);
    return RationalFunction(sign(n + shift)) * sum;
}

void compare_at_samples(const Sweep& s, Recorder& r, long n, const RationalFunction& lhs, const RationalFunction& rhs) {
    r.equal(at("n", n, lhs), lhs, rhs);
    for (const auto& lambda : s.lambdas) {
        if (lambda == 0 || lambda == 1) continue;
        r.equal(at("n", n, lambda), lhs.evaluate(lambda), rhs.evaluate(lambda));
    }
}

void add_derivative_equations(std::vector<IdentityRecord>& out) {
    const RationalFunction one(1);
    out.push_back(printed_fails(
        "ode-ynldefQED", "recurrence",
        "Eq. (ynldefQED): \"(lambda-1) d/dlambda y(n,lambda) + (n+2) y(n,lambda) = (-1)^{n+1} sum_{k=0}^n "
        "(lambda-1)^{k-n-1}/lambda^{k+2}\"",
        [one](const Sweep& s, Recorder& r) {
            const RationalFunction L = RationalFunction::variable();
            for (long n = 0; n <= s.symbolic_max; ++n) {
                const RationalFunction y = y_symbolic_cached(n);
                const RationalFunction lhs = (L - one) * y.derivative() + RationalFunction(n + 2) * y;
                compare_at_samples(s, r, n, lhs, ode_sum(n, 0));
            }
        },
        [one](Recorder& r) {
            const RationalFunction L = RationalFunction::variable();
            const RationalFunction y = y_symbolic_cached(0);
            const RationalFunction lhs = (L - one) * y.derivative() + RationalFunction(2) * y;
            r.equal(at("n", 0, L), lhs, ode_sum(0, 1));
        },
        sweep_with(10, 10), 16));

    out.push_back(printed_fails(
        "ode-ynldefQED-2", "recurrence",
        "Second derivative equation: \"d/dlambda y(n,lambda) + ((n+2)/(lambda-1)) y(n,lambda) = ((-1)^n/lambda)"
        "(1 - (lambda/(lambda-1))^{n+1})\"",
        [one](const Sweep& s, Recorder& r) {
            const RationalFunction L = RationalFunction::variable();
            for (long n = 0; n <= s.symbolic_max; ++n) {
                const RationalFunction y = y_symbolic_cached(n);
                const RationalFunction lhs = y.derivative() + RationalFunction(n + 2) * y / (L - one);
                const RationalFunction rhs = RationalFunction(sign(n)) / (L * pow(L - one, n + 2)) *
                                             (one - pow((L - one) / L, n + 1));
                compare_at_samples(s, r, n, lhs, rhs);
            }
        },
        [one](Recorder& r) {
            const RationalFunction L = RationalFunction::variable();
            const RationalFunction y = y_symbolic_cached(0);
            const RationalFunction lhs = y.derivative() + RationalFunction(2) * y / (L - one);
            const RationalFunction rhs = one / L * (one - L / (L - one));
            r.equal(at("n", 0, L), lhs, rhs);
        },
        sweep_with(10, 10), 16));
}

void add_recurrences(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "rec-1aGa", "recurrence",
        "Eq. (1aGa): \"y(n-1,lambda) + (lambda-1) y(n,lambda) = (-1)^n/((n+1) lambda^{n+1})\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 1, [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const F lhs = y_of(n - 1, lambda) + (lambda - F(1)) * y_of(n, lambda);
                r.equal(at("n", n, lambda), lhs, F(sign(n) / Rational(n + 1)) / pow(lambda, n + 1));
            });
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "rec-bernoulli-stirling", "recurrence",
        "Theorem: \"y(n-1,lambda) + (lambda-1) y(n,lambda) = (1/(lambda^{n+1} n!)) sum_{j=0}^n B_j S_1(n,j)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 1, [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                Rational sum;
                for (long j = 0; j <= n; ++j) sum += bernoulli(j) * stirling1(n, j);
                const F lhs = y_of(n - 1, lambda) + (lambda - F(1)) * y_of(n, lambda);
                r.equal(at("n", n, lambda), lhs, F(sum / fact(n)) / pow(lambda, n + 1));
            });
        },
        sweep_with(30), 60));

    out.push_back(printed_ok(
        "rec-A1l2", "recurrence", "Eq. (A1l2): \"y(n-1,2) + y(n,2) = (-1)^n/((n+1) 2^{n+1})\"",
        [](const Sweep& s, Recorder& r) {
            const Rational two(2);
            for (long n = 1; n <= s.max_n; ++n) {
                r.equal(at("n", n), y_direct(n - 1, two) + y_direct(n, two),
                        sign(n) / (Rational(n + 1) * pow(two, n + 1)));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "euler-stirling", "recurrence", "Identity: \"(-1)^n n!/2^n = sum_{j=0}^n E_j S_1(n,j)\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                Rational sum;
                for (long j = 0; j <= n; ++j) sum += euler_at_zero(j) * stirling1(n, j);
                r.equal(at("n", n), sum, sign(n) * fact(n) / pow(Rational(2), n));
            }
        },
        sweep_with(30), 60));

    out.push_back(printed_ok(
        "rec-euler-lambda2", "recurrence",
        "Corollary: \"y(n-1,2) + y(n,2) = (1/2) sum_{j=0}^n E_j S_1(n,j)/(n+1)!\"",
        [](const Sweep& s, Recorder& r) {
            const Rational two(2);
            for (long n = 1; n <= s.max_n; ++n) {
                Rational sum;
                for (long j = 0; j <= n; ++j) sum += euler_at_zero(j) * stirling1(n, j);
                r.equal(at("n", n), y_direct(n - 1, two) + y_direct(n, two), sum / (2 * fact(n + 1)));
            }
        },
        sweep_with(30), 60));

    out.push_back(printed_ok(
        "rec-1aGd4a", "recurrence", "Eq. (1aGd4a): \"2y(n-1,1/2) - y(n,1/2) = (-1)^n 2^{n+2}/(n+1)\"",
        [](const Sweep& s, Recorder& r) {
            const Rational half(1, 2);
            for (long n = 1; n <= s.max_n; ++n) {
                r.equal(at("n", n), 2 * y_direct(n - 1, half) - y_direct(n, half),
                        sign(n) * pow(Rational(2), n + 2) / Rational(n + 1));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "rec-1aGd1a", "recurrence", "Eq. (1aGd1a): \"y(n-1,-1) - 2y(n,-1) = -1/(n+1)\"",
        [](const Sweep& s, Recorder& r) {
            const Rational neg(-1);
            for (long n = 1; n <= s.max_n; ++n) {
                r.equal(at("n", n), y_direct(n - 1, neg) - 2 * y_direct(n, neg), Rational(-1, n + 1));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "neg1-inverse-binomial", "recurrence",
        "Known formula: \"y(n,-1) = (1/(2(n+1))) sum_{j=0}^n 1/C(n,j)\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                Rational sum;
                for (long j = 0; j <= n; ++j) sum += inverse(binom(n, j));
                r.equal(at("n", n), y_direct(n, Rational(-1)), sum / Rational(2 * (n + 1)));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "inv-binom-1aGf1", "recurrence",
        "Eq. (1aGf1): \"sum_{j=0}^{n-1} 1/C(n-1,j) = (2n/(n+1)) sum_{j=0}^{n-1} 1/C(n,j)\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 1; n <= s.max_n; ++n) {
                Rational lhs;
                Rational rhs;
                for (long j = 0; j <= n - 1; ++j) {
                    lhs += inverse(binom(n - 1, j));
                    rhs += inverse(binom(n, j));
                }
                r.equal(at("n", n), lhs, Rational(2 * n, n + 1) * rhs);
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "rec-neg1-scaled", "recurrence", "Corollary: \"2(n+1) y(n-1,-1) - 4(n+1) y(n,-1) = -2\"",
        [](const Sweep& s, Recorder& r) {
            const Rational neg(-1);
            for (long n = 1; n <= s.max_n; ++n) {
                r.equal(at("n", n), Rational(2 * (n + 1)) * y_direct(n - 1, neg) - Rational(4 * (n + 1)) * y_direct(n, neg),
                        Rational(-2));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "leibnitz-x0", "recurrence", "Known identity: \"L_n(0) = l(n,0) = 1/(n+1)\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                const Rational expected(1, n + 1);
                r.equal(at("n", n), leibnitz_polynomial(n).evaluate(Rational(0)), expected);
                r.equal(at("n", n) + " l(n,0)", leibnitz(n, 0), expected);
            }
        },
        sweep_with(40), 200));
}

}  // namespace

void add_recurrence_records(std::vector<IdentityRecord>& out) {
    add_derivative_equations(out);
    add_recurrences(out);
}

}  // namespace finsum::detail
