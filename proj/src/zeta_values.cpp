#include "finsum/zeta_values.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "finsum/genfun.hpp"
#include "finsum/special_numbers.hpp"
#include "finsum/y_numbers.hpp"

namespace finsum {

namespace {

using Series = LaurentSeries<Rational>;

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }
Rational sign(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

void check_order(long d, long m, const char* what) {
    if (d < 1) throw std::invalid_argument(std::string(what) + ": order must be positive");
    if (m < 0) throw std::invalid_argument(std::string(what) + ": degree must be nonnegative");
}

Rational bernoulli_high(long d, long k, const Rational& x) {
    return high_order_polynomial(HighOrderFamily::bernoulli_high, d, k).evaluate(x);
}

Rational euler_high(long d, long k, const Rational& x) {
    return high_order_polynomial(HighOrderFamily::euler_high, d, k).evaluate(x);
}

// sum over compositions l_1 + ... + l_parts = l of prod E_{l_i}(0)/l_i!.
Rational composition_sum(long parts, long l) {
    if (parts == 0) return l == 0 ? Rational(1) : Rational(0);
    Rational total;
    for (long first = 0; first <= l; ++first) {
        const Rational head = euler_at_zero(first) / fact(first);
        if (head.is_zero()) continue;
        total += head * composition_sum(parts - 1, l - first);
    }
    return total;
}

// m! [t^m] of y(n, sign e^{-scale t}).
Rational y_exp_coefficient(long n, ExpSign s, long scale, long m) {
    return y_exp_laurent(n, s, scale, m).coeff(m) * fact(m);
}

// lambda^{n+1} y(n, lambda) for n = 0..n_max; finite at lambda = 0.
std::vector<Rational> weighted_y(long n_max, const Rational& lambda) {
    if (lambda == Rational(1)) throw std::domain_error("lambda must not be 1");
    const Rational lm1 = lambda - Rational(1);
    std::vector<Rational> w{inverse(lm1)};
    for (long n = 1; n <= n_max; ++n) w.push_back((sign(n) / Rational(n + 1) - lambda * w.back()) / lm1);
    return w;
}

std::vector<double> weighted_y(long n_max, double lambda) {
    std::vector<double> w{1.0 / (lambda - 1.0)};
    for (long n = 1; n <= n_max; ++n) {
        const double head = (n % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(n + 1);
        w.push_back((head - lambda * w.back()) / (lambda - 1.0));
    }
    return w;
}

void check_ah5z(CheckResult& r, long m, long n) {
    Rational rhs;
    for (long j = 0; j <= n; ++j) {
        const long d = n + 1 - j;
        rhs += multi_eta_neg(d, m, Rational(n + 2)) / (Rational(j + 1) * pow(Rational(2), d));
    }
    r.add("m![t^m] y(n,-e^{-t}) = sum_j zeta_E^{(d)}(-m,n+2)/((j+1)2^d)", y_exp_coefficient(n, ExpSign::minus, 1, m),
          rhs);
}

void check_1AAe(CheckResult& r, long m, long n) {
    Rational lhs;
    Rational rhs;
    for (long j = 0; j <= n; ++j) {
        const long d = n + 1 - j;
        const Rational weight = Rational(j + 1) * pow(Rational(2), d);
        const Rational eta = multi_eta_neg(d, m, Rational(n + 2));
        const Rational expanded = euler_high_multinomial(d, m, Rational(n + 2));
        r.add("E_m^{(d)}(n+2) multinomial, j=" + std::to_string(j), eta, expanded);
        lhs += eta / weight;
        rhs += expanded / weight;
    }
    r.add("weighted sum vs multinomial expansion", lhs, rhs);
    r.add("multinomial expansion vs m![t^m] y(n,-e^{-t})", rhs, y_exp_coefficient(n, ExpSign::minus, 1, m));
}

void check_aH3a1(CheckResult& r, long m, long n) {
    Rational rhs;
    for (long j = 0; j <= n; ++j) {
        rhs += sign(n) * multi_hurwitz_neg(n + 1 - j, m, Rational(n + 2)) / Rational(j + 1);
    }
    r.add("m![t^m] y(n,e^{-t}) = sum_j (-1)^n zeta_d(-m,n+2)/(j+1)", y_exp_coefficient(n, ExpSign::plus, 1, m), rhs);
}

void check_aHh(CheckResult& r, long m, long n) {
    Rational total;
    for (long j = 0; j <= n; ++j) {
        const long d = n + 1 - j;
        const Rational term = sign(n) * multi_hurwitz_neg(d, m, Rational(n + 2)) +
                              sign(j) * bernoulli_high(d, m + d, Rational(n + 2)) /
                                  (Rational(binomial(m + d, d)) * fact(d));
        r.add("summand j=" + std::to_string(j), term, Rational(0));
        total += term / Rational(j + 1);
    }
    r.add("weighted sum", total, Rational(0));
}

void check_mixed_be(CheckResult& r, long m, long n, bool printed) {
    const Rational two(2);
    if (printed) {
        const Rational minus = y_exp_coefficient(n, ExpSign::minus, 2, m);
        Rational aheb;
        Rational ah3be;
        Rational theorem_lhs;
        Rational theorem_rhs;
        for (long j = 0; j <= n; ++j) {
            const long d = n + 1 - j;
            const Rational w = sign(j - 1) / (Rational(j + 1) * pow(two, d));
            const Rational b = bernoulli_high(d, m + d, Rational(n + 2)) / (Rational(binomial(m + d, d)) * fact(d));
            aheb += w * sign(j) * b;
            theorem_lhs += w * b;
            for (long c = 0; c <= m; ++c) {
                const Rational conv = Rational(binomial(m, c)) * bernoulli_high(d, c + d, Rational(2 * n + 4)) /
                                      (Rational(binomial(c + d, d)) * fact(d));
                ah3be += w * conv * euler_high(d, m - c, Rational(n + 2));
                theorem_rhs += w * conv * euler_high(d, m - c, Rational(0));
            }
        }
        r.add("m![t^m] y(n,-e^{-2t}) vs printed B-form", minus, aheb);
        r.add("m![t^m] y(n,-e^{-2t}) vs printed B*E form", minus, ah3be);
        r.add("printed closing theorem", theorem_lhs, theorem_rhs);
        return;
    }
    const Rational plus = y_exp_coefficient(n, ExpSign::plus, 2, m);
    const Rational minus = y_exp_coefficient(n, ExpSign::minus, 2, m);
    Rational form_a;
    Rational form_b;
    Rational form_minus;
    for (long j = 0; j <= n; ++j) {
        const long d = n + 1 - j;
        const Rational w = sign(j - 1) / Rational(j + 1);
        form_a += w * pow(two, m) * bernoulli_high(d, m + d, Rational(n + 2)) /
                  (Rational(binomial(m + d, d)) * fact(d));
        Rational conv;
        for (long k = 0; k <= m + d; ++k) {
            conv += bernoulli_high(d, k, Rational(2 * n + 4)) * euler_high(d, m + d - k, Rational(0)) /
                    (fact(k) * fact(m + d - k));
        }
        form_b += w * fact(m) * conv / pow(two, d);
        form_minus += pow(two, m) * euler_high(d, m, Rational(n + 2)) / (Rational(j + 1) * pow(two, d));
    }
    r.add("m![t^m] y(n,e^{-2t}) vs 2^m B^{(d)}_{m+d}(n+2) form", plus, form_a);
    r.add("m![t^m] y(n,e^{-2t}) vs full B(2n+4)*E(0) convolution", plus, form_b);
    r.add("m![t^m] y(n,-e^{-2t}) vs 2^m E^{(d)}_m(n+2) form", minus, form_minus);
}

void check_zeta_e_n0(CheckResult& r, long m, bool printed) {
    const Rational series = Rational(2) * y_exp_coefficient(0, ExpSign::minus, 1, m);
    const Rational euler = euler_high(1, printed ? m + 1 : m, Rational(2));
    r.add(printed ? "zeta_E(-m,2) vs E_{m+1}(2)" : "zeta_E(-m,2) vs E_m(2)", series, euler);
    r.add("zeta_E(-m,2) = E_m(2)", multi_eta_neg(1, m, Rational(2)), series);
}

}  // namespace

void CheckResult::add(std::string label, const Rational& lhs, const Rational& rhs) {
    comparisons.push_back({std::move(label), lhs, rhs});
    if (lhs != rhs) passed = false;
}

void CheckResult::add_bound(std::string label, const Rational& lhs, const Rational& rhs) {
    comparisons.push_back({std::move(label), lhs, rhs, true});
    if (lhs > rhs) passed = false;
}

Rational multi_hurwitz_neg(long d, long m, const Rational& x) {
    check_order(d, m, "multi_hurwitz_neg");
    return sign(d) * fact(m) * bernoulli_high(d, m + d, x) / fact(d + m);
}

Rational multi_eta_neg(long d, long m, const Rational& x) {
    check_order(d, m, "multi_eta_neg");
    return euler_high(d, m, x);
}

Rational lerch_neg(const Rational& lambda, long n, const Rational& b) {
    if (n < 1) throw std::invalid_argument("lerch_neg: n must be positive");
    if (lambda == Rational(1)) throw std::domain_error("lerch_neg: lambda must not be 1");
    const auto poly = apostol_bernoulli_poly(n);
    Rational value;
    Rational power(1);
    for (long k = 0; k <= poly.degree(); ++k) {
        value += poly.coefficient(static_cast<std::size_t>(k)).evaluate(lambda) * power;
        power *= b;
    }
    return -value / Rational(n);
}

Series y_exp_laurent(long n, ExpSign s, long scale, long T) {
    if (n < 0) throw std::invalid_argument("y_exp_laurent: negative index");
    if (scale < 1) throw std::invalid_argument("y_exp_laurent: scale must be positive");
    const long P = T + 2 * (n + 2) + 2;
    const Rational sigma(s == ExpSign::plus ? 1 : -1);
    const Series lambda = series_exp_of(Series::monomial(Rational(-scale), 1), P).scaled(sigma);
    const Series lm1 = lambda - Series::constant(Rational(1));
    Series total = Series::zero(T);
    Series lm1_power = Series::constant(Rational(1));
    // j runs downward so d = n + 1 - j grows by one factor per step.
    for (long j = n; j >= 0; --j) {
        lm1_power = lm1_power * lm1;
        const Rational weight = sign(n) * pow(sigma, j + 1) / Rational(j + 1);
        const Series inv_lambda = series_exp_of(Series::monomial(Rational(scale * (j + 1)), 1), P).scaled(weight);
        total = total + divide(inv_lambda, lm1_power);
    }
    if (total.precision() < T) throw std::logic_error("y_exp_laurent: insufficient working precision");
    return total.truncated(T);
}

Rational euler_high_multinomial(long d, long m, const Rational& x) {
    check_order(d, m, "euler_high_multinomial");
    Rational total;
    for (long l = 0; l <= m; ++l) {
        total += Rational(binomial(m, l)) * pow(x, m - l) * fact(l) * composition_sum(d, l);
    }
    return total;
}

CheckResult check_section6(Section6Identity identity, long m, long n) {
    if (m < 0 || n < 0) throw std::invalid_argument("check_section6: negative parameter");
    CheckResult r;
    switch (identity) {
        case Section6Identity::ah5z_series: check_ah5z(r, m, n); break;
        case Section6Identity::multinomial_1AAe: check_1AAe(r, m, n); break;
        case Section6Identity::aHh: check_aHh(r, m, n); break;
        case Section6Identity::aH3a1: check_aH3a1(r, m, n); break;
        case Section6Identity::mixed_BE_printed: check_mixed_be(r, m, n, true); break;
        case Section6Identity::mixed_BE_corrected: check_mixed_be(r, m, n, false); break;
        case Section6Identity::zetaE_n0_printed: check_zeta_e_n0(r, m, true); break;
        case Section6Identity::zetaE_n0_corrected: check_zeta_e_n0(r, m, false); break;
    }
    return r;
}

RationalFunction power_lambda_series_closed(long m) {
    if (m < 0) throw std::invalid_argument("power_lambda_series_closed: negative degree");
    const RationalFunction lambda = RationalFunction::variable();
    RationalFunction f = inverse(RationalFunction(1) - lambda);
    for (long k = 0; k < m; ++k) f = lambda * f.derivative();
    return f;
}

Rational apostol_from_y(long M, const Rational& lambda) {
    if (M < 0) throw std::invalid_argument("apostol_from_y: negative index");
    if (lambda == Rational(1)) throw std::domain_error("lambda must not be 1");
    std::vector<Rational> w;
    if (lambda.is_zero()) {
        w = weighted_y(M, lambda);
    } else {
        for (long n = 0; n <= M; ++n) w.push_back(pow(lambda, n + 1) * y_direct(n, lambda));
    }
    Rational total;
    for (long n = 0; n < M; ++n) total += fact(n + 1) * w[static_cast<std::size_t>(n)] * stirling2(M, n + 1);
    return total;
}

RationalFunction apostol_from_y(long M) {
    if (M < 0) throw std::invalid_argument("apostol_from_y: negative index");
    const RationalFunction lambda = RationalFunction::variable();
    RationalFunction total;
    for (long n = 0; n < M; ++n) {
        total += RationalFunction(fact(n + 1) * stirling2(M, n + 1)) * pow(lambda, n + 1) * y_symbolic(n);
    }
    return total;
}

CheckResult boyadzhiev_poly_check(long m, const Rational& lambda, long terms) {
    if (m < 0) throw std::invalid_argument("boyadzhiev_poly_check: negative degree");
    if (abs(lambda) >= Rational(1)) throw std::domain_error("boyadzhiev_poly_check: need |lambda| < 1");
    CheckResult r;
    const Rational closed = power_lambda_series_closed(m).evaluate(lambda);
    r.add("sum v^m lambda^v vs -B_{m+1}(lambda)/(m+1)", closed,
          -apostol_bernoulli(m + 1).evaluate(lambda) / Rational(m + 1));
    r.add("sum v^m lambda^v vs Stirling/y double sum", closed, -apostol_from_y(m + 1, lambda) / Rational(m + 1));

    // Tail after V terms is at most (V+1)^m |lambda|^{V+1} / (1 - |lambda| (1 + 1/(V+1))^m).
    const Rational a = abs(lambda);
    long V = std::max(terms, 1L);
    Rational ratio = a * pow(Rational(V + 2, V + 1), m);
    while (ratio >= Rational(1)) {
        V *= 2;
        ratio = a * pow(Rational(V + 2, V + 1), m);
    }
    Rational partial;
    Rational lp(1);
    for (long v = 0; v <= V; ++v) {
        partial += pow(Rational(v), m) * lp;
        lp *= lambda;
    }
    const Rational bound = pow(Rational(V + 1), m) * pow(a, V + 1) / (Rational(1) - ratio);
    const Rational gap = abs(closed - partial);
    r.add_bound("partial sum to v=" + std::to_string(V) + " within tail bound", gap, bound);
    return r;
}

namespace {

// Results for every truncation 1..M in one pass.
std::vector<CosSeriesResult> cos_series_prefixes(double lambda, long M) {
    if (!(std::fabs(lambda) <= 0.3)) throw std::invalid_argument("cos_series_partial: need |lambda| <= 0.3");
    if (M < 1 || M > 60) throw std::invalid_argument("cos_series_partial: need 1 <= M <= 60");
    const double c1 = std::cos(1.0);
    const double closed = (1.0 - lambda * c1) / (1.0 - 2.0 * lambda * c1 + lambda * lambda);

    double direct = 0;
    double dp = 1.0;
    for (long v = 0; v <= 200; ++v) {
        direct += dp * std::cos(static_cast<double>(v));
        dp *= lambda;
    }

    // G_n(2 cos 1, -1; 1, 1, 1) from the explicit formula.
    std::vector<double> fib;
    for (long n = 0; n <= 2 * M; ++n) {
        const auto p = fibtype_poly(n, 1, 1, 1);
        double value = 0;
        for (long yk = 0; yk <= p.degree(); ++yk) {
            const Polynomial px = p.coefficient(static_cast<std::size_t>(yk));
            for (long xk = 0; xk <= px.degree(); ++xk) {
                value += px.coefficient(static_cast<std::size_t>(xk)).to_double() *
                         std::pow(2.0 * c1, static_cast<double>(xk)) * (yk % 2 == 0 ? 1.0 : -1.0);
            }
        }
        fib.push_back(value);
    }

    const auto w = weighted_y(2 * M, lambda);
    std::vector<CosSeriesResult> out;
    double corrected = 0;
    double fsum = 1.0;
    double lp = 1.0;
    long fib_done = 0;
    for (long m = 1; m <= M; ++m) {
        const long k = 2 * m - 1;
        double inner = 0;
        for (long n = 0; n < k; ++n) {
            inner += (fact(n + 1) * stirling2(k, n + 1) / fact(k)).to_double() * w[static_cast<std::size_t>(n)];
        }
        corrected += (m % 2 == 0 ? 1.0 : -1.0) * inner;
        for (; fib_done < 2 * m; ++fib_done) {
            const long n = fib_done + 1;
            lp *= lambda;
            fsum += (fib[static_cast<std::size_t>(n)] - fib[static_cast<std::size_t>(n - 1)] * c1) * lp;
        }
        CosSeriesResult r;
        r.M = m;
        r.corrected_partial = corrected;
        r.printed_partial = -0.5 * corrected;
        r.closed_form = closed;
        r.fibonacci_partial = fsum;
        r.direct_partial = direct;
        out.push_back(r);
    }
    return out;
}

}  // namespace

CosSeriesResult cos_series_partial(double lambda, long M) { return cos_series_prefixes(lambda, M).back(); }

CosCalibration calibrate_cos_series(double lambda, long max_M) {
    CosCalibration cal;
    cal.error = std::numeric_limits<double>::infinity();
    for (const auto& res : cos_series_prefixes(lambda, max_M)) {
        const double err = std::fabs(res.corrected_partial - res.closed_form);
        cal.errors.push_back(err);
        if (err < cal.error) {
            cal.error = err;
            cal.M = res.M;
        }
    }
    return cal;
}

}  // namespace finsum
