#pragma once

#include <string>
#include <vector>

#include "finsum/laurent_series.hpp"
#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"

namespace finsum {

/// zeta_d(-m, x) = (-1)^d m! B^{(d)}_{m+d}(x) / (d+m)!.
Rational multi_hurwitz_neg(long d, long m, const Rational& x);
/// zeta_E^{(d)}(-m, x), defined as E^{(d)}_m(x).
Rational multi_eta_neg(long d, long m, const Rational& x);
/// Phi(lambda, 1-n, b) = -B_n(b; lambda)/n. Throws std::domain_error for lambda = 1.
Rational lerch_neg(const Rational& lambda, long n, const Rational& b);

enum class ExpSign { plus, minus };

/// Laurent expansion in t of y(n, sign * e^{-scale t}) through t^T.
LaurentSeries<Rational> y_exp_laurent(long n, ExpSign sign, long scale, long T);

/// One exact comparison inside a check.
struct Comparison {
    std::string label;
    Rational lhs;
    Rational rhs;
    bool bound = false;  // lhs <= rhs instead of lhs == rhs
    bool holds() const { return bound ? lhs <= rhs : lhs == rhs; }
};

struct CheckResult {
    bool passed = true;
    std::vector<Comparison> comparisons;

    void add(std::string label, const Rational& lhs, const Rational& rhs);
    void add_bound(std::string label, const Rational& lhs, const Rational& rhs);
};

enum class Section6Identity {
    ah5z_series,
    multinomial_1AAe,
    aHh,
    aH3a1,
    mixed_BE_printed,
    mixed_BE_corrected,
    zetaE_n0_printed,
    zetaE_n0_corrected,
};

/// Exact check of one section-six decomposition at (m, n). For the printed
/// variants a failed comparison is the expected outcome.
CheckResult check_section6(Section6Identity identity, long m, long n);

/// Compositions-based value of sum_l C(m,l) x^{m-l} l! sum E_{l1}...E_{ld}/(l1!...ld!).
Rational euler_high_multinomial(long d, long m, const Rational& x);

/// sum_{v>=0} v^m lambda^v as a rational function of lambda.
RationalFunction power_lambda_series_closed(long m);

/// Theorem-three style sum sum_n (n+1)! lambda^{n+1} y(n,lambda) S2(M, n+1).
Rational apostol_from_y(long M, const Rational& lambda);
RationalFunction apostol_from_y(long M);

/// Polynomial instance h(v) = v^m of the entire-function series formula at a
/// rational |lambda| < 1, plus an exact tail bound on the partial sum up to
/// `terms`.
CheckResult boyadzhiev_poly_check(long m, const Rational& lambda, long terms = 60);

struct CosSeriesResult {
    long M = 0;
    double corrected_partial = 0;  // sum over m <= M of (-1)^m B_{2m-1}(lambda)/(2m-1)! via y
    double printed_partial = 0;    // the same double series with factor (-1)^{m+1}/2
    double closed_form = 0;        // (1 - lambda cos 1)/(1 - 2 lambda cos 1 + lambda^2)
    double fibonacci_partial = 0;  // 1 + sum_{n<=2M} (G_n - G_{n-1} cos 1) lambda^n
    double direct_partial = 0;     // sum_{v<=200} lambda^v cos v
};

/// Floating-point evaluation of the cosine instance truncated at M.
/// Throws std::invalid_argument unless |lambda| <= 0.3 and 1 <= M <= 60.
CosSeriesResult cos_series_partial(double lambda, long M);

struct CosCalibration {
    long M = 0;
    double error = 0;                // |corrected_partial - closed_form| at M
    std::vector<double> errors;      // error for M = 1..max_M
};

/// Picks the M with the smallest error on the plateau of the corrected series.
CosCalibration calibrate_cos_series(double lambda, long max_M = 30);

}  // namespace finsum
