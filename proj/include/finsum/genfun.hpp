#pragma once

#include "finsum/laurent_series.hpp"
#include "finsum/polynomial.hpp"
#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"

namespace finsum {

/// Polynomial in x and y stored as a polynomial in y whose coefficients are
/// polynomials in x.
using BivariatePolynomial = Poly<Polynomial>;

/// G(z, lambda) = ln(1 - ((lambda-1)/lambda) z) / (z(z-1)) through z^T.
LaurentSeries<Rational> series_G(const Rational& lambda, long T);
LaurentSeries<RationalFunction> series_G(const RationalFunction& lambda, long T);

enum class SpecialG { g1, g2, g3 };

/// G at lambda = -1, 2, 1/2 respectively.
LaurentSeries<Rational> series_g_special(SpecialG which, long T);

/// Gauss series 2F1(a, b; c; scale * z) through z^T. Throws
/// std::invalid_argument when c is a nonpositive integer.
LaurentSeries<Rational> hyper2f1_series(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& scale, long T);
LaurentSeries<RationalFunction> hyper2f1_series(const Rational& a, const Rational& b, const Rational& c,
                                                const RationalFunction& scale, long T);

/// ((1-lambda) / (lambda (z-1))) * 2F1(1, 1; 2; ((lambda-1)/lambda) z), which
/// equals G(z, lambda).
LaurentSeries<Rational> series_G_hypergeometric(const Rational& lambda, long T);
LaurentSeries<RationalFunction> series_G_hypergeometric(const RationalFunction& lambda, long T);
/// ((1-lambda) z / (lambda (z-1))) * 2F1(1, 1; 2; ((1-lambda)/lambda) z), the
/// variant with the extra factor z and the opposite argument sign.
LaurentSeries<Rational> series_G_hypergeometric_printed(const Rational& lambda, long T);

/// (ln(1-u) + ln(1-xu)) / ((1-u)(1-xu) - 1) through u^T; the symbolic form
/// carries x as the rational-function indeterminate.
LaurentSeries<Rational> leibnitz_series(const Rational& x, long T);
LaurentSeries<RationalFunction> leibnitz_series(const RationalFunction& x, long T);

/// Leibnitz polynomial L_m(x) = sum_l l(m, l) x^l.
Polynomial leibnitz_polynomial(long m);

/// Explicit formula for the Fibonacci-type polynomial G_n(x, y; k, m, l).
/// Throws std::invalid_argument when m = l = 0.
BivariatePolynomial fibtype_poly(long n, long k, long m, long l);
/// [t^n] 1/(1 - x^k t - y^m t^(m+l)).
BivariatePolynomial fibtype_poly_series(long n, long k, long m, long l);

/// ln(1 - wz) ln(1 + wz) / (z(z-1)) with w = (lambda-1)/lambda, through z^T.
LaurentSeries<Rational> log_product_series(const Rational& lambda, long T);
LaurentSeries<RationalFunction> log_product_series(const RationalFunction& lambda, long T);

}  // namespace finsum
