#include "finsum/genfun.hpp"

#include <stdexcept>
#include <vector>

#include "finsum/special_numbers.hpp"
#include "finsum/y_numbers.hpp"

namespace finsum {

namespace {

void check_lambda(const Rational& lambda) { require_admissible_lambda(lambda); }
void check_lambda(const RationalFunction&) {}

template <class C>
LaurentSeries<C> z_times_z_minus_1() {
    return LaurentSeries<C>(1, {C(Rational(-1)), C(Rational(1))});
}

// ln(1 + s z) through z^T.
template <class C>
LaurentSeries<C> log_linear(const C& s, long T) {
    return series_log_one_plus(LaurentSeries<C>::monomial(s, 1), T);
}

template <class C>
LaurentSeries<C> g_impl(const C& lambda, long T) {
    check_lambda(lambda);
    const C w = (lambda - C(Rational(1))) / lambda;
    return divide(log_linear(-w, T + 1), z_times_z_minus_1<C>());
}

template <class C>
LaurentSeries<C> hyper_impl(const Rational& a, const Rational& b, const Rational& c, const C& scale, long T) {
    if (c.is_integer() && c.sign() <= 0) {
        throw std::invalid_argument("2F1: lower parameter must not be a nonpositive integer");
    }
    std::vector<C> v;
    Rational ratio(1);  // (a)_m (b)_m / ((c)_m m!)
    C power(Rational(1));
    for (long m = 0; m <= T; ++m) {
        if (m > 0) {
            ratio *= (a + Rational(m - 1)) * (b + Rational(m - 1)) / ((c + Rational(m - 1)) * Rational(m));
            power = power * scale;
        }
        v.push_back(C(ratio) * power);
    }
    return LaurentSeries<C>(0, std::move(v), T);
}

template <class C>
LaurentSeries<C> g_hyper_impl(const C& lambda, long T, bool printed) {
    check_lambda(lambda);
    const C one(Rational(1));
    const C scale = (one - lambda) / lambda;
    // 1/(z-1) = -(1 + z + z^2 + ...)
    const auto inv_z_minus_1 = -series_geometric<C>(T);
    if (printed) {
        const auto f = hyper_impl<C>(Rational(1), Rational(1), Rational(2), scale, T);
        return (inv_z_minus_1.shifted(1).scaled(scale) * f).truncated(T);
    }
    const auto f = hyper_impl<C>(Rational(1), Rational(1), Rational(2), -scale, T);
    return (inv_z_minus_1.scaled(scale) * f).truncated(T);
}

template <class C>
LaurentSeries<C> leibnitz_impl(const C& x, long T) {
    const C one(Rational(1));
    const auto num = log_linear(-one, T + 2) + log_linear(-x, T + 2);
    // (1-u)(1-xu) - 1 = -(1+x) u + x u^2
    const LaurentSeries<C> den(1, {-(one + x), x});
    return divide(num, den).truncated(T);
}

template <class C>
LaurentSeries<C> log_product_impl(const C& lambda, long T) {
    check_lambda(lambda);
    const C w = (lambda - C(Rational(1))) / lambda;
    const auto prod = log_linear(-w, T + 1) * log_linear(w, T + 1);
    return divide(prod, z_times_z_minus_1<C>()).truncated(T);
}

}  // namespace

LaurentSeries<Rational> series_G(const Rational& lambda, long T) { return g_impl(lambda, T); }
LaurentSeries<RationalFunction> series_G(const RationalFunction& lambda, long T) { return g_impl(lambda, T); }

LaurentSeries<Rational> series_g_special(SpecialG which, long T) {
    switch (which) {
        case SpecialG::g1: return series_G(Rational(-1), T);
        case SpecialG::g2: return series_G(Rational(2), T);
        case SpecialG::g3: return series_G(Rational(1, 2), T);
    }
    throw std::invalid_argument("unknown special generating function");
}

LaurentSeries<Rational> hyper2f1_series(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& scale, long T) {
    return hyper_impl<Rational>(a, b, c, scale, T);
}

LaurentSeries<RationalFunction> hyper2f1_series(const Rational& a, const Rational& b, const Rational& c,
                                                const RationalFunction& scale, long T) {
    return hyper_impl<RationalFunction>(a, b, c, scale, T);
}

LaurentSeries<Rational> series_G_hypergeometric(const Rational& lambda, long T) {
    return g_hyper_impl(lambda, T, false);
}
LaurentSeries<RationalFunction> series_G_hypergeometric(const RationalFunction& lambda, long T) {
    return g_hyper_impl(lambda, T, false);
}
LaurentSeries<Rational> series_G_hypergeometric_printed(const Rational& lambda, long T) {
    return g_hyper_impl(lambda, T, true);
}

LaurentSeries<Rational> leibnitz_series(const Rational& x, long T) { return leibnitz_impl(x, T); }
LaurentSeries<RationalFunction> leibnitz_series(const RationalFunction& x, long T) { return leibnitz_impl(x, T); }

Polynomial leibnitz_polynomial(long m) {
    std::vector<Rational> c;
    for (long l = 0; l <= m; ++l) c.push_back(leibnitz(m, l));
    return Polynomial(std::move(c));
}

BivariatePolynomial fibtype_poly(long n, long k, long m, long l) {
    if (m + l < 1) throw std::invalid_argument("fibtype_poly: m + l must be positive");
    if (n < 0 || k < 0 || m < 0 || l < 0) throw std::invalid_argument("fibtype_poly: negative parameter");
    BivariatePolynomial total;
    for (long c = 0; c <= n / (m + l); ++c) {
        const Rational coeff(binomial(n - c * (m + l - 1), c));
        const long x_power = n * k - m * c * k - l * c * k;
        total += BivariatePolynomial::monomial(Polynomial::monomial(coeff, static_cast<std::size_t>(x_power)),
                                               static_cast<std::size_t>(m * c));
    }
    return total;
}

BivariatePolynomial fibtype_poly_series(long n, long k, long m, long l) {
    if (m + l < 1) throw std::invalid_argument("fibtype_poly: m + l must be positive");
    using S = LaurentSeries<BivariatePolynomial>;
    const BivariatePolynomial xk(Polynomial::monomial(Rational(1), static_cast<std::size_t>(k)));
    const BivariatePolynomial ym = BivariatePolynomial::monomial(Polynomial(Rational(1)), static_cast<std::size_t>(m));
    const S den = S::constant(BivariatePolynomial(1)) - S::monomial(xk, 1) - S::monomial(ym, m + l);
    return divide(S::constant(BivariatePolynomial(1)), den, n).coeff(n);
}

LaurentSeries<Rational> log_product_series(const Rational& lambda, long T) { return log_product_impl(lambda, T); }
LaurentSeries<RationalFunction> log_product_series(const RationalFunction& lambda, long T) {
    return log_product_impl(lambda, T);
}

}  // namespace finsum
