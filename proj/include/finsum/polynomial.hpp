#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finsum/rational.hpp"

namespace finsum {

/// Minimal ring interface shared by every coefficient domain (Rational,
/// RationalFunction, and polynomials over either).
template <class C>
concept Coefficient = requires(const C& a, const C& b, const Rational& q) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    C(q);
    { is_zero(a) } -> std::convertible_to<bool>;
};

namespace detail {

// Unqualified call so coefficient types declared later are found by ADL.
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}

}  // namespace detail

/// Dense univariate polynomial; coefficients_[k] multiplies x^k. Trailing
/// zeros are trimmed so the zero polynomial has no coefficients.
template <class C>
class Poly {
public:
    using coefficient_type = C;

    Poly() = default;
    explicit Poly(std::vector<C> coefficients) : coefficients_(std::move(coefficients)) { trim(); }
    Poly(const C& constant) : coefficients_{constant} { trim(); }  // NOLINT(google-explicit-constructor)
    Poly(const Rational& constant) requires(!std::same_as<C, Rational>)  // NOLINT(google-explicit-constructor)
        : coefficients_{C(constant)} { trim(); }
    Poly(long constant) : Poly(C(Rational(constant))) {}  // NOLINT(google-explicit-constructor)
    Poly(int constant) : Poly(C(Rational(constant))) {}   // NOLINT(google-explicit-constructor)

    static Poly variable() { return monomial(C(Rational(1)), 1); }
    static Poly monomial(const C& c, std::size_t k) {
        std::vector<C> v(k + 1, C(Rational(0)));
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coefficients_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
    const std::vector<C>& coefficients() const { return coefficients_; }
    C coefficient(std::size_t k) const { return k < coefficients_.size() ? coefficients_[k] : C(Rational(0)); }
    C leading() const { return is_zero() ? C(Rational(0)) : coefficients_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size(), C(Rational(0)));
        for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] = coefficients_[i] + o.coefficients_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size(), C(Rational(0)));
        for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] = coefficients_[i] - o.coefficients_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        std::vector<C> v;
        v.reserve(a.coefficients_.size());
        for (const auto& c : a.coefficients_) v.push_back(-c);
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> v(a.coefficients_.size() + b.coefficients_.size() - 1, C(Rational(0)));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
            if (detail::coeff_is_zero(a.coefficients_[i])) continue;
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
                v[i + j] = v[i + j] + a.coefficients_[i] * b.coefficients_[j];
            }
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coefficients_ == b.coefficients_; }

    /// Multiplies every coefficient by a scalar of the coefficient ring.
    Poly scaled(const C& s) const {
        std::vector<C> v;
        v.reserve(coefficients_.size());
        for (const auto& c : coefficients_) v.push_back(c * s);
        return Poly(std::move(v));
    }

    template <class X>
    X evaluate(const X& x) const {
        X acc = X(C(Rational(0)));
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }
    C evaluate(const C& x) const { return evaluate<C>(x); }

    Poly derivative() const {
        if (coefficients_.size() <= 1) return Poly();
        std::vector<C> v;
        for (std::size_t k = 1; k < coefficients_.size(); ++k) v.push_back(coefficients_[k] * C(Rational(static_cast<long>(k))));
        return Poly(std::move(v));
    }

    /// Antiderivative with zero constant term.
    Poly antiderivative() const {
        std::vector<C> v(coefficients_.size() + 1, C(Rational(0)));
        for (std::size_t k = 0; k < coefficients_.size(); ++k) {
            v[k + 1] = coefficients_[k] * C(Rational(1, static_cast<long>(k + 1)));
        }
        return Poly(std::move(v));
    }

    /// Substitutes `inner` for the variable.
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    template <class D, class F>
    Poly<D> map(F&& f) const {
        std::vector<D> v;
        v.reserve(coefficients_.size());
        for (const auto& c : coefficients_) v.push_back(f(c));
        return Poly<D>(std::move(v));
    }

private:
    void trim() {
        while (!coefficients_.empty() && detail::coeff_is_zero(coefficients_.back())) coefficients_.pop_back();
    }

    std::vector<C> coefficients_;
};

template <class C>
bool is_zero(const Poly<C>& p) { return p.is_zero(); }

/// Only constant polynomials with an invertible constant are units.
template <class C>
Poly<C> inverse(const Poly<C>& p) {
    if (p.degree() != 0) {
        throw std::domain_error("polynomial is not a unit");
    }
    return Poly<C>(inverse(p.coefficient(0)));
}

using Polynomial = Poly<Rational>;

/// Ascending text form "c0 + c1*L + c2*L^2"; zero coefficients are omitted and
/// negative coefficients render as " - |c|*L^k".
std::string to_string(const Polynomial& p, std::string_view var = "L");

/// Parses the ascending text form produced by to_string(Polynomial).
Polynomial parse_polynomial(std::string_view text, std::string_view var = "L");

template <class C>
std::string to_string(const Poly<C>& p, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const C& c = p.coefficients()[k];
        if (is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (k >= 1) out += "*" + std::string(var);
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

PolynomialDivision divide(const Polynomial& a, const Polynomial& b);
Polynomial monic(const Polynomial& p);
/// Monic gcd over the rationals (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Exact integral over [lo, hi].
Rational integrate(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace finsum
