#pragma once

#include <string>
#include <string_view>

#include "finsum/polynomial.hpp"
#include "finsum/rational.hpp"

namespace finsum {

/// Quotient of univariate polynomials kept in a canonical form: numerator and
/// denominator are coprime over Q, both have integer coefficients whose
/// combined content is 1, and the denominator's leading coefficient is
/// positive. Two equal functions therefore compare structurally equal.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial(Rational(1))) {}
    RationalFunction(const Rational& constant)  // NOLINT(google-explicit-constructor)
        : RationalFunction(Polynomial(constant), Polynomial(Rational(1))) {}
    RationalFunction(long constant) : RationalFunction(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(int constant) : RationalFunction(Rational(constant)) {}   // NOLINT(google-explicit-constructor)
    explicit RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial(Rational(1))) {}
    /// Throws std::domain_error when `den` is zero.
    RationalFunction(Polynomial num, Polynomial den);

    /// The indeterminate itself.
    static RationalFunction variable();

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Throws std::domain_error at a pole.
    Rational evaluate(const Rational& x) const;
    RationalFunction derivative() const;

    std::string to_string(std::string_view var = "L") const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Raw {};
    RationalFunction(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
RationalFunction inverse(const RationalFunction& f);
RationalFunction pow(const RationalFunction& base, long exponent);
inline std::string to_string(const RationalFunction& f) { return f.to_string(); }

}  // namespace finsum
