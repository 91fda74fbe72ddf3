#include "finsum/rational_function.hpp"

#include <stdexcept>

namespace finsum {

namespace {

void accumulate_denominator_lcm(const Polynomial& p, mpz_class& den_lcm) {
    for (const auto& c : p.coefficients()) {
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
}

void accumulate_numerator_gcd(const Polynomial& p, mpz_class& content) {
    for (const auto& c : p.coefficients()) {
        mpz_class n = c.numerator();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    canonicalize();
}

RationalFunction RationalFunction::variable() {
    return RationalFunction(Raw{}, Polynomial::variable(), Polynomial(Rational(1)));
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        const Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide(num_, g).quotient;
            den_ = divide(den_, g).quotient;
        }
    }
    // Scale both parts to coprime integer coefficients.
    mpz_class den_lcm = 1;
    accumulate_denominator_lcm(num_, den_lcm);
    accumulate_denominator_lcm(den_, den_lcm);
    const Rational scale(den_lcm);
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
    mpz_class content = 0;
    accumulate_numerator_gcd(num_, content);
    accumulate_numerator_gcd(den_, content);
    if (den_.leading().sign() < 0) content = -content;
    if (content != 1) {
        const Rational inv(mpz_class(1), content);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RationalFunction::evaluate(const Rational& x) const {
    const Rational d = den_.evaluate(x);
    if (d.is_zero()) {
        throw std::domain_error("rational function evaluated at a pole: " + x.to_string());
    }
    return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::to_string(std::string_view var) const {
    if (is_polynomial()) {
        return finsum::to_string(num_.scaled(inverse(den_.leading())), var);
    }
    return "(" + finsum::to_string(num_, var) + ")/(" + finsum::to_string(den_, var) + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        *this = RationalFunction(num_ + o.num_, den_);
    } else {
        *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= inverse(o); }

RationalFunction operator-(const RationalFunction& a) {
    return RationalFunction(RationalFunction::Raw{}, -a.num_, a.den_);
}

RationalFunction inverse(const RationalFunction& f) {
    if (f.is_zero()) {
        throw std::domain_error("inverse of the zero rational function");
    }
    return RationalFunction(f.denominator(), f.numerator());
}

RationalFunction pow(const RationalFunction& base, long exponent) {
    if (exponent < 0) return pow(inverse(base), -exponent);
    RationalFunction result(1);
    RationalFunction b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

}  // namespace finsum
