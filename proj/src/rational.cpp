#include "finsum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace finsum {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    } else if (body.size() >= 3 && body.substr(0, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
        negative = true;
        body.remove_prefix(3);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_text), 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
        throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        return pow(inverse(base), -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational inverse(const Rational& q) {
    if (q.is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(q.denominator(), q.numerator());
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(long n, long k) {
    // C(m, m) = 1 for every integer m, including negative m.
    if (n == k) return 1;
    if (k < 0) return 0;
    mpz_class r;
    mpz_class top(n);
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

mpz_class lcm_upto(unsigned long n) {
    mpz_class r = 1;
    for (unsigned long k = 2; k <= n; ++k) {
        mpz_class kk(k);
        mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), kk.get_mpz_t());
    }
    return r;
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

long padic_valuation(const mpz_class& n, unsigned long p) {
    if (n == 0) {
        throw std::domain_error("valuation of zero integer");
    }
    mpz_class prime(p);
    mpz_class rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation padic_valuation(const Rational& q, unsigned long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("padic_valuation: " + std::to_string(p) + " is not prime");
    }
    if (q.is_zero()) {
        return Valuation::infinity();
    }
    return Valuation::of(padic_valuation(q.numerator(), p) - padic_valuation(q.denominator(), p));
}

}  // namespace finsum
