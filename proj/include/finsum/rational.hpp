#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace finsum {

/// Arbitrary-precision reduced fraction. Zero is 0/1 and the denominator is
/// always positive; GMP keeps the pair canonical after every operation.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses the text grammar `[-]digits[/digits]`. The denominator must be
    /// positive; the result is reduced. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    /// Reduced text form, e.g. "-5/8" or "3".
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class value_{0};
};

Rational pow(const Rational& base, long exponent);
Rational abs(const Rational& q);
inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline std::string to_string(const Rational& q) { return q.to_string(); }
Rational inverse(const Rational& q);

// Integer helpers used across the special-number generators.
mpz_class factorial(unsigned long n);
mpz_class binomial(long n, long k);
mpz_class lcm_upto(unsigned long n);
bool is_prime(unsigned long p);

/// p-adic valuation; `infinite` marks the valuation of zero.
struct Valuation {
    bool infinite = false;
    long value = 0;

    static Valuation infinity() { return {true, 0}; }
    static Valuation of(long v) { return {false, v}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) {
            return a.infinite == b.infinite ? std::strong_ordering::equal
                                            : (a.infinite ? std::strong_ordering::greater
                                                          : std::strong_ordering::less);
        }
        return a.value <=> b.value;
    }
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

/// v_p(num) - v_p(den). Rejects p that is not prime.
Valuation padic_valuation(const Rational& q, unsigned long p);
long padic_valuation(const mpz_class& n, unsigned long p);

}  // namespace finsum
