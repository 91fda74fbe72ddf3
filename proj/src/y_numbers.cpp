#include "finsum/y_numbers.hpp"

#include <stdexcept>

#include "finsum/genfun.hpp"
#include "finsum/special_numbers.hpp"

namespace finsum {

std::string to_string(YMethod method) {
    switch (method) {
        case YMethod::direct: return "direct";
        case YMethod::algorithm1: return "alg1";
        case YMethod::recurrence: return "recurrence";
        case YMethod::genfun: return "genfun";
    }
    return "unknown";
}

void require_admissible_lambda(const Rational& lambda) {
    if (lambda.is_zero() || lambda == Rational(1)) {
        throw std::domain_error("lambda must not be 0 or 1 (got " + lambda.to_string() + ")");
    }
}

namespace {

template <class T>
T sign_of(long e) {
    return T(Rational(e % 2 == 0 ? 1 : -1));
}

template <class T>
T direct_sum(long n, const T& lambda) {
    const T lm1 = lambda - T(Rational(1));
    T total(Rational(0));
    for (long j = 0; j <= n; ++j) {
        total += inverse(T(Rational(j + 1)) * pow(lambda, j + 1) * pow(lm1, n + 1 - j));
    }
    return sign_of<T>(n) * total;
}

template <class T>
T algorithm1_sum(long m, const T& lambda) {
    const T lm1 = lambda - T(Rational(1));
    T y(Rational(0));
    for (long v = 0; v <= m; ++v) {
        const T outer = sign_of<T>(v - m) * pow(lm1, v - m - 1) /
                        (pow(lambda, v + 1) * T(Rational(factorial(static_cast<unsigned long>(v)))));
        Rational inner;
        for (long n = 0; n <= v; ++n) inner += bernoulli(n) * stirling1(v, n);
        y += outer * T(inner);
    }
    return y;
}

}  // namespace

Rational y_direct(long n, const Rational& lambda) {
    require_admissible_lambda(lambda);
    return direct_sum(n, lambda);
}

RationalFunction y_direct(long n, const RationalFunction& lambda) { return direct_sum(n, lambda); }

RationalFunction y_symbolic(long n) { return y_direct(n, RationalFunction::variable()); }

Rational y_algorithm1(long m, const Rational& lambda) {
    require_admissible_lambda(lambda);
    return algorithm1_sum(m, lambda);
}

RationalFunction y_algorithm1(long m, const RationalFunction& lambda) { return algorithm1_sum(m, lambda); }

std::vector<Rational> y_recurrence_sequence(long n_max, const Rational& lambda) {
    require_admissible_lambda(lambda);
    const Rational lm1 = lambda - Rational(1);
    std::vector<Rational> ys{inverse(lambda * lm1)};
    for (long n = 1; n <= n_max; ++n) {
        const Rational head = Rational(n % 2 == 0 ? 1 : -1) / (Rational(n + 1) * pow(lambda, n + 1));
        ys.push_back((head - ys.back()) / lm1);
    }
    return ys;
}

Rational y_genfun(long n, const Rational& lambda) {
    require_admissible_lambda(lambda);
    const auto g = series_G(lambda, n);
    return g.coeff(n) / pow(Rational(1) - lambda, n + 2);
}

Rational y_value(long n, const Rational& lambda, YMethod method) {
    switch (method) {
        case YMethod::direct: return y_direct(n, lambda);
        case YMethod::algorithm1: return y_algorithm1(n, lambda);
        case YMethod::recurrence: return y_recurrence_sequence(n, lambda).back();
        case YMethod::genfun: return y_genfun(n, lambda);
    }
    throw std::invalid_argument("unknown method");
}

Rational y_closed_special(long n, SpecialLambda which) {
    if (n < 0) throw std::invalid_argument("y_closed_special: negative index");
    Rational total;
    if (which == SpecialLambda::neg_one) {
        for (long j = 0; j <= n; ++j) total += inverse(Rational(binomial(n, j)));
        return total / Rational(2 * (n + 1));
    }
    for (long j = 0; j <= n; ++j) total += Rational(j % 2 == 0 ? -1 : 1, j + 1);
    return pow(Rational(2), n + 2) * total;
}

Rational y_leading_coefficient(long n) { return y_symbolic(n).numerator().leading(); }

std::vector<mpz_class> oeis_a025529(long n_max) {
    if (n_max < 1) throw std::invalid_argument("oeis_a025529: need at least one term");
    std::vector<mpz_class> out;
    for (long n = 1; n <= n_max; ++n) {
        const Rational a = Rational(lcm_upto(static_cast<unsigned long>(n))) * harmonic(HarmonicKind::plain, n);
        if (!a.is_integer()) throw std::logic_error("lcm(1..n) H_n is not an integer");
        if (abs(y_leading_coefficient(n - 1)) != a) {
            throw std::logic_error("leading coefficient of y(" + std::to_string(n - 1) + ", L) differs from a(" +
                                   std::to_string(n) + ")");
        }
        out.push_back(a.numerator());
    }
    return out;
}

namespace {

std::string descending(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational c = p.coefficient(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const Rational mag = abs(c);
        if (k == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::string power_factor(const std::string& base, long e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

}  // namespace

std::string format_factored(const RationalFunction& f, const std::string& var) {
    Polynomial den = f.denominator();
    long a = 0;
    while (den.degree() > 0 && den.coefficient(0).is_zero()) {
        den = divide(den, Polynomial::variable()).quotient;
        ++a;
    }
    const Polynomial l_minus_1({Rational(-1), Rational(1)});
    long b = 0;
    while (den.degree() > 0) {
        const auto qr = divide(den, l_minus_1);
        if (!qr.remainder.is_zero()) break;
        den = qr.quotient;
        ++b;
    }
    std::vector<std::string> factors;
    if (den.degree() > 0) {
        factors.push_back("(" + descending(den, var) + ")");
    } else if (den.coefficient(0) != Rational(1) || (a == 0 && b == 0)) {
        factors.push_back(den.coefficient(0).to_string());
    }
    if (a > 0) factors.push_back(power_factor(var, a));
    if (b > 0) factors.push_back(power_factor("(" + var + "-1)", b));
    std::string den_text;
    for (std::size_t i = 0; i < factors.size(); ++i) den_text += (i ? "*" : "") + factors[i];

    const Polynomial& num = f.numerator();
    const std::string num_text = num.degree() > 0 ? "(" + descending(num, var) + ")" : descending(num, var);
    if (a == 0 && b == 0 && den.degree() <= 0 && den.coefficient(0) == Rational(1)) return descending(num, var);
    return num_text + "/(" + den_text + ")";
}

std::string y_table_row(long n) {
    return "y(" + std::to_string(n) + ",L) = " + format_factored(y_symbolic(n));
}

}  // namespace finsum
