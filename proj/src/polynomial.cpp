#include "finsum/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace finsum {

std::string to_string(const Polynomial& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Rational& c = p.coefficients()[k];
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
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

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::string_view var) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    Polynomial result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("malformed polynomial: '" + s + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        const std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw std::invalid_argument("malformed polynomial: '" + s + "'");

        Rational coeff(1);
        std::size_t power = 0;
        const auto var_at = term.find(var);
        if (var_at == std::string::npos) {
            coeff = Rational::parse(term);
        } else {
            std::string head = term.substr(0, var_at);
            if (!head.empty()) {
                if (head.back() != '*') throw std::invalid_argument("malformed term: '" + term + "'");
                head.pop_back();
                coeff = Rational::parse(head);
            }
            const std::string tail = term.substr(var_at + var.size());
            if (tail.empty()) {
                power = 1;
            } else if (tail.size() >= 2 && tail[0] == '^') {
                power = std::stoul(tail.substr(1));
            } else {
                throw std::invalid_argument("malformed term: '" + term + "'");
            }
        }
        if (negative) coeff = -coeff;
        result += Polynomial::monomial(coeff, power);
    }
    return result;
}

PolynomialDivision divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const long db = b.degree();
    const Rational lead_inv = inverse(b.leading());
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (long k = a.degree(); k >= db; --k) {
        const Rational q = rem[static_cast<std::size_t>(k)] * lead_inv;
        quot[static_cast<std::size_t>(k - db)] = q;
        if (q.is_zero()) continue;
        for (long i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(k - db + i)] -= q * b.coefficients()[static_cast<std::size_t>(i)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(inverse(p.leading()));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

Rational integrate(const Polynomial& p, const Rational& lo, const Rational& hi) {
    const Polynomial anti = p.antiderivative();
    return anti.evaluate(hi) - anti.evaluate(lo);
}

}  // namespace finsum
