#include "finsum/special_numbers.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

#include "finsum/laurent_series.hpp"

namespace finsum {

std::string to_string(NumberFamily family) {
    switch (family) {
        case NumberFamily::bernoulli: return "bernoulli";
        case NumberFamily::euler_at_zero: return "euler_at_zero";
        case NumberFamily::stirling1: return "stirling1";
        case NumberFamily::stirling2: return "stirling2";
        case NumberFamily::daehee: return "daehee";
        case NumberFamily::derangement: return "derangement";
        case NumberFamily::harmonic: return "harmonic";
        case NumberFamily::alt_harmonic: return "alt_harmonic";
        case NumberFamily::leibnitz: return "leibnitz";
        case NumberFamily::bernoulli2nd: return "bernoulli2nd";
    }
    return "unknown";
}

Rational NumberFamilyTable::get(Key key, const std::function<Rational()>& compute) {
    {
        std::lock_guard lock(mutex_);
        const auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
    }
    Rational value = compute();
    put(key, value);
    return value;
}

void NumberFamilyTable::put(Key key, const Rational& value) {
    std::lock_guard lock(mutex_);
    entries_.emplace(key, value);
}

std::size_t NumberFamilyTable::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

namespace {

NumberFamilyTable& table(NumberFamily family) {
    static NumberFamilyTable tables[] = {
        NumberFamilyTable(NumberFamily::bernoulli),     NumberFamilyTable(NumberFamily::euler_at_zero),
        NumberFamilyTable(NumberFamily::stirling1),     NumberFamilyTable(NumberFamily::stirling2),
        NumberFamilyTable(NumberFamily::daehee),        NumberFamilyTable(NumberFamily::derangement),
        NumberFamilyTable(NumberFamily::harmonic),      NumberFamilyTable(NumberFamily::alt_harmonic),
        NumberFamilyTable(NumberFamily::leibnitz),      NumberFamilyTable(NumberFamily::bernoulli2nd),
    };
    return tables[static_cast<int>(family)];
}

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }
Rational binom(long n, long k) { return Rational(binomial(n, k)); }

// j^e with 0^0 = 1.
Rational ipow(long j, long e) { return e == 0 ? Rational(1) : pow(Rational(j), e); }

// (e^u - 1)/u through order T.
LaurentSeries<Rational> expm1_over_u(long T) {
    std::vector<Rational> v;
    mpz_class f = 1;
    for (long k = 0; k <= T; ++k) {
        f *= k + 1;
        v.emplace_back(mpz_class(1), f);
    }
    return LaurentSeries<Rational>(0, std::move(v), T);
}

void check_index(long n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

}  // namespace

namespace uncached {

Rational bernoulli(long n) {
    check_index(n, "bernoulli");
    const auto inv = divide(LaurentSeries<Rational>::constant(Rational(1)), expm1_over_u(n), n);
    return inv.coeff(n) * fact(n);
}

Rational bernoulli_recurrence(long n) {
    check_index(n, "bernoulli");
    std::vector<Rational> b{Rational(1)};
    for (long m = 1; m <= n; ++m) {
        Rational acc;
        for (long k = 0; k < m; ++k) acc += binom(m + 1, k) * b[static_cast<std::size_t>(k)];
        b.push_back(-acc / Rational(m + 1));
    }
    return b[static_cast<std::size_t>(n)];
}

Rational stirling1(long n, long k, StirlingMethod method) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    if (method == StirlingMethod::recurrence) {
        std::vector<Rational> row{Rational(1)};
        for (long m = 0; m < n; ++m) {
            std::vector<Rational> next(row.size() + 1);
            for (std::size_t j = 0; j < next.size(); ++j) {
                Rational v;
                if (j >= 1) v += row[j - 1];
                if (j < row.size()) v -= Rational(m) * row[j];
                next[j] = v;
            }
            row = std::move(next);
        }
        return row[static_cast<std::size_t>(k)];
    }
    Rational total;
    for (long c = 0; c <= n - k; ++c) {
        const Rational outer = binom(n + c - 1, k - 1) * binom(2 * n - k, n - k - c) / fact(c);
        if (outer.is_zero()) continue;
        Rational inner;
        for (long j = 0; j <= c; ++j) {
            const Rational term = binom(c, j) * ipow(j, n - k + c);
            inner += j % 2 == 0 ? term : -term;
        }
        total += outer * inner;
    }
    return total;
}

Rational stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    Rational total;
    for (long c = 0; c <= k; ++c) {
        const Rational term = binom(k, c) * ipow(c, n);
        total += (k - c) % 2 == 0 ? term : -term;
    }
    return total / fact(k);
}

Rational stirling2_recurrence(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    std::vector<Rational> row{Rational(1)};
    for (long m = 0; m < n; ++m) {
        std::vector<Rational> next(row.size() + 1);
        for (std::size_t j = 0; j < next.size(); ++j) {
            Rational v;
            if (j >= 1) v += row[j - 1];
            if (j < row.size()) v += Rational(static_cast<long>(j)) * row[j];
            next[j] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

Rational daehee_sum(long n) {
    check_index(n, "daehee");
    Rational total;
    for (long j = 0; j <= n; ++j) total += finsum::bernoulli(j) * finsum::stirling1(n, j);
    return total;
}

Rational derangement_recurrence(long n) {
    check_index(n, "derangement");
    Rational d(1);
    for (long m = 1; m <= n; ++m) d = Rational(m) * d + Rational(m % 2 == 0 ? 1 : -1);
    return d;
}

Rational harmonic(HarmonicKind kind, long n) {
    check_index(n, "harmonic");
    Rational total;
    for (long j = 1; j <= n; ++j) {
        const Rational term(1, j);
        total += (kind == HarmonicKind::alternating && j % 2 == 1) ? -term : term;
    }
    return total;
}

Polynomial high_order_polynomial(HighOrderFamily family, long d, long m) {
    if (d < 1) throw std::invalid_argument("high_order_polynomial: order must be positive");
    check_index(m, "high_order_polynomial");
    LaurentSeries<Rational> base;
    if (family == HighOrderFamily::bernoulli_high) {
        base = divide(LaurentSeries<Rational>::constant(Rational(1)), expm1_over_u(m), m);
    } else {
        // 2/(e^u + 1)
        auto denom = series_exp<Rational>(m) + LaurentSeries<Rational>::constant(Rational(1), m);
        base = divide(LaurentSeries<Rational>::constant(Rational(2)), denom, m);
    }
    const auto powered = pow(base, d, m).map<Polynomial>([](const Rational& c) { return Polynomial(c); });
    std::vector<Polynomial> shift;
    mpz_class f = 1;
    for (long k = 0; k <= m; ++k) {
        if (k > 0) f *= k;
        shift.push_back(Polynomial::monomial(Rational(mpz_class(1), f), static_cast<std::size_t>(k)));
    }
    const auto product = powered * LaurentSeries<Polynomial>(0, std::move(shift), m);
    return product.coeff(m).scaled(fact(m));
}

}  // namespace uncached

Rational bernoulli(long n) {
    check_index(n, "bernoulli");
    return table(NumberFamily::bernoulli).get({n, 0}, [n] {
        // One inversion yields the whole prefix; store it.
        const auto inv = divide(LaurentSeries<Rational>::constant(Rational(1)), expm1_over_u(n), n);
        Rational f(1);
        for (long k = 0; k <= n; ++k) {
            if (k > 0) f *= Rational(k);
            table(NumberFamily::bernoulli).put({k, 0}, inv.coeff(k) * f);
        }
        return inv.coeff(n) * f;
    });
}

Rational stirling1(long n, long k, StirlingMethod method) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    if (method == StirlingMethod::formula) return uncached::stirling1(n, k, method);
    return table(NumberFamily::stirling1).get({n, k}, [n, k] {
        std::vector<Rational> row{Rational(1)};
        for (long m = 0; m < n; ++m) {
            std::vector<Rational> next(row.size() + 1);
            for (std::size_t j = 0; j < next.size(); ++j) {
                Rational v;
                if (j >= 1) v += row[j - 1];
                if (j < row.size()) v -= Rational(m) * row[j];
                next[j] = v;
            }
            row = std::move(next);
        }
        for (long j = 0; j <= n; ++j) table(NumberFamily::stirling1).put({n, j}, row[static_cast<std::size_t>(j)]);
        return row[static_cast<std::size_t>(k)];
    });
}

Rational stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    return table(NumberFamily::stirling2).get({n, k}, [n, k] { return uncached::stirling2(n, k); });
}

Rational daehee(long n) {
    check_index(n, "daehee");
    return table(NumberFamily::daehee).get({n, 0}, [n] {
        const Rational v = fact(n) / Rational(n + 1);
        return n % 2 == 0 ? v : -v;
    });
}

Rational harmonic(HarmonicKind kind, long n) {
    const auto family = kind == HarmonicKind::plain ? NumberFamily::harmonic : NumberFamily::alt_harmonic;
    return table(family).get({n, 0}, [kind, n] { return uncached::harmonic(kind, n); });
}

Rational derangement(long n) {
    check_index(n, "derangement");
    return table(NumberFamily::derangement).get({n, 0}, [n] {
        Rational total;
        for (long j = 0; j <= n; ++j) {
            const Rational term = fact(n - j) * binom(n, j);
            total += j % 2 == 0 ? term : -term;
        }
        return total;
    });
}

Rational leibnitz(long m, long l, LeibnitzMethod method) {
    if (m < 0 || l < 0 || l > m) {
        throw std::invalid_argument("leibnitz: need 0 <= l <= m");
    }
    switch (method) {
        case LeibnitzMethod::closed:
            return table(NumberFamily::leibnitz).get({m, l}, [m, l] {
                return inverse(Rational(m + 1) * binom(m, l));
            });
        case LeibnitzMethod::sum: {
            Rational total;
            for (long d = 0; d <= l; ++d) {
                const Rational term = binom(l, d) / Rational(m - d + 1);
                total += (l - d) % 2 == 0 ? term : -term;
            }
            return total;
        }
        case LeibnitzMethod::bernstein: {
            // Integrate the Bernstein basis polynomial exactly over [0, 1].
            const Polynomial x = Polynomial::variable();
            Polynomial one_minus_x = Polynomial(Rational(1)) - x;
            Polynomial basis = Polynomial::monomial(binom(m, l), static_cast<std::size_t>(l));
            for (long i = 0; i < m - l; ++i) basis *= one_minus_x;
            return integrate(basis, Rational(0), Rational(1)) / binom(m, l);
        }
    }
    throw std::invalid_argument("leibnitz: unknown method");
}

Rational bernoulli_second_kind(long n) {
    check_index(n, "bernoulli_second_kind");
    return table(NumberFamily::bernoulli2nd).get({n, 0}, [n] {
        const auto u = LaurentSeries<Rational>::monomial(Rational(1), 1);
        const auto log1p = series_log_one_plus(u, n + 1);
        return divide(u, log1p).coeff(n) * fact(n);
    });
}

Rational euler_at_zero(long j) {
    check_index(j, "euler_at_zero");
    return table(NumberFamily::euler_at_zero).get({j, 0}, [j] {
        return high_order_polynomial(HighOrderFamily::euler_high, 1, j).coefficient(0);
    });
}

namespace {

struct PolyCache {
    std::mutex mutex;
    std::map<std::tuple<int, long, long>, Polynomial> entries;
};

PolyCache& poly_cache() {
    static PolyCache cache;
    return cache;
}

}  // namespace

Polynomial high_order_polynomial(HighOrderFamily family, long d, long m) {
    const auto key = std::make_tuple(static_cast<int>(family), d, m);
    auto& cache = poly_cache();
    {
        std::lock_guard lock(cache.mutex);
        const auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    Polynomial value = uncached::high_order_polynomial(family, d, m);
    std::lock_guard lock(cache.mutex);
    cache.entries.emplace(key, value);
    return value;
}

RationalFunction apostol_bernoulli(long n) {
    check_index(n, "apostol_bernoulli");
    if (n == 0) return RationalFunction();
    const RationalFunction theta = RationalFunction::variable();
    const RationalFunction theta_m1 = theta - RationalFunction(1);
    RationalFunction sum;
    for (long c = 0; c <= n - 1; ++c) {
        RationalFunction term = RationalFunction(fact(c) * stirling2(n - 1, c)) * pow(theta, c - 1) *
                                pow(theta_m1, n - 1 - c);
        sum += c % 2 == 0 ? term : -term;
    }
    return RationalFunction(Rational(n)) * theta / pow(theta_m1, n) * sum;
}

RationalFunction apostol_bernoulli_series(long n) {
    check_index(n, "apostol_bernoulli");
    using S = LaurentSeries<RationalFunction>;
    const RationalFunction theta = RationalFunction::variable();
    const auto e = series_exp<RationalFunction>(n + 1);
    const S denom = e.scaled(theta) - S::constant(RationalFunction(1));
    const S u = S::monomial(RationalFunction(1), 1);
    return divide(u, denom, n).coeff(n) * RationalFunction(fact(n));
}

Poly<RationalFunction> apostol_bernoulli_poly(long n) {
    check_index(n, "apostol_bernoulli");
    std::vector<RationalFunction> coeffs(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        coeffs[static_cast<std::size_t>(n - k)] = apostol_bernoulli_series(k) * RationalFunction(binom(n, k));
    }
    return Poly<RationalFunction>(std::move(coeffs));
}

}  // namespace finsum
