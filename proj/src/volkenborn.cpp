#include "finsum/volkenborn.hpp"

#include <stdexcept>

#include "json.hpp"

#include "finsum/genfun.hpp"
#include "finsum/laurent_series.hpp"
#include "finsum/special_numbers.hpp"
#include "finsum/y_numbers.hpp"

namespace finsum {

namespace {

mpz_class integrand_value(Integrand integrand, long index, unsigned long x) {
    switch (integrand) {
        case Integrand::power: {
            mpz_class r;
            mpz_ui_pow_ui(r.get_mpz_t(), x, static_cast<unsigned long>(index));
            return r;
        }
        case Integrand::falling: {
            mpz_class r = 1;
            for (long k = 0; k < index; ++k) r *= mpz_class(static_cast<long>(x) - k);
            return r;
        }
        case Integrand::binom: {
            mpz_class r;
            mpz_bin_uiui(r.get_mpz_t(), x, static_cast<unsigned long>(index));
            return r;
        }
    }
    throw std::invalid_argument("unknown integrand");
}

unsigned long power_of(unsigned long p, long N) {
    unsigned long r = 1;
    for (long k = 0; k < N; ++k) r *= p;
    return r;
}

template <class C>
bool pG_impl(const C& lambda, long T) {
    using S = LaurentSeries<C>;
    const C one(Rational(1));
    const C s = (one - lambda) / lambda;
    std::vector<C> v;
    C sp = one;
    for (long n = 0; n <= T; ++n) {
        // (-1)^n / (n+1) is D_n / n! by the falling-factorial integral.
        const Rational mahler = daehee(n) / Rational(factorial(static_cast<unsigned long>(n)));
        v.push_back(C(mahler) * sp);
        sp = sp * s;
    }
    const S integral(0, std::move(v), T);
    const S rhs = ((-series_geometric<C>(T)) * integral).scaled(s);
    const S lhs = series_G(lambda, T);
    for (long k = 0; k <= T; ++k) {
        if (lhs.coeff(k) != rhs.coeff(k)) return false;
    }
    for (long n = 0; n <= T; ++n) {
        Rational route;
        for (long j = 0; j <= n; ++j) route += stirling1(n, j) * bernoulli(j);
        if (route != daehee(n)) return false;
        if (route / Rational(factorial(static_cast<unsigned long>(n))) != Rational(n % 2 == 0 ? 1 : -1, n + 1)) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string to_string(Integrand integrand) {
    switch (integrand) {
        case Integrand::power: return "power";
        case Integrand::falling: return "falling";
        case Integrand::binom: return "binom";
    }
    return "unknown";
}

Integrand parse_integrand(const std::string& name) {
    if (name == "power") return Integrand::power;
    if (name == "falling") return Integrand::falling;
    if (name == "binom") return Integrand::binom;
    throw std::invalid_argument("unknown integrand '" + name + "'");
}

Rational volkenborn_limit(Integrand integrand, long index) {
    if (index < 0) throw std::invalid_argument("volkenborn: negative index");
    switch (integrand) {
        case Integrand::power: return bernoulli(index);
        case Integrand::falling: return daehee(index);
        case Integrand::binom: return Rational(index % 2 == 0 ? 1 : -1, index + 1);
    }
    throw std::invalid_argument("unknown integrand");
}

void require_volkenborn_budget(unsigned long p, long N) {
    if (p != 2 && p != 3 && p != 5 && p != 7) {
        throw std::invalid_argument("volkenborn: p must be 2, 3, 5 or 7 (got " + std::to_string(p) + ")");
    }
    const long max_level = p <= 3 ? 10 : 6;
    if (N < 1 || N > max_level) {
        throw std::invalid_argument("volkenborn: level " + std::to_string(N) + " outside 1.." +
                                    std::to_string(max_level) + " for p = " + std::to_string(p));
    }
}

VolkenbornSample volkenborn_partial_sum(Integrand integrand, long index, unsigned long p, long N, SumOrder order) {
    require_volkenborn_budget(p, N);
    const Rational limit = volkenborn_limit(integrand, index);
    const unsigned long count = power_of(p, N);
    mpz_class total = 0;
    if (order == SumOrder::linear) {
        for (unsigned long x = 0; x < count; ++x) total += integrand_value(integrand, index, x);
    } else {
        // Residue classes mod p, last class first.
        for (unsigned long r = p; r-- > 0;) {
            mpz_class block = 0;
            for (unsigned long x = r; x < count; x += p) block += integrand_value(integrand, index, x);
            total += block;
        }
    }
    VolkenbornSample s;
    s.p = p;
    s.N = N;
    s.integrand = integrand;
    s.index = index;
    s.partial_sum = Rational(total, mpz_class(count));
    s.limit = limit;
    s.error_valuation = padic_valuation(s.partial_sum - limit, p);
    return s;
}

ConvergenceReport convergence_report(Integrand integrand, long index, unsigned long p, long first, long last) {
    ConvergenceReport report;
    for (long N = first; N <= last; ++N) {
        report.samples.push_back(volkenborn_partial_sum(integrand, index, p, N));
        const auto& s = report.samples.back();
        const std::string where = "p=" + std::to_string(p) + " N=" + std::to_string(N) + " " +
                                  to_string(integrand) + " " + std::to_string(index);
        if (s.error_valuation < Valuation::of(N - index - 2)) {
            report.violations.push_back(where + ": valuation " + s.error_valuation.to_string() + " below " +
                                        std::to_string(N - index - 2));
        }
        if (N >= 4 && report.samples.size() >= 2) {
            const Valuation prev = report.samples[report.samples.size() - 2].error_valuation;
            const bool increasing = s.error_valuation.infinite || s.error_valuation > prev;
            if (!increasing) {
                report.violations.push_back(where + ": valuation " + s.error_valuation.to_string() +
                                            " does not exceed previous " + prev.to_string());
            }
        }
    }
    return report;
}

std::string to_json(const VolkenbornSample& sample) {
    nlohmann::ordered_json row;
    row["p"] = sample.p;
    row["N"] = sample.N;
    row["integrand"] = to_string(sample.integrand);
    row["index"] = sample.index;
    row["partial_sum"] = sample.partial_sum.to_string();
    row["limit"] = sample.limit.to_string();
    if (sample.error_valuation.infinite) {
        row["valuation"] = "inf";
    } else {
        row["valuation"] = sample.error_valuation.value;
    }
    return row.dump();
}

bool pG_series_check(const Rational& lambda, long T) {
    require_admissible_lambda(lambda);
    return pG_impl(lambda, T);
}

bool pG_series_check_symbolic(long T) { return pG_impl(RationalFunction::variable(), T); }

bool mahler_recurrence_check(const Rational& lambda, long n_max) {
    require_admissible_lambda(lambda);
    const Rational lm1 = lambda - Rational(1);
    Rational y = inverse(lambda * lm1);
    const auto reference = y_recurrence_sequence(n_max, lambda);
    if (y != y_direct(0, lambda) || y != reference[0]) return false;
    for (long n = 1; n <= n_max; ++n) {
        const Rational mahler = volkenborn_limit(Integrand::binom, n);
        y = (mahler / pow(lambda, n + 1) - y) / lm1;
        if (y != y_direct(n, lambda) || y != reference[static_cast<std::size_t>(n)]) return false;
    }
    return true;
}

}  // namespace finsum
