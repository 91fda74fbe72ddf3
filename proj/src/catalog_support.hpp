#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "finsum/genfun.hpp"
#include "finsum/identity_suite.hpp"
#include "finsum/laurent_series.hpp"
#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"
#include "finsum/special_numbers.hpp"
#include "finsum/y_numbers.hpp"

namespace finsum::detail {

inline Rational sign(long k) { return Rational(k % 2 == 0 ? 1 : -1); }

inline Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

inline Rational binom(long n, long k) { return Rational(binomial(n, k)); }

inline Rational alt_harmonic(long n) { return harmonic(HarmonicKind::alternating, n); }

inline Rational plain_harmonic(long n) { return harmonic(HarmonicKind::plain, n); }

inline RationalFunction y_symbolic_cached(long n) {
    static std::mutex mutex;
    static std::map<long, RationalFunction> cache;
    {
        std::lock_guard lock(mutex);
        const auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    RationalFunction value = y_symbolic(n);
    std::lock_guard lock(mutex);
    cache.emplace(n, value);
    return value;
}

inline Rational y_of(long n, const Rational& lambda) { return y_direct(n, lambda); }
inline RationalFunction y_of(long n, const RationalFunction&) { return y_symbolic_cached(n); }

inline std::string lambda_text(const Rational& lambda) { return lambda.to_string(); }
inline std::string lambda_text(const RationalFunction&) { return "symbolic"; }

template <class F>
std::string at(const std::string& name, long value, const F& lambda) {
    return name + "=" + std::to_string(value) + " L=" + lambda_text(lambda);
}

inline std::string at(const std::string& name, long value) { return name + "=" + std::to_string(value); }

/// Calls fn(n, lambda) for every sample lambda with first <= n <= max_n, then
/// with the symbolic lambda for first <= n <= symbolic_max.
template <class Fn>
void for_lambdas(const Sweep& sweep, long first, Fn&& fn) {
    for (const auto& lambda : sweep.lambdas) {
        for (long n = first; n <= sweep.max_n; ++n) fn(n, lambda);
    }
    if (!sweep.symbolic) return;
    const RationalFunction lambda = RationalFunction::variable();
    for (long n = first; n <= sweep.symbolic_max; ++n) fn(n, lambda);
}

inline Sweep sweep_with(long max_n, long symbolic_max = 10, bool symbolic = true) {
    Sweep sweep = default_sweep();
    sweep.max_n = max_n;
    sweep.max_m = max_n;
    sweep.symbolic_max = symbolic_max;
    sweep.symbolic = symbolic;
    return sweep;
}

inline IdentityRecord printed_ok(std::string id, std::string family, std::string anchor, Predicate check,
                                 Sweep sweep = default_sweep(), long cap = 40) {
    IdentityRecord r;
    r.id = std::move(id);
    r.family = std::move(family);
    r.anchor = std::move(anchor);
    r.status = IdentityStatus::printed_ok;
    r.sweep = std::move(sweep);
    r.max_n_cap = cap;
    r.check = std::move(check);
    return r;
}

inline IdentityRecord printed_fails(std::string id, std::string family, std::string anchor, Predicate corrected,
                                    std::function<void(Recorder&)> printed, Sweep sweep = default_sweep(),
                                    long cap = 40) {
    IdentityRecord r = printed_ok(std::move(id), std::move(family), std::move(anchor), std::move(corrected),
                                  std::move(sweep), cap);
    r.status = IdentityStatus::printed_fails_corrected_ok;
    r.printed_counterexample = std::move(printed);
    return r;
}

/// s(c z) for a series with finite precision.
template <class C>
LaurentSeries<C> dilated(const LaurentSeries<C>& s, const C& c) {
    std::vector<C> v;
    C power = pow(c, s.valuation());
    for (long k = s.valuation(); k <= s.precision(); ++k) {
        v.push_back(s.coeff(k) * power);
        power = power * c;
    }
    return LaurentSeries<C>(s.valuation(), std::move(v), s.precision());
}

/// Calls fn(lambda, max_n) for every sample lambda and fn(symbolic, symbolic_max).
template <class Fn>
void for_lambda_values(const Sweep& sweep, Fn&& fn) {
    for (const auto& lambda : sweep.lambdas) fn(lambda, sweep.max_n);
    if (sweep.symbolic) fn(RationalFunction::variable(), sweep.symbolic_max);
}

}  // namespace finsum::detail
