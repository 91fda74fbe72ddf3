#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "finsum/polynomial.hpp"
#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"

namespace finsum {

enum class NumberFamily {
    bernoulli,
    euler_at_zero,
    stirling1,
    stirling2,
    daehee,
    derangement,
    harmonic,
    alt_harmonic,
    leibnitz,
    bernoulli2nd,
};

std::string to_string(NumberFamily family);

/// Append-only memo of one number family keyed by (i, j). Lookups and inserts
/// are serialized; values are computed outside the lock, so two threads may
/// race to compute the same entry but will store identical results.
class NumberFamilyTable {
public:
    using Key = std::pair<long, long>;

    explicit NumberFamilyTable(NumberFamily family) : family_(family) {}

    NumberFamily family() const { return family_; }
    Rational get(Key key, const std::function<Rational()>& compute);
    void put(Key key, const Rational& value);
    std::size_t size() const;

private:
    NumberFamily family_;
    mutable std::mutex mutex_;
    std::map<Key, Rational> entries_;
};

enum class StirlingMethod { recurrence, formula };
enum class HarmonicKind { plain, alternating };
enum class LeibnitzMethod { closed, sum, bernstein };
enum class HighOrderFamily { bernoulli_high, euler_high };

/// B_n from u/(e^u - 1).
Rational bernoulli(long n);
/// Signed Stirling numbers of the first kind; 0 outside 0 <= k <= n.
Rational stirling1(long n, long k, StirlingMethod method = StirlingMethod::recurrence);
/// Stirling numbers of the second kind; 0 outside 0 <= k <= n.
Rational stirling2(long n, long k);
/// D_n = (-1)^n n!/(n+1).
Rational daehee(long n);
/// H_n = sum 1/j, or the alternating variant sum (-1)^j/j.
Rational harmonic(HarmonicKind kind, long n);
Rational derangement(long n);
/// Leibnitz numbers l(m, l); throws std::invalid_argument unless 0 <= l <= m.
Rational leibnitz(long m, long l, LeibnitzMethod method = LeibnitzMethod::closed);
/// Cauchy numbers b_n(0) from u/ln(1+u).
Rational bernoulli_second_kind(long n);
/// E_j(0), the order-one Euler polynomial at zero.
Rational euler_at_zero(long j);

/// B_m^{(d)}(y) or E_m^{(d)}(y) as a polynomial in y.
Polynomial high_order_polynomial(HighOrderFamily family, long d, long m);

/// Apostol-Bernoulli number B_n(lambda) from the closed computation formula.
RationalFunction apostol_bernoulli(long n);
/// B_n(lambda) as n! [u^n] u/(lambda e^u - 1).
RationalFunction apostol_bernoulli_series(long n);
/// B_n(b; lambda) as a polynomial in b with coefficients in lambda.
Poly<RationalFunction> apostol_bernoulli_poly(long n);

/// Independent second routes used for cross-checking, all uncached.
namespace uncached {
Rational bernoulli(long n);
Rational bernoulli_recurrence(long n);
Rational stirling1(long n, long k, StirlingMethod method);
Rational stirling2(long n, long k);
Rational stirling2_recurrence(long n, long k);
Rational daehee_sum(long n);
Rational derangement_recurrence(long n);
Rational harmonic(HarmonicKind kind, long n);
Polynomial high_order_polynomial(HighOrderFamily family, long d, long m);
}  // namespace uncached

}  // namespace finsum
