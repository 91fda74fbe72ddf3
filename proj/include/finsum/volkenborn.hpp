#pragma once

#include <string>
#include <vector>

#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"

namespace finsum {

enum class Integrand { power, falling, binom };

std::string to_string(Integrand integrand);
/// Throws std::invalid_argument on an unknown name.
Integrand parse_integrand(const std::string& name);

struct VolkenbornSample {
    unsigned long p = 2;
    long N = 1;
    Integrand integrand = Integrand::power;
    long index = 0;
    Rational partial_sum;
    Rational limit;
    Valuation error_valuation;
};

enum class SumOrder { linear, blocked };

/// Limit of the partial sums: B_j, D_n, or (-1)^n/(n+1).
Rational volkenborn_limit(Integrand integrand, long index);

/// Throws std::invalid_argument unless p is 2, 3, 5 or 7, N >= 1, and
/// N <= 10 for p <= 3 or N <= 6 for p >= 5.
void require_volkenborn_budget(unsigned long p, long N);

/// p^{-N} sum_{x < p^N} f(x) computed exactly.
VolkenbornSample volkenborn_partial_sum(Integrand integrand, long index, unsigned long p, long N,
                                        SumOrder order = SumOrder::linear);

struct ConvergenceReport {
    std::vector<VolkenbornSample> samples;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Samples for N = first..last. Reports a violation when the error valuation
/// drops below N - index - 2, or fails to increase strictly from N = 4 on
/// (infinite valuations count as increasing).
ConvergenceReport convergence_report(Integrand integrand, long index, unsigned long p, long first, long last);

/// One JSON object per sample: p, N, integrand, index, partial_sum, limit, valuation.
std::string to_json(const VolkenbornSample& sample);

/// Compares G(t, lambda) with ((1-lambda)/(lambda(t-1))) sum (-1)^n ((1-lambda)t/lambda)^n/(n+1)
/// through t^T, and checks the Stirling/Bernoulli route sum_j S1(n,j) B_j = D_n for n <= T.
/// Throws std::domain_error for lambda in {0, 1}.
bool pG_series_check(const Rational& lambda, long T);
bool pG_series_check_symbolic(long T);

/// Rebuilds y(n, lambda) from the recurrence whose inhomogeneous term is the
/// binomial-integrand limit and compares it with y_direct for n <= n_max.
bool mahler_recurrence_check(const Rational& lambda, long n_max);

}  // namespace finsum
