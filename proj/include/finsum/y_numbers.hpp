#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"

namespace finsum {

enum class YMethod { direct, algorithm1, recurrence, genfun };

std::string to_string(YMethod method);

/// y(n, lambda) from its defining finite sum. Throws std::domain_error for
/// lambda in {0, 1}.
Rational y_direct(long n, const Rational& lambda);
RationalFunction y_direct(long n, const RationalFunction& lambda);

/// y(n, lambda) as a canonical rational function of lambda.
RationalFunction y_symbolic(long n);

/// The Bernoulli-Stirling double sum, iterated in the same order as the
/// reference algorithm.
Rational y_algorithm1(long m, const Rational& lambda);
RationalFunction y_algorithm1(long m, const RationalFunction& lambda);

/// y(0..n_max, lambda) from the first-order recurrence seeded with y(0, lambda).
std::vector<Rational> y_recurrence_sequence(long n_max, const Rational& lambda);

/// y(n, lambda) read from the z^n coefficient of G(z, lambda).
Rational y_genfun(long n, const Rational& lambda);

/// Dispatches to one of the evaluation methods above.
Rational y_value(long n, const Rational& lambda, YMethod method);

enum class SpecialLambda { neg_one, half };

/// Closed forms at lambda = -1 (inverse binomial sum) and lambda = 1/2.
Rational y_closed_special(long n, SpecialLambda which);

/// lcm(1..n) H_n for n = 1..n_max. Each term is also compared with the
/// absolute leading numerator coefficient of y(n-1, lambda); a mismatch
/// throws std::logic_error.
std::vector<mpz_class> oeis_a025529(long n_max);

/// Leading coefficient of the canonical numerator of y(n, lambda).
Rational y_leading_coefficient(long n);

/// Formats a rational function whose denominator is c * L^a * (L-1)^b as
/// "(num)/(c*L^a*(L-1)^b)" with the numerator in descending powers.
std::string format_factored(const RationalFunction& f, const std::string& var = "L");

/// One row of the value table, "y(n,L) = ...".
std::string y_table_row(long n);

void require_admissible_lambda(const Rational& lambda);

}  // namespace finsum
