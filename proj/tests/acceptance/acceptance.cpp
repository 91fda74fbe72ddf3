// Acceptance report: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "finsum/cli.hpp"
#include "finsum/genfun.hpp"
#include "finsum/identity_suite.hpp"
#include "finsum/special_numbers.hpp"
#include "finsum/volkenborn.hpp"
#include "finsum/y_numbers.hpp"
#include "finsum/zeta_values.hpp"

using namespace finsum;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<Verdict()> run;
};

Verdict fail(std::string detail) { return {false, std::move(detail)}; }

RationalFunction y_recurrence_symbolic(long n) {
    const RationalFunction L = RationalFunction::variable();
    const RationalFunction one(1);
    RationalFunction y = one / (L * (L - one));
    for (long k = 1; k <= n; ++k) {
        const RationalFunction rhs = RationalFunction(Rational(k % 2 == 0 ? 1 : -1, k + 1)) / pow(L, k + 1);
        y = (rhs - y) / (L - one);
    }
    return y;
}

Verdict table_reproduction() {
    const std::vector<std::string> printed{
        "1/(L*(L-1))",
        "(-3*L + 1)/(2*L^2*(L-1)^2)",
        "(11*L^2 - 7*L + 2)/(6*L^3*(L-1)^3)",
        "(-25*L^3 + 23*L^2 - 13*L + 3)/(12*L^4*(L-1)^4)",
        "(137*L^4 - 163*L^3 + 137*L^2 - 63*L + 12)/(60*L^5*(L-1)^5)",
    };
    for (long n = 0; n <= 4; ++n) {
        const std::string got = format_factored(y_symbolic(n));
        if (got != printed[static_cast<std::size_t>(n)]) return fail("y(" + std::to_string(n) + ",L) = " + got);
    }
    return {true, "y(0..4, L) match the printed table character for character"};
}

Verdict method_agreement() {
    long checked = 0;
    for (const Rational& lambda : default_lambdas()) {
        const auto rec = y_recurrence_sequence(40, lambda);
        const auto G = series_G(lambda, 40);
        for (long n = 0; n <= 40; ++n) {
            const Rational direct = y_direct(n, lambda);
            const Rational from_g = G.coeff(n) / pow(Rational(1) - lambda, n + 2);
            if (y_algorithm1(n, lambda) != direct || rec[static_cast<std::size_t>(n)] != direct || from_g != direct) {
                return fail("n=" + std::to_string(n) + " L=" + lambda.to_string());
            }
            ++checked;
        }
    }
    const RationalFunction L = RationalFunction::variable();
    const auto G = series_G(L, 12);
    for (long n = 0; n <= 12; ++n) {
        const RationalFunction s = y_symbolic(n);
        const RationalFunction from_g = G.coeff(n) / pow(RationalFunction(1) - L, n + 2);
        if (y_direct(n, L) != s || y_algorithm1(n, L) != s || y_recurrence_symbolic(n) != s || from_g != s) {
            return fail("symbolic n=" + std::to_string(n));
        }
    }
    return {true, std::to_string(checked) + " numeric cases (n <= 40, 7 lambdas) and symbolic n <= 12 agree"};
}

Verdict oeis() {
    const std::vector<mpz_class> listed{1, 3, 11, 25, 137, 147, 1089, 2283, 7129, 7381, 83711};
    std::vector<mpz_class> got;
    try {
        got = oeis_a025529(11);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    if (got != listed) return fail("sequence differs from the listing");
    for (long n = 1; n <= 11; ++n) {
        const Rational a(got[static_cast<std::size_t>(n - 1)]);
        if (Rational(lcm_upto(static_cast<unsigned long>(n))) * harmonic(HarmonicKind::plain, n) != a) {
            return fail("lcm(1..n) H_n at n=" + std::to_string(n));
        }
        if (abs(y_leading_coefficient(n - 1)) != a) return fail("leading coefficient at n=" + std::to_string(n));
    }
    return {true, "11 terms match the listing, lcm(1..n) H_n and |lead y(n-1, L)|"};
}

Verdict hypergeometric() {
    for (const Rational& lambda : default_lambdas()) {
        const auto a = series_G(lambda, 30);
        const auto b = series_G_hypergeometric(lambda, 30);
        for (long n = 0; n <= 30; ++n) {
            if (a.coeff(n) != b.coeff(n)) return fail("n=" + std::to_string(n) + " L=" + lambda.to_string());
        }
    }
    const RationalFunction L = RationalFunction::variable();
    const auto a = series_G(L, 12);
    const auto b = series_G_hypergeometric(L, 12);
    for (long n = 0; n <= 12; ++n) {
        if (a.coeff(n) != b.coeff(n)) return fail("symbolic n=" + std::to_string(n));
    }
    return {true, "order 30 at 7 lambdas, order 12 symbolic"};
}

Verdict apostol() {
    for (long M = 0; M <= 14; ++M) {
        const RationalFunction closed = apostol_bernoulli(M);
        const RationalFunction series = apostol_bernoulli_series(M);
        for (const Rational& lambda : default_lambdas()) {
            const Rational sum = apostol_from_y(M, lambda);
            if (closed.evaluate(lambda) != sum || series.evaluate(lambda) != sum) {
                return fail("M=" + std::to_string(M) + " L=" + lambda.to_string());
            }
        }
    }
    for (long M = 0; M <= 10; ++M) {
        const RationalFunction sum = apostol_from_y(M);
        if (apostol_bernoulli(M) != sum || apostol_bernoulli_series(M) != sum) return fail("symbolic M=" + std::to_string(M));
    }
    for (const char* id : {"thm3-Abn-1", "half-1AAeq"}) {
        if (!run_identity(id).all_passed()) return fail(std::string("catalog record ") + id);
    }
    return {true, "M <= 14 at 7 lambdas, M <= 10 symbolic, both routes"};
}

Verdict spine() {
    for (long m = 0; m <= 20; ++m) {
        Rational sum;
        for (long n = 0; n <= m; ++n) sum += bernoulli(n) * stirling1(m, n);
        if (sum != Rational(m % 2 == 0 ? 1 : -1) * Rational(factorial(static_cast<unsigned long>(m))) / Rational(m + 1)) {
            return fail("m=" + std::to_string(m));
        }
    }
    long checked = 0;
    for (const Rational& lambda : default_lambdas()) {
        for (long n = 0; n <= 40; ++n, ++checked) {
            if (y_algorithm1(n, lambda) != y_direct(n, lambda)) return fail("Algorithm 1 at n=" + std::to_string(n));
        }
    }
    for (long n = 0; n <= 12; ++n, ++checked) {
        const RationalFunction L = RationalFunction::variable();
        if (y_algorithm1(n, L) != y_direct(n, L)) return fail("Algorithm 1 symbolic n=" + std::to_string(n));
    }
    return {true, "m <= 20; Algorithm 1 equals the direct sum in " + std::to_string(checked) + " cases"};
}

Verdict section6() {
    struct Sweep6 {
        Section6Identity id;
        const char* name;
        long max_n;
        long max_m;
    };
    const Sweep6 sweeps[] = {
        {Section6Identity::ah5z_series, "ah5z", 6, 8},       {Section6Identity::multinomial_1AAe, "1AAe", 6, 8},
        {Section6Identity::aHh, "aHh", 4, 6},                {Section6Identity::aH3a1, "aH3a1", 4, 6},
        {Section6Identity::mixed_BE_corrected, "mixed_BE", 4, 6},
    };
    long cases = 0;
    for (const auto& s : sweeps) {
        for (long n = 0; n <= s.max_n; ++n) {
            for (long m = 0; m <= s.max_m; ++m, ++cases) {
                if (!check_section6(s.id, m, n).passed) {
                    return fail(std::string(s.name) + " at m=" + std::to_string(m) + " n=" + std::to_string(n));
                }
            }
        }
    }
    long discrepancies = 0;
    std::string first;
    for (long n = 0; n <= 4; ++n) {
        for (long m = 0; m <= 6; ++m) {
            for (const auto& c : check_section6(Section6Identity::mixed_BE_printed, m, n).comparisons) {
                if (c.holds()) continue;
                if (discrepancies++ == 0) first = c.label + ": " + c.lhs.to_string() + " != " + c.rhs.to_string();
            }
        }
    }
    std::string detail = std::to_string(cases) + " sweep points pass";
    if (discrepancies > 0) detail += "; printed mixed form: " + std::to_string(discrepancies) + " logged discrepancies, first " + first;
    return {true, detail};
}

Verdict volkenborn() {
    long samples = 0;
    for (const unsigned long p : {2UL, 3UL, 5UL}) {
        const long last = p == 5 ? 5 : 8;
        for (long j = 0; j <= 6; ++j) {
            const ConvergenceReport power = convergence_report(Integrand::power, j, p, 1, last);
            for (std::size_t k = 0; k < power.samples.size(); ++k, ++samples) {
                const VolkenbornSample& s = power.samples[k];
                const std::string where = "p=" + std::to_string(p) + " j=" + std::to_string(j) + " N=" + std::to_string(s.N);
                if (s.error_valuation < Valuation::of(s.N - j - 2)) return fail("power " + where + " below bound");
                if (s.N >= 4 && k > 0) {
                    const Valuation prev = power.samples[k - 1].error_valuation;
                    if (!(s.error_valuation.infinite || prev < s.error_valuation)) return fail("power " + where + " not increasing");
                }
            }
            for (const Integrand f : {Integrand::falling, Integrand::binom}) {
                const VolkenbornSample s = volkenborn_partial_sum(f, j, p, last);
                ++samples;
                const std::string where = to_string(f) + " p=" + std::to_string(p) + " n=" + std::to_string(j);
                if (s.limit != volkenborn_limit(f, j)) return fail(where + " wrong limit");
                if (s.error_valuation < Valuation::of(1)) return fail(where + " valuation " + s.error_valuation.to_string());
            }
        }
    }
    return {true, std::to_string(samples) + " exact samples within bounds"};
}

Verdict typo_ledger() {
    const char* ids[] = {"half-2n1", "harm-S2", "thmH-aHY", "ode-ynldefQED", "ode-ynldefQED-2", "zetaE-n0"};
    std::string example;
    for (const char* id : ids) {
        const IdentityReport report = run_identity(id);
        const RecordOutcome& o = report.outcomes.front();
        if (o.status != IdentityStatus::printed_fails_corrected_ok) return fail(std::string(id) + " is not a typo record");
        if (!o.passed) return fail(std::string(id) + " did not pass");
        if (o.counterexamples.empty() || o.counterexamples.front().form != "printed") {
            return fail(std::string(id) + " has no printed counterexample");
        }
        if (example.empty()) {
            const Counterexample& c = o.counterexamples.front();
            example = std::string(id) + " at " + c.params + ": " + c.lhs + " != " + c.rhs;
        }
    }
    return {true, "5 printed forms (6 records) fail at stored points, corrected forms pass; e.g. " + example};
}

Verdict cosine() {
    const double lambda = 0.1;
    const CosCalibration cal = calibrate_cos_series(lambda);
    const CosSeriesResult r = cos_series_partial(lambda, cal.M);
    const double direct_error = std::fabs(r.direct_partial - r.closed_form);
    char buffer[400];
    std::snprintf(buffer, sizeof buffer,
                  "direct sum error %.2e (tol 1e-12); calibrated M=%ld from M=1..%zu, corrected error %.2e (tol 1e-6); "
                  "printed factor (-1)^{m+1}/2 gives %.6f vs closed form %.6f",
                  direct_error, cal.M, cal.errors.size(), cal.error, r.printed_partial, r.closed_form);
    const bool ok = direct_error <= 1e-12 && cal.error <= 1e-6;
    return {ok, buffer};
}

Verdict full_verify() {
    const char* argv[] = {"finsum", "verify", "--format", "json"};
    std::ostringstream out, err;
    const int code = cli::run(4, argv, out, err);
    const auto doc = nlohmann::json::parse(out.str());
    const long total = doc["total"], passed = doc["passed"];
    std::string detail = std::to_string(passed) + "/" + std::to_string(total) + " records, exit code " + std::to_string(code);
    return {code == cli::ok && passed == total, detail};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "table reproduction", 1, table_reproduction},
        {2, "method agreement", 10, method_agreement},
        {3, "A025529", 1, oeis},
        {4, "hypergeometric form", 5, hypergeometric},
        {5, "Apostol-Bernoulli from y", 10, apostol},
        {6, "Bernoulli-Stirling spine", 5, spine},
        {7, "Laurent checks", 30, section6},
        {8, "Volkenborn certificates", 60, volkenborn},
        {9, "known-typo ledger", 10, typo_ledger},
        {10, "cosine instance", 1, cosine},
        {11, "full verify", 120, full_verify},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            v.pass = false;
            v.detail += "; over budget";
        }
        if (!v.pass) ++failures;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, c.budget_seconds);
        std::cout << "criterion " << c.number << " " << (v.pass ? "PASS" : "FAIL") << " [" << c.title << "] " << v.detail
                  << " (" << timing << ")\n";
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
    return failures == 0 ? 0 : 1;
}
