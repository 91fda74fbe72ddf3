#include <type_traits>

#include "catalog_support.hpp"
#include "finsum/volkenborn.hpp"
#include "finsum/zeta_values.hpp"

namespace finsum::detail {

namespace {

template <class F>
using field_t = std::decay_t<F>;

void record_check(Recorder& r, const std::string& params, const CheckResult& result) {
    if (result.comparisons.empty()) {
        r.check(params, result.passed, result.passed ? "holds" : "fails", "");
        return;
    }
    for (const auto& c : result.comparisons) {
        const std::string label = params + " " + c.label;
        if (c.bound) {
            r.check(label, c.holds(), c.lhs.to_string(), "<= " + c.rhs.to_string());
        } else {
            r.equal(label, c.lhs, c.rhs);
        }
    }
}

std::string mn(long m, long n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

Sweep section6_sweep(long max_n, long max_m) {
    Sweep sweep = sweep_with(max_n, 0, false);
    sweep.max_m = max_m;
    return sweep;
}

Predicate section6_predicate(Section6Identity identity) {
    return [identity](const Sweep& s, Recorder& r) {
        for (long n = 0; n <= s.max_n; ++n) {
            for (long m = 0; m <= s.max_m; ++m) record_check(r, mn(m, n), check_section6(identity, m, n));
        }
    };
}

// Multiple zeta values at negative integers.
void add_section6(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "thm4-ah5z", "section6",
        "Theorem 4, Eq. (ah5z): \"sum_{j=0}^n (1/((j+1) 2^{n+1-j})) (zeta_E^{(n+1-j)}(-m,n+2) - E_m^{(n+1-j)}(n+2)) = 0\"",
        section6_predicate(Section6Identity::ah5z_series), section6_sweep(6, 8), 8));

    out.push_back(printed_ok(
        "thm-1AAe", "section6",
        "Eq. (1AAe): \"sum_{j=0}^n zeta_E^{(n+1-j)}(-m,n+2)/((j+1) 2^{n+1-j}) = sum_j sum_l sum_{l_1+...+l_{n+1-j}=l} "
        "C(m,l) (n+2)^{m-l} l! E_{l_1}...E_{l_{n+1-j}}/(l_1!...l_{n+1-j}! (j+1) 2^{n+1-j})\"",
        section6_predicate(Section6Identity::multinomial_1AAe), section6_sweep(6, 8), 8));

    out.push_back(printed_fails(
        "zetaE-n0", "section6", "Putting n=0 in Eq. (ah5z): \"E_{m+1}(2) = zeta_E(-m,2)\"",
        [](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_m; ++m) {
                record_check(r, mn(m, 0), check_section6(Section6Identity::zetaE_n0_corrected, m, 0));
            }
        },
        [](Recorder& r) { record_check(r, mn(0, 0), check_section6(Section6Identity::zetaE_n0_printed, 0, 0)); },
        section6_sweep(0, 12), 0));

    out.push_back(printed_ok(
        "aHh", "section6",
        "Eq. (aHh): \"sum_{j=0}^n (1/(j+1)) ((-1)^n zeta_{n+1-j}(-m,n+2) + (-1)^j B^{(n+1-j)}_{m+n+1-j}(n+2)/"
        "(C(m+n+1-j,n+1-j) (n+1-j)!)) = 0\"",
        section6_predicate(Section6Identity::aHh), section6_sweep(4, 6), 6));

    out.push_back(printed_ok(
        "aH3a1", "section6",
        "Eq. (aH3a1): \"y(n,1/e^t) = sum_{j=0}^n ((-1)^n/(j+1)) zeta_{n+1-j}(-m,n+2) t^m/m!\"",
        section6_predicate(Section6Identity::aH3a1), section6_sweep(4, 6), 6));

    out.push_back(printed_fails(
        "mixed-BE", "section6",
        "Eqs. (aH3eb), (aHeb), (aH3Be): \"Substituting lambda = -e^{-2t}\", \"y(n,-e^{-2t}) = sum_j ((-1)^{j-1}/(j+1)) "
        "e^{2t(n+2)}/(e^{2t}-1)^{n+1-j}\" and the closing Bernoulli-Euler theorem",
        section6_predicate(Section6Identity::mixed_BE_corrected),
        [](Recorder& r) { record_check(r, mn(0, 0), check_section6(Section6Identity::mixed_BE_printed, 0, 0)); },
        section6_sweep(4, 6), 6));

    out.push_back(printed_ok(
        "zeta-interpolation", "section6",
        "Eqs. (aH3a4a), (aH3a4): \"zeta_d(-m,x) = (-1)^d m! B^{(d)}_{m+d}(x)/(d+m)!\", \"zeta(-m,x) = -B_{m+1}(x)/(m+1)\"",
        [](const Sweep& s, Recorder& r) {
            const Rational points[] = {Rational(2), Rational(3), Rational(1, 2), Rational(5, 3)};
            for (long m = 0; m <= s.max_m; ++m) {
                const Polynomial b = high_order_polynomial(HighOrderFamily::bernoulli_high, 1, m + 1);
                for (const auto& x : points) {
                    const std::string p = "m=" + std::to_string(m) + " x=" + x.to_string();
                    r.equal(p + " d=1", multi_hurwitz_neg(1, m, x), -b.evaluate(x) / Rational(m + 1));
                    r.equal(p + " eta d=1", multi_eta_neg(1, m, x + 1) + multi_eta_neg(1, m, x), 2 * pow(x, m));
                    for (long d = 2; d <= s.max_n; ++d) {
                        const std::string q = p + " d=" + std::to_string(d);
                        r.equal(q, multi_hurwitz_neg(d, m, x) - multi_hurwitz_neg(d, m, x + 1),
                                multi_hurwitz_neg(d - 1, m, x));
                        r.equal(q + " eta", multi_eta_neg(d, m, x + 1) + multi_eta_neg(d, m, x),
                                2 * multi_eta_neg(d - 1, m, x));
                    }
                }
            }
        },
        section6_sweep(5, 8), 8));
}

double cos_tolerance() { return 1e-6; }

// Power series of entire functions and the Hurwitz-Lerch function.
void add_series(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "boyadzhiev-ps1", "series",
        "Eq. (ps1): \"sum_{v>=0} h(v) lambda^v = -sum_{m>=1} (h^{(m-1)}(0)/m!) sum_{n=0}^m (n+1)! lambda^{n+1} "
        "y(n,lambda) S_2(m,n+1)\" for h(v) = v^m",
        [](const Sweep& s, Recorder& r) {
            const Rational points[] = {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-9, 10), Rational(0)};
            for (long m = 0; m <= s.max_m; ++m) {
                for (const auto& lambda : points) {
                    record_check(r, "m=" + std::to_string(m) + " L=" + lambda.to_string(), boyadzhiev_poly_check(m, lambda));
                }
            }
        },
        section6_sweep(6, 6), 8));

    out.push_back(printed_ok(
        "thm6-power", "series",
        "Eq. (Abn-1b) with h(v) = v^k: \"sum_{m>=0} h(m) lambda^m + sum_{m>=1} (h^{(m-1)}(0)/m!) B_m(lambda) = 0\"",
        [](const Sweep& s, Recorder& r) {
            for (long k = 0; k <= s.max_n; ++k) {
                const RationalFunction value =
                    power_lambda_series_closed(k) + apostol_from_y(k + 1) / RationalFunction(Rational(k + 1));
                r.equal("k=" + std::to_string(k) + " L=symbolic", value, RationalFunction(0));
            }
        },
        sweep_with(10), 12));

    out.push_back(printed_ok(
        "lerch-abp", "series", "Eq. (abp): \"Phi(lambda,1-n,b) = -(1/n) B_n(b;lambda)\"",
        [](const Sweep& s, Recorder& r) {
            const Rational lambdas[] = {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-9, 10)};
            const Rational bs[] = {Rational(1), Rational(1, 2), Rational(2), Rational(5, 3)};
            for (long n = 1; n <= s.max_n; ++n) {
                for (const auto& lambda : lambdas) {
                    for (const auto& b : bs) {
                        Rational direct;
                        for (long k = 0; k <= n - 1; ++k) {
                            direct += binom(n - 1, k) * pow(b, n - 1 - k) * power_lambda_series_closed(k).evaluate(lambda);
                        }
                        r.equal("n=" + std::to_string(n) + " L=" + lambda.to_string() + " b=" + b.to_string(),
                                lerch_neg(lambda, n, b), direct);
                    }
                }
            }
        },
        sweep_with(8), 10));

    out.push_back(printed_ok(
        "lerch-1AAep", "series",
        "Eq. (1AAep): \"Phi(lambda,1-n,1) = -(1/n) B_n(1;lambda) = -(1/(n lambda)) B_n(lambda)\", with "
        "\"lambda B_1(1;lambda) = 1 + B_1(lambda)\" and \"B_0(0;lambda) = 0\"",
        [](const Sweep& s, Recorder& r) {
            const RationalFunction L = RationalFunction::variable();
            const RationalFunction one(1);
            r.equal("n=0 b=0", apostol_bernoulli_poly(0).evaluate(RationalFunction(0)), RationalFunction(0));
            for (long n = 1; n <= s.max_n; ++n) {
                const RationalFunction at_one = L * apostol_bernoulli_poly(n).evaluate(one);
                const RationalFunction expected = n == 1 ? one + apostol_bernoulli(1) : apostol_bernoulli(n);
                r.equal(at("n", n, L), at_one, expected);
                if (n < 2) continue;
                for (const Rational& lambda : {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-9, 10)}) {
                    r.equal(at("n", n, lambda), lerch_neg(lambda, n, Rational(1)),
                            -apostol_bernoulli(n).evaluate(lambda) / (Rational(n) * lambda));
                }
            }
        },
        sweep_with(10), 12));

    out.push_back(printed_ok(
        "cos-GH1", "series",
        "Eq. (GH1): \"sum_{v>=0} lambda^v cos(v) = (1 - lambda cos 1)/(1 - 2 lambda cos 1 + lambda^2)\"",
        [](const Sweep&, Recorder& r) {
            for (const double lambda : {0.1, -0.1, 0.2, 0.3, -0.3}) {
                const CosSeriesResult c = cos_series_partial(lambda, 1);
                r.close("L=" + std::to_string(lambda), c.direct_partial, c.closed_form, 1e-12);
            }
        },
        sweep_with(0, 0, false), 0));

    out.push_back(printed_fails(
        "cos-Gh2", "series",
        "Eq. (Gh2): \"sum_{m>=1} sum_{n=0}^{2m-1} ((-1)^{m+1} (n+1)! S_2(2m-1,n+1)/(2 (2m-1)!)) lambda^{n+1} "
        "y(n,lambda) = (1 - lambda cos 1)/(1 - 2 lambda cos 1 + lambda^2)\"",
        [](const Sweep&, Recorder& r) {
            for (const double lambda : {0.1, -0.1, 0.2}) {
                const CosCalibration cal = calibrate_cos_series(lambda);
                const CosSeriesResult c = cos_series_partial(lambda, cal.M);
                r.close("L=" + std::to_string(lambda) + " M=" + std::to_string(cal.M), c.corrected_partial,
                        c.closed_form, cos_tolerance());
            }
        },
        [](Recorder& r) {
            const double lambda = 0.1;
            const CosCalibration cal = calibrate_cos_series(lambda);
            const CosSeriesResult c = cos_series_partial(lambda, cal.M);
            r.close("L=0.1 M=" + std::to_string(cal.M), c.printed_partial, c.closed_form, cos_tolerance());
        },
        sweep_with(0, 0, false), 0));

    out.push_back(printed_fails(
        "cos-fibtype", "series",
        "Theorem: \"the Eq. (Gh2) double series = 1 + sum_{n>=1} (G_n(2cos 1,-1;1,1,1) - G_{n-1}(2cos 1,-1;1,1,1) "
        "cos 1) lambda^n\"",
        [](const Sweep&, Recorder& r) {
            for (const double lambda : {0.1, -0.1, 0.2}) {
                const CosCalibration cal = calibrate_cos_series(lambda);
                const CosSeriesResult c = cos_series_partial(lambda, cal.M);
                const std::string p = "L=" + std::to_string(lambda) + " M=" + std::to_string(cal.M);
                r.close(p, c.corrected_partial, c.fibonacci_partial, cos_tolerance());
                r.close(p + " closed", c.fibonacci_partial, c.closed_form, cos_tolerance());
            }
        },
        [](Recorder& r) {
            const double lambda = 0.1;
            const CosCalibration cal = calibrate_cos_series(lambda);
            const CosSeriesResult c = cos_series_partial(lambda, cal.M);
            r.close("L=0.1 M=" + std::to_string(cal.M), c.printed_partial, c.fibonacci_partial, cos_tolerance());
        },
        sweep_with(0, 0, false), 0));
}

// The Volkenborn integral route to G(t,lambda).
void add_volkenborn(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "volk-pG", "volkenborn",
        "Eqs. (pG), (pG1): \"G(t,lambda) = ((1-lambda)/(lambda(t-1))) int_{Z_p} (1 + ((1-lambda)/lambda) t)^x dmu_1(x)\"",
        [](const Sweep& s, Recorder& r) {
            for (const auto& lambda : s.lambdas) {
                r.check("T=" + std::to_string(s.max_n) + " L=" + lambda.to_string(), pG_series_check(lambda, s.max_n),
                        "series differ", "");
            }
            if (s.symbolic) {
                r.check("T=" + std::to_string(s.symbolic_max) + " L=symbolic", pG_series_check_symbolic(s.symbolic_max),
                        "series differ", "");
            }
        },
        sweep_with(20, 8), 40));

    out.push_back(printed_ok(
        "volk-mahler-1aGa", "volkenborn",
        "Eq. (pG3) with \"int_{Z_p} C(x,n) mu_1(x) = (-1)^n/(n+1)\": \"we arrive at the equation (1aGa)\"",
        [](const Sweep& s, Recorder& r) {
            for (const auto& lambda : s.lambdas) {
                r.check("n<=" + std::to_string(s.max_n) + " L=" + lambda.to_string(),
                        mahler_recurrence_check(lambda, s.max_n), "recurrence differs", "");
            }
        },
        sweep_with(20), 40));

    out.push_back(printed_ok(
        "volk-daehee-rec", "volkenborn",
        "Theorem: \"y(n-1,lambda) + (lambda-1) y(n,lambda) = D_n/(lambda^{n+1} n!)\" with "
        "\"D_m = int_{Z_p} (x)_m mu_1(x)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 1, [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const Rational d = volkenborn_limit(Integrand::falling, n);
                const F lhs = y_of(n - 1, lambda) + (lambda - F(1)) * y_of(n, lambda);
                r.equal(at("n", n, lambda), lhs, F(d / fact(n)) / pow(lambda, n + 1));
                r.equal(at("n", n, lambda) + " D", d, daehee(n));
            });
        },
        sweep_with(30), 60));

    const struct {
        const char* id;
        Integrand integrand;
        const char* anchor;
    } integrals[] = {
        {"volk-power", Integrand::power, "Eq. (M) with \"B_j = int_{Z_p} x^j mu_1(x)\""},
        {"volk-falling", Integrand::falling, "Eq. (M) with \"D_m = int_{Z_p} (x)_m mu_1(x)\""},
        {"volk-binom", Integrand::binom, "Eq. (M) with \"int_{Z_p} C(x,n) mu_1(x) = (-1)^n/(n+1)\""},
    };
    for (const auto& item : integrals) {
        const Integrand integrand = item.integrand;
        out.push_back(printed_ok(
            item.id, "volkenborn", item.anchor,
            [integrand](const Sweep& s, Recorder& r) {
                for (const unsigned long p : {2UL, 3UL, 5UL}) {
                    const long last = p == 5 ? 5 : 8;
                    for (long j = 0; j <= s.max_n; ++j) {
                        const std::string params = "p=" + std::to_string(p) + " j=" + std::to_string(j) +
                                                   " N<=" + std::to_string(last);
                        const ConvergenceReport report = convergence_report(integrand, j, p, 1, last);
                        std::string violations;
                        for (const auto& v : report.violations) violations += (violations.empty() ? "" : "; ") + v;
                        r.check(params, report.ok(), violations, "");
                        const VolkenbornSample& final = report.samples.back();
                        r.equal(params + " limit", final.limit, volkenborn_limit(integrand, j));
                        if (integrand != Integrand::power) {
                            r.check(params + " final valuation", final.error_valuation >= Valuation::of(1),
                                    final.error_valuation.to_string(), ">= 1");
                        }
                    }
                }
            },
            sweep_with(6, 0, false), 6));
    }
}

}  // namespace

void add_analytic_records(std::vector<IdentityRecord>& out) {
    add_section6(out);
    add_series(out);
    add_volkenborn(out);
}

}  // namespace finsum::detail
