#include <type_traits>

#include "catalog_support.hpp"
#include "finsum/zeta_values.hpp"

namespace finsum::detail {

namespace {

template <class F>
using field_t = std::decay_t<F>;

// Generating functions and their special values.
void add_genfun(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "thm1-1aG1", "genfun", "Theorem 1, Eq. (1aG1): \"G(z,lambda) = ln(1 - ((lambda-1)/lambda) z)/(z(z-1))\"",
        [](const Sweep& s, Recorder& r) {
            for_lambda_values(s, [&](const auto& lambda, long T) {
                using F = field_t<decltype(lambda)>;
                const auto G = series_G(lambda, T);
                for (long n = 0; n <= T; ++n) {
                    r.equal(at("n", n, lambda), G.coeff(n), pow(F(1) - lambda, n + 2) * y_of(n, lambda));
                }
            });
        }));

    out.push_back(printed_fails(
        "thm2-1aGH", "genfun",
        "Theorem 2, Eq. (1aGH): \"G(z,lambda) = ((1-lambda) z/(lambda(z-1))) 2F1[1,1;2;((1-lambda)/lambda) z]\"",
        [](const Sweep& s, Recorder& r) {
            for (const auto& lambda : s.lambdas) {
                const auto H = series_G_hypergeometric(lambda, s.max_n);
                const auto G = series_G(lambda, s.max_n);
                for (long n = 0; n <= s.max_n; ++n) r.equal(at("n", n, lambda), H.coeff(n), G.coeff(n));
            }
            if (!s.symbolic) return;
            const auto L = RationalFunction::variable();
            const auto H = series_G_hypergeometric(L, s.symbolic_max);
            const auto G = series_G(L, s.symbolic_max);
            for (long n = 0; n <= s.symbolic_max; ++n) r.equal(at("n", n, L), H.coeff(n), G.coeff(n));
        },
        [](Recorder& r) {
            const Rational lambda(2);
            const auto P = series_G_hypergeometric_printed(lambda, 2);
            const auto G = series_G(lambda, 2);
            for (long n = 0; n <= 2; ++n) r.equal(at("n", n, lambda), P.coeff(n), G.coeff(n));
        },
        sweep_with(30, 12)));

    struct Special {
        const char* id;
        const char* anchor;
        SpecialG which;
        Rational lambda;
    };
    const Special specials[] = {
        {"g1-1aG2", "Eq. (1aG2): \"g_1(z) = G(z,-1) = ln(1-2z)/(z^2-z) = sum 2^{n+2} y(n,-1) z^n\"", SpecialG::g1,
         Rational(-1)},
        {"g2-1aG3", "Eq. (1aG3): \"g_2(z) = G(z,2) = ln(1-z/2)/(z^2-z) = sum (-1)^n y(n,2) z^n\"", SpecialG::g2,
         Rational(2)},
        {"g3-1aYn", "Eq. (1aYn): \"g_3(z) = G(z,1/2) = ln(1+z)/(z^2-z) = sum y(n,1/2) z^n / 2^{n+2}\"", SpecialG::g3,
         Rational(1, 2)},
    };
    for (const auto& sp : specials) {
        const SpecialG which = sp.which;
        const Rational lambda = sp.lambda;
        out.push_back(printed_ok(
            sp.id, "genfun", sp.anchor,
            [which, lambda](const Sweep& s, Recorder& r) {
                const auto g = series_g_special(which, s.max_n);
                const auto G = series_G(lambda, s.max_n);
                for (long n = 0; n <= s.max_n; ++n) {
                    const Rational y = y_direct(n, lambda);
                    Rational expected;
                    switch (which) {
                        case SpecialG::g1: expected = pow(Rational(2), n + 2) * y; break;
                        case SpecialG::g2: expected = sign(n) * y; break;
                        case SpecialG::g3: expected = y / pow(Rational(2), n + 2); break;
                    }
                    r.equal(at("n", n), g.coeff(n), expected);
                    r.equal(at("n", n) + " vs G", g.coeff(n), G.coeff(n));
                }
            },
            sweep_with(40), 200));
    }

    out.push_back(printed_ok(
        "pde-1aGd1", "genfun",
        "Eq. (1aGd1): \"(z^2-z) dG/dz + (2z-1) G(z,lambda) = (1-lambda)/(lambda+(1-lambda)z)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambda_values(s, [&](const auto& lambda, long T) {
                using F = field_t<decltype(lambda)>;
                const auto G = series_G(lambda, T);
                const auto lhs = G.shifted(2) - G.shifted(1);
                const auto d = lhs.derivative();
                const F ratio = (F(1) - lambda) / lambda;
                for (long n = 0; n < T; ++n) {
                    r.equal(at("n", n, lambda), d.coeff(n), F(sign(n)) * pow(ratio, n + 1));
                }
            });
        }));

    out.push_back(printed_ok(
        "pde-1aGd2-4", "genfun",
        "Eqs. (1aGd2)-(1aGd4): \"(z^2-z) d/dz g_1 + (2z-1) g_1 = 2/(2z-1)\", with right sides 1/(z-2) and 1/(z+1)",
        [](const Sweep& s, Recorder& r) {
            const long T = s.max_n;
            const struct {
                SpecialG which;
                const char* name;
            } cases[] = {{SpecialG::g1, "g1"}, {SpecialG::g2, "g2"}, {SpecialG::g3, "g3"}};
            for (const auto& c : cases) {
                const auto g = series_g_special(c.which, T + 1);
                const auto d = (g.shifted(2) - g.shifted(1)).derivative();
                for (long n = 0; n <= T; ++n) {
                    Rational rhs;
                    switch (c.which) {
                        case SpecialG::g1: rhs = -pow(Rational(2), n + 1); break;
                        case SpecialG::g2: rhs = -inverse(pow(Rational(2), n + 1)); break;
                        case SpecialG::g3: rhs = sign(n); break;
                    }
                    r.equal(std::string(c.name) + " n=" + std::to_string(n), d.coeff(n), rhs);
                }
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "series-1aYn2", "genfun", "Eq. (1aYn2): \"F_2(z) - g_3(z) = sum (-1)^n z^n/(n+1)\"",
        [](const Sweep& s, Recorder& r) {
            const long T = s.max_n;
            const auto log1p = series_mercator<Rational>(T + 1);
            const auto F2 = divide(log1p, LaurentSeries<Rational>(0, {Rational(-1), Rational(1)}), T);
            const auto g3 = series_g_special(SpecialG::g3, T);
            for (long n = 0; n <= T; ++n) {
                r.equal(at("n", n), F2.coeff(n) - g3.coeff(n), Rational(n % 2 == 0 ? 1 : -1, n + 1));
                r.equal(at("n", n) + " H", F2.coeff(n), alt_harmonic(n));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "fibtype-GH", "genfun",
        "Eq. (GH): \"sum G_n(x,y;k,m,l) t^n = 1/(1 - x^k t - y^m t^{m+l})\"",
        [](const Sweep& s, Recorder& r) {
            const long n_max = std::min(s.max_n, 12L);
            for (long k = 0; k <= 2; ++k) {
                for (long m = 0; m <= 2; ++m) {
                    for (long l = 0; l <= 2; ++l) {
                        if (m == 0 && l == 0) continue;
                        for (long n = 0; n <= n_max; ++n) {
                            const auto a = fibtype_poly(n, k, m, l);
                            const auto b = fibtype_poly_series(n, k, m, l);
                            r.check("n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                        " l=" + std::to_string(l),
                                    a == b, to_string(a, "y"), to_string(b, "y"));
                        }
                    }
                }
            }
        },
        sweep_with(12), 12));

    out.push_back(printed_ok(
        "leibnitz-A1", "genfun",
        "Eq. (A1): \"G_l(x,u) = (ln(1-u) + ln(1-xu))/((1-u)(1-xu) - 1) = sum L_n(x) u^m\"",
        [](const Sweep& s, Recorder& r) {
            for (const Rational& x : {Rational(2), Rational(-3), Rational(1, 3), Rational(1)}) {
                const auto G = leibnitz_series(x, s.max_n);
                for (long m = 0; m <= s.max_n; ++m) {
                    r.equal("m=" + std::to_string(m) + " x=" + x.to_string(), G.coeff(m),
                            leibnitz_polynomial(m).evaluate(x));
                }
            }
            if (!s.symbolic) return;
            const auto G = leibnitz_series(RationalFunction::variable(), s.symbolic_max);
            for (long m = 0; m <= s.symbolic_max; ++m) {
                r.equal("m=" + std::to_string(m) + " x=symbolic", G.coeff(m), RationalFunction(leibnitz_polynomial(m)));
            }
        }));
}

// Special numbers and their computation formulas.
void add_special(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "stirling1-s1C", "special",
        "Eq. (s1C): \"a computation formula of the Stirling numbers of the first kind\"; Eq. (Sitirling1a)",
        [](const Sweep& s, Recorder& r) {
            Polynomial falling(Rational(1));
            for (long n = 0; n <= s.max_n; ++n) {
                if (n > 0) falling = falling * Polynomial({Rational(-(n - 1)), Rational(1)});
                for (long k = 0; k <= n; ++k) {
                    const std::string p = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    const Rational rec = stirling1(n, k, StirlingMethod::recurrence);
                    r.equal(p, stirling1(n, k, StirlingMethod::formula), rec);
                    r.equal(p + " falling", falling.coefficient(static_cast<std::size_t>(k)), rec);
                }
            }
        }));

    out.push_back(printed_ok(
        "stirling2-S2C", "special", "Eq. (S2C): \"S_2(n,k) = (1/k!) sum (-1)^{k-c} C(k,c) c^n\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                for (long k = 0; k <= n; ++k) {
                    Rational sum;
                    for (long c = 0; c <= k; ++c) sum += sign(k - c) * binom(k, c) * pow(Rational(c), n);
                    r.equal("n=" + std::to_string(n) + " k=" + std::to_string(k), sum / fact(k),
                            uncached::stirling2_recurrence(n, k));
                }
            }
        }));

    out.push_back(printed_ok(
        "apostol-AbnC", "special",
        "Eq. (AbnC): \"a computation formula of the Apostol-Bernoulli numbers\" against Eq. (Abn)",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.symbolic_max + 4; ++n) {
                r.equal(at("n", n), apostol_bernoulli(n), apostol_bernoulli_series(n));
            }
        },
        sweep_with(20, 10), 20));

    out.push_back(printed_ok(
        "leibnitz-ExpLeib", "special",
        "Eqs. (ExpLeib), (SumLeib): \"l(m,l) = 1/((m+1) C(m,l))\" and its alternating-sum and Bernstein forms",
        [](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_n; ++m) {
                for (long l = 0; l <= m; ++l) {
                    const std::string p = "m=" + std::to_string(m) + " l=" + std::to_string(l);
                    const Rational closed = leibnitz(m, l, LeibnitzMethod::closed);
                    r.equal(p + " sum", leibnitz(m, l, LeibnitzMethod::sum), closed);
                    r.equal(p + " bernstein", leibnitz(m, l, LeibnitzMethod::bernstein), closed);
                }
            }
        }));

    out.push_back(printed_ok(
        "alt-harmonic-AlH", "special",
        "Eq. (AlH): \"F_2(u) = ln(1+u)/(u-1) = sum H_n u^n\" with \"H_n = sum (-1)^j/j = H_[n/2] - H_n\"",
        [](const Sweep& s, Recorder& r) {
            const long T = s.max_n;
            const auto F2 = divide(series_mercator<Rational>(T + 1), LaurentSeries<Rational>(0, {Rational(-1), Rational(1)}), T);
            Rational partial;
            for (long n = 0; n <= T; ++n) {
                if (n > 0) partial += Rational(n % 2 == 0 ? 1 : -1, n);
                r.equal(at("n", n) + " series", F2.coeff(n), alt_harmonic(n));
                r.equal(at("n", n) + " sum", partial, alt_harmonic(n));
                r.equal(at("n", n) + " split", plain_harmonic(n / 2) - plain_harmonic(n), alt_harmonic(n));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "daehee-D", "special", "Eqs. (Da), (D): \"F_3(u) = ln(1+u)/u = sum D_n u^n/n!\", \"D_n = (-1)^n n!/(n+1)\"",
        [](const Sweep& s, Recorder& r) {
            const auto F3 = series_mercator<Rational>(s.max_n + 1).shifted(-1);
            for (long n = 0; n <= s.max_n; ++n) {
                r.equal(at("n", n) + " series", F3.coeff(n) * fact(n), daehee(n));
                r.equal(at("n", n) + " closed", sign(n) * fact(n) / Rational(n + 1), daehee(n));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "derangement-dn", "special",
        "Eq. (dn): \"F_d(u) = e^{-u}/(1-u) = sum d_m u^m/m!\" with \"d_m = sum (-1)^j (m-j)! C(m,j)\"",
        [](const Sweep& s, Recorder& r) {
            const long T = s.max_n;
            const auto e = series_exp<Rational>(T);
            std::vector<Rational> neg;
            for (long k = 0; k <= T; ++k) neg.push_back(e.coeff(k) * sign(k));
            const auto Fd = LaurentSeries<Rational>(0, neg, T) * series_geometric<Rational>(T);
            for (long m = 0; m <= T; ++m) {
                Rational sum;
                for (long j = 0; j <= m; ++j) sum += sign(j) * fact(m - j) * binom(m, j);
                r.equal(at("m", m) + " series", Fd.coeff(m) * fact(m), derangement(m));
                r.equal(at("m", m) + " sum", sum, derangement(m));
                r.equal(at("m", m) + " recurrence", uncached::derangement_recurrence(m), derangement(m));
            }
        }));

    out.push_back(printed_ok(
        "cauchy-Be-1t", "special", "Eq. (Be-1t): \"F_b2(u) = u/ln(1+u) = sum b_v(0) u^v/v!\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                Rational sum;
                for (long k = 0; k <= n; ++k) sum += binom(n, k) * bernoulli_second_kind(k) * daehee(n - k);
                r.equal(at("n", n), sum, Rational(n == 0 ? 1 : 0));
            }
        }));

    out.push_back(printed_ok(
        "a91", "special", "Eq. (a91): \"sum_{n=0}^m B_n S_1(m,n) = (-1)^m m!/(m+1)\"",
        [](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_n; ++m) {
                Rational sum;
                for (long n = 0; n <= m; ++n) sum += bernoulli(n) * stirling1(m, n);
                r.equal(at("m", m), sum, sign(m) * fact(m) / Rational(m + 1));
                r.equal(at("m", m) + " daehee", sum, daehee(m));
            }
        },
        sweep_with(40), 80));

    out.push_back(printed_ok(
        "half-91b", "special", "Eq. (91b): \"y(n,1/2) = 2^{n+2} sum_{j=0}^n (-1)^{j+1}/(j+1)\"",
        [](const Sweep& s, Recorder& r) {
            Rational sum;
            for (long n = 0; n <= s.max_n; ++n) {
                sum += Rational(n % 2 == 0 ? -1 : 1, n + 1);
                r.equal(at("n", n), y_direct(n, Rational(1, 2)), pow(Rational(2), n + 2) * sum);
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "half-91c", "special",
        "Eq. (91c): \"y(n,1/2) = 2^{n+2}(H_[n/2] - H_n + (-1)^{n+1}/(n+1))\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                const Rational rhs = pow(Rational(2), n + 2) * (plain_harmonic(n / 2) - plain_harmonic(n) +
                                                                Rational(n % 2 == 0 ? -1 : 1, n + 1));
                r.equal(at("n", n), y_direct(n, Rational(1, 2)), rhs);
            }
        },
        sweep_with(40), 200));
}

// The log-product theorem and the alternating harmonic identities.
void add_harmonic(std::vector<IdentityRecord>& out) {
    out.push_back(printed_fails(
        "thmH-aHY", "harmonic",
        "Theorem H, Eq. (aHY): \"H_{2n+2} - H_{n+1} = -1/(2(n+1)) + (n+1) sum_{k=0}^{2n-1} lambda^{k+2} y(n,lambda)/(2n-k) "
        "+ (n+1)(lambda-1) sum_{k=0}^{2n} lambda^{k+1} y(n,lambda)/(2n+1-k)\"",
        [](const Sweep& s, Recorder& r) {
            const auto body = [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                F first;
                for (long k = 0; k <= 2 * n - 1; ++k) first += pow(lambda, k + 2) * y_of(k, lambda) / F(Rational(2 * n - k));
                F second;
                for (long k = 0; k <= 2 * n; ++k) second += pow(lambda, k + 1) * y_of(k, lambda) / F(Rational(2 * n + 1 - k));
                const F rhs = F(Rational(-1, 2 * (n + 1))) + F(Rational(n + 1)) * first +
                              F(Rational(n + 1)) * (lambda - F(1)) * second;
                r.equal(at("n", n, lambda), F(plain_harmonic(2 * n + 2) - plain_harmonic(n + 1)), rhs);
            };
            for (const auto& lambda : s.lambdas) {
                for (long n = 1; 2 * n <= s.max_n; ++n) body(n, lambda);
            }
            if (!s.symbolic) return;
            for (long n = 1; 2 * n <= s.symbolic_max; ++n) body(n, RationalFunction::variable());
        },
        [](Recorder& r) {
            const Rational lambda(2);
            const long n = 1;
            const Rational y = y_direct(n, lambda);
            Rational first;
            for (long k = 0; k <= 2 * n - 1; ++k) first += pow(lambda, k + 2) * y / Rational(2 * n - k);
            Rational second;
            for (long k = 0; k <= 2 * n; ++k) second += pow(lambda, k + 1) * y / Rational(2 * n + 1 - k);
            const Rational rhs = Rational(-1, 2 * (n + 1)) + Rational(n + 1) * first + Rational(n + 1) * (lambda - 1) * second;
            r.equal(at("n", n, lambda), plain_harmonic(2 * n + 2) - plain_harmonic(n + 1), rhs);
        },
        sweep_with(40), 80));

    out.push_back(printed_fails(
        "furdui-Af2", "harmonic",
        "Eq. (Af2): \"ln(1-y) ln(1+y) = sum_{v>=1} (H_v - H_v - 1/(2v)) y^{2v}/v\"",
        [](const Sweep& s, Recorder& r) {
            const long T = 2 * s.max_n;
            const auto up = series_mercator<Rational>(T);
            std::vector<Rational> down;
            for (long k = 0; k <= T; ++k) down.push_back(up.coeff(k) * sign(k));
            const auto product = LaurentSeries<Rational>(0, down, T) * up;
            for (long v = 1; v <= s.max_n; ++v) {
                const Rational expected =
                    (plain_harmonic(v) - plain_harmonic(2 * v) - Rational(1, 2 * v)) / Rational(v);
                r.equal(at("v", v), product.coeff(2 * v), expected);
                r.equal(at("v", v) + " odd", product.coeff(2 * v - 1), Rational(0));
            }
        },
        [](Recorder& r) {
            const auto up = series_mercator<Rational>(2);
            const auto down = LaurentSeries<Rational>(0, {Rational(0), Rational(-1), Rational(-1, 2)}, 2);
            const long v = 1;
            r.equal(at("v", v), (down * up).coeff(2),
                    (plain_harmonic(v) - plain_harmonic(v) - Rational(1, 2 * v)) / Rational(v));
        },
        sweep_with(40), 100));

    out.push_back(printed_fails(
        "logprod-Af-1", "harmonic",
        "Eq. (Af-1): \"ln(1-wz) ln(1+wz)/(z(z-1)) = sum_n sum_{k=0}^n (-1)^n (1-lambda)^{n+3} y(k,lambda) "
        "z^{n+1}/((n+1-k) lambda^{n-k+1})\"",
        [](const Sweep& s, Recorder& r) {
            for_lambda_values(s, [&](const auto& lambda, long T) {
                using F = field_t<decltype(lambda)>;
                const auto P = log_product_series(lambda, T + 1);
                r.equal(at("n", -1, lambda), P.coeff(0), F(0));
                for (long n = 0; n <= T; ++n) {
                    F sum;
                    for (long k = 0; k <= n; ++k) {
                        sum += pow(F(1) - lambda, n + 3) * y_of(k, lambda) / (F(Rational(n + 1 - k)) * pow(lambda, n - k + 1));
                    }
                    r.equal(at("n", n, lambda), P.coeff(n + 1), -sum);
                }
            });
        },
        [](Recorder& r) {
            const Rational lambda(2);
            const auto P = log_product_series(lambda, 1);
            const long n = 0;
            const Rational rhs = sign(n) * pow(Rational(1) - lambda, n + 3) * y_direct(0, lambda) / lambda;
            r.equal(at("n", n, lambda), P.coeff(n + 1), rhs);
        }));

    out.push_back(printed_ok(
        "zero-sum-1aGi", "harmonic",
        "Corollary after Eq. (1aGi): \"sum_{k=0}^{2n-2} (1-lambda)^{2n+1} y(k,lambda)/((2n-k-1) lambda^{2n-k-1}) - "
        "sum_{k=0}^{2n-1} (1-lambda)^{2n+2} y(k,lambda)/((2n-k) lambda^{2n-k}) = 0\"",
        [](const Sweep& s, Recorder& r) {
            const auto body = [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const F u = F(1) - lambda;
                F a;
                for (long k = 0; k <= 2 * n - 2; ++k) {
                    a += pow(u, 2 * n + 1) * y_of(k, lambda) / (F(Rational(2 * n - k - 1)) * pow(lambda, 2 * n - k - 1));
                }
                F b;
                for (long k = 0; k <= 2 * n - 1; ++k) {
                    b += pow(u, 2 * n + 2) * y_of(k, lambda) / (F(Rational(2 * n - k)) * pow(lambda, 2 * n - k));
                }
                r.equal(at("n", n, lambda), a - b, F(0));
            };
            for (const auto& lambda : s.lambdas) {
                for (long n = 1; 2 * n <= s.max_n; ++n) body(n, lambda);
            }
            if (!s.symbolic) return;
            for (long n = 1; 2 * n <= s.symbolic_max; ++n) body(n, RationalFunction::variable());
        },
        sweep_with(40), 80));

    out.push_back(printed_fails(
        "leibnitz-A1l", "harmonic",
        "Eq. (A1l): \"-((lambda-1)/lambda)(x+1-((lambda-1)/lambda) z) G_l(x,((lambda-1)/lambda) z) = (z-1)G(z,lambda) + "
        "x(xz-1)G(xz,lambda)\"",
        [](const Sweep& s, Recorder& r) {
            const long T = s.max_n;
            for (const auto& lambda : s.lambdas) {
                const Rational c = (lambda - 1) / lambda;
                for (const Rational& x : {Rational(2), Rational(-3), Rational(1, 3)}) {
                    using S = LaurentSeries<Rational>;
                    const S Gl = dilated(leibnitz_series(x, T), c);
                    const S factor(0, {-c * (x + 1), c * c * x});
                    const S lhs = factor * Gl;
                    const S G = series_G(lambda, T);
                    const S rhs = S(0, {Rational(-1), Rational(1)}) * G +
                                  S(0, {-x, x * x}) * dilated(G, x);
                    for (long n = 0; n <= T; ++n) {
                        r.equal("n=" + std::to_string(n) + " x=" + x.to_string() + " L=" + lambda.to_string(),
                                lhs.coeff(n), rhs.coeff(n));
                    }
                }
            }
        },
        [](Recorder& r) {
            using S = LaurentSeries<Rational>;
            const Rational lambda(2);
            const Rational x(2);
            const Rational c = (lambda - 1) / lambda;
            const S lhs = S(0, {-c * (x + 1), c * c}) * dilated(leibnitz_series(x, 1), c);
            const S G = series_G(lambda, 1);
            const S rhs = S(0, {Rational(-1), Rational(1)}) * G + S(0, {-x, x * x}) * dilated(G, x);
            r.equal("n=1 x=2 L=2", lhs.coeff(1), rhs.coeff(1));
        },
        sweep_with(20), 40));

    out.push_back(printed_ok(
        "leibnitz-A1l1", "harmonic",
        "Eq. (A1l1): \"(x+1) L_n(x) - x L_{n-1}(x) = (-1)^n lambda^{n+1} (x^{n+1}+1) ((lambda-1) y(n,lambda) + "
        "y(n-1,lambda))\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 1, [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const Polynomial x = Polynomial::variable();
                const Polynomial lhs = (x + Polynomial(Rational(1))) * leibnitz_polynomial(n) - x * leibnitz_polynomial(n - 1);
                const F scalar = F(sign(n)) * pow(lambda, n + 1) * ((lambda - F(1)) * y_of(n, lambda) + y_of(n - 1, lambda));
                for (long k = 0; k <= n + 1; ++k) {
                    const F rhs = (k == 0 || k == n + 1) ? scalar : F(0);
                    r.equal(at("n", n, lambda) + " x^" + std::to_string(k), F(lhs.coefficient(static_cast<std::size_t>(k))), rhs);
                }
            });
        }));

    out.push_back(printed_ok(
        "cauchy-g3Fb2", "harmonic",
        "Theorem after \"g_3(z) F_b2(z) = 1/(z-1)\": \"sum_{j=0}^n y(j,1/2) b_{n-j}(0)/(2^j (n-j)!) = -4\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                Rational sum;
                for (long j = 0; j <= n; ++j) {
                    sum += y_direct(j, Rational(1, 2)) * bernoulli_second_kind(n - j) / (pow(Rational(2), j) * fact(n - j));
                }
                r.equal(at("n", n), sum, Rational(-4));
            }
        }));

    const Rational half(1, 2);
    out.push_back(printed_ok(
        "half-daehee", "harmonic", "Theorem: \"y(n,1/2) = (2^{n+2}/n!)(n! H_n - D_n)\"",
        [half](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                r.equal(at("n", n), y_direct(n, half),
                        pow(Rational(2), n + 2) / fact(n) * (fact(n) * alt_harmonic(n) - daehee(n)));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "half-bernoulli-stirling", "harmonic",
        "Corollary: \"y(n,1/2) = (2^{n+2}/n!)(n! H_n - sum_{j=0}^n B_j S_1(n,j))\"",
        [half](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                Rational sum;
                for (long j = 0; j <= n; ++j) sum += bernoulli(j) * stirling1(n, j);
                r.equal(at("n", n), y_direct(n, half), pow(Rational(2), n + 2) / fact(n) * (fact(n) * alt_harmonic(n) - sum));
            }
        },
        sweep_with(40), 80));

    out.push_back(printed_ok(
        "half-1aYn1", "harmonic", "Eq. (1aYn1): \"y(n,1/2) = 2^{n+2}(H_n + (-1)^{n+1}/(n+1))\"",
        [half](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                r.equal(at("n", n), y_direct(n, half),
                        pow(Rational(2), n + 2) * (alt_harmonic(n) + Rational(n % 2 == 0 ? -1 : 1, n + 1)));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_fails(
        "half-2n1", "harmonic", "Corollary: \"y(n,1/2) = 2^{n+1} H_{n+1}\"",
        [half](const Sweep& s, Recorder& r) {
            for (long n = 0; n <= s.max_n; ++n) {
                r.equal(at("n", n), y_direct(n, half), pow(Rational(2), n + 2) * alt_harmonic(n + 1));
            }
        },
        [half](Recorder& r) { r.equal(at("n", 0), y_direct(0, half), pow(Rational(2), 1) * alt_harmonic(1)); },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "aHhy", "harmonic", "Eq. (aHhy): \"H_n = y(n-1,1/2)/2^{n+1}\"",
        [half](const Sweep& s, Recorder& r) {
            for (long n = 1; n <= s.max_n; ++n) {
                r.equal(at("n", n), alt_harmonic(n), y_direct(n - 1, half) / pow(Rational(2), n + 1));
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "harm-shift", "harmonic",
        "Relations \"D_{n-1} = (n-1)!(H_{n-1} - H_n)\" and \"H_{n-1} - H_n = (-1)^{n-1}/n\"",
        [](const Sweep& s, Recorder& r) {
            for (long n = 1; n <= s.max_n; ++n) {
                const Rational diff = alt_harmonic(n - 1) - alt_harmonic(n);
                r.equal(at("n", n), diff, Rational(n % 2 == 1 ? 1 : -1, n));
                r.equal(at("n", n) + " daehee", daehee(n - 1), fact(n - 1) * diff);
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "harm-daehee", "harmonic", "Eq. (HarmonicDaehee): \"H_n = -sum_{j=0}^{n-1} D_j/j!\"",
        [](const Sweep& s, Recorder& r) {
            Rational sum;
            for (long n = 1; n <= s.max_n; ++n) {
                sum += daehee(n - 1) / fact(n - 1);
                r.equal(at("n", n), alt_harmonic(n), -sum);
            }
        },
        sweep_with(40), 200));

    out.push_back(printed_ok(
        "harm-bernoulli-stirling", "harmonic",
        "Theorem: \"H_n = -sum_{j=0}^{n-1} sum_{v=0}^j B_v S_1(j,v)/j!\"",
        [](const Sweep& s, Recorder& r) {
            Rational sum;
            for (long n = 1; n <= s.max_n; ++n) {
                const long j = n - 1;
                for (long v = 0; v <= j; ++v) sum += bernoulli(v) * stirling1(j, v) / fact(j);
                r.equal(at("n", n), alt_harmonic(n), -sum);
            }
        },
        sweep_with(40), 80));

    out.push_back(printed_ok(
        "thm5-1aGbs", "harmonic",
        "Theorem 5, Eq. (1aGbs): \"y(m,lambda) = sum_{v=0}^m sum_{n=0}^v (-1)^{v-m} (lambda-1)^{v-m-1} B_n S_1(v,n)/"
        "(lambda^{v+1} v!)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 0, [&](long m, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                F sum;
                for (long v = 0; v <= m; ++v) {
                    Rational inner;
                    for (long n = 0; n <= v; ++n) inner += bernoulli(n) * stirling1(v, n);
                    sum += F(sign(v - m) * inner / fact(v)) * pow(lambda - F(1), v - m - 1) / pow(lambda, v + 1);
                }
                r.equal(at("m", m, lambda), sum, y_of(m, lambda));
                r.equal(at("m", m, lambda) + " algorithm", y_algorithm1(m, lambda), y_of(m, lambda));
            });
        }));

    out.push_back(printed_ok(
        "thm5-half-1aGbs1", "harmonic",
        "Eq. (1aGbs1): \"y(m,1/2) = -2^{m+2} sum_{v=0}^m sum_{n=0}^v B_n S_1(v,n)/v!\"",
        [half](const Sweep& s, Recorder& r) {
            Rational sum;
            for (long m = 0; m <= s.max_n; ++m) {
                for (long n = 0; n <= m; ++n) sum += bernoulli(n) * stirling1(m, n) / fact(m);
                r.equal(at("m", m), y_direct(m, half), -pow(Rational(2), m + 2) * sum);
            }
        },
        sweep_with(40), 80));

    out.push_back(printed_ok(
        "thm5-two", "harmonic",
        "Corollary: \"y(m,2) = sum_{v=0}^m sum_{n=0}^v (-1)^{v-m} B_n S_1(v,n)/(2^{v+1} v!)\"",
        [](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_n; ++m) {
                Rational sum;
                for (long v = 0; v <= m; ++v) {
                    for (long n = 0; n <= v; ++n) {
                        sum += sign(v - m) * bernoulli(n) * stirling1(v, n) / (pow(Rational(2), v + 1) * fact(v));
                    }
                }
                r.equal(at("m", m), y_direct(m, Rational(2)), sum);
            }
        },
        sweep_with(40), 80));

    out.push_back(printed_fails(
        "derangement-thm", "harmonic",
        "Theorem: \"-sum_{m=0}^n C(n,m) ((1-lambda)/lambda)^{n-m+1} D_{n-m} d_m = sum_{j=0}^n (-1)^{n-j}/(n-j)! "
        "(1-lambda)^{j+2} y(j,lambda)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 0, [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const F c = (F(1) - lambda) / lambda;
                F lhs;
                for (long m = 0; m <= n; ++m) lhs -= F(binom(n, m) * daehee(n - m) * derangement(m)) * pow(c, n - m + 1);
                lhs = lhs / F(fact(n));
                F rhs;
                for (long j = 0; j <= n; ++j) rhs += F(sign(n - j) / fact(n - j)) * pow(F(1) - lambda, j + 2) * y_of(j, lambda);
                r.equal(at("n", n, lambda), lhs, rhs);
            });
        },
        [](Recorder& r) {
            const Rational lambda(2);
            const long n = 2;
            const Rational c = (1 - lambda) / lambda;
            Rational lhs;
            for (long m = 0; m <= n; ++m) lhs -= binom(n, m) * daehee(n - m) * derangement(m) * pow(c, n - m + 1);
            Rational rhs;
            for (long j = 0; j <= n; ++j) rhs += sign(n - j) / fact(n - j) * pow(1 - lambda, j + 2) * y_direct(j, lambda);
            r.equal(at("n", n, lambda), lhs, rhs);
        }));

    out.push_back(printed_fails(
        "derangement-cor", "harmonic",
        "Corollary: \"sum_{j=0}^n (-1)^{n-j}/(n-j)! (1-lambda)^{j+2} y(j,lambda) = sum_{m=0}^n sum_{j=0}^m "
        "(-1)^{n-m+j+1} ((1-lambda)/lambda)^{n-m+1} n!/((n-m+1) j!)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 0, [&](long n, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const F c = (F(1) - lambda) / lambda;
                F lhs;
                for (long j = 0; j <= n; ++j) lhs += F(sign(n - j) / fact(n - j)) * pow(F(1) - lambda, j + 2) * y_of(j, lambda);
                F rhs;
                for (long m = 0; m <= n; ++m) {
                    for (long j = 0; j <= m; ++j) {
                        rhs += F(sign(n - m + j + 1) / (Rational(n - m + 1) * fact(j))) * pow(c, n - m + 1);
                    }
                }
                r.equal(at("n", n, lambda), lhs, rhs);
            });
        },
        [](Recorder& r) {
            const Rational lambda(2);
            const long n = 2;
            const Rational c = (1 - lambda) / lambda;
            Rational lhs;
            for (long j = 0; j <= n; ++j) lhs += sign(n - j) / fact(n - j) * pow(1 - lambda, j + 2) * y_direct(j, lambda);
            Rational rhs;
            for (long m = 0; m <= n; ++m) {
                for (long j = 0; j <= m; ++j) rhs += sign(n - m + j + 1) * pow(c, n - m + 1) * fact(n) / (Rational(n - m + 1) * fact(j));
            }
            r.equal(at("n", n, lambda), lhs, rhs);
        }));
}

// Apostol-Bernoulli numbers through the y-numbers.
template <class F>
F theorem3_sum(long m, const F& lambda) {
    F sum;
    for (long n = 0; n <= m; ++n) {
        const Rational s2 = stirling2(m, n + 1);
        if (s2 == 0) continue;
        sum += F(fact(n + 1) * s2) * pow(lambda, n + 1) * y_of(n, lambda);
    }
    return sum;
}

void add_apostol(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "thm3-Abn-1", "apostol",
        "Theorem 3, Eq. (Abn-1): \"B_m(lambda) = sum_{n=0}^m (n+1)! lambda^{n+1} y(n,lambda) S_2(m,n+1)\"",
        [](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_m; ++m) {
                const RationalFunction closed = apostol_bernoulli(m);
                for (const auto& lambda : s.lambdas) {
                    r.equal(at("m", m, lambda), closed.evaluate(lambda), theorem3_sum(m, lambda));
                }
            }
            if (!s.symbolic) return;
            const auto L = RationalFunction::variable();
            for (long m = 0; m <= s.symbolic_max; ++m) {
                const RationalFunction rhs = theorem3_sum(m, L);
                r.equal(at("m", m, L), apostol_bernoulli(m), rhs);
                r.equal(at("m", m, L) + " series", apostol_bernoulli_series(m), rhs);
            }
        },
        sweep_with(14, 10), 20));

    out.push_back(printed_ok(
        "thm3-cor1", "apostol",
        "Corollary: \"B_m(lambda) = (1/(lambda-1)) sum_{n=0}^m sum_{j=0}^n ((-1)^n (n+1)!/(j+1)) "
        "(lambda/(lambda-1))^{n-j} S_2(m,n+1)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 0, [&](long m, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const F q = lambda / (lambda - F(1));
                F sum;
                for (long n = 0; n <= m; ++n) {
                    for (long j = 0; j <= n; ++j) {
                        sum += F(sign(n) * fact(n + 1) / Rational(j + 1) * stirling2(m, n + 1)) * pow(q, n - j);
                    }
                }
                r.equal(at("m", m, lambda), sum / (lambda - F(1)), theorem3_sum(m, lambda));
            });
        },
        sweep_with(14, 10), 20));

    out.push_back(printed_ok(
        "thm3-cor2", "apostol",
        "Corollary: \"B_m(lambda) = (1/(1-lambda)) sum_{n=0}^m sum_{j=0}^n ((n+2)/(j+1)) (lambda/(lambda-1))^{n-j} "
        "D_{n+1} S_2(m,n+1)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 0, [&](long m, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const F q = lambda / (lambda - F(1));
                F sum;
                for (long n = 0; n <= m; ++n) {
                    for (long j = 0; j <= n; ++j) {
                        sum += F(Rational(n + 2, j + 1) * daehee(n + 1) * stirling2(m, n + 1)) * pow(q, n - j);
                    }
                }
                r.equal(at("m", m, lambda), sum / (F(1) - lambda), theorem3_sum(m, lambda));
            });
        },
        sweep_with(14, 10), 20));

    out.push_back(printed_ok(
        "thm3-cor3", "apostol",
        "Corollary: \"B_m(lambda) = (1/(1-lambda)) sum_n sum_j sum_{k=0}^{n+1} ((n+2)/(j+1)) (lambda/(lambda-1))^{n-j} "
        "B_k S_1(n+1,k) S_2(m,n+1)\"",
        [](const Sweep& s, Recorder& r) {
            for_lambdas(s, 0, [&](long m, const auto& lambda) {
                using F = field_t<decltype(lambda)>;
                const F q = lambda / (lambda - F(1));
                F sum;
                for (long n = 0; n <= m; ++n) {
                    Rational bs;
                    for (long k = 0; k <= n + 1; ++k) bs += bernoulli(k) * stirling1(n + 1, k);
                    for (long j = 0; j <= n; ++j) {
                        sum += F(Rational(n + 2, j + 1) * bs * stirling2(m, n + 1)) * pow(q, n - j);
                    }
                }
                r.equal(at("m", m, lambda), sum / (F(1) - lambda), theorem3_sum(m, lambda));
            });
        },
        sweep_with(14, 10), 20));

    const Rational half(1, 2);
    out.push_back(printed_ok(
        "half-1AAeq", "apostol",
        "Eq. (1AAeq): \"B_m(1/2) = sum_{n=0}^m ((n+1)!/2^{n+1}) y(n,1/2) S_2(m,n+1)\"",
        [half](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_m; ++m) {
                Rational sum;
                for (long n = 0; n <= m; ++n) {
                    sum += fact(n + 1) / pow(Rational(2), n + 1) * y_direct(n, half) * stirling2(m, n + 1);
                }
                r.equal(at("m", m), apostol_bernoulli(m).evaluate(half), sum);
            }
        },
        sweep_with(14), 20));

    const auto convolution = [half](long m) {
        Rational lhs;
        for (long n = 0; n <= m; ++n) lhs += binom(m, n) * apostol_bernoulli(n).evaluate(half) * bernoulli(m - n);
        return lhs;
    };
    out.push_back(printed_fails(
        "conv-half", "apostol",
        "Theorem: \"sum_{n=0}^m C(m,n) B_n(1/2) B_{m-n} = m sum_{n=0}^{m-1} ((n+1)!/2^{n+1}) y(n,1/2) S_2(m-1,n+1)\"",
        [half, convolution](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_m; ++m) {
                Rational rhs;
                for (long n = 0; n <= m - 1; ++n) {
                    rhs += fact(n) * y_direct(n, half) * stirling2(m - 1, n) / pow(Rational(2), n + 1);
                }
                r.equal(at("m", m), convolution(m), Rational(m) * rhs);
            }
        },
        [half, convolution](Recorder& r) {
            const long m = 1;
            Rational rhs;
            for (long n = 0; n <= m - 1; ++n) {
                rhs += fact(n + 1) / pow(Rational(2), n + 1) * y_direct(n, half) * stirling2(m - 1, n + 1);
            }
            r.equal(at("m", m), convolution(m), Rational(m) * rhs);
        },
        sweep_with(14), 20));

    out.push_back(printed_fails(
        "harm-S2", "apostol",
        "Theorem: \"sum_{n=0}^m n! H_n S_2(m,n) = sum_{n=0}^m ((n+1)!/2^n) y(n,1/2) S_2(m,n+1)\"",
        [half](const Sweep& s, Recorder& r) {
            for (long m = 0; m <= s.max_m; ++m) {
                Rational lhs;
                Rational rhs;
                for (long n = 0; n <= m; ++n) {
                    lhs += fact(n) * alt_harmonic(n) * stirling2(m, n);
                    rhs += fact(n + 1) / pow(Rational(2), n + 2) * y_direct(n, half) * stirling2(m, n + 1);
                }
                r.equal(at("m", m), lhs, rhs);
            }
        },
        [half](Recorder& r) {
            const long m = 1;
            Rational lhs;
            Rational rhs;
            for (long n = 0; n <= m; ++n) {
                lhs += fact(n) * alt_harmonic(n) * stirling2(m, n);
                rhs += fact(n + 1) / pow(Rational(2), n) * y_direct(n, half) * stirling2(m, n + 1);
            }
            r.equal(at("m", m), lhs, rhs);
        }));
}

// The value table and the integer sequence of leading coefficients.
void add_table(std::vector<IdentityRecord>& out) {
    out.push_back(printed_ok(
        "table-section4", "table", "Section 4: \"we give some values of the numbers y(m,lambda) as follows\"",
        [](const Sweep&, Recorder& r) {
            const std::vector<std::vector<long>> numerators = {
                {1}, {1, -3}, {2, -7, 11}, {3, -13, 23, -25}, {12, -63, 137, -163, 137}};
            const long scale[] = {1, 2, 6, 12, 60};
            const Polynomial L = Polynomial::variable();
            const Polynomial Lm1 = L - Polynomial(Rational(1));
            for (long n = 0; n <= 4; ++n) {
                std::vector<Rational> c;
                for (long v : numerators[static_cast<std::size_t>(n)]) c.emplace_back(v);
                Polynomial den{Rational(scale[n])};
                for (long k = 0; k <= n; ++k) den = den * L * Lm1;
                r.equal(at("n", n), y_symbolic(n), RationalFunction(Polynomial(c), den));
            }
        },
        sweep_with(4), 4));

    out.push_back(printed_ok(
        "oeis-A025529", "table",
        "Section 4: \"The sequence a(n) is given by OEIS: A025529\", \"a(n) = lcm(1,2,...,n) H_n\"",
        [](const Sweep&, Recorder& r) {
            const long listing[] = {1, 3, 11, 25, 137, 147, 1089, 2283, 7129, 7381, 83711};
            const auto terms = oeis_a025529(11);
            for (long n = 1; n <= 11; ++n) {
                const Rational term(terms[static_cast<std::size_t>(n - 1)]);
                r.equal(at("n", n), term, Rational(listing[n - 1]));
                r.equal(at("n", n) + " lcm", term, Rational(lcm_upto(static_cast<unsigned long>(n))) * plain_harmonic(n));
                r.equal(at("n", n) + " leading", term, abs(y_leading_coefficient(n - 1)));
            }
        },
        sweep_with(11), 11));
}

}  // namespace

void add_core_records(std::vector<IdentityRecord>& out) {
    add_genfun(out);
    add_special(out);
    add_harmonic(out);
    add_apostol(out);
    add_table(out);
}

}  // namespace finsum::detail
