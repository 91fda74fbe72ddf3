#include "finsum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finsum/genfun.hpp"
#include "finsum/identity_suite.hpp"
#include "finsum/volkenborn.hpp"
#include "finsum/y_numbers.hpp"
#include "json.hpp"

namespace finsum::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { plain, json, csv };

/// Thrown for invalid argument values found after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats = {{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

std::string csv_text(const std::string& field) {
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

/// Lambda given as exact rational text or "symbolic".
struct LambdaArg {
    std::optional<Rational> value;  // empty when symbolic

    static LambdaArg parse(const std::string& text) {
        if (text == "symbolic") return {};
        Rational lambda;
        try {
            lambda = Rational::parse(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("malformed rational for --lambda: ") + e.what());
        }
        try {
            require_admissible_lambda(lambda);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        return {lambda};
    }

    std::string text() const { return value ? value->to_string() : "symbolic"; }
};

struct Options {
    std::string format = "plain";
    std::string output;
    // y
    long n = 0;
    std::string lambda = "symbolic";
    std::string method = "direct";
    // table
    long table_max = 4;
    // series
    std::string which = "G";
    long order = 10;
    // verify
    std::optional<std::string> id;
    std::optional<std::string> family;
    std::optional<long> max_n;
    bool timing = false;
    // volkenborn
    unsigned long p = 2;
    long max_level = 6;
    std::string integrand = "power";
    long index = 0;
    // oeis
    long terms = 11;
};

void add_output_options(CLI::App& sub, Options& o, std::vector<std::string> formats) {
    sub.add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    sub.add_option("--output", o.output, "Write results to this file instead of standard output");
}

int cmd_y(const Options& o, std::ostream& out) {
    const LambdaArg lambda = LambdaArg::parse(o.lambda);
    std::string value;
    if (o.method == "symbolic") {
        if (o.n > 40) throw UsageError("--n must be at most 40 for the symbolic method");
        const RationalFunction y = y_symbolic(o.n);
        value = lambda.value ? y.evaluate(*lambda.value).to_string() : format_factored(y);
    } else if (!lambda.value) {
        if (o.n > 40) throw UsageError("--n must be at most 40 for a symbolic lambda");
        const RationalFunction L = RationalFunction::variable();
        if (o.method == "direct") {
            value = format_factored(y_direct(o.n, L));
        } else if (o.method == "alg1") {
            value = format_factored(y_algorithm1(o.n, L));
        } else {
            throw UsageError("--method " + o.method + " needs a numeric --lambda");
        }
    } else {
        static const std::map<std::string, YMethod> methods = {{"direct", YMethod::direct},
                                                               {"alg1", YMethod::algorithm1},
                                                               {"recurrence", YMethod::recurrence},
                                                               {"genfun", YMethod::genfun}};
        value = y_value(o.n, *lambda.value, methods.at(o.method)).to_string();
    }

    switch (kFormats.at(o.format)) {
        case Format::plain: out << value << '\n'; break;
        case Format::json:
            out << Json{{"n", o.n}, {"lambda", lambda.text()}, {"method", o.method}, {"value", value}}.dump() << '\n';
            break;
        case Format::csv:
            out << "n,lambda,method,value\n"
                << o.n << ',' << csv_text(lambda.text()) << ',' << o.method << ',' << csv_text(value) << '\n';
            break;
    }
    return ok;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Format format = kFormats.at(o.format);
    Json rows = Json::array();
    if (format == Format::csv) out << "n,y\n";
    for (long n = 0; n <= o.table_max; ++n) {
        switch (format) {
            case Format::plain: out << y_table_row(n) << '\n'; break;
            case Format::json: rows.push_back({{"n", n}, {"y", format_factored(y_symbolic(n))}}); break;
            case Format::csv: out << n << ',' << csv_text(format_factored(y_symbolic(n))) << '\n'; break;
        }
    }
    if (format == Format::json) out << rows.dump(2) << '\n';
    return ok;
}

template <class C>
std::vector<std::string> coefficients_of(const LaurentSeries<C>& s, long order) {
    std::vector<std::string> text;
    for (long k = 0; k <= order; ++k) {
        text.push_back(s.coeff(k).to_string());
    }
    return text;
}

int cmd_series(const Options& o, std::ostream& out) {
    const bool needs_lambda = o.which == "G" || o.which == "2f1";
    const LambdaArg lambda = needs_lambda ? LambdaArg::parse(o.lambda) : LambdaArg{};
    if (!lambda.value && needs_lambda && o.order > 20) throw UsageError("--order must be at most 20 for a symbolic lambda");

    std::vector<std::string> coefficients;
    if (o.which == "G") {
        coefficients = lambda.value ? coefficients_of(series_G(*lambda.value, o.order), o.order)
                                    : coefficients_of(series_G(RationalFunction::variable(), o.order), o.order);
    } else if (o.which == "2f1") {
        // 2F1(1,1;2; ((lambda-1)/lambda) z)
        if (lambda.value) {
            const Rational scale = (*lambda.value - 1) / *lambda.value;
            coefficients = coefficients_of(hyper2f1_series(1, 1, 2, scale, o.order), o.order);
        } else {
            const RationalFunction L = RationalFunction::variable();
            coefficients = coefficients_of(hyper2f1_series(1, 1, 2, (L - RationalFunction(1)) / L, o.order), o.order);
        }
    } else {
        static const std::map<std::string, SpecialG> specials = {
            {"g1", SpecialG::g1}, {"g2", SpecialG::g2}, {"g3", SpecialG::g3}};
        coefficients = coefficients_of(series_g_special(specials.at(o.which), o.order), o.order);
    }

    const std::string lambda_text = needs_lambda ? lambda.text() : "";
    switch (kFormats.at(o.format)) {
        case Format::plain:
            for (std::size_t k = 0; k < coefficients.size(); ++k) out << k << ' ' << coefficients[k] << '\n';
            break;
        case Format::json: {
            Json doc{{"which", o.which}, {"order", o.order}};
            if (needs_lambda) doc["lambda"] = lambda_text;
            doc["coefficients"] = coefficients;
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "k,coefficient\n";
            for (std::size_t k = 0; k < coefficients.size(); ++k) out << k << ',' << csv_text(coefficients[k]) << '\n';
            break;
    }
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    RunConfig config;
    config.max_n = o.max_n;
    config.family = o.family;
    config.id = o.id;
    if (o.id) {
        try {
            find_identity(*o.id);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (o.family) {
        const auto families = identity_families();
        if (std::find(families.begin(), families.end(), *o.family) == families.end()) {
            throw UsageError("unknown family '" + *o.family + "'");
        }
    }
    const IdentityReport report = run_all(config);
    switch (kFormats.at(o.format)) {
        case Format::plain: out << report.to_text(); break;
        case Format::json: out << report.to_json(o.timing) << '\n'; break;
        case Format::csv:
            out << "id,family,status,max_n,swept,passed\n";
            for (const auto& r : report.outcomes) {
                out << r.id << ',' << r.family << ',' << to_string(r.status) << ',' << r.max_n << ',' << r.swept << ','
                    << (r.passed ? "true" : "false") << '\n';
            }
            break;
    }
    return report.all_passed() ? ok : unexpected_failure;
}

int cmd_volkenborn(const Options& o, std::ostream& out) {
    const Integrand integrand = parse_integrand(o.integrand);
    try {
        require_volkenborn_budget(o.p, o.max_level);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Format format = kFormats.at(o.format);
    if (format == Format::plain) out << "N partial_sum limit valuation\n";
    if (format == Format::csv) out << "p,N,integrand,index,partial_sum,limit,valuation\n";
    for (long N = 1; N <= o.max_level; ++N) {
        const VolkenbornSample s = volkenborn_partial_sum(integrand, o.index, o.p, N);
        switch (format) {
            case Format::json: out << to_json(s) << '\n'; break;
            case Format::plain:
                out << N << ' ' << s.partial_sum << ' ' << s.limit << ' ' << s.error_valuation.to_string() << '\n';
                break;
            case Format::csv:
                out << s.p << ',' << N << ',' << to_string(integrand) << ',' << o.index << ','
                    << csv_text(s.partial_sum.to_string()) << ',' << csv_text(s.limit.to_string()) << ','
                    << s.error_valuation.to_string() << '\n';
                break;
        }
    }
    return ok;
}

int cmd_oeis(const Options& o, std::ostream& out) {
    const auto terms = oeis_a025529(o.terms);
    switch (kFormats.at(o.format)) {
        case Format::plain:
            for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << terms[i].get_str();
            out << '\n';
            break;
        case Format::json: {
            Json values = Json::array();
            for (const auto& t : terms) values.push_back(t.get_str());
            out << Json{{"sequence", "A025529"}, {"terms", values}}.dump() << '\n';
            break;
        }
        case Format::csv:
            out << "n,a\n";
            for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << ',' << csv_text(terms[i].get_str()) << '\n';
            break;
    }
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation of the finite sums y(n, lambda) and verification of their identities", "finsum"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> all_formats = {"plain", "json", "csv"};

    auto* y = app.add_subcommand("y", "Compute y(n, lambda)");
    y->add_option("--n", o.n, "Index n")->required()->check(CLI::Range(0L, 200L));
    y->add_option("--lambda", o.lambda, "Exact rational p/q, or 'symbolic'");
    y->add_option("--method", o.method, "Evaluation method")
        ->check(CLI::IsMember({"direct", "alg1", "recurrence", "genfun", "symbolic"}));
    add_output_options(*y, o, all_formats);

    auto* table = app.add_subcommand("table", "Print y(n, lambda) as rational functions for n = 0..max");
    table->add_option("--max", o.table_max, "Largest n")->check(CLI::Range(0L, 20L));
    add_output_options(*table, o, all_formats);

    auto* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("--which", o.which, "Series")->required()->check(CLI::IsMember({"G", "g1", "g2", "g3", "2f1"}));
    series->add_option("--order", o.order, "Truncation order T")->required()->check(CLI::Range(0L, 60L));
    series->add_option("--lambda", o.lambda, "Exact rational p/q, or 'symbolic' (G and 2f1)");
    add_output_options(*series, o, all_formats);

    auto* verify = app.add_subcommand("verify", "Run the identity catalog");
    verify->add_option("--id", o.id, "Run a single record");
    verify->add_option("--family", o.family, "Run one family of records");
    verify->add_option("--max-n", o.max_n, "Override the numeric bound n")->check(CLI::Range(0L, 200L));
    verify->add_flag("--timing", o.timing, "Include timing fields in the JSON report");
    add_output_options(*verify, o, all_formats);

    auto* volk = app.add_subcommand("volkenborn", "Partial sums of the Volkenborn integral");
    volk->add_option("--p", o.p, "Prime p")->required();
    volk->add_option("--max-level", o.max_level, "Largest level N")->required();
    volk->add_option("--integrand", o.integrand, "Integrand")->required()->check(CLI::IsMember({"power", "falling", "binom"}));
    volk->add_option("--index", o.index, "Exponent j or order n")->required()->check(CLI::Range(0L, 12L));
    add_output_options(*volk, o, all_formats);

    auto* oeis = app.add_subcommand("oeis", "Terms of A025529 from the leading coefficients");
    oeis->add_option("--terms", o.terms, "Number of terms")->check(CLI::Range(1L, 200L));
    add_output_options(*oeis, o, all_formats);

    if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
        err << "error: unknown subcommand '" << argv[1] << "'\n\n" << app.help();
        return usage_error;
    }
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }
    if (volk->parsed() && volk->count("--format") == 0) o.format = "json";

    CLI::App* active = app.get_subcommands().front();
    std::ostringstream buffer;
    int code = ok;
    try {
        if (active == y) code = cmd_y(o, buffer);
        if (active == table) code = cmd_table(o, buffer);
        if (active == series) code = cmd_series(o, buffer);
        if (active == verify) code = cmd_verify(o, buffer);
        if (active == volk) code = cmd_volkenborn(o, buffer);
        if (active == oeis) code = cmd_oeis(o, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << active->help();
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return unexpected_failure;
    }

    if (o.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.output);
        if (!file) {
            err << "error: cannot open " << o.output << " for writing\n";
            return usage_error;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace finsum::cli
