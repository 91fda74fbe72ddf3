#include "finsum/identity_suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace finsum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> records;
    detail::add_core_records(records);
    detail::add_recurrence_records(records);
    detail::add_analytic_records(records);
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].id == records[i - 1].id) throw std::logic_error("duplicate identity id " + records[i].id);
    }
    return records;
}

void run_predicate(const std::function<void(Recorder&)>& body, Recorder& recorder) {
    try {
        body(recorder);
    } catch (const std::exception& e) {
        recorder.check("exception", false, e.what(), "");
    }
}

RecordOutcome run_record(const IdentityRecord& record, const Sweep& sweep) {
    const auto start = Clock::now();
    RecordOutcome outcome;
    outcome.id = record.id;
    outcome.family = record.family;
    outcome.anchor = record.anchor;
    outcome.status = record.status;
    outcome.max_n = sweep.max_n;

    Recorder corrected(record.status == IdentityStatus::printed_ok ? "printed" : "corrected");
    run_predicate([&](Recorder& r) { record.check(sweep, r); }, corrected);
    outcome.swept = corrected.swept();
    bool ok = corrected.failures() == 0 && corrected.swept() > 0;

    if (record.status == IdentityStatus::printed_fails_corrected_ok) {
        Recorder printed("printed");
        if (record.printed_counterexample) run_predicate(record.printed_counterexample, printed);
        outcome.swept += printed.swept();
        ok = ok && printed.failures() > 0;
        outcome.counterexamples = printed.counterexamples();
        if (printed.failures() == 0) {
            outcome.counterexamples.push_back({"printed", "stored counterexample", "printed form held", ""});
        }
    }
    for (const auto& c : corrected.counterexamples()) outcome.counterexamples.push_back(c);
    outcome.passed = ok;
    outcome.seconds = seconds_since(start);
    return outcome;
}

Sweep effective_sweep(const IdentityRecord& record, std::optional<long> max_n) {
    Sweep sweep = record.sweep;
    if (max_n) sweep.max_n = std::clamp(*max_n, 0L, record.max_n_cap);
    return sweep;
}

IdentityReport assemble(std::vector<RecordOutcome> outcomes, double seconds) {
    IdentityReport report;
    std::sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    report.outcomes = std::move(outcomes);
    report.total = static_cast<long>(report.outcomes.size());
    report.passed = std::count_if(report.outcomes.begin(), report.outcomes.end(), [](const auto& o) { return o.passed; });
    report.seconds = seconds;
    return report;
}

}  // namespace

std::string to_string(IdentityStatus status) {
    switch (status) {
        case IdentityStatus::printed_ok: return "printed_ok";
        case IdentityStatus::printed_fails_corrected_ok: return "printed_fails_corrected_ok";
        case IdentityStatus::conjectural: return "conjectural";
    }
    return "unknown";
}

const std::vector<Rational>& default_lambdas() {
    static const std::vector<Rational> lambdas = {Rational(2),     Rational(3),    Rational(-1), Rational(1, 2),
                                                  Rational(-1, 2), Rational(5, 3), Rational(-7, 4)};
    return lambdas;
}

Sweep default_sweep() {
    Sweep sweep;
    sweep.lambdas = default_lambdas();
    return sweep;
}

void Recorder::equal(const std::string& params, const Rational& lhs, const Rational& rhs) {
    ++swept_;
    if (lhs == rhs) return;
    ++failures_;
    if (stored_.size() < kMaxStored) stored_.push_back({form_, params, lhs.to_string(), rhs.to_string()});
}

void Recorder::equal(const std::string& params, const RationalFunction& lhs, const RationalFunction& rhs) {
    ++swept_;
    if (lhs == rhs) return;
    ++failures_;
    if (stored_.size() < kMaxStored) stored_.push_back({form_, params, lhs.to_string(), rhs.to_string()});
}

void Recorder::close(const std::string& params, double lhs, double rhs, double tolerance) {
    std::ostringstream l;
    std::ostringstream r;
    std::ostringstream t;
    l << std::setprecision(17) << lhs;
    r << std::setprecision(17) << rhs;
    t << std::setprecision(1) << std::scientific << tolerance;
    check(params + " tol=" + t.str(), std::abs(lhs - rhs) <= tolerance, l.str(), r.str());
}

void Recorder::check(const std::string& params, bool ok, const std::string& lhs, const std::string& rhs) {
    ++swept_;
    if (ok) return;
    ++failures_;
    if (stored_.size() < kMaxStored) stored_.push_back({form_, params, lhs, rhs});
}

const std::vector<IdentityRecord>& identity_catalog() {
    static const std::vector<IdentityRecord> catalog = build_catalog();
    return catalog;
}

const IdentityRecord& find_identity(const std::string& id) {
    for (const auto& record : identity_catalog()) {
        if (record.id == id) return record;
    }
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

std::vector<std::string> identity_families() {
    std::set<std::string> families;
    for (const auto& record : identity_catalog()) families.insert(record.family);
    return {families.begin(), families.end()};
}

unsigned runner_threads(const RunConfig& config) {
    if (config.threads > 0) return config.threads;
    if (const char* env = std::getenv("FINSUM_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

IdentityReport run_identity(const std::string& id, const std::optional<Sweep>& sweep_override) {
    const auto start = Clock::now();
    const IdentityRecord& record = find_identity(id);
    const Sweep sweep = sweep_override ? *sweep_override : record.sweep;
    std::vector<RecordOutcome> outcomes{run_record(record, sweep)};
    return assemble(std::move(outcomes), seconds_since(start));
}

IdentityReport run_all(const RunConfig& config) {
    const auto start = Clock::now();
    std::vector<const IdentityRecord*> selected;
    for (const auto& record : identity_catalog()) {
        if (config.family && record.family != *config.family) continue;
        if (config.id && record.id != *config.id) continue;
        selected.push_back(&record);
    }
    if (config.id && selected.empty()) find_identity(*config.id);

    std::vector<RecordOutcome> outcomes(selected.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            outcomes[i] = run_record(*selected[i], effective_sweep(*selected[i], config.max_n));
        }
    };
    const unsigned count = std::min<unsigned>(runner_threads(config), std::max<std::size_t>(1, selected.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& thread : pool) thread.join();
    return assemble(std::move(outcomes), seconds_since(start));
}

std::string IdentityReport::to_json(bool with_timing) const {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
        nlohmann::ordered_json row;
        row["id"] = o.id;
        row["family"] = o.family;
        row["anchor"] = o.anchor;
        row["status"] = to_string(o.status);
        row["max_n"] = o.max_n;
        row["swept"] = o.swept;
        row["passed"] = o.passed;
        nlohmann::ordered_json examples = nlohmann::ordered_json::array();
        for (const auto& c : o.counterexamples) {
            examples.push_back({{"form", c.form}, {"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        }
        row["counterexamples"] = std::move(examples);
        if (with_timing) row["seconds"] = o.seconds;
        records.push_back(std::move(row));
    }
    doc["records"] = std::move(records);
    doc["total"] = total;
    doc["passed"] = passed;
    doc["failed"] = total - passed;
    if (with_timing) doc["seconds"] = seconds;
    return doc.dump(2);
}

std::string IdentityReport::to_text() const {
    std::size_t width = 2;
    for (const auto& o : outcomes) width = std::max(width, o.id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "id" << "  " << std::setw(27) << "status"
       << std::right << std::setw(8) << "swept" << "  result\n";
    for (const auto& o : outcomes) {
        os << std::left << std::setw(static_cast<int>(width)) << o.id << "  " << std::setw(27) << to_string(o.status)
           << std::right << std::setw(8) << o.swept << "  " << (o.passed ? "ok" : "FAIL") << '\n';
        for (const auto& c : o.counterexamples) {
            os << "    " << c.form << " at " << c.params << ": " << c.lhs << " vs " << c.rhs << '\n';
        }
    }
    os << passed << "/" << total << " records as expected\n";
    return os.str();
}

}  // namespace finsum
