#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finsum/rational.hpp"
#include "finsum/rational_function.hpp"

namespace finsum {

enum class IdentityStatus { printed_ok, printed_fails_corrected_ok, conjectural };

std::string to_string(IdentityStatus status);

/// Parameter ranges for one record. Records read only the fields they need.
struct Sweep {
    long max_n = 20;
    long max_m = 20;
    long symbolic_max = 10;
    bool symbolic = true;
    std::vector<Rational> lambdas;
};

/// {2, 3, -1, 1/2, -1/2, 5/3, -7/4}.
const std::vector<Rational>& default_lambdas();
Sweep default_sweep();

struct Counterexample {
    std::string form;  // "printed", "corrected" or "error"
    std::string params;
    std::string lhs;
    std::string rhs;
};

/// Collects the outcome of every comparison made by a predicate and keeps
/// the first few failures with both sides rendered exactly.
class Recorder {
public:
    static constexpr std::size_t kMaxStored = 4;

    explicit Recorder(std::string form = "corrected") : form_(std::move(form)) {}

    void equal(const std::string& params, const Rational& lhs, const Rational& rhs);
    void equal(const std::string& params, const RationalFunction& lhs, const RationalFunction& rhs);
    /// |lhs - rhs| <= tolerance; only the floating-point records use this.
    void close(const std::string& params, double lhs, double rhs, double tolerance);
    /// A comparison whose sides are already rendered.
    void check(const std::string& params, bool ok, const std::string& lhs, const std::string& rhs);

    long swept() const { return swept_; }
    long failures() const { return failures_; }
    const std::vector<Counterexample>& counterexamples() const { return stored_; }

private:
    std::string form_;
    long swept_ = 0;
    long failures_ = 0;
    std::vector<Counterexample> stored_;
};

using Predicate = std::function<void(const Sweep&, Recorder&)>;

struct IdentityRecord {
    std::string id;
    std::string family;
    std::string anchor;
    IdentityStatus status = IdentityStatus::printed_ok;
    Sweep sweep;
    long max_n_cap = 40;  // largest max_n an override may request
    /// The printed form for printed_ok records, the corrected form otherwise.
    Predicate check;
    /// The printed form evaluated at its stored counterexample.
    std::function<void(Recorder&)> printed_counterexample;
};

/// Every record, sorted by id.
const std::vector<IdentityRecord>& identity_catalog();
/// Throws std::invalid_argument for an unknown id.
const IdentityRecord& find_identity(const std::string& id);
std::vector<std::string> identity_families();

struct RecordOutcome {
    std::string id;
    std::string family;
    std::string anchor;
    IdentityStatus status = IdentityStatus::printed_ok;
    long max_n = 0;
    long swept = 0;
    bool passed = false;
    std::vector<Counterexample> counterexamples;
    double seconds = 0;
};

struct IdentityReport {
    std::vector<RecordOutcome> outcomes;  // ordered by id
    long total = 0;
    long passed = 0;
    double seconds = 0;

    bool all_passed() const { return passed == total; }
    /// JSON document; timing fields are included only on request.
    std::string to_json(bool with_timing = false) const;
    std::string to_text() const;
};

struct RunConfig {
    std::optional<long> max_n;
    std::optional<std::string> family;
    std::optional<std::string> id;
    unsigned threads = 0;  // 0: FINSUM_THREADS, else hardware concurrency
};

/// Runs one record. A printed_ok record passes when its predicate holds on
/// the whole sweep; a printed_fails_corrected_ok record passes when the
/// printed form fails at its counterexample and the corrected form holds on
/// the whole sweep. Throws std::invalid_argument for an unknown id.
IdentityReport run_identity(const std::string& id, const std::optional<Sweep>& sweep_override = std::nullopt);
IdentityReport run_all(const RunConfig& config = {});

/// Worker count from the config, FINSUM_THREADS, or the hardware.
unsigned runner_threads(const RunConfig& config);

namespace detail {
// Catalog sections, each appending its records.
void add_core_records(std::vector<IdentityRecord>& out);
void add_recurrence_records(std::vector<IdentityRecord>& out);
void add_analytic_records(std::vector<IdentityRecord>& out);
}  // namespace detail

}  // namespace finsum
