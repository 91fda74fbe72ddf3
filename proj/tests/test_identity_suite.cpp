#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "finsum/identity_suite.hpp"

using namespace finsum;

namespace {

const char* const kCatalogTypos[] = {"half-2n1", "harm-S2", "thmH-aHY", "ode-ynldefQED", "ode-ynldefQED-2", "zetaE-n0"};

}  // namespace

TEST(IdentityCatalog, IsLargeSortedAndUnique) {
    const auto& catalog = identity_catalog();
    EXPECT_GE(catalog.size(), 30U);
    for (std::size_t i = 1; i < catalog.size(); ++i) EXPECT_LT(catalog[i - 1].id, catalog[i].id);
}

TEST(IdentityCatalog, RecordsAreWellFormed) {
    for (const auto& record : identity_catalog()) {
        EXPECT_FALSE(record.family.empty()) << record.id;
        EXPECT_FALSE(record.anchor.empty()) << record.id;
        EXPECT_TRUE(static_cast<bool>(record.check)) << record.id;
        EXPECT_GE(record.max_n_cap, record.sweep.max_n) << record.id;
        if (record.status == IdentityStatus::printed_fails_corrected_ok) {
            EXPECT_TRUE(static_cast<bool>(record.printed_counterexample)) << record.id;
        }
    }
}

TEST(IdentityCatalog, KnownTyposAreCatalogued) {
    for (const char* id : kCatalogTypos) {
        EXPECT_EQ(find_identity(id).status, IdentityStatus::printed_fails_corrected_ok) << id;
    }
}

TEST(IdentityCatalog, UnknownIdThrows) {
    EXPECT_THROW(find_identity("no-such-identity"), std::invalid_argument);
    EXPECT_THROW(run_identity("no-such-identity"), std::invalid_argument);
    RunConfig config;
    config.id = "no-such-identity";
    EXPECT_THROW(run_all(config), std::invalid_argument);
}

TEST(IdentityCatalog, FamiliesCoverCatalog) {
    const auto families = identity_families();
    const std::set<std::string> known(families.begin(), families.end());
    for (const auto& record : identity_catalog()) EXPECT_TRUE(known.count(record.family)) << record.id;
}

TEST(IdentityRunner, TypoRecordsCarryExactCounterexamples) {
    const IdentityReport report = run_identity("half-2n1");
    ASSERT_EQ(report.outcomes.size(), 1U);
    const RecordOutcome& o = report.outcomes.front();
    EXPECT_TRUE(o.passed);
    ASSERT_FALSE(o.counterexamples.empty());
    EXPECT_EQ(o.counterexamples.front().form, "printed");
    EXPECT_EQ(o.counterexamples.front().lhs, "-4");
    EXPECT_EQ(o.counterexamples.front().rhs, "-2");
}

TEST(IdentityRunner, EveryPrintedFailureHasACounterexample) {
    const IdentityReport report = run_all();
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.total, static_cast<long>(identity_catalog().size()));
    for (const auto& o : report.outcomes) {
        EXPECT_TRUE(o.passed) << o.id;
        if (o.status == IdentityStatus::printed_fails_corrected_ok) {
            ASSERT_FALSE(o.counterexamples.empty()) << o.id;
            EXPECT_EQ(o.counterexamples.front().form, "printed") << o.id;
            EXPECT_NE(o.counterexamples.front().lhs, o.counterexamples.front().rhs) << o.id;
        } else {
            EXPECT_TRUE(o.counterexamples.empty()) << o.id;
        }
    }
}

TEST(IdentityRunner, JsonIsDeterministicAcrossThreadCounts) {
    RunConfig one;
    one.family = "recurrence";
    one.threads = 1;
    RunConfig many = one;
    many.threads = 4;
    EXPECT_EQ(run_all(one).to_json(), run_all(many).to_json());
}

TEST(IdentityRunner, FamilyFilterSelectsOnlyThatFamily) {
    RunConfig config;
    config.family = "volkenborn";
    const IdentityReport report = run_all(config);
    EXPECT_GT(report.total, 0);
    for (const auto& o : report.outcomes) EXPECT_EQ(o.family, "volkenborn");
}

TEST(IdentityRunner, MaxNIsClampedToRecordCap) {
    const IdentityRecord& record = find_identity("rec-1aGd1a");
    RunConfig config;
    config.id = record.id;
    config.max_n = record.max_n_cap + 1000;
    const IdentityReport big = run_all(config);
    ASSERT_EQ(big.outcomes.size(), 1U);
    EXPECT_EQ(big.outcomes.front().max_n, record.max_n_cap);
    config.max_n = 3;
    EXPECT_EQ(run_all(config).outcomes.front().max_n, 3);
    config.max_n = -5;
    EXPECT_EQ(run_all(config).outcomes.front().max_n, 0);
}

TEST(IdentityRunner, ThreadCountFromEnvironment) {
    RunConfig config;
    config.threads = 3;
    EXPECT_EQ(runner_threads(config), 3U);
    config.threads = 0;
    ::setenv("FINSUM_THREADS", "2", 1);
    EXPECT_EQ(runner_threads(config), 2U);
    ::setenv("FINSUM_THREADS", "zero", 1);
    EXPECT_GE(runner_threads(config), 1U);
    ::unsetenv("FINSUM_THREADS");
}

TEST(IdentityRunner, TextReportListsEveryRecord) {
    RunConfig config;
    config.family = "section6";
    const IdentityReport report = run_all(config);
    const std::string text = report.to_text();
    for (const auto& o : report.outcomes) EXPECT_NE(text.find(o.id), std::string::npos) << o.id;
}
