#include <bihcheck/bihcheck.hpp>

#include <gtest/gtest.h>

using namespace bih;

namespace {

SweepConfig small(Var v) {
    SweepConfig cfg;
    cfg.var = v;
    cfg.m_lo = 4;
    cfg.m_hi = 8;
    cfg.c_list = {1};
    return cfg;
}

}  // namespace

TEST(Sweep, Validation) {
    SweepConfig cfg;
    cfg.m_lo = 3;
    EXPECT_THROW(run_sweep(cfg), UsageError);
    cfg = {};
    cfg.m_hi = 31;
    EXPECT_THROW(run_sweep(cfg), UsageError);
    cfg = {};
    cfg.c_list = {2};
    EXPECT_THROW(run_sweep(cfg), UsageError);
    cfg = {};
    cfg.var = Var::c;
    EXPECT_THROW(run_sweep(cfg), UsageError);
}

TEST(Sweep, EnumerationIsSortedAndValid) {
    SweepConfig cfg;
    cfg.r_list = {5, 2, 3};
    cfg.c_list = {1, -1};
    const auto cases = enumerate_cases(cfg);
    for (std::size_t i = 0; i < cases.size(); ++i) {
        EXPECT_LE(cases[i].r, cases[i].m - 1);
        if (i > 0)
            EXPECT_LT(std::tie(cases[i - 1].m, cases[i - 1].r, cases[i - 1].c),
                      std::tie(cases[i].m, cases[i].r, cases[i].c));
    }
}

TEST(Sweep, SingleCases) {
    EXPECT_FALSE(run_case({5, 3, 1}, Var::k, 300).zero);
    EXPECT_TRUE(run_case({5, 3, 1}, Var::f, 300).zero);
    const CaseResult special = run_case({7, 4, 1}, Var::k, 300);
    EXPECT_TRUE(special.zero);
    EXPECT_FALSE(special.degree.has_value());
    EXPECT_FALSE(special.leading.has_value());
    EXPECT_TRUE(run_case({7, 4, 0}, Var::k, 300).zero);
}

TEST(Sweep, EliminatingKVanishesOnlyAtTheSpecialPair) {
    SweepConfig cfg = small(Var::k);
    const SweepReport report = run_sweep(cfg);
    ASSERT_EQ(report.exceptions.size(), 1u);
    EXPECT_EQ(report.exceptions[0].key(), std::tuple(7L, 4L, 1L));
    EXPECT_EQ(judge(report), SweepVerdict::pass);
    for (const auto &r : report.results)
        if (!r.zero) EXPECT_TRUE(r.degree && r.leading);
}

TEST(Sweep, EliminatingFAlwaysVanishes) {
    SweepConfig cfg = small(Var::f);
    cfg.m_hi = 6;
    const SweepReport report = run_sweep(cfg);
    EXPECT_EQ(report.exceptions.size(), report.results.size());
    EXPECT_EQ(judge(report), SweepVerdict::pass);
}

TEST(Sweep, WorkerCountDoesNotChangeResults) {
    SweepConfig cfg = small(Var::k);
    cfg.m_hi = 7;
    cfg.c_list = {-1, 1};
    cfg.jobs = 1;
    const std::string one = emit_report(run_sweep(cfg), ReportFormat::json, true);
    cfg.jobs = 3;
    const std::string three = emit_report(run_sweep(cfg), ReportFormat::json, true);
    EXPECT_EQ(one, three);
}

TEST(Sweep, TimeoutIsNotAResult) {
    SweepConfig cfg = small(Var::k);
    cfg.m_lo = cfg.m_hi = 12;
    cfg.r_list = {5};
    cfg.case_timeout_s = 1e-6;
    const SweepReport report = run_sweep(cfg);
    ASSERT_EQ(report.results.size(), 1u);
    EXPECT_TRUE(report.results[0].timed_out);
    EXPECT_TRUE(report.exceptions.empty());
    EXPECT_EQ(judge(report), SweepVerdict::timeout);
}

TEST(Sweep, JudgeFlagsMismatch) {
    SweepReport report;
    report.config.var = Var::k;
    CaseResult r;
    r.m = 5;
    r.r = 3;
    r.c = 1;
    r.zero = true;
    report.results.push_back(r);
    EXPECT_EQ(judge(report), SweepVerdict::mismatch);
}

TEST(Report, EmptySweep) {
    SweepReport report;
    const auto j = to_json(report, false);
    EXPECT_TRUE(j.at("results").is_array());
    EXPECT_TRUE(j.at("results").empty());
    EXPECT_TRUE(j.at("exceptions").empty());
    EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Report, JsonRoundTripAndZeroCaseShape) {
    SweepConfig cfg = small(Var::k);
    cfg.m_lo = cfg.m_hi = 7;
    cfg.r_list = {3, 4};
    const SweepReport report = run_sweep(cfg);
    const auto j = to_json(report, false);
    EXPECT_EQ(report_from_json(j), report);
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), report);

    bool seen = false;
    for (const auto &x : j.at("results")) {
        if (x.at("r") == 4) {
            seen = true;
            EXPECT_EQ(x.at("zero"), true);
            EXPECT_FALSE(x.contains("degree"));
            EXPECT_FALSE(x.contains("leading"));
        } else {
            EXPECT_TRUE(x.at("leading").is_string());
        }
        EXPECT_TRUE(x.contains("ms"));
    }
    EXPECT_TRUE(seen);

    const auto stable = to_json(report, true);
    EXPECT_FALSE(stable.contains("elapsed_ms"));
    for (const auto &x : stable.at("results")) EXPECT_FALSE(x.contains("ms"));
    EXPECT_EQ(stable.dump(), to_json(run_sweep(cfg), true).dump());
}

TEST(Report, TextFormat) {
    SweepConfig cfg = small(Var::k);
    cfg.m_lo = cfg.m_hi = 7;
    cfg.r_list = {4};
    const std::string text = emit_report(run_sweep(cfg), ReportFormat::text, true);
    EXPECT_EQ(text, "m=7 r=4 c=1 var=k zero\nexceptions: (7,4,1)\n");
}
