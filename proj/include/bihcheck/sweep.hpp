#pragma once

// Parameter sweeps of Res(H, K, v) over (m, r, c) and their reports.

#include "catalog.hpp"
#include "errors.hpp"
#include "resultant.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace bih {

enum class ReportFormat { json, text };

struct SweepConfig {
    long m_lo = 4, m_hi = 15;
    std::vector<long> r_list;  // empty: every r with 2 <= r <= m - 1
    std::vector<long> c_list = {-1, 0, 1};
    Var var = Var::k;
    unsigned jobs = 1;
    ReportFormat format = ReportFormat::json;
    bool stable_output = false;
    double case_timeout_s = 300;

    friend bool operator==(const SweepConfig &, const SweepConfig &) = default;
};

inline void validate(const SweepConfig &cfg) {
    if (cfg.m_lo < 4 || cfg.m_hi > 30 || cfg.m_lo > cfg.m_hi)
        throw UsageError("m range must satisfy 4 <= lo <= hi <= 30");
    for (long r : cfg.r_list)
        if (r < 2 || r > cfg.m_hi - 1) throw UsageError("r = " + std::to_string(r) + " is outside 2..m-1");
    for (long c : cfg.c_list)
        if (c < -1 || c > 1) throw UsageError("c values must be -1, 0 or 1");
    if (cfg.var != Var::k && cfg.var != Var::f) throw UsageError("elimination variable must be k or f");
    if (cfg.jobs == 0) throw UsageError("jobs must be positive");
    if (!(cfg.case_timeout_s > 0)) throw UsageError("case timeout must be positive");
}

struct CaseResult {
    long m = 0, r = 0, c = 0;
    Var var = Var::k;
    bool zero = false;
    std::optional<Exponent> degree;      // in the surviving variable
    std::optional<std::string> leading;  // exact rational, decimal digits
    double ms = 0;
    bool timed_out = false;

    auto key() const { return std::tuple(m, r, c); }
    friend bool operator==(const CaseResult &a, const CaseResult &b) {
        return std::tie(a.m, a.r, a.c, a.var, a.zero, a.degree, a.leading, a.timed_out) ==
               std::tie(b.m, b.r, b.c, b.var, b.zero, b.degree, b.leading, b.timed_out);
    }
};

struct SweepReport {
    SweepConfig config;
    std::vector<CaseResult> results;     // sorted by (m, r, c)
    std::vector<CaseResult> exceptions;  // zero resultants
    double elapsed_ms = 0;

    friend bool operator==(const SweepReport &a, const SweepReport &b) {
        return a.config == b.config && a.results == b.results && a.exceptions == b.exceptions;
    }
};

struct SweepCase {
    long m, r, c;
};

inline std::vector<SweepCase> enumerate_cases(const SweepConfig &cfg) {
    std::vector<SweepCase> out;
    for (long m = cfg.m_lo; m <= cfg.m_hi; ++m) {
        std::vector<long> rs;
        if (cfg.r_list.empty())
            for (long r = 2; r <= m - 1; ++r) rs.push_back(r);
        else
            for (long r : cfg.r_list)
                if (r <= m - 1) rs.push_back(r);
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
        std::vector<long> cs = cfg.c_list;
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        for (long r : rs)
            for (long c : cs) out.push_back({m, r, c});
    }
    return out;
}

/// One sweep case: Res(H, K, v) with the other of f, k as the surviving variable.
inline CaseResult run_case(const SweepCase &sc, Var v, double timeout_s) {
    const auto start = std::chrono::steady_clock::now();
    const auto deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout_s));
    CaseResult out;
    out.m = sc.m;
    out.r = sc.r;
    out.c = sc.c;
    out.var = v;
    const Var other = v == Var::k ? Var::f : Var::k;
    try {
        const Core core = build_core(CoreParams::specialized(sc.m, sc.r, sc.c));
        const MultiPoly res = resultant_interp(core.H, core.K, v, other, deadline);
        out.zero = res.is_zero();
        if (!out.zero) {
            out.degree = res.degree(other);
            out.leading = to_string(coefficient(res, other, *out.degree).constant_value());
        }
    } catch (const Timeout &) {
        out.timed_out = true;
    }
    out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/// Runs every case on a pool of cfg.jobs workers; the result order depends
/// only on the configuration.
inline SweepReport run_sweep(const SweepConfig &cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    const auto cases = enumerate_cases(cfg);
    Catalog::instance();  // build once before the workers start

    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();)
            results[i] = run_case(cases[i], cfg.var, cfg.case_timeout_s);
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(cases.size(), 1));
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    }

    SweepReport report;
    report.config = cfg;
    report.results = std::move(results);
    std::sort(report.results.begin(), report.results.end(),
              [](const CaseResult &a, const CaseResult &b) { return a.key() < b.key(); });
    for (const auto &r : report.results)
        if (r.zero && !r.timed_out) report.exceptions.push_back(r);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

enum class SweepVerdict { pass, mismatch, timeout };

/// Elimination of k must vanish exactly at (m, r) = (7, 4); elimination of f
/// must vanish everywhere. Timeouts are reported separately.
inline SweepVerdict judge(const SweepReport &report) {
    bool timeout = false;
    for (const auto &r : report.results) {
        if (r.timed_out) {
            timeout = true;
            continue;
        }
        const bool expected = report.config.var == Var::f || (r.m == 7 && r.r == 4);
        if (r.zero != expected) return SweepVerdict::mismatch;
    }
    return timeout ? SweepVerdict::timeout : SweepVerdict::pass;
}

// ---------------------------------------------------------------------------
// Serialization.

inline nlohmann::json to_json(const SweepConfig &cfg, bool stable) {
    nlohmann::json j;
    j["var"] = std::string(name(cfg.var));
    j["m"] = {cfg.m_lo, cfg.m_hi};
    if (cfg.r_list.empty()) j["r"] = "all";
    else j["r"] = cfg.r_list;
    j["c"] = cfg.c_list;
    j["case_timeout_s"] = cfg.case_timeout_s;
    if (!stable) j["jobs"] = cfg.jobs;
    return j;
}

inline nlohmann::json to_json(const CaseResult &r, bool stable) {
    nlohmann::json j{{"m", r.m}, {"r", r.r}, {"c", r.c}, {"var", std::string(name(r.var))}, {"zero", r.zero}};
    if (r.degree) j["degree"] = *r.degree;
    if (r.leading) j["leading"] = *r.leading;
    if (r.timed_out) j["timeout"] = true;
    if (!stable) j["ms"] = r.ms;
    return j;
}

inline nlohmann::json to_json(const SweepReport &report, bool stable) {
    nlohmann::json j;
    j["config"] = to_json(report.config, stable);
    j["results"] = nlohmann::json::array();
    for (const auto &r : report.results) j["results"].push_back(to_json(r, stable));
    j["exceptions"] = nlohmann::json::array();
    for (const auto &r : report.exceptions) j["exceptions"].push_back({{"m", r.m}, {"r", r.r}, {"c", r.c}});
    if (!stable) j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

inline Var var_from_json(const nlohmann::json &j) {
    const auto v = var_from_name(j.get<std::string>());
    if (!v) throw UsageError("unknown variable in report");
    return *v;
}

inline SweepReport report_from_json(const nlohmann::json &j) {
    SweepReport report;
    const auto &cfg = j.at("config");
    report.config.var = var_from_json(cfg.at("var"));
    report.config.m_lo = cfg.at("m").at(0);
    report.config.m_hi = cfg.at("m").at(1);
    if (cfg.at("r").is_array()) report.config.r_list = cfg.at("r").get<std::vector<long>>();
    report.config.c_list = cfg.at("c").get<std::vector<long>>();
    report.config.case_timeout_s = cfg.value("case_timeout_s", 300.0);
    report.config.jobs = cfg.value("jobs", 1u);

    std::vector<std::tuple<long, long, long>> zero_keys;
    for (const auto &x : j.at("exceptions")) zero_keys.emplace_back(x.at("m"), x.at("r"), x.at("c"));
    for (const auto &x : j.at("results")) {
        CaseResult r;
        r.m = x.at("m");
        r.r = x.at("r");
        r.c = x.at("c");
        r.var = var_from_json(x.at("var"));
        r.zero = x.at("zero");
        if (x.contains("degree")) r.degree = x.at("degree").get<Exponent>();
        if (x.contains("leading")) r.leading = x.at("leading").get<std::string>();
        r.timed_out = x.value("timeout", false);
        r.ms = x.value("ms", 0.0);
        report.results.push_back(r);
        if (std::find(zero_keys.begin(), zero_keys.end(), r.key()) != zero_keys.end())
            report.exceptions.push_back(r);
    }
    report.elapsed_ms = j.value("elapsed_ms", 0.0);
    return report;
}

inline std::string to_text(const SweepReport &report, bool stable) {
    std::ostringstream out;
    for (const auto &r : report.results) {
        out << "m=" << r.m << " r=" << r.r << " c=" << r.c << " var=" << name(r.var);
        if (r.timed_out) out << " TIMEOUT";
        else if (r.zero) out << " zero";
        else out << " degree=" << *r.degree << " leading=" << *r.leading;
        if (!stable) out << " ms=" << static_cast<long>(r.ms);
        out << '\n';
    }
    out << "exceptions:";
    for (const auto &r : report.exceptions) out << " (" << r.m << "," << r.r << "," << r.c << ")";
    if (report.exceptions.empty()) out << " none";
    out << '\n';
    if (!stable) out << "elapsed_ms=" << static_cast<long>(report.elapsed_ms) << '\n';
    return out.str();
}

inline std::string emit_report(const SweepReport &report, ReportFormat format, bool stable) {
    if (format == ReportFormat::text) return to_text(report, stable);
    return to_json(report, stable).dump(2) + "\n";
}

}  // namespace bih
