// verify: sweeps, named checks and ad-hoc resultants.

#include "bihcheck/bihcheck.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPass = 0, kExitMismatch = 1, kExitUsage = 2, kExitInternal = 3;

std::vector<long> parse_list(const std::string &text) {
    std::vector<long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception &) {
            throw bih::UsageError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw bih::UsageError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw bih::UsageError("empty list");
    return out;
}

std::pair<long, long> parse_range(const std::string &text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw bih::UsageError("range must look like A..B");
    const auto lo = parse_list(text.substr(0, dots)), hi = parse_list(text.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1) throw bih::UsageError("range must look like A..B");
    return {lo[0], hi[0]};
}

nlohmann::json to_json(const bih::CheckOutcome &o) {
    return {{"name", o.name},       {"pass", o.pass},         {"witness", o.witness},
            {"details", o.details}, {"elapsed_ms", o.elapsed_ms}};
}

int cmd_check(const std::string &name, bih::ReportFormat format) {
    const bih::CheckOutcome o = bih::run_check(name);
    if (format == bih::ReportFormat::json) {
        std::cout << to_json(o).dump(2) << "\n";
    } else {
        std::cout << o.name << ": " << (o.pass ? "pass" : "FAIL") << " (" << static_cast<long>(o.elapsed_ms)
                  << " ms)\n";
        for (const auto &d : o.details) std::cout << "  " << d << "\n";
        if (!o.pass) std::cout << "witness: " << o.witness << "\n";
    }
    return o.pass ? kExitPass : kExitMismatch;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw bih::UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_resultant(const std::string &manifest_path, const std::string &a, const std::string &b,
                  const std::string &var_name, const std::vector<std::string> &sets) {
    const auto v = bih::var_from_name(var_name);
    if (!v) throw bih::UnknownName("unknown variable '" + var_name + "'");
    const bih::Manifest manifest =
        bih::load_manifest(manifest_path.empty() ? std::string(bih::kDefaultManifest) : read_file(manifest_path));
    bih::Assignment values;
    for (const auto &s : sets) {
        const auto eq = s.find('=');
        const auto w = eq == std::string::npos ? std::nullopt : bih::var_from_name(s.substr(0, eq));
        if (!w) throw bih::UsageError("--set expects VAR=VALUE, got '" + s + "'");
        values[*w] = bih::parse_rat(s.substr(eq + 1));
    }
    const bih::MultiPoly pa = bih::specialize(manifest.at(a), values);
    const bih::MultiPoly pb = bih::specialize(manifest.at(b), values);
    const bih::MultiPoly res = bih::resultant(pa, pb, *v);
    std::cout << bih::format(res) << "\n";
    if (res.is_zero()) {
        std::cout << "# zero polynomial\n";
        return kExitPass;
    }
    const auto vars = res.variables();
    for (bih::Var w : vars) std::cout << "# degree in " << bih::name(w) << ": " << res.degree(w) << "\n";
    if (vars.empty()) {
        std::cout << "# constant\n";
    } else {
        std::cout << "# leading coefficient in " << bih::name(vars.front()) << ": "
                  << bih::format(bih::leading_coeff_in(res, vars.front())) << "\n";
    }
    return kExitPass;
}

int cmd_export(const std::string &path) {
    if (path.empty()) {
        std::cout << bih::kDefaultManifest;
        return kExitPass;
    }
    std::ofstream out(path);
    if (!out) throw bih::UsageError("cannot write " + path);
    out << bih::kDefaultManifest;
    return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact resultant and identity checks for three-curvature biharmonic hypersurfaces"};
    app.require_subcommand(1);

    auto *sweep = app.add_subcommand("sweep", "Res(H, K, var) over a range of (m, r, c)");
    std::string sweep_var, m_range, r_spec = "all", c_spec = "-1,0,1", format = "json";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool full = false, stable = false;
    double case_timeout = 300;
    sweep->add_option("--var", sweep_var, "elimination variable (k or f)")->required();
    sweep->add_option("--m", m_range, "m range A..B (default 4..15)");
    sweep->add_option("--r", r_spec, "'all' or a comma separated list");
    sweep->add_option("--c", c_spec, "comma separated subset of -1,0,1");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_flag("--full", full, "m range 4..30");
    sweep->add_option("--format", format, "json or text");
    sweep->add_flag("--stable-output", stable, "omit timing fields");
    sweep->add_option("--case-timeout", case_timeout, "seconds per case");

    auto *check = app.add_subcommand("check", "run a named check");
    std::string check_name, check_format = "text";
    check->add_option("name", check_name, "check name")->required();
    check->add_option("--format", check_format, "json or text");

    auto *res = app.add_subcommand("resultant", "resultant of two manifest entries");
    std::string manifest_path, name_a, name_b, res_var;
    std::vector<std::string> sets;
    res->add_option("--manifest", manifest_path, "manifest file (default: embedded)");
    res->add_option("--a", name_a, "first entry")->required();
    res->add_option("--b", name_b, "second entry")->required();
    res->add_option("--var", res_var, "variable to eliminate")->required();
    res->add_option("--set", sets, "specialize VAR=VALUE before eliminating");

    auto *exp = app.add_subcommand("export-manifest", "write the embedded manifest");
    std::string export_path;
    exp->add_option("file", export_path, "output file (default: stdout)");

    auto *list = app.add_subcommand("list-checks", "print the check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    const auto parse_format = [](const std::string &f) {
        if (f == "json") return bih::ReportFormat::json;
        if (f == "text") return bih::ReportFormat::text;
        throw bih::UsageError("format must be json or text");
    };

    try {
        if (*sweep) {
            bih::SweepConfig cfg;
            const auto v = bih::var_from_name(sweep_var);
            if (!v) throw bih::UsageError("--var must be k or f");
            cfg.var = *v;
            if (full) cfg.m_hi = 30;
            if (!m_range.empty()) std::tie(cfg.m_lo, cfg.m_hi) = parse_range(m_range);
            if (r_spec != "all") cfg.r_list = parse_list(r_spec);
            cfg.c_list = parse_list(c_spec);
            cfg.jobs = jobs;
            cfg.format = parse_format(format);
            cfg.stable_output = stable;
            cfg.case_timeout_s = case_timeout;
            const bih::SweepReport report = bih::run_sweep(cfg);
            std::cout << bih::emit_report(report, cfg.format, cfg.stable_output);
            switch (bih::judge(report)) {
                case bih::SweepVerdict::pass: return kExitPass;
                case bih::SweepVerdict::mismatch: return kExitMismatch;
                case bih::SweepVerdict::timeout: return kExitInternal;
            }
        }
        if (*check) return cmd_check(check_name, parse_format(check_format));
        if (*res) return cmd_resultant(manifest_path, name_a, name_b, res_var, sets);
        if (*exp) return cmd_export(export_path);
        if (*list) {
            for (auto n : bih::kCheckNames) std::cout << n << "\n";
            return kExitPass;
        }
    } catch (const bih::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bih::InvalidParameters &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bih::UnknownCheck &e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const bih::SyntaxError &e) {
        std::cerr << "manifest error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bih::UnknownName &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bih::DuplicateName &e) {
        std::cerr << "manifest error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bih::ForwardReference &e) {
        std::cerr << "manifest error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
