#include "matchplay/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchplay/analytic.hpp"
#include "matchplay/core.hpp"
#include "matchplay/dp.hpp"
#include "matchplay/oracle.hpp"
#include "matchplay/policies.hpp"
#include "matchplay/report.hpp"
#include "matchplay/sim.hpp"
#include "matchplay/verify.hpp"

namespace matchplay::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    // Defaults reproduce the two-game chess vignette.
    std::string pw = "0.45", pd = "0", pl = "0.55";
    std::string qw = "0.10", qd = "0.75", ql = "0.15";
    int horizon = 2;
    int n_max = 20;
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
    std::string format;
    std::string out_path;
    std::string policy = "opt";
    unsigned workers = 1;
    int draws = 100;
    bool oracle = false;
    bool table = false;
};

double parse_number(const std::string& name, const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
        throw InvalidProbability("--" + name + ": '" + text + "' is not a finite decimal");
    return v;
}

MatchSpec build_spec(const RunConfig& c) {
    return MatchSpec(StyleDistribution(parse_number("pw", c.pw), parse_number("pd", c.pd), parse_number("pl", c.pl)),
                     StyleDistribution(parse_number("qw", c.qw), parse_number("qd", c.qd), parse_number("ql", c.ql)));
}

std::string short_number(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return short_number(v.get<double>());
    if (v.is_null()) return "n/a";
    return v.dump();
}

// Renders a flat key/value report in the requested format.
std::string render_report(const Json& report, const std::string& format) {
    std::string out;
    if (format == "json") return report.dump(2) + "\n";
    if (format == "csv") {
        std::string header, row;
        for (auto it = report.begin(); it != report.end(); ++it) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += it.key();
            row += it.value().is_number_float() ? report::format_number(it.value().get<double>())
                                                : scalar_text(it.value());
        }
        return header + "\n" + row + "\n";
    }
    for (auto it = report.begin(); it != report.end(); ++it) out += it.key() + "=" + scalar_text(it.value()) + "\n";
    return out;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

Json classify_report(const MatchSpec& spec) {
    const auto& c = spec.classification();
    Json r;
    r["weak"] = c.weak;
    r["strictly_weak"] = c.strictly_weak;
    r["safe_defense"] = c.safe_defense;
    r["fair_defense"] = c.fair_defense;
    r["fair_non_safe"] = c.fair_non_safe;
    r["defense_dominates_offense"] = c.defense_dominates_offense;
    r["offense_dominates_defense"] = c.offense_dominates_defense;
    r["g1_off"] = spec.offense().drift();
    r["g1_def"] = spec.defense().drift();
    return r;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
    const auto spec = build_spec(c);
    Output o(c.out_path, out);
    o.stream() << render_report(classify_report(spec), c.format.empty() ? "text" : c.format);
    return kOk;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
    const auto spec = build_spec(c);
    const auto sol = dp::solve(spec, c.horizon);
    Output o(c.out_path, out);
    if (c.table) {
        o.stream() << "k,x,value,action\n";
        for (int k = c.horizon; k >= 1; --k) {
            const int r = std::min(k, c.horizon - k);
            for (int x = -r; x <= r; ++x)
                o.stream() << k << ',' << x << ',' << report::format_number(sol.values.at(k, x)) << ','
                           << to_string(sol.policy.action(k, x)) << '\n';
        }
        return kOk;
    }
    Json r;
    r["N"] = c.horizon;
    r["gain"] = sol.gain;
    r["first_action"] = to_string(sol.policy.action(c.horizon, 0));
    r["evaluations"] = sol.evaluations;
    if (c.oracle) {
        const auto exact = policies::ExactSpec::parse(c.pw, c.pd, c.pl, c.qw, c.qd, c.ql);
        const auto res = policies::brute_force_optimal_exact(exact, c.horizon);
        r["oracle_gain"] = res.gain;
        r["oracle_fraction"] = res.fraction();
    }
    o.stream() << render_report(r, c.format.empty() ? "text" : c.format);
    return kOk;
}

int cmd_curve(const RunConfig& c, std::ostream& out) {
    const auto spec = build_spec(c);
    const auto curve = dp::gain_curve(spec, c.n_max);
    Output o(c.out_path, out);
    o.stream() << (c.format == "json" ? report::curve_json(curve) : report::curve_csv(curve));
    return kOk;
}

int cmd_nstar(const RunConfig& c, std::ostream& out) {
    const auto spec = build_spec(c);
    const auto best = dp::find_optimal_horizon(spec, c.n_max);
    Json r;
    r["N_star"] = best.horizon;
    r["gain"] = best.gain;
    Output o(c.out_path, out);
    o.stream() << render_report(r, c.format.empty() ? "text" : c.format);
    return kOk;
}

int cmd_limits(const RunConfig& c, std::ostream& out) {
    const auto spec = build_spec(c);
    const auto verdict = analytic::optimal_limit(spec);
    Json r;
    r["regime"] = analytic::to_string(verdict.regime);
    r["optimal_limit"] = verdict.optimal_limit;
    r["cat_limit"] = verdict.cat_limit ? Json(*verdict.cat_limit) : Json(nullptr);
    r["hitting_probability"] = analytic::hitting_probability(spec.offense());
    Output o(c.out_path, out);
    o.stream() << render_report(r, c.format.empty() ? "text" : c.format);
    return kOk;
}

policies::Policy select_policy(const std::string& name, const MatchSpec& spec, int horizon) {
    if (name == "off") return policies::fixed_policy(Action::Offense);
    if (name == "def") return policies::fixed_policy(Action::Defense);
    if (name == "cat") return policies::cat_policy();
    if (name == "catplus") return policies::cat_plus_policy(spec);
    return policies::table_policy(dp::solve(spec, horizon).policy);
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
    const auto spec = build_spec(c);
    const auto policy = select_policy(c.policy, spec, c.horizon);
    const auto est = sim::estimate_gain(spec, policy, c.horizon, c.samples, c.seed, c.workers);
    Json r;
    r["policy"] = policy.name();
    r["N"] = c.horizon;
    r["mean"] = est.mean;
    r["std_error"] = std::isnan(est.std_error) ? Json(nullptr) : Json(est.std_error);
    r["samples"] = est.samples;
    r["seed"] = est.seed;
    r["exact"] = policies::exact_policy_gain(spec, policy, c.horizon);
    Output o(c.out_path, out);
    o.stream() << render_report(r, c.format.empty() ? "text" : c.format);
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    verify::SuiteOptions options;
    options.draws = c.draws;
    options.seed = c.seed;
    options.user_spec = build_spec(c);
    const auto results = verify::run_suite(options);
    Output o(c.out_path, out);
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"cases", r.cases}});
        o.stream() << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) o.stream() << verify::format(r) << "\n";
    }
    return verify::all_passed(results) ? kOk : kVerificationFailed;
}

void add_spec_options(CLI::App* sub, RunConfig& c) {
    sub->add_option("--pw", c.pw, "offense win probability")->capture_default_str();
    sub->add_option("--pd", c.pd, "offense draw probability")->capture_default_str();
    sub->add_option("--pl", c.pl, "offense loss probability")->capture_default_str();
    sub->add_option("--qw", c.qw, "defense win probability")->capture_default_str();
    sub->add_option("--qd", c.qd, "defense draw probability")->capture_default_str();
    sub->add_option("--ql", c.ql, "defense loss probability")->capture_default_str();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", c.out_path, "write output to PATH instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Optimal adaptive play for a weaker player in an N-game match", "matchplay"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "classification flags and one-game gains");
    auto* solve = app.add_subcommand("solve", "optimal gain and policy for one horizon");
    auto* curve = app.add_subcommand("curve", "gain curves for N = 1..n-max (CSV or JSON)");
    auto* nstar = app.add_subcommand("nstar", "horizon maximizing the optimal gain");
    auto* limits = app.add_subcommand("limits", "asymptotic limits for a weak player");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of a policy's gain");
    auto* verify_cmd = app.add_subcommand("verify", "structural property suites");

    for (auto* sub : {classify, solve, curve, nstar, limits, simulate, verify_cmd}) add_spec_options(sub, c);
    for (auto* sub : {solve, simulate}) sub->add_option("--horizon", c.horizon, "number of games N")->capture_default_str();
    for (auto* sub : {curve, nstar}) sub->add_option("--n-max", c.n_max, "largest horizon")->capture_default_str();
    for (auto* sub : {simulate, verify_cmd}) sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    solve->add_flag("--oracle", c.oracle, "also run the exact brute-force oracle (N <= 5)");
    solve->add_flag("--table", c.table, "emit the value and policy table as CSV");
    simulate->add_option("--samples", c.samples, "number of simulated matches")->capture_default_str();
    simulate->add_option("--policy", c.policy, "off|def|cat|catplus|opt")
        ->check(CLI::IsMember({"off", "def", "cat", "catplus", "opt"}))
        ->capture_default_str();
    simulate->add_option("--workers", c.workers, "worker threads")->capture_default_str();
    verify_cmd->add_option("--draws", c.draws, "random parameter draws per property")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify) return cmd_classify(c, out);
        if (*solve) return cmd_solve(c, out);
        if (*curve) return cmd_curve(c, out);
        if (*nstar) return cmd_nstar(c, out);
        if (*limits) return cmd_limits(c, out);
        if (*simulate) return cmd_simulate(c, out);
        if (*verify_cmd) return cmd_verify(c, out);
    } catch (const HorizonTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace matchplay::cli
