#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matchplay/analytic.hpp"
#include "matchplay/core.hpp"
#include "matchplay/dp.hpp"
#include "matchplay/oracle.hpp"
#include "matchplay/policies.hpp"
#include "matchplay/sim.hpp"

namespace py = pybind11;
using namespace matchplay;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Optimal adaptive play for a weaker player in an N-game match";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<InvalidProbability>(m, "InvalidProbability", base.ptr());
    py::register_exception<DefensiveConventionViolated>(m, "DefensiveConventionViolated", base.ptr());
    py::register_exception<InvalidHorizon>(m, "InvalidHorizon", base.ptr());
    auto budget = py::register_exception<HorizonTooLarge>(m, "HorizonTooLarge", base.ptr());
    py::register_exception<OracleHorizonTooLarge>(m, "OracleHorizonTooLarge", budget.ptr());
    py::register_exception<RegimeNotCovered>(m, "RegimeNotCovered", base.ptr());
    py::register_exception<InvalidSampleCount>(m, "InvalidSampleCount", base.ptr());

    py::enum_<Action>(m, "Action")
        .value("Offense", Action::Offense)
        .value("Defense", Action::Defense);

    py::class_<StyleDistribution>(m, "StyleDistribution")
        .def(py::init<double, double, double>(), py::arg("win"), py::arg("draw"), py::arg("loss"))
        .def_property_readonly("win", &StyleDistribution::win)
        .def_property_readonly("draw", &StyleDistribution::draw)
        .def_property_readonly("loss", &StyleDistribution::loss)
        .def_property_readonly("drift", &StyleDistribution::drift)
        .def("mirrored", &StyleDistribution::mirrored)
        .def("__repr__", [](const StyleDistribution& s) { return "StyleDistribution" + describe(s); });

    py::class_<Classification>(m, "Classification")
        .def_readonly("weak", &Classification::weak)
        .def_readonly("strictly_weak", &Classification::strictly_weak)
        .def_readonly("safe_defense", &Classification::safe_defense)
        .def_readonly("fair_defense", &Classification::fair_defense)
        .def_readonly("fair_non_safe", &Classification::fair_non_safe)
        .def_readonly("defense_dominates_offense", &Classification::defense_dominates_offense)
        .def_readonly("offense_dominates_defense", &Classification::offense_dominates_defense);

    py::class_<MatchSpec>(m, "MatchSpec")
        .def(py::init<StyleDistribution, StyleDistribution>(), py::arg("offense"), py::arg("defense"))
        .def_property_readonly("offense", &MatchSpec::offense)
        .def_property_readonly("defense", &MatchSpec::defense)
        .def_property_readonly("classification", &MatchSpec::classification);

    m.def("make_distribution", &make_distribution, py::arg("win"), py::arg("draw"), py::arg("loss"));
    m.def("make_spec", &make_spec, py::arg("pw"), py::arg("pd"), py::arg("pl"), py::arg("qw"), py::arg("qd"),
          py::arg("ql"));
    m.def("classify", &classify);
    m.def("dominates", &dominates, py::arg("a"), py::arg("b"));

    // analytic
    py::enum_<analytic::Regime>(m, "Regime")
        .value("BothStrictlyLosing", analytic::Regime::BothStrictlyLosing)
        .value("FairNonSafe", analytic::Regime::FairNonSafe)
        .value("SafeDefense", analytic::Regime::SafeDefense);
    py::class_<analytic::AsymptoticVerdict>(m, "AsymptoticVerdict")
        .def_readonly("regime", &analytic::AsymptoticVerdict::regime)
        .def_readonly("optimal_limit", &analytic::AsymptoticVerdict::optimal_limit)
        .def_readonly("cat_limit", &analytic::AsymptoticVerdict::cat_limit);
    m.def("fixed_style_positive_prob", &analytic::fixed_style_positive_prob, py::arg("style"), py::arg("horizon"));
    m.def("fixed_style_gain", &analytic::fixed_style_gain, py::arg("style"), py::arg("horizon"));
    m.def("hitting_probability", &analytic::hitting_probability, py::arg("offense"));
    m.def("cat_limit", &analytic::cat_limit, py::arg("spec"));
    m.def("optimal_limit", &analytic::optimal_limit, py::arg("spec"));

    // dp
    py::class_<dp::Solution>(m, "Solution")
        .def_readonly("gain", &dp::Solution::gain)
        .def_readonly("evaluations", &dp::Solution::evaluations)
        .def("value", [](const dp::Solution& s, int k, int x) { return s.values.value(k, x); },
             py::arg("games_remaining"), py::arg("score"))
        .def("action", [](const dp::Solution& s, int k, int x) { return s.policy.action(k, x); },
             py::arg("games_remaining"), py::arg("score"));
    m.def(
        "solve",
        [](const MatchSpec& spec, int horizon, bool prune) {
            dp::SolverOptions o;
            o.prune_forced = prune;
            return dp::solve(spec, horizon, o);
        },
        py::arg("spec"), py::arg("horizon"), py::arg("prune") = true);
    m.def(
        "optimal_gains", [](const MatchSpec& spec, int n_max) { return dp::optimal_gains(spec, n_max); },
        py::arg("spec"), py::arg("n_max"));
    m.def(
        "find_optimal_horizon",
        [](const MatchSpec& spec, int n_max) {
            const auto best = dp::find_optimal_horizon(spec, n_max);
            return py::make_tuple(best.horizon, best.gain);
        },
        py::arg("spec"), py::arg("n_max"));
    m.def(
        "gain_curve",
        [](const MatchSpec& spec, int n_max) {
            const auto curve = dp::gain_curve(spec, n_max);
            py::dict d;
            d["N"] = curve.horizons;
            for (const auto& s : curve.series) d[dp::column_name(s.policy)] = s.gains;
            return d;
        },
        py::arg("spec"), py::arg("n_max"));

    // policies
    py::class_<policies::Policy>(m, "Policy")
        .def_property_readonly("name", &policies::Policy::name)
        .def("__call__", &policies::Policy::operator(), py::arg("games_remaining"), py::arg("score"),
             py::arg("switched"));
    m.def("fixed_policy", &policies::fixed_policy, py::arg("style"));
    m.def("cat_policy", &policies::cat_policy);
    m.def("cat_plus_policy", &policies::cat_plus_policy, py::arg("spec"));
    m.def(
        "optimal_policy",
        [](const MatchSpec& spec, int horizon) { return policies::table_policy(dp::solve(spec, horizon).policy); },
        py::arg("spec"), py::arg("horizon"));
    m.def("exact_policy_gain", &policies::exact_policy_gain, py::arg("spec"), py::arg("policy"), py::arg("horizon"));
    m.def("brute_force_optimal", &policies::brute_force_optimal, py::arg("spec"), py::arg("horizon"));
    m.def(
        "cat_plus_identity_check",
        [](const MatchSpec& spec, int horizon) {
            const auto r = policies::cat_plus_identity_check(spec, horizon);
            return py::make_tuple(r.max_discrepancy, r.worst_horizon);
        },
        py::arg("spec"), py::arg("horizon"));

    // sim
    py::class_<sim::SimEstimate>(m, "SimEstimate")
        .def_readonly("mean", &sim::SimEstimate::mean)
        .def_readonly("std_error", &sim::SimEstimate::std_error)
        .def_readonly("samples", &sim::SimEstimate::samples)
        .def_readonly("seed", &sim::SimEstimate::seed);
    m.def("estimate_gain", &sim::estimate_gain, py::arg("spec"), py::arg("policy"), py::arg("horizon"),
          py::arg("samples"), py::arg("seed"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
}
