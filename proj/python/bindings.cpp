#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "cfrplus/evaluator.hpp"
#include "cfrplus/game_tree.hpp"
#include "cfrplus/regret.hpp"
#include "cfrplus/solver.hpp"
#include "cfrplus/table_stats.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

std::vector<double> to_vector(std::span<const double> span) {
  return {span.begin(), span.end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "CFR+ and vanilla CFR solver for one-card poker";

  py::register_exception<cfrplus::SnapshotError>(m, "SnapshotError", PyExc_RuntimeError);

  py::class_<cfrplus::GameSpec>(m, "GameSpec")
      .def(py::init<>())
      .def(py::init([](int deck_size, double ante, double bet_size) {
             return cfrplus::GameSpec{deck_size, ante, bet_size};
           }),
           "deck_size"_a, "ante"_a = 1.0, "bet_size"_a = 1.0)
      .def_readwrite("deck_size", &cfrplus::GameSpec::deck_size)
      .def_readwrite("ante", &cfrplus::GameSpec::ante)
      .def_readwrite("bet_size", &cfrplus::GameSpec::bet_size);

  py::class_<cfrplus::InfosetId>(m, "InfosetId")
      .def_readonly("player", &cfrplus::InfosetId::player)
      .def_readonly("node", &cfrplus::InfosetId::node)
      .def_readonly("card", &cfrplus::InfosetId::card);

  py::class_<cfrplus::GameTree>(m, "GameTree")
      .def_property_readonly("deck_size", &cfrplus::GameTree::deck_size)
      .def_property_readonly("num_nodes", &cfrplus::GameTree::num_nodes)
      .def_property_readonly("num_decision_nodes", &cfrplus::GameTree::num_decision_nodes)
      .def_property_readonly("num_terminal_nodes", &cfrplus::GameTree::num_terminal_nodes)
      .def_property_readonly("fingerprint", &cfrplus::GameTree::fingerprint)
      .def("infoset_count", &cfrplus::GameTree::infoset_count, "player"_a)
      .def("infoset_index", &cfrplus::GameTree::infoset_index, "infoset"_a)
      .def("infoset_at", &cfrplus::GameTree::infoset_at, "player"_a, "index"_a)
      .def("infoset_label", &cfrplus::GameTree::infoset_label, "infoset"_a)
      .def("node_history",
           [](const cfrplus::GameTree& tree, int node) { return tree.node(node).history; },
           "node"_a)
      .def("node_actions",
           [](const cfrplus::GameTree& tree, int node) { return tree.node(node).actions; },
           "node"_a)
      .def("lookup_infosets",
           [](const cfrplus::GameTree& tree, int node) {
             return tree.lookup_infosets(tree.node(node));
           },
           "node"_a)
      .def("terminal_utility",
           [](const cfrplus::GameTree& tree, int node, int traverser,
              const cfrplus::ReachVector& opp_reach) {
             return tree.terminal_utility(tree.node(node), traverser, opp_reach);
           },
           "node"_a, "traverser"_a, "opp_reach"_a)
      .def("terminal_payoff",
           [](const cfrplus::GameTree& tree, int node, int traverser, int card, int opp_card) {
             return tree.terminal_payoff(tree.node(node), traverser, card, opp_card);
           },
           "node"_a, "traverser"_a, "card"_a, "opp_card"_a);

  m.def("build_one_card_poker", &cfrplus::build_one_card_poker, "spec"_a);

  m.def("match_strategy",
        [](const std::vector<double>& regrets) { return cfrplus::match_strategy(regrets); },
        "regrets"_a);
  m.def("update_regret_plus", &cfrplus::update_regret_plus, "current"_a, "delta"_a);
  m.def("update_regret_vanilla", &cfrplus::update_regret_vanilla, "current"_a, "delta"_a);

  py::enum_<cfrplus::Variant>(m, "Variant")
      .value("CFR_PLUS", cfrplus::Variant::kCfrPlus)
      .value("VANILLA_CFR", cfrplus::Variant::kVanillaCfr);

  py::enum_<cfrplus::StopMetric>(m, "StopMetric")
      .value("AVERAGE_PROFILE", cfrplus::StopMetric::kAverageProfile)
      .value("CURRENT_PROFILE", cfrplus::StopMetric::kCurrentProfile);

  py::class_<cfrplus::SolverConfig>(m, "SolverConfig")
      .def(py::init([](cfrplus::Variant variant, int averaging_delay, int max_iterations,
                       bool delay_vanilla_averaging) {
             return cfrplus::SolverConfig{variant, averaging_delay, max_iterations,
                                          delay_vanilla_averaging};
           }),
           "variant"_a = cfrplus::Variant::kCfrPlus, "averaging_delay"_a = 0,
           "max_iterations"_a = 100000, "delay_vanilla_averaging"_a = false)
      .def_readwrite("variant", &cfrplus::SolverConfig::variant)
      .def_readwrite("averaging_delay", &cfrplus::SolverConfig::averaging_delay)
      .def_readwrite("max_iterations", &cfrplus::SolverConfig::max_iterations)
      .def_readwrite("delay_vanilla_averaging", &cfrplus::SolverConfig::delay_vanilla_averaging);

  py::class_<cfrplus::TraceRecord>(m, "TraceRecord")
      .def_readonly("iteration", &cfrplus::TraceRecord::iteration)
      .def_readonly("expl_avg_milli", &cfrplus::TraceRecord::expl_avg_milli)
      .def_readonly("expl_cur_milli", &cfrplus::TraceRecord::expl_cur_milli);

  py::class_<cfrplus::ConvergenceTrace>(m, "ConvergenceTrace")
      .def_readonly("records", &cfrplus::ConvergenceTrace::records)
      .def_readonly("converged", &cfrplus::ConvergenceTrace::converged)
      .def_readonly("iterations_run", &cfrplus::ConvergenceTrace::iterations_run);

  py::class_<cfrplus::Profile>(m, "Profile")
      .def(py::init<>())
      .def_readwrite("strategies", &cfrplus::Profile::strategies);

  py::class_<cfrplus::Solver>(m, "Solver")
      .def(py::init<const cfrplus::GameTree&, cfrplus::SolverConfig>(), "tree"_a, "config"_a,
           py::keep_alive<1, 2>())
      .def_property_readonly("iteration", &cfrplus::Solver::iteration)
      .def("run_iteration", &cfrplus::Solver::run_iteration)
      .def("solve_to_target", &cfrplus::Solver::solve_to_target, "target_milli"_a,
           "probe_interval"_a = 10, "metric"_a = cfrplus::StopMetric::kAverageProfile)
      .def("current_profile", &cfrplus::Solver::current_profile)
      .def("average_profile", &cfrplus::Solver::average_profile)
      .def("regret_entries",
           [](const cfrplus::Solver& solver, int player) {
             return to_vector(solver.regrets(player).entries());
           },
           "player"_a)
      .def("average_entries",
           [](const cfrplus::Solver& solver, int player) {
             return to_vector(solver.averages(player).entries());
           },
           "player"_a);

  m.def("expected_value", &cfrplus::expected_value, "tree"_a, "profile"_a, "player"_a);
  m.def("best_response_value", &cfrplus::best_response_value, "tree"_a, "profile"_a,
        "responder"_a);

  py::class_<cfrplus::ExploitabilityReport>(m, "ExploitabilityReport")
      .def_readonly("br_value_vs_p1", &cfrplus::ExploitabilityReport::br_value_vs_p1)
      .def_readonly("br_value_vs_p2", &cfrplus::ExploitabilityReport::br_value_vs_p2)
      .def_readonly("exploitability_milli",
                    &cfrplus::ExploitabilityReport::exploitability_milli);

  m.def("exploitability", &cfrplus::exploitability, "tree"_a, "profile"_a);

  py::class_<cfrplus::TableStats>(m, "TableStats")
      .def_readonly("entries", &cfrplus::TableStats::entries)
      .def_readonly("zero_fraction", &cfrplus::TableStats::zero_fraction)
      .def_readonly("entropy_bits_per_entry", &cfrplus::TableStats::entropy_bits_per_entry);

  m.def("stats",
        [](const std::vector<double>& values, double quantizer) {
          return cfrplus::stats(std::span<const double>(values), quantizer);
        },
        "values"_a, "quantizer"_a = cfrplus::kDefaultQuantizer);

  m.def("snapshot",
        [](const cfrplus::Solver& solver) {
          const std::vector<std::uint8_t> bytes = cfrplus::snapshot(solver);
          return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        "solver"_a);

  m.def("restore_snapshot",
        [](const cfrplus::GameTree& tree, const cfrplus::SolverConfig& config, py::bytes data) {
          const std::string_view view = data;
          const std::span<const std::uint8_t> bytes(
              reinterpret_cast<const std::uint8_t*>(view.data()), view.size());
          return cfrplus::restore_snapshot(tree, config, bytes);
        },
        "tree"_a, "config"_a, "data"_a, py::keep_alive<0, 1>());
}
