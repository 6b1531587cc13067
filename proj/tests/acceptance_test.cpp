// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one pass/fail line each; the exit status is the number of failures.
// Usage: acceptance_tests [path-to-cfrbench]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cfrplus/evaluator.hpp"
#include "cfrplus/game_tree.hpp"
#include "cfrplus/solver.hpp"
#include "cfrplus/table_stats.hpp"
#include "oracle.hpp"

using namespace cfrplus;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
            << std::endl;
  if (!pass) ++g_failures;
}

struct TimedRun {
  ConvergenceTrace trace;
  double seconds = 0.0;
};

TimedRun solve_timed(int deck, Variant variant, double target_milli, int probe_interval,
                     StopMetric metric = StopMetric::kAverageProfile) {
  const GameTree tree = build_one_card_poker({deck});
  SolverConfig config;
  config.variant = variant;
  config.max_iterations = 100000;
  Solver solver(tree, config);
  const auto start = std::chrono::steady_clock::now();
  TimedRun run;
  run.trace = solver.solve_to_target(target_milli, probe_interval, metric);
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

// Criteria 1 and 2: convergence of both variants to 1 milli within budget and
// time bounds, and the iteration-count gap at larger decks.
void convergence_and_gap() {
  std::map<std::pair<int, int>, int> iterations;
  bool converged_all = true;
  bool fast_enough = true;
  std::ostringstream detail;
  for (int deck : {4, 8, 16}) {
    for (Variant variant : {Variant::kCfrPlus, Variant::kVanillaCfr}) {
      const TimedRun run = solve_timed(deck, variant, 1.0, 10);
      iterations[{deck, static_cast<int>(variant)}] = run.trace.iterations_run;
      converged_all = converged_all && run.trace.converged;
      fast_enough = fast_enough && run.seconds < 60.0;
      detail << "deck " << deck << (variant == Variant::kCfrPlus ? " cfr+ " : " cfr ")
             << run.trace.iterations_run << " iters (" << run.seconds << " s); ";
    }
  }
  report(1, converged_all && fast_enough,
         "both variants reach < 1 milli within 100000 iterations, each run < 60 s -- " +
             detail.str());

  bool gap_ok = true;
  std::ostringstream ratios;
  for (int deck : {8, 16}) {
    const double plus = iterations[{deck, static_cast<int>(Variant::kCfrPlus)}];
    const double vanilla = iterations[{deck, static_cast<int>(Variant::kVanillaCfr)}];
    const double ratio = vanilla / plus;
    gap_ok = gap_ok && plus <= vanilla / 5.0;
    ratios << "deck " << deck << " ratio " << ratio << "x; ";
  }
  report(2, gap_ok, "cfr+ needs at most 1/5 of vanilla's iterations at decks >= 8 -- " +
                        ratios.str());
}

// Criterion 3: at deck 3 the current strategy crosses 1 milli later than the
// average strategy, or not at all within the budget.
void small_deck_current_strategy() {
  const TimedRun run = solve_timed(3, Variant::kCfrPlus, 1.0, 1, StopMetric::kCurrentProfile);
  std::optional<int> avg_cross;
  std::optional<int> cur_cross;
  for (const TraceRecord& rec : run.trace.records) {
    if (!avg_cross && rec.expl_avg_milli < 1.0) avg_cross = rec.iteration;
    if (!cur_cross && rec.expl_cur_milli < 1.0) cur_cross = rec.iteration;
  }
  std::ostringstream detail;
  detail << "deck 3 cfr+: average crosses 1 milli at "
         << (avg_cross ? std::to_string(*avg_cross) : std::string("never"))
         << ", current at " << (cur_cross ? std::to_string(*cur_cross) : std::string("never"))
         << " (budget 100000)";
  const bool pass = avg_cross.has_value() && (!cur_cross || *cur_cross > *avg_cross);
  report(3, pass, "current strategy lags the average on the small deck -- " + detail.str());
}

// Criterion 4: the solved deck-3 average profile sits within 0.001 chips of
// the known game value, pinned by the exhaustive oracle.
void equilibrium_value() {
  const GameTree tree = build_one_card_poker({3});
  SolverConfig config;
  config.max_iterations = 100000;
  Solver solver(tree, config);
  const ConvergenceTrace trace = solver.solve_to_target(0.5, 10);
  const Profile average = solver.average_profile();

  const double value = -1.0 / 18.0;
  const double ev = oracle::enumerate_expected_value(tree, average, kPlayer1);
  const double gain_p2 =
      oracle::brute_force_best_response_value(tree, average, kPlayer2) - (-value);
  const double gain_p1 = oracle::brute_force_best_response_value(tree, average, kPlayer1) - value;

  std::ostringstream detail;
  detail << "P1 value " << ev << " vs -1/18 = " << value << "; oracle BR gains "
         << 1000.0 * gain_p1 << " / " << 1000.0 * gain_p2 << " milli";
  const bool pass = trace.converged && std::abs(ev - value) <= 0.001 && gain_p1 < 1.0e-3 &&
                    gain_p2 < 1.0e-3;
  report(4, pass, "solved deck-3 value matches the exhaustive oracle -- " + detail.str());
}

// Criterion 5: backward-pass best response equals brute-force enumeration.
void best_response_oracle() {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  double worst = 0.0;
  for (int deck : {2, 3, 4}) {
    const GameTree tree = build_one_card_poker({deck});
    for (int trial = 0; trial < 34; ++trial) {
      Profile profile;
      for (int p = 0; p < kNumPlayers; ++p) {
        for (int i = 0; i < tree.infoset_count(p); ++i) {
          const int actions = tree.node(tree.infoset_at(p, i).node).num_actions();
          std::vector<double> row(actions);
          double sum = 0.0;
          for (double& v : row) {
            v = unit(rng) < 0.2 ? 1e-4 * unit(rng) : unit(rng);
            sum += v;
          }
          for (double& v : row) v /= sum;
          profile.strategies[p].push_back(std::move(row));
        }
      }
      for (int responder = 0; responder < kNumPlayers; ++responder) {
        const double fast = best_response_value(tree, profile, responder);
        const double brute = oracle::brute_force_best_response_value(tree, profile, responder);
        worst = std::max(worst, std::abs(fast - brute));
        ++checked;
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " randomized profiles over decks 2-4, max |diff| = " << worst;
  report(5, worst <= 1e-12, "best response equals brute-force enumeration -- " + detail.str());
}

// Criterion 6: plus-regret nonnegativity, strategies are distributions, and
// the delayed-averaging zero phase.
void invariant_suite() {
  const GameTree tree = build_one_card_poker({8});
  Solver solver(tree, {});
  bool regrets_nonnegative = true;
  bool distributions_ok = true;
  for (int t = 0; t < 1000; ++t) {
    solver.run_iteration();
    for (int p = 0; p < kNumPlayers; ++p) {
      for (double v : solver.regrets(p).entries()) {
        regrets_nonnegative = regrets_nonnegative && v >= 0.0;
      }
    }
    const Profile current = solver.current_profile();
    const Profile average = solver.average_profile();
    for (const Profile* profile : {&current, &average}) {
      for (int p = 0; p < kNumPlayers; ++p) {
        for (const auto& row : profile->strategies[p]) {
          double sum = 0.0;
          for (double v : row) {
            distributions_ok = distributions_ok && v >= 0.0;
            sum += v;
          }
          distributions_ok = distributions_ok && std::abs(sum - 1.0) <= 1e-12;
        }
      }
    }
  }

  SolverConfig delayed;
  delayed.averaging_delay = 50;
  Solver delayed_solver(tree, delayed);
  bool zero_phase_ok = true;
  for (int t = 1; t <= 50; ++t) {
    delayed_solver.run_iteration();
    for (int p = 0; p < kNumPlayers; ++p) {
      for (double v : delayed_solver.averages(p).entries()) {
        zero_phase_ok = zero_phase_ok && v == 0.0;
      }
    }
  }
  delayed_solver.run_iteration();
  bool mass_appears = false;
  for (int p = 0; p < kNumPlayers; ++p) {
    for (double v : delayed_solver.averages(p).entries()) mass_appears |= v > 0.0;
  }

  std::ostringstream detail;
  detail << "1000 deck-8 cfr+ iterations; d=50 zero phase "
         << (zero_phase_ok ? "held" : "violated") << ", mass appears at t=51: "
         << (mass_appears ? "yes" : "no");
  report(6, regrets_nonnegative && distributions_ok && zero_phase_ok && mass_appears,
         "regret nonnegativity, distribution outputs, delayed zero phase -- " + detail.str());
}

// Criterion 7: plus regrets are more compressible at iteration 500, deck 8.
void compressibility() {
  const GameTree tree = build_one_card_poker({8});
  SolverConfig plus_config;
  plus_config.variant = Variant::kCfrPlus;
  SolverConfig vanilla_config;
  vanilla_config.variant = Variant::kVanillaCfr;
  Solver plus(tree, plus_config);
  Solver vanilla(tree, vanilla_config);
  for (int t = 0; t < 500; ++t) {
    plus.run_iteration();
    vanilla.run_iteration();
  }
  auto combined = [](const Solver& solver) {
    std::vector<double> all;
    for (int p = 0; p < kNumPlayers; ++p) {
      const auto e = solver.regrets(p).entries();
      all.insert(all.end(), e.begin(), e.end());
    }
    return all;
  };
  const TableStats sp = stats(combined(plus));
  const TableStats sv = stats(combined(vanilla));
  std::ostringstream detail;
  detail << "zero fraction " << sp.zero_fraction << " vs " << sv.zero_fraction << "; entropy "
         << sp.entropy_bits_per_entry << " vs " << sv.entropy_bits_per_entry << " bits";
  report(7,
         sp.zero_fraction > sv.zero_fraction &&
             sp.entropy_bits_per_entry <= sv.entropy_bits_per_entry,
         "cfr+ regret tables carry more zeros and no more entropy -- " + detail.str());
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Criterion 8: byte-identical CSV across identical CLI invocations, and a
// snapshot/restore mid-run that reproduces the uninterrupted trace.
void determinism_and_snapshot(const char* cli_path) {
  bool csv_identical = false;
  std::string csv_detail = "CLI determinism not checked (no binary path)";
  if (cli_path != nullptr) {
    const std::string base = "solve --deck 4 --variant cfr+ --d 0 --target-milli 1";
    const std::string out_a = "acceptance_trace_a.csv";
    const std::string out_b = "acceptance_trace_b.csv";
    const std::string cmd_a =
        std::string(cli_path) + " " + base + " --output " + out_a + " 2>/dev/null";
    const std::string cmd_b =
        std::string(cli_path) + " " + base + " --output " + out_b + " 2>/dev/null";
    const int rc_a = std::system(cmd_a.c_str());
    const int rc_b = std::system(cmd_b.c_str());
    const auto a = read_file(out_a);
    const auto b = read_file(out_b);
    csv_identical = rc_a == 0 && rc_b == 0 && a && b && !a->empty() && *a == *b;
    csv_detail = csv_identical ? "two identical solve invocations wrote identical CSV"
                               : "CSV outputs differ or the CLI failed";
    std::remove(out_a.c_str());
    std::remove(out_b.c_str());
  }

  const GameTree tree = build_one_card_poker({4});
  auto probe = [&](Solver& solver) {
    return exploitability(tree, solver.average_profile()).exploitability_milli;
  };

  Solver straight(tree, {});
  std::vector<double> straight_probes;
  for (int t = 1; t <= 60; ++t) {
    straight.run_iteration();
    if (t % 10 == 0) straight_probes.push_back(probe(straight));
  }

  Solver first_half(tree, {});
  std::vector<double> resumed_probes;
  for (int t = 1; t <= 30; ++t) {
    first_half.run_iteration();
    if (t % 10 == 0) resumed_probes.push_back(probe(first_half));
  }
  const std::vector<std::uint8_t> bytes = snapshot(first_half);
  Solver resumed = restore_snapshot(tree, {}, bytes);
  for (int t = 31; t <= 60; ++t) {
    resumed.run_iteration();
    if (t % 10 == 0) resumed_probes.push_back(probe(resumed));
  }

  const bool snapshot_identical = straight_probes == resumed_probes;
  report(8, csv_identical && snapshot_identical,
         csv_detail + "; snapshot/restore trace " +
             (snapshot_identical ? "matches the uninterrupted run exactly"
                                 : "diverges from the uninterrupted run"));
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli_path = argc > 1 ? argv[1] : nullptr;
  convergence_and_gap();
  small_deck_current_strategy();
  equilibrium_value();
  best_response_oracle();
  invariant_suite();
  compressibility();
  determinism_and_snapshot(cli_path);
  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
  return g_failures;
}
