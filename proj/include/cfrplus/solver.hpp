#pragma once

#include <array>
#include <vector>

#include "cfrplus/evaluator.hpp"
#include "cfrplus/game_tree.hpp"
#include "cfrplus/regret.hpp"

namespace cfrplus {

enum class Variant { kCfrPlus, kVanillaCfr };

enum class StopMetric { kAverageProfile, kCurrentProfile };

struct SolverConfig {
  Variant variant = Variant::kCfrPlus;
  // Averaging delay d: iteration t contributes weight max{t - d, 0} to the
  // average strategy. Vanilla CFR averages with weight 1 regardless of d
  // unless delay_vanilla_averaging is set (ablation switch).
  int averaging_delay = 0;
  int max_iterations = 100000;
  bool delay_vanilla_averaging = false;
};

struct TraceRecord {
  int iteration = 0;
  double expl_avg_milli = 0.0;
  double expl_cur_milli = 0.0;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;
  bool converged = false;
  int iterations_run = 0;
};

/// Full-tree vector-form solver with alternating regret updates. One
/// iteration runs two passes, player 1's first; player 2's pass sees
/// player 1's regrets already updated. Everything is deterministic: the
/// whole solve is a pure function of (GameSpec, SolverConfig).
///
/// The tree must outlive the solver. A solver mutates its tables only inside
/// run_iteration/traverse; profile extraction and evaluation happen between
/// passes.
class Solver {
 public:
  Solver(const GameTree& tree, SolverConfig config);

  const GameTree& tree() const { return *tree_; }
  const SolverConfig& config() const { return config_; }
  int iteration() const { return iteration_; }

  /// One outer-loop step: increments the counter, then traverses once per
  /// player with averaging weight max{t - d, 0} (variant rules apply).
  void run_iteration();

  /// One recursive pass for `updating_player`. At the updating player's
  /// nodes: recurse per action first, then apply the regret deltas
  /// m[a] - u per infoset. At the opponent's nodes: scale their reach by the
  /// current strategy, sum child utilities, and accumulate their average
  /// strategy with `weight`. Returns per-card utilities weighted by opponent
  /// reach and deal probabilities.
  UtilityVector traverse(const PublicNode& node, int updating_player, double weight,
                         const ReachVector& opp_reach);

  /// Regret-matched strategies from the live regret tables.
  Profile current_profile() const;

  /// Normalized cumulative weighted strategies (uniform where no mass).
  Profile average_profile() const;

  /// Iterates until the watched profile's exploitability drops below
  /// target_milli at a probe, or the configured max_iterations budget is
  /// exhausted. Probes every probe_interval iterations (and at the budget
  /// boundary), recording both profiles' exploitability each time.
  ConvergenceTrace solve_to_target(double target_milli, int probe_interval,
                                   StopMetric metric = StopMetric::kAverageProfile);

  const ActionTable& regrets(int player) const;
  const ActionTable& averages(int player) const;

  /// Replaces the solver's state with restored tables. Table shapes must
  /// match the tree.
  void restore(int iteration, std::array<ActionTable, 2> regrets,
               std::array<ActionTable, 2> averages);

  double averaging_weight(int t) const;

 private:
  static int check_player(int player);

  const GameTree* tree_;
  SolverConfig config_;
  std::array<ActionTable, 2> regrets_;
  std::array<ActionTable, 2> averages_;
  int iteration_ = 0;
};

}  // namespace cfrplus
