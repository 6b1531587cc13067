#include "cfrplus/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfrplus {

Solver::Solver(const GameTree& tree, SolverConfig config)
    : tree_(&tree), config_(config) {
  if (config_.averaging_delay < 0) {
    throw std::invalid_argument("Solver: averaging delay must be >= 0");
  }
  if (config_.max_iterations < 0) {
    throw std::invalid_argument("Solver: max_iterations must be >= 0");
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    regrets_[p] = ActionTable(tree, p);
    averages_[p] = ActionTable(tree, p);
  }
}

int Solver::check_player(int player) {
  if (player != kPlayer1 && player != kPlayer2) {
    throw std::invalid_argument("invalid player id");
  }
  return player;
}

const ActionTable& Solver::regrets(int player) const { return regrets_[check_player(player)]; }

const ActionTable& Solver::averages(int player) const { return averages_[check_player(player)]; }

double Solver::averaging_weight(int t) const {
  if (config_.variant == Variant::kVanillaCfr && !config_.delay_vanilla_averaging) {
    return 1.0;
  }
  return std::max(static_cast<double>(t - config_.averaging_delay), 0.0);
}

UtilityVector Solver::traverse(const PublicNode& node, int updating_player, double weight,
                               const ReachVector& opp_reach) {
  if (node.is_terminal()) {
    return tree_->terminal_utility(node, updating_player, opp_reach);
  }
  check_player(updating_player);
  if (!(weight >= 0.0)) {
    throw std::invalid_argument("traverse: weight must be >= 0");
  }
  const int n = tree_->deck_size();
  if (static_cast<int>(opp_reach.size()) != n) {
    throw std::invalid_argument("traverse: reach vector size mismatch");
  }
  const int actor = node.acting_player;
  const int num_actions = node.num_actions();

  // sigma[a][c]: probability that the actor holding card c+1 plays action a.
  std::vector<StrategyVector> sigma(num_actions, StrategyVector(n));
  for (int c = 0; c < n; ++c) {
    const StrategyVector s = match_strategy(regrets_[actor].row(node.infoset_base + c));
    for (int a = 0; a < num_actions; ++a) sigma[a][c] = s[a];
  }

  UtilityVector util(n, 0.0);
  if (actor == updating_player) {
    std::vector<UtilityVector> action_util(num_actions);
    for (int a = 0; a < num_actions; ++a) {
      action_util[a] = traverse(tree_->node(node.children[a]), updating_player, weight, opp_reach);
      for (int c = 0; c < n; ++c) util[c] += sigma[a][c] * action_util[a][c];
    }
    // All children are evaluated before any regret at this node is written.
    const bool plus = config_.variant == Variant::kCfrPlus;
    for (int c = 0; c < n; ++c) {
      auto row = regrets_[actor].row(node.infoset_base + c);
      for (int a = 0; a < num_actions; ++a) {
        const double delta = action_util[a][c] - util[c];
        row[a] = plus ? update_regret_plus(row[a], delta)
                      : update_regret_vanilla(row[a], delta);
      }
    }
  } else {
    ReachVector child_reach(n);
    for (int a = 0; a < num_actions; ++a) {
      for (int c = 0; c < n; ++c) child_reach[c] = sigma[a][c] * opp_reach[c];
      const UtilityVector child =
          traverse(tree_->node(node.children[a]), updating_player, weight, child_reach);
      for (int c = 0; c < n; ++c) util[c] += child[c];
    }
    for (int c = 0; c < n; ++c) {
      for (int a = 0; a < num_actions; ++a) {
        accumulate_average(averages_[actor], node.infoset_base + c, a, opp_reach[c],
                           sigma[a][c], weight);
      }
    }
  }
  return util;
}

void Solver::run_iteration() {
  ++iteration_;
  const double weight = averaging_weight(iteration_);
  const ReachVector ones(tree_->deck_size(), 1.0);
  traverse(tree_->root(), kPlayer1, weight, ones);
  traverse(tree_->root(), kPlayer2, weight, ones);
}

Profile Solver::current_profile() const {
  Profile profile;
  for (int p = 0; p < kNumPlayers; ++p) {
    const int count = tree_->infoset_count(p);
    profile.strategies[p].reserve(count);
    for (int i = 0; i < count; ++i) {
      profile.strategies[p].push_back(match_strategy(regrets_[p].row(i)));
    }
  }
  return profile;
}

Profile Solver::average_profile() const {
  Profile profile;
  for (int p = 0; p < kNumPlayers; ++p) {
    const int count = tree_->infoset_count(p);
    profile.strategies[p].reserve(count);
    for (int i = 0; i < count; ++i) {
      profile.strategies[p].push_back(average_strategy(averages_[p], i));
    }
  }
  return profile;
}

ConvergenceTrace Solver::solve_to_target(double target_milli, int probe_interval,
                                         StopMetric metric) {
  if (!(target_milli > 0.0)) {
    throw std::invalid_argument("solve_to_target: target must be > 0");
  }
  if (probe_interval < 1) {
    throw std::invalid_argument("solve_to_target: probe interval must be >= 1");
  }

  ConvergenceTrace trace;
  while (iteration_ < config_.max_iterations) {
    run_iteration();
    const bool at_probe =
        iteration_ % probe_interval == 0 || iteration_ == config_.max_iterations;
    if (!at_probe) continue;

    const double avg_milli = exploitability(*tree_, average_profile()).exploitability_milli;
    const double cur_milli = exploitability(*tree_, current_profile()).exploitability_milli;
    trace.records.push_back({iteration_, avg_milli, cur_milli});

    const double watched = metric == StopMetric::kAverageProfile ? avg_milli : cur_milli;
    if (watched < target_milli) {
      trace.converged = true;
      break;
    }
  }
  trace.iterations_run = iteration_;
  return trace;
}

void Solver::restore(int iteration, std::array<ActionTable, 2> regrets,
                     std::array<ActionTable, 2> averages) {
  if (iteration < 0) {
    throw std::invalid_argument("restore: negative iteration");
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    if (regrets[p].infoset_count() != tree_->infoset_count(p) ||
        averages[p].infoset_count() != tree_->infoset_count(p) ||
        regrets[p].entries().size() != regrets_[p].entries().size() ||
        averages[p].entries().size() != averages_[p].entries().size()) {
      throw std::invalid_argument("restore: table shape does not match the tree");
    }
  }
  iteration_ = iteration;
  regrets_ = std::move(regrets);
  averages_ = std::move(averages);
}

}  // namespace cfrplus
