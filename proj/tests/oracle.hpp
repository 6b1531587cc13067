// Independent reference implementations used only by tests. Everything here
// enumerates deals and histories scalar-wise and hand-rolls its own strategy
// normalization, so none of it shares a code path with the vector-form
// traversal or the backward-pass best response it checks.
#pragma once

#include <array>
#include <vector>

#include "cfrplus/evaluator.hpp"
#include "cfrplus/game_tree.hpp"
#include "cfrplus/solver.hpp"

namespace cfrplus::oracle {

/// Exact expectation by enumerating every ordered deal and every action path.
double enumerate_expected_value(const GameTree& tree, const Profile& profile, int player);

/// Max over all of the responder's pure behavioral strategies of the
/// enumerated expected value. Exponential in the responder's infoset count;
/// meant for small decks.
double brute_force_best_response_value(const GameTree& tree, const Profile& profile,
                                       int responder);

/// Scalar-enumeration solver mirroring the alternating-update discipline:
/// two passes per iteration, the second pass reading the first pass's regret
/// updates. Within a pass, strategies are frozen from the tables as they
/// stood when the pass began and all regret deltas are applied at the end of
/// the pass (each public node is visited once per pass, so reads never race
/// writes).
class ReferenceSolver {
 public:
  ReferenceSolver(const GameTree& tree, Variant variant, int averaging_delay,
                  bool delay_vanilla_averaging = false, bool player2_first = false);

  void run_iteration();
  int iteration() const { return iteration_; }

  const std::vector<std::vector<double>>& regrets(int player) const {
    return regrets_[player];
  }
  const std::vector<std::vector<double>>& averages(int player) const {
    return averages_[player];
  }

 private:
  using Tables = std::array<std::vector<std::vector<double>>, 2>;

  void run_pass(int updating_player, double weight);
  std::vector<double> frozen_strategy(int player, int infoset) const;
  double deal_value(const Tables& sigma, int node_id, int player,
                    const std::array<Card, 2>& cards) const;

  const GameTree* tree_;
  Variant variant_;
  int averaging_delay_;
  bool delay_vanilla_averaging_;
  bool player2_first_;
  Tables regrets_;
  Tables averages_;
  std::vector<std::vector<std::pair<int, int>>> paths_;  // node -> (node, action) steps
  int iteration_ = 0;
};

/// Uniform distribution at every infoset.
Profile uniform_profile(const GameTree& tree);

}  // namespace cfrplus::oracle
