#pragma once

#include <array>
#include <vector>

#include "cfrplus/game_tree.hpp"

namespace cfrplus {

/// A complete behavioral strategy profile: one distribution per infoset per
/// player, indexed by the tree's dense infoset order.
struct Profile {
  std::array<std::vector<std::vector<double>>, 2> strategies;

  const std::vector<double>& strategy(int player, int infoset) const {
    return strategies[player].at(infoset);
  }
};

struct ExploitabilityReport {
  double br_value_vs_p1 = 0.0;  // chips/hand player 2's best response earns vs P1
  double br_value_vs_p2 = 0.0;  // chips/hand player 1's best response earns vs P2
  double exploitability_milli = 0.0;  // 1000 * (sum of the two) / 2, per bet
};

struct BestResponseResult {
  double value = 0.0;            // chips/hand for the responder
  std::vector<int> actions;      // maximizing action per responder infoset
};

/// Exact expectation of `player`'s chip payoff over all deals and action
/// sequences under the profile. Rejects incomplete profiles.
double expected_value(const GameTree& tree, const Profile& profile, int player);

/// Exact best response against the other player's fixed strategy, computed
/// in one backward pass: per responder infoset, action values aggregate the
/// opponent's cards weighted by their reach; the maximizing action wins
/// (lowest index on ties). Only the opponent's half of the profile is read.
BestResponseResult best_response(const GameTree& tree, const Profile& profile,
                                 int responder);

double best_response_value(const GameTree& tree, const Profile& profile, int responder);

/// Average of the two best-response values, in milli-bets per hand. Zero
/// exactly at a Nash equilibrium; the two game values cancel by zero-sum, so
/// no baseline subtraction is needed.
ExploitabilityReport exploitability(const GameTree& tree, const Profile& profile);

}  // namespace cfrplus
