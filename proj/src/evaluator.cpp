#include "cfrplus/evaluator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cfrplus {

namespace {

void validate_player_strategies(const GameTree& tree, const Profile& profile, int player) {
  const auto& strategies = profile.strategies[player];
  if (static_cast<int>(strategies.size()) != tree.infoset_count(player)) {
    throw std::invalid_argument("profile does not cover every infoset");
  }
  for (int i = 0; i < tree.infoset_count(player); ++i) {
    const InfosetId id = tree.infoset_at(player, i);
    const auto& row = strategies[i];
    if (static_cast<int>(row.size()) != tree.node(id.node).num_actions()) {
      throw std::invalid_argument("profile row does not match the node's actions");
    }
    for (double p : row) {
      if (!std::isfinite(p) || p < 0.0) {
        throw std::invalid_argument("profile entries must be finite and >= 0");
      }
    }
  }
}

// Expected payoff per `player` card, weighted by opponent reach and deal
// probabilities, with the player's own play taken in expectation.
UtilityVector ev_walk(const GameTree& tree, const Profile& profile, int player,
                      const PublicNode& node, const ReachVector& opp_reach) {
  if (node.is_terminal()) {
    return tree.terminal_utility(node, player, opp_reach);
  }
  const int n = tree.deck_size();
  const int actor = node.acting_player;
  UtilityVector util(n, 0.0);
  if (actor == player) {
    for (int a = 0; a < node.num_actions(); ++a) {
      const UtilityVector child = ev_walk(tree, profile, player, tree.node(node.children[a]), opp_reach);
      for (int c = 0; c < n; ++c) {
        util[c] += profile.strategies[actor][node.infoset_base + c][a] * child[c];
      }
    }
  } else {
    ReachVector child_reach(n);
    for (int a = 0; a < node.num_actions(); ++a) {
      for (int c = 0; c < n; ++c) {
        child_reach[c] = profile.strategies[actor][node.infoset_base + c][a] * opp_reach[c];
      }
      const UtilityVector child = ev_walk(tree, profile, player, tree.node(node.children[a]), child_reach);
      for (int c = 0; c < n; ++c) util[c] += child[c];
    }
  }
  return util;
}

// Same shape as ev_walk, but the responder maximizes per card instead of
// following a profile. Records the maximizing action per responder infoset.
UtilityVector br_walk(const GameTree& tree, const Profile& profile, int responder,
                      const PublicNode& node, const ReachVector& opp_reach,
                      std::vector<int>& chosen) {
  if (node.is_terminal()) {
    return tree.terminal_utility(node, responder, opp_reach);
  }
  const int n = tree.deck_size();
  const int actor = node.acting_player;
  UtilityVector util(n, 0.0);
  if (actor == responder) {
    std::vector<UtilityVector> action_util(node.num_actions());
    for (int a = 0; a < node.num_actions(); ++a) {
      action_util[a] = br_walk(tree, profile, responder, tree.node(node.children[a]), opp_reach, chosen);
    }
    for (int c = 0; c < n; ++c) {
      int best = 0;
      for (int a = 1; a < node.num_actions(); ++a) {
        if (action_util[a][c] > action_util[best][c]) best = a;
      }
      chosen[node.infoset_base + c] = best;
      util[c] = action_util[best][c];
    }
  } else {
    ReachVector child_reach(n);
    for (int a = 0; a < node.num_actions(); ++a) {
      for (int c = 0; c < n; ++c) {
        child_reach[c] = profile.strategies[actor][node.infoset_base + c][a] * opp_reach[c];
      }
      const UtilityVector child = br_walk(tree, profile, responder, tree.node(node.children[a]), child_reach, chosen);
      for (int c = 0; c < n; ++c) util[c] += child[c];
    }
  }
  return util;
}

}  // namespace

double expected_value(const GameTree& tree, const Profile& profile, int player) {
  if (player != kPlayer1 && player != kPlayer2) {
    throw std::invalid_argument("expected_value: invalid player");
  }
  validate_player_strategies(tree, profile, kPlayer1);
  validate_player_strategies(tree, profile, kPlayer2);
  const ReachVector ones(tree.deck_size(), 1.0);
  const UtilityVector util = ev_walk(tree, profile, player, tree.root(), ones);
  return std::accumulate(util.begin(), util.end(), 0.0);
}

BestResponseResult best_response(const GameTree& tree, const Profile& profile,
                                 int responder) {
  if (responder != kPlayer1 && responder != kPlayer2) {
    throw std::invalid_argument("best_response: invalid responder");
  }
  validate_player_strategies(tree, profile, opponent_of(responder));
  BestResponseResult result;
  result.actions.assign(tree.infoset_count(responder), 0);
  const ReachVector ones(tree.deck_size(), 1.0);
  const UtilityVector util =
      br_walk(tree, profile, responder, tree.root(), ones, result.actions);
  result.value = std::accumulate(util.begin(), util.end(), 0.0);
  return result;
}

double best_response_value(const GameTree& tree, const Profile& profile, int responder) {
  return best_response(tree, profile, responder).value;
}

ExploitabilityReport exploitability(const GameTree& tree, const Profile& profile) {
  ExploitabilityReport report;
  report.br_value_vs_p1 = best_response_value(tree, profile, kPlayer2);
  report.br_value_vs_p2 = best_response_value(tree, profile, kPlayer1);
  const double per_hand = 0.5 * (report.br_value_vs_p1 + report.br_value_vs_p2);
  report.exploitability_milli = 1000.0 * per_hand / tree.spec().bet_size;
  return report;
}

}  // namespace cfrplus
