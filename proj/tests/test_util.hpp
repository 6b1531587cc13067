#pragma once

#include <random>
#include <stdexcept>
#include <string>

#include "cfrplus/evaluator.hpp"
#include "cfrplus/game_tree.hpp"

namespace cfrplus::test_util {

inline const PublicNode& find_node(const GameTree& tree, const std::string& history) {
  for (const PublicNode& node : tree.nodes()) {
    if (node.history == history) return node;
  }
  throw std::runtime_error("no node with history '" + history + "'");
}

inline Profile random_profile(const GameTree& tree, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Profile profile;
  for (int p = 0; p < kNumPlayers; ++p) {
    for (int i = 0; i < tree.infoset_count(p); ++i) {
      const int actions = tree.node(tree.infoset_at(p, i).node).num_actions();
      std::vector<double> row(actions);
      double sum = 0.0;
      for (double& v : row) {
        // Mix in near-pure rows so corners of the strategy space get hit.
        v = unit(rng) < 0.2 ? 1e-3 * unit(rng) : unit(rng);
        sum += v;
      }
      for (double& v : row) v /= sum;
      profile.strategies[p].push_back(std::move(row));
    }
  }
  return profile;
}

}  // namespace cfrplus::test_util
