#pragma once

#include <span>
#include <vector>

#include "cfrplus/game_tree.hpp"

namespace cfrplus {

// A probability distribution over the actions of one infoset.
using StrategyVector = std::vector<double>;

/// Dense per-(infoset, action) accumulator, one row per infoset in the
/// player's index order. Backs both cumulative regrets and cumulative
/// weighted strategy mass; which invariants hold (nonnegativity under the
/// plus update, monotonicity of strategy mass) is decided by the update
/// functions applied to it, not by the container.
class ActionTable {
 public:
  ActionTable() = default;
  ActionTable(const GameTree& tree, int player);

  int infoset_count() const { return static_cast<int>(row_offsets_.size()) - 1; }
  int row_size(int infoset) const {
    return row_offsets_.at(infoset + 1) - row_offsets_.at(infoset);
  }

  std::span<double> row(int infoset) {
    return {values_.data() + row_offsets_.at(infoset),
            static_cast<std::size_t>(row_size(infoset))};
  }
  std::span<const double> row(int infoset) const {
    return {values_.data() + row_offsets_.at(infoset),
            static_cast<std::size_t>(row_size(infoset))};
  }

  std::span<double> entries() { return values_; }
  std::span<const double> entries() const { return values_; }

  void fill(double value);

 private:
  std::vector<int> row_offsets_;  // size infoset_count + 1
  std::vector<double> values_;
};

/// Positive-part normalization of cumulative regrets; uniform when no regret
/// is positive. Applied to a table kept nonnegative by update_regret_plus the
/// positive-part step is a no-op; applied to an unrestricted table this is
/// classic regret-matching. Rejects empty rows and non-finite values.
StrategyVector match_strategy(std::span<const double> regrets);

/// max{current + delta, 0}. Keeps the table nonnegative, so no negative
/// regret ever accumulates.
double update_regret_plus(double current, double delta);

/// current + delta, unrestricted.
double update_regret_vanilla(double current, double delta);

/// entry += reach * prob * weight. reach and weight must be >= 0, prob in
/// [0, 1]; a zero weight (the delayed-averaging early phase) leaves the
/// table untouched.
void accumulate_average(ActionTable& table, int infoset, int action, double reach,
                        double prob, double weight);

/// Normalized cumulative strategy mass of one infoset; uniform if the row is
/// all zero (unreached infoset, or every pass so far had weight 0).
StrategyVector average_strategy(const ActionTable& table, int infoset);

}  // namespace cfrplus
