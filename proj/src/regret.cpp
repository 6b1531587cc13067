#include "cfrplus/regret.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfrplus {

ActionTable::ActionTable(const GameTree& tree, int player) {
  const int count = tree.infoset_count(player);
  row_offsets_.reserve(count + 1);
  row_offsets_.push_back(0);
  for (int i = 0; i < count; ++i) {
    const InfosetId id = tree.infoset_at(player, i);
    row_offsets_.push_back(row_offsets_.back() + tree.node(id.node).num_actions());
  }
  values_.assign(row_offsets_.back(), 0.0);
}

void ActionTable::fill(double value) {
  std::fill(values_.begin(), values_.end(), value);
}

StrategyVector match_strategy(std::span<const double> regrets) {
  if (regrets.empty()) {
    throw std::invalid_argument("match_strategy: empty action set");
  }
  double positive_sum = 0.0;
  for (double r : regrets) {
    if (!std::isfinite(r)) {
      throw std::invalid_argument("match_strategy: non-finite regret");
    }
    if (r > 0.0) positive_sum += r;
  }
  StrategyVector strategy(regrets.size());
  if (positive_sum > 0.0) {
    for (std::size_t i = 0; i < regrets.size(); ++i) {
      strategy[i] = regrets[i] > 0.0 ? regrets[i] / positive_sum : 0.0;
    }
  } else {
    std::fill(strategy.begin(), strategy.end(), 1.0 / static_cast<double>(regrets.size()));
  }
  return strategy;
}

double update_regret_plus(double current, double delta) {
  if (!std::isfinite(current) || !std::isfinite(delta)) {
    throw std::invalid_argument("update_regret_plus: non-finite input");
  }
  if (current < 0.0) {
    throw std::invalid_argument("update_regret_plus: current regret must be >= 0");
  }
  return std::max(current + delta, 0.0);
}

double update_regret_vanilla(double current, double delta) {
  if (!std::isfinite(current) || !std::isfinite(delta)) {
    throw std::invalid_argument("update_regret_vanilla: non-finite input");
  }
  return current + delta;
}

void accumulate_average(ActionTable& table, int infoset, int action, double reach,
                        double prob, double weight) {
  if (!(reach >= 0.0) || !(weight >= 0.0) || !(prob >= 0.0 && prob <= 1.0)) {
    throw std::invalid_argument("accumulate_average: invalid reach/prob/weight");
  }
  auto row = table.row(infoset);
  if (action < 0 || action >= static_cast<int>(row.size())) {
    throw std::out_of_range("accumulate_average: action out of range");
  }
  row[action] += reach * prob * weight;
}

StrategyVector average_strategy(const ActionTable& table, int infoset) {
  auto row = table.row(infoset);
  double sum = 0.0;
  for (double v : row) sum += v;
  StrategyVector strategy(row.size());
  if (sum > 0.0) {
    for (std::size_t i = 0; i < row.size(); ++i) strategy[i] = row[i] / sum;
  } else {
    std::fill(strategy.begin(), strategy.end(), 1.0 / static_cast<double>(row.size()));
  }
  return strategy;
}

}  // namespace cfrplus
