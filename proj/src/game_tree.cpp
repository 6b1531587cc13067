#include "cfrplus/game_tree.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

namespace cfrplus {

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  // FNV-1a.
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
}

void hash_int(std::uint64_t& h, std::int64_t v) { hash_bytes(h, &v, sizeof(v)); }

void hash_double(std::uint64_t& h, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  hash_bytes(h, &bits, sizeof(bits));
}

void hash_string(std::uint64_t& h, const std::string& s) {
  hash_int(h, static_cast<std::int64_t>(s.size()));
  hash_bytes(h, s.data(), s.size());
}

}  // namespace

GameTree::GameTree(GameSpec spec, std::vector<PublicNode> nodes)
    : spec_(spec), nodes_(std::move(nodes)) {
  if (spec_.deck_size < 2) {
    throw std::invalid_argument("GameTree: deck_size must be >= 2");
  }
  if (spec_.ante < 0.0 || spec_.bet_size <= 0.0) {
    throw std::invalid_argument("GameTree: invalid stakes");
  }
  if (nodes_.empty()) {
    throw std::invalid_argument("GameTree: empty node list");
  }

  std::vector<int> parent_count(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    PublicNode& n = nodes_[i];
    n.id = static_cast<int>(i);
    if (n.is_decision()) {
      if (n.acting_player != kPlayer1 && n.acting_player != kPlayer2) {
        throw std::invalid_argument("GameTree: decision node without a valid acting player");
      }
      if (n.num_actions() < 2) {
        throw std::invalid_argument("GameTree: decision node needs >= 2 actions");
      }
      if (n.children.size() != n.actions.size()) {
        throw std::invalid_argument("GameTree: need exactly one child per action");
      }
      for (int child : n.children) {
        if (child <= 0 || child >= static_cast<int>(nodes_.size())) {
          throw std::invalid_argument("GameTree: child id out of range");
        }
        ++parent_count[child];
      }
    } else {
      if (!n.children.empty() || !n.actions.empty()) {
        throw std::invalid_argument("GameTree: terminal node must have no children");
      }
      if (n.pot_contributions[0] < spec_.ante || n.pot_contributions[1] < spec_.ante) {
        throw std::invalid_argument("GameTree: pot contributions must include the ante");
      }
      if (n.terminal_kind == TerminalKind::kFold && n.fold_winner != kPlayer1 &&
          n.fold_winner != kPlayer2) {
        throw std::invalid_argument("GameTree: fold terminal without a winner");
      }
    }
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (parent_count[i] != 1) {
      throw std::invalid_argument("GameTree: every non-root node must have exactly one parent");
    }
  }
  if (parent_count[0] != 0) {
    throw std::invalid_argument("GameTree: the root must not be a child");
  }

  for (PublicNode& n : nodes_) {
    if (!n.is_decision()) continue;
    n.infoset_base = infoset_count_[n.acting_player];
    infoset_count_[n.acting_player] += spec_.deck_size;
    decision_nodes_[n.acting_player].push_back(n.id);
  }

  fingerprint_ = compute_fingerprint();
}

int GameTree::num_decision_nodes() const {
  return static_cast<int>(decision_nodes_[0].size() + decision_nodes_[1].size());
}

int GameTree::num_terminal_nodes() const { return num_nodes() - num_decision_nodes(); }

const std::vector<int>& GameTree::decision_nodes(int player) const {
  return decision_nodes_[check_player(player)];
}

int GameTree::check_player(int player) {
  if (player != kPlayer1 && player != kPlayer2) {
    throw std::invalid_argument("invalid player id");
  }
  return player;
}

int GameTree::infoset_index(const InfosetId& id) const {
  const PublicNode& n = node(id.node);
  if (!n.is_decision() || n.acting_player != id.player) {
    throw std::invalid_argument("infoset_index: no infoset for this player at this node");
  }
  if (id.card < 1 || id.card > spec_.deck_size) {
    throw std::invalid_argument("infoset_index: card rank out of range");
  }
  return n.infoset_base + (id.card - 1);
}

InfosetId GameTree::infoset_at(int player, int index) const {
  check_player(player);
  if (index < 0 || index >= infoset_count_[player]) {
    throw std::out_of_range("infoset_at: index out of range");
  }
  const int node_id = decision_nodes_[player][index / spec_.deck_size];
  return InfosetId{player, node_id, index % spec_.deck_size + 1};
}

std::vector<InfosetId> GameTree::lookup_infosets(const PublicNode& node) const {
  if (!node.is_decision()) {
    throw std::invalid_argument("lookup_infosets: terminal node has no infosets");
  }
  std::vector<InfosetId> infosets;
  infosets.reserve(spec_.deck_size);
  for (Card c = 1; c <= spec_.deck_size; ++c) {
    infosets.push_back(InfosetId{node.acting_player, node.id, c});
  }
  return infosets;
}

double GameTree::terminal_payoff(const PublicNode& node, int traverser, Card card,
                                 Card opp_card) const {
  if (!node.is_terminal()) {
    throw std::invalid_argument("terminal_payoff: not a terminal node");
  }
  check_player(traverser);
  if (card == opp_card) {
    throw std::invalid_argument("terminal_payoff: cards must be distinct");
  }
  int winner;
  if (node.terminal_kind == TerminalKind::kFold) {
    winner = node.fold_winner;
  } else {
    winner = card > opp_card ? traverser : opponent_of(traverser);
  }
  const double stake = node.pot_contributions[opponent_of(winner)];
  return winner == traverser ? stake : -stake;
}

UtilityVector GameTree::terminal_utility(const PublicNode& node, int traverser,
                                         const ReachVector& opp_reach) const {
  if (!node.is_terminal()) {
    throw std::invalid_argument("terminal_utility: not a terminal node");
  }
  const int n = spec_.deck_size;
  if (static_cast<int>(opp_reach.size()) != n) {
    throw std::invalid_argument("terminal_utility: reach vector size mismatch");
  }
  for (double r : opp_reach) {
    if (!(r >= 0.0)) {
      throw std::invalid_argument("terminal_utility: reach weights must be >= 0");
    }
  }

  const double deal_prob = 1.0 / (static_cast<double>(n) * (n - 1));
  UtilityVector util(n, 0.0);
  for (Card c = 1; c <= n; ++c) {
    double total = 0.0;
    for (Card opp = 1; opp <= n; ++opp) {
      if (opp == c) continue;  // card removal
      total += opp_reach[opp - 1] * terminal_payoff(node, traverser, c, opp);
    }
    util[c - 1] = deal_prob * total;
  }
  return util;
}

std::string GameTree::infoset_label(const InfosetId& id) const {
  const PublicNode& n = node(id.node);
  std::string where = n.history.empty() ? "root" : n.history;
  return "P" + std::to_string(id.player + 1) + " [" + where + "] card " +
         std::to_string(id.card);
}

std::uint64_t GameTree::compute_fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  hash_int(h, spec_.deck_size);
  hash_double(h, spec_.ante);
  hash_double(h, spec_.bet_size);
  for (const PublicNode& n : nodes_) {
    hash_int(h, static_cast<int>(n.kind));
    if (n.is_decision()) {
      hash_int(h, n.acting_player);
      for (const std::string& a : n.actions) hash_string(h, a);
      for (int c : n.children) hash_int(h, c);
    } else {
      hash_int(h, static_cast<int>(n.terminal_kind));
      hash_int(h, n.fold_winner);
      hash_double(h, n.pot_contributions[0]);
      hash_double(h, n.pot_contributions[1]);
    }
  }
  return h;
}

GameTree build_one_card_poker(const GameSpec& spec) {
  if (spec.deck_size < 2) {
    throw std::invalid_argument("build_one_card_poker: deck_size must be >= 2");
  }
  const double ante = spec.ante;
  const double bet = spec.bet_size;

  auto decision = [](std::string history, int player, std::vector<std::string> actions,
                     std::vector<int> children) {
    PublicNode n;
    n.kind = NodeKind::kDecision;
    n.history = std::move(history);
    n.acting_player = player;
    n.actions = std::move(actions);
    n.children = std::move(children);
    return n;
  };
  auto showdown = [](std::string history, double pot1, double pot2) {
    PublicNode n;
    n.kind = NodeKind::kTerminal;
    n.history = std::move(history);
    n.terminal_kind = TerminalKind::kShowdown;
    n.pot_contributions = {pot1, pot2};
    return n;
  };
  auto fold = [](std::string history, int winner, double pot1, double pot2) {
    PublicNode n;
    n.kind = NodeKind::kTerminal;
    n.history = std::move(history);
    n.terminal_kind = TerminalKind::kFold;
    n.fold_winner = winner;
    n.pot_contributions = {pot1, pot2};
    return n;
  };

  std::vector<PublicNode> nodes;
  nodes.push_back(decision("", kPlayer1, {"check", "bet"}, {1, 6}));                // 0
  nodes.push_back(decision("k", kPlayer2, {"check", "bet"}, {2, 3}));               // 1
  nodes.push_back(showdown("kk", ante, ante));                                      // 2
  nodes.push_back(decision("kb", kPlayer1, {"fold", "call"}, {4, 5}));              // 3
  nodes.push_back(fold("kbf", kPlayer2, ante, ante + bet));                         // 4
  nodes.push_back(showdown("kbc", ante + bet, ante + bet));                         // 5
  nodes.push_back(decision("b", kPlayer2, {"fold", "call"}, {7, 8}));               // 6
  nodes.push_back(fold("bf", kPlayer1, ante + bet, ante));                          // 7
  nodes.push_back(showdown("bc", ante + bet, ante + bet));                          // 8

  return GameTree(spec, std::move(nodes));
}

}  // namespace cfrplus
