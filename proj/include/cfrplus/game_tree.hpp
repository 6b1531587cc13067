#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cfrplus {

// Players are 0-based: player 1 of the game is index 0.
inline constexpr int kPlayer1 = 0;
inline constexpr int kPlayer2 = 1;
inline constexpr int kNumPlayers = 2;

constexpr int opponent_of(int player) { return 1 - player; }

// Card ranks are 1-based; the higher rank wins a showdown.
using Card = int;

// Per-card vectors carried by the vector-form traversal, indexed by rank - 1.
using ReachVector = std::vector<double>;
using UtilityVector = std::vector<double>;

/// Parameters of the one-card poker family: a deck of `deck_size` distinct
/// ranks, one ante per player, and a single fixed-size bet.
struct GameSpec {
  int deck_size = 3;
  double ante = 1.0;
  double bet_size = 1.0;
};

enum class NodeKind { kDecision, kTerminal };
enum class TerminalKind { kShowdown, kFold };

/// A node of the public game tree. Private cards are not part of the tree;
/// they are handled by the per-card vectors that traversals carry.
struct PublicNode {
  NodeKind kind = NodeKind::kDecision;
  std::string history;  // action initials from the root, "" at the root

  // Decision nodes.
  int acting_player = -1;
  std::vector<std::string> actions;  // ordered labels, one child per action
  std::vector<int> children;         // node ids, parallel to `actions`

  // Terminal nodes. pot_contributions[p] includes the ante.
  std::array<double, 2> pot_contributions{0.0, 0.0};
  TerminalKind terminal_kind = TerminalKind::kShowdown;
  int fold_winner = -1;  // fold terminals only

  // Assigned by GameTree.
  int id = -1;
  int infoset_base = -1;  // first infoset index (card rank 1) within the
                          // acting player's table; decision nodes only

  bool is_decision() const { return kind == NodeKind::kDecision; }
  bool is_terminal() const { return kind == NodeKind::kTerminal; }
  int num_actions() const { return static_cast<int>(actions.size()); }
};

/// Identifies one information set: the acting player at a public decision
/// node holding a particular card.
struct InfosetId {
  int player = -1;
  int node = -1;
  Card card = 0;

  bool operator==(const InfosetId&) const = default;
};

/// Immutable public tree of a two-player zero-sum one-card poker game with
/// dense per-player infoset indexing. The only chance event, the private
/// deal, is folded into terminal utilities and vector indexing instead of
/// being materialized as tree nodes; a game with public chance would need an
/// explicit chance node kind, which this family never produces.
class GameTree {
 public:
  /// Validates structure (decision nodes have >= 2 actions and one child per
  /// action, terminals have none, pot contributions cover the ante, every
  /// non-root node is referenced exactly once) and assigns infoset indices.
  GameTree(GameSpec spec, std::vector<PublicNode> nodes);

  const GameSpec& spec() const { return spec_; }
  int deck_size() const { return spec_.deck_size; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const PublicNode& node(int id) const { return nodes_.at(id); }
  const PublicNode& root() const { return nodes_.front(); }
  const std::vector<PublicNode>& nodes() const { return nodes_; }

  int num_decision_nodes() const;
  int num_terminal_nodes() const;
  const std::vector<int>& decision_nodes(int player) const;

  /// Dense infoset index space per player: the map
  /// (player, decision node, card) -> [0, infoset_count(player)) is a
  /// bijection realized by infoset_index / infoset_at.
  int infoset_count(int player) const { return infoset_count_[check_player(player)]; }
  int infoset_index(const InfosetId& id) const;
  InfosetId infoset_at(int player, int index) const;

  /// One infoset per private card of the acting player, ordered by rank.
  std::vector<InfosetId> lookup_infosets(const PublicNode& node) const;

  /// Chip payoff to `traverser` at a terminal for one ordered deal.
  /// The winner gains the loser's pot contribution; the loser loses their
  /// own. Cards are distinct, so showdown ties cannot occur.
  double terminal_payoff(const PublicNode& node, int traverser, Card card,
                         Card opp_card) const;

  /// Expected chip payoff per traverser card, weighted by the opponent reach
  /// and by the deal probabilities 1/N * 1/(N-1). The opponent never holds
  /// the traverser's card.
  UtilityVector terminal_utility(const PublicNode& node, int traverser,
                                 const ReachVector& opp_reach) const;

  /// "P1 [kb] card 2" -- for reports and diagnostics.
  std::string infoset_label(const InfosetId& id) const;

  /// Hash of deck size, stakes, and the full node structure. Used to detect
  /// snapshot/game mismatches.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  static int check_player(int player);
  std::uint64_t compute_fingerprint() const;

  GameSpec spec_;
  std::vector<PublicNode> nodes_;
  std::array<std::vector<int>, 2> decision_nodes_;  // per player, by node id
  std::array<int, 2> infoset_count_{0, 0};
  std::uint64_t fingerprint_ = 0;
};

/// Builds the fixed single-round betting structure: P1 checks or bets; after
/// a check P2 checks or bets; a player facing a bet folds or calls.
/// Check-check and call reach showdowns, fold ends the hand for the folder.
/// Rejects deck_size < 2.
GameTree build_one_card_poker(const GameSpec& spec);

}  // namespace cfrplus
