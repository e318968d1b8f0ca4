// Perfect-play solver for bidding normal-play games.
//
// A bid pair is resolved first; the mover then loses at once if they have no
// option, and otherwise picks the option that is best for them. Left wins a
// coordinate iff some Left bid wins against every Right bid. Exactly one
// player owns such a security bid at every coordinate.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "richman/bidding.hpp"
#include "richman/game.hpp"
#include "richman/outcome.hpp"

namespace richman {

/// Winner per (Left bid, Right bid) cell, rows and columns as legal_bids.
struct BidMatrix {
  std::vector<Bid> left_bids;
  std::vector<Bid> right_bids;
  std::vector<std::vector<Player>> cells;  // cells[row][column]

  /// Index of the first row won by Left in every column, if any.
  std::optional<std::size_t> left_security_row() const;
  /// Index of the first column won by Right in every row, if any.
  std::optional<std::size_t> right_security_column() const;
};

struct Action {
  Bid bid;
  /// Option index the player takes if their bid wins against the opponent's
  /// perfect-play bid. Empty when they would not be the mover or cannot move.
  std::optional<std::size_t> option;
};

/// Memoized solver for one total budget. Thread-safe; the memo tolerates
/// concurrent identical inserts.
class Solver {
 public:
  explicit Solver(Dollars total);

  Dollars total() const noexcept { return total_; }

  Player solve(const Game& g, const BudgetState& s);
  Player solve(const Game& g, Dollars left, Player marker) {
    return solve(g, BudgetState{total_, left, marker});
  }

  OutcomeTuple outcome(const Game& g);

  /// Winner of the game once this bid pair is resolved and the mover plays
  /// their best option.
  Player cell(const Game& g, const BudgetState& s, const Bid& left_bid,
              const Bid& right_bid);

  BidMatrix bid_matrix(const Game& g, const BudgetState& s);

  /// Perfect-play choice for `who`. A winner gets their first security bid
  /// (smallest amount, unmarked before marked); a loser passes.
  Action best_action(const Game& g, const BudgetState& s, Player who);

  /// The option `mover` takes from g when the bidding has already produced
  /// `after`: the first winning option, else the first option.
  std::optional<std::size_t> choose_move(const Game& g, const BudgetState& after,
                                         Player mover);

  std::size_t memo_size() const;

 private:
  void check(const BudgetState& s) const;
  bool left_wins(const Game& g, Dollars left, Player marker);
  bool left_wins_cell(const Game& g, const BudgetState& s, const Bid& lb,
                      const Bid& rb);

  Dollars total_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

Player solve(const Game& g, const BudgetState& s);
OutcomeTuple solve_outcome(const Game& g, Dollars total);
BidMatrix bid_matrix(const Game& g, const BudgetState& s);
Action best_action(const Game& g, const BudgetState& s, Player who);

/// Independent exhaustive recursion with no memo and no pruning of bids.
Player oracle_solve(const Game& g, const BudgetState& s);

}  // namespace richman
