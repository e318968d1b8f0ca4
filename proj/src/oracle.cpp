// Brute-force reference for Solver. Shares no code with the solver or with
// resolve_bids: the auction is decided by comparing effective bids where the
// marker owner's tie-break is folded in as a half dollar.

#include "richman/solver.hpp"

namespace richman {

namespace {

struct RawBid {
  int amount;
  bool marked;
};

std::vector<RawBid> all_bids(int budget, bool owner) {
  std::vector<RawBid> out;
  for (int a = 0; a <= budget; ++a) {
    out.push_back({a, false});
    if (owner) out.push_back({a, true});
  }
  return out;
}

// 1 when Left wins, 0 when Right wins.
int value(const Game& g, int total, int left, bool left_has_marker) {
  const int right = total - left;
  int best_for_left = 0;
  for (const RawBid& lb : all_bids(left, left_has_marker)) {
    int worst_for_left = 1;
    for (const RawBid& rb : all_bids(right, !left_has_marker)) {
      const int left_effective = 2 * lb.amount + (left_has_marker ? 1 : 0);
      const int right_effective = 2 * rb.amount + (left_has_marker ? 0 : 1);
      const bool left_moves = left_effective > right_effective;

      const RawBid& winning = left_moves ? lb : rb;
      const RawBid& losing = left_moves ? rb : lb;
      const bool owner_won = left_moves == left_has_marker;
      const bool hand_over =
          owner_won && (winning.marked || winning.amount == losing.amount);
      const bool next_left_marker = hand_over ? !left_has_marker : left_has_marker;
      const int next_left = left_moves ? left - lb.amount : left + rb.amount;

      const auto options = left_moves ? g.left_options() : g.right_options();
      int cell;
      if (options.empty()) {
        cell = left_moves ? 0 : 1;
      } else if (left_moves) {
        cell = 0;
        for (const auto& o : options)
          cell = std::max(cell, value(o, total, next_left, next_left_marker));
      } else {
        cell = 1;
        for (const auto& o : options)
          cell = std::min(cell, value(o, total, next_left, next_left_marker));
      }
      worst_for_left = std::min(worst_for_left, cell);
    }
    best_for_left = std::max(best_for_left, worst_for_left);
  }
  return best_for_left;
}

}  // namespace

Player oracle_solve(const Game& g, const BudgetState& s) {
  s.validate();
  return value(g, s.total, s.left, s.marker == Player::Left) == 1 ? Player::Left
                                                                   : Player::Right;
}

}  // namespace richman
