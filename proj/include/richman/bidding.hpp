// Budgets, bids and the resolution of one simultaneous bidding round.
//
// With Left holding the marker (the Right-owner case is the mirror image):
//   l > r, unmarked   -> Left moves, pays l, keeps the marker
//   l^ with l >= r    -> Left moves, pays l, marker passes to Right
//   l == r, unmarked  -> Left moves, pays l, marker passes to Right
//   l < r             -> Right moves, pays r, marker stays with Left

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "richman/game.hpp"

namespace richman {

using Dollars = int;

class InvalidBudget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalBid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BudgetState {
  Dollars total = 0;
  Dollars left = 0;  // Right holds total - left
  Player marker = Player::Left;

  Dollars right() const noexcept { return total - left; }
  Dollars budget(Player who) const noexcept {
    return who == Player::Left ? left : right();
  }
  bool valid() const noexcept { return total >= 0 && left >= 0 && left <= total; }
  /// Throws InvalidBudget unless 0 <= left <= total.
  void validate() const;

  /// Larger budget, or equal budget together with the marker.
  Player dominating() const noexcept;

  /// The same coordinate seen with the players' roles exchanged.
  BudgetState mirrored() const noexcept {
    return {total, total - left, opponent(marker)};
  }

  bool operator==(const BudgetState&) const = default;
};

struct Bid {
  Dollars amount = 0;
  bool include_marker = false;

  static constexpr Bid pass() { return {0, false}; }
  bool operator==(const Bid&) const = default;
};

/// "2", or "2^" for a bid that includes the marker.
std::string to_string(const Bid& b);
/// "p^=2" when Left holds the marker, "p=2" otherwise.
std::string to_string(const BudgetState& s);

struct Resolution {
  Player mover;
  BudgetState next;  // money and marker settled, position not yet changed
  bool operator==(const Resolution&) const = default;
};

/// Amounts ascending, unmarked before marked. The marker owner with budget m
/// gets 2(m+1) bids, the other player m+1.
std::vector<Bid> legal_bids(const BudgetState& s, Player who);

bool is_legal(const BudgetState& s, Player who, const Bid& bid) noexcept;

/// Throws IllegalBid when either bid is not legal for s.
Resolution resolve_bids(const BudgetState& s, const Bid& left_bid,
                        const Bid& right_bid);

}  // namespace richman
