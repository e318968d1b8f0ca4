#include "richman/bidding.hpp"

namespace richman {

void BudgetState::validate() const {
  if (total < 0) throw InvalidBudget("total budget must be nonnegative");
  if (left < 0 || left > total)
    throw InvalidBudget("left budget " + std::to_string(left) +
                        " outside 0.." + std::to_string(total));
}

Player BudgetState::dominating() const noexcept {
  if (left > right()) return Player::Left;
  if (left < right()) return Player::Right;
  return marker;
}

std::string to_string(const Bid& b) {
  return std::to_string(b.amount) + (b.include_marker ? "^" : "");
}

std::string to_string(const BudgetState& s) {
  return std::string(s.marker == Player::Left ? "p^=" : "p=") +
         std::to_string(s.left);
}

std::vector<Bid> legal_bids(const BudgetState& s, Player who) {
  std::vector<Bid> out;
  const bool owner = s.marker == who;
  for (Dollars amount = 0; amount <= s.budget(who); ++amount) {
    out.push_back({amount, false});
    if (owner) out.push_back({amount, true});
  }
  return out;
}

bool is_legal(const BudgetState& s, Player who, const Bid& bid) noexcept {
  if (bid.amount < 0 || bid.amount > s.budget(who)) return false;
  return !bid.include_marker || s.marker == who;
}

Resolution resolve_bids(const BudgetState& s, const Bid& left_bid,
                        const Bid& right_bid) {
  s.validate();
  if (!is_legal(s, Player::Left, left_bid))
    throw IllegalBid("illegal Left bid " + to_string(left_bid) + " at " +
                     to_string(s));
  if (!is_legal(s, Player::Right, right_bid))
    throw IllegalBid("illegal Right bid " + to_string(right_bid) + " at " +
                     to_string(s));

  const Player owner = s.marker;
  const Bid& own = owner == Player::Left ? left_bid : right_bid;
  const Bid& other = owner == Player::Left ? right_bid : left_bid;

  Player mover;
  Player next_marker = owner;
  if (own.amount > other.amount) {
    mover = owner;
    if (own.include_marker) next_marker = opponent(owner);
  } else if (own.amount == other.amount) {
    // Ties go to the owner and always hand the marker over.
    mover = owner;
    next_marker = opponent(owner);
  } else {
    mover = opponent(owner);
  }

  const Dollars paid = mover == Player::Left ? left_bid.amount : right_bid.amount;
  BudgetState next = s;
  next.left = mover == Player::Left ? s.left - paid : s.left + paid;
  next.marker = next_marker;
  return {mover, next};
}

}  // namespace richman
