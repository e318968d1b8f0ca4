// Realizing a feasible short form (a, b) as a concrete game form.
//
// The top-level form is {X | Y}. A round in which the non-owner passes makes
// the marker owner move, so the Left half of the outcome is governed by X
// with the marker on Right, and the Right half by Y with the marker on Left.
// X has to separate the Left budgets a and a-1 (Y: b and b-1). It is a chain
// of forms: while the same player dominates both budgets, the other player
// gets a move to 0, which forces the dominating player to outbid them; once
// the two budgets are dominated by different players the chain ends in *.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "richman/bidding.hpp"
#include "richman/game.hpp"
#include "richman/outcome.hpp"

namespace richman {

class InfeasibleShortForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VerificationFailed : public std::runtime_error {
 public:
  VerificationFailed(ShortForm target, std::string expected, std::string actual);
  ShortForm target() const noexcept { return target_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& actual() const noexcept { return actual_; }

 private:
  ShortForm target_;
  std::string expected_;
  std::string actual_;
};

/// Two bidding sequences in which, at every stage, the dominating player
/// wins the auction as cheaply as possible: with the marker they tie the
/// opponent's whole budget (handing the marker over), without it they bid
/// one dollar more.
struct BidSequencePair {
  Dollars total = 0;
  Player marker_start = Player::Left;
  std::vector<BudgetState> upper;  // starts from the larger Left budget
  std::vector<BudgetState> lower;
  /// First stage whose dominating players differ between the sequences.
  std::size_t flip_index = 0;

  std::vector<Dollars> left_budgets(bool upper_sequence) const;
  /// Player who dominates both sequences at stage i < flip_index.
  Player dominating(std::size_t stage) const { return upper.at(stage).dominating(); }
};

/// Throws std::invalid_argument when p0 == p0_other or a budget is out of
/// range, std::logic_error if the stage cap 4(TB+2) is hit.
BidSequencePair forced_bid_sequence(Dollars total, Dollars p0, Dollars p0_other,
                                    Player marker_start);

/// Chain forms along the sequence pair: {0 | next} where Right dominates,
/// {next | 0} where Left does, ending in *.
Game chain_from_sequences(const BidSequencePair& pair);

/// The option placed on `side` of the top-level form. For side Left the
/// result X satisfies: with Right holding the marker, Left wins X from budget
/// `threshold` and loses from `threshold - 1`. For side Right the result Y
/// satisfies the same with Left holding the marker. Returns std::nullopt when
/// that side must have no options (threshold TB+1 on Left, 0 on Right).
std::optional<Game> build_threshold_chain(Dollars total, Dollars threshold,
                                          Player side);

/// True when `candidate`, used as the `side` option, separates the budgets
/// threshold and threshold - 1 as build_threshold_chain promises.
bool separates(Dollars total, const Game& candidate, Dollars threshold, Player side);

/// Search over chains of at most max_length nodes, each node one of
/// {0 | next}, {next | 0}, {next | next}, ending in *. Shorter chains are
/// tried first; at most max_candidates chains are solved.
std::optional<Game> search_threshold_chain(Dollars total, Dollars threshold,
                                           Player side, std::size_t max_length,
                                           std::size_t max_candidates = 1u << 15);

struct Construction {
  Game game;
  OutcomeTuple outcome;
  bool used_fallback = false;
};

/// Throws InfeasibleShortForm, or VerificationFailed when neither the chain
/// construction nor the fallback search reproduces the target.
Construction construct_verified(Dollars total, const ShortForm& sf);

Game construct(Dollars total, const ShortForm& sf);

}  // namespace richman
