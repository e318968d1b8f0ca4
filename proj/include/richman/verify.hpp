// Closed-form predictions for structured families and the invariant suites
// run by `richman verify`.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "richman/bidding.hpp"
#include "richman/game.hpp"
#include "richman/solver.hpp"

namespace richman {

/// Winner for an impartial form: at an even split the marker owner wins
/// iff alternating play is an N-position; otherwise the richer player wins,
/// except that at 0 the marker owner loses.
Player predict_impartial(const Game& g, const BudgetState& s);

/// Winner for a symmetric-ending form: at 0 the marker owner loses; at an
/// even split Left wins with the marker iff alternating play is L or N (and
/// without it iff L or P); otherwise the dominating player wins.
Player predict_symmetric_ending(const Game& g, const BudgetState& s);

/// The dominating player, if they have an option from which their opponent
/// cannot move.
std::optional<Player> last_move_winner(const Game& g, const BudgetState& s);

/// Exactly one player has a bid that wins against every reply.
bool has_unique_saddle(const BidMatrix& m);

struct VerifyOptions {
  Dollars max_total = 3;
  std::size_t count = 500;
  std::uint64_t seed = 7;
  std::uint32_t max_birthday = 4;
  std::uint32_t max_options = 2;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failure, empty if none
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace richman
