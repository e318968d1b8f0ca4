// Structural classifiers and the classical alternating-play outcome.

#pragma once

#include <string_view>

#include "richman/game.hpp"

namespace richman {

struct Classification {
  bool impartial = false;
  bool dicot = false;
  bool symmetric_ending = false;
};

/// Flags are computed over every follower, including g itself.
Classification classify(const Game& g);

/// Outcome classes of alternating normal play. The order is the outcome
/// diamond: L above N and P, both above R; N and P are incomparable.
enum class AlternatingOutcome { L, N, P, R };

AlternatingOutcome alternating_outcome(const Game& g);

/// Winner of alternating normal play when `first` moves first.
Player alternating_winner(const Game& g, Player first);

bool outcome_leq(AlternatingOutcome x, AlternatingOutcome y) noexcept;

/// L<->R, N and P fixed.
AlternatingOutcome mirror(AlternatingOutcome o) noexcept;

std::string_view to_string(AlternatingOutcome o) noexcept;

}  // namespace richman
