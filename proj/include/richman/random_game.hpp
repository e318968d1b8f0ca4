// Seeded generators for test corpora. Output depends only on the arguments:
// the engine is std::mt19937_64 and the bounded draws are done here rather
// than through the (implementation-defined) standard distributions.

#pragma once

#include <cstdint>
#include <random>

#include "richman/game.hpp"

namespace richman {

struct RandomGameParams {
  std::uint32_t max_birthday = 3;
  std::uint32_t max_options = 2;
  double empty_side_probability = 0.3;
};

class GameGenerator {
 public:
  GameGenerator(RandomGameParams params, std::uint64_t seed);

  /// Arbitrary partizan form with birthday <= max_birthday.
  Game any();
  /// Every follower has identical Left and Right option sets.
  Game impartial();
  /// Every follower has 0 on one side iff on the other, and an empty side
  /// iff both sides are empty.
  Game symmetric_ending();

 private:
  std::uint32_t below(std::uint32_t n);  // uniform in [0, n)
  bool chance(double p);

  Game any(std::uint32_t depth);
  Game impartial(std::uint32_t depth);
  Game symmetric_ending(std::uint32_t depth);
  Game symmetric_ending_nonzero(std::uint32_t depth);

  RandomGameParams params_;
  std::mt19937_64 rng_;
};

/// One-shot convenience wrapper around GameGenerator::any.
Game random_game(std::uint32_t max_birthday, std::uint32_t max_options,
                 double empty_side_probability, std::uint64_t seed);

}  // namespace richman
