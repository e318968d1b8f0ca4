#include "richman/random_game.hpp"

#include <stdexcept>
#include <vector>

namespace richman {

GameGenerator::GameGenerator(RandomGameParams params, std::uint64_t seed)
    : params_(params), rng_(seed) {
  if (params_.max_options < 1)
    throw std::invalid_argument("max_options must be at least 1");
}

std::uint32_t GameGenerator::below(std::uint32_t n) {
  return static_cast<std::uint32_t>(rng_() % n);
}

bool GameGenerator::chance(double p) {
  // 53 random bits -> [0, 1)
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return u < p;
}

Game GameGenerator::any() { return any(params_.max_birthday); }
Game GameGenerator::impartial() { return impartial(params_.max_birthday); }
Game GameGenerator::symmetric_ending() {
  return symmetric_ending(params_.max_birthday);
}

Game GameGenerator::any(std::uint32_t depth) {
  if (depth == 0) return Game::zero();
  auto side = [&] {
    std::vector<Game> opts;
    if (chance(params_.empty_side_probability)) return opts;
    const auto k = 1 + below(params_.max_options);
    for (std::uint32_t i = 0; i < k; ++i) opts.push_back(any(below(depth)));
    return opts;
  };
  auto left = side();
  auto right = side();
  return Game::make(std::move(left), std::move(right));
}

Game GameGenerator::impartial(std::uint32_t depth) {
  if (depth == 0 || chance(params_.empty_side_probability)) return Game::zero();
  std::vector<Game> opts;
  const auto k = 1 + below(params_.max_options);
  for (std::uint32_t i = 0; i < k; ++i) opts.push_back(impartial(below(depth)));
  return Game::make(opts, opts);
}

Game GameGenerator::symmetric_ending(std::uint32_t depth) {
  if (depth == 0 || chance(params_.empty_side_probability)) return Game::zero();
  return symmetric_ending_nonzero(depth);
}

Game GameGenerator::symmetric_ending_nonzero(std::uint32_t depth) {
  // At depth 1 the only candidate is * = {0|0}.
  const bool zero_both = depth == 1 || chance(0.5);
  auto side = [&] {
    std::vector<Game> opts;
    if (zero_both) opts.push_back(Game::zero());
    if (depth >= 2) {
      const auto extra = zero_both ? below(params_.max_options)
                                   : 1 + below(params_.max_options);
      for (std::uint32_t i = 0; i < extra; ++i)
        opts.push_back(symmetric_ending_nonzero(1 + below(depth - 1)));
    }
    return opts;
  };
  auto left = side();
  auto right = side();
  return Game::make(std::move(left), std::move(right));
}

Game random_game(std::uint32_t max_birthday, std::uint32_t max_options,
                 double empty_side_probability, std::uint64_t seed) {
  GameGenerator gen({max_birthday, max_options, empty_side_probability}, seed);
  return gen.any();
}

}  // namespace richman
