#include "richman/classify.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace richman {

namespace {

bool same_option_set(std::span<const Game> a, std::span<const Game> b) {
  if (a.size() != b.size()) return false;
  std::vector<std::uint32_t> x, y;
  for (const auto& g : a) x.push_back(g.id());
  for (const auto& g : b) y.push_back(g.id());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool has_zero(std::span<const Game> options) {
  return std::any_of(options.begin(), options.end(),
                     [](const Game& g) { return g.is_zero(); });
}

void classify_into(const Game& g, Classification& acc,
                   std::unordered_map<std::uint32_t, bool>& visited) {
  if (!visited.emplace(g.id(), true).second) return;
  const auto left = g.left_options();
  const auto right = g.right_options();
  if (!same_option_set(left, right)) acc.impartial = false;
  if (left.empty() != right.empty()) {
    acc.dicot = false;
    acc.symmetric_ending = false;
  }
  if (has_zero(left) != has_zero(right)) acc.symmetric_ending = false;
  for (const auto& h : left) classify_into(h, acc, visited);
  for (const auto& h : right) classify_into(h, acc, visited);
}

bool wins_moving_first(const Game& g, Player mover,
                       std::unordered_map<std::uint64_t, bool>& memo) {
  const std::uint64_t key =
      (std::uint64_t{g.id()} << 1) | static_cast<std::uint64_t>(mover);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool win = false;
  for (const auto& option : g.options(mover)) {
    if (!wins_moving_first(option, opponent(mover), memo)) {
      win = true;
      break;
    }
  }
  memo.emplace(key, win);
  return win;
}

}  // namespace

Classification classify(const Game& g) {
  Classification acc{true, true, true};
  std::unordered_map<std::uint32_t, bool> visited;
  classify_into(g, acc, visited);
  return acc;
}

Player alternating_winner(const Game& g, Player first) {
  std::unordered_map<std::uint64_t, bool> memo;
  return wins_moving_first(g, first, memo) ? first : opponent(first);
}

AlternatingOutcome alternating_outcome(const Game& g) {
  const bool left_first = alternating_winner(g, Player::Left) == Player::Left;
  const bool right_first = alternating_winner(g, Player::Right) == Player::Right;
  if (left_first && right_first) return AlternatingOutcome::N;
  if (left_first) return AlternatingOutcome::L;
  if (right_first) return AlternatingOutcome::R;
  return AlternatingOutcome::P;
}

bool outcome_leq(AlternatingOutcome x, AlternatingOutcome y) noexcept {
  using O = AlternatingOutcome;
  if (x == y || x == O::R || y == O::L) return true;
  return false;
}

AlternatingOutcome mirror(AlternatingOutcome o) noexcept {
  switch (o) {
    case AlternatingOutcome::L: return AlternatingOutcome::R;
    case AlternatingOutcome::R: return AlternatingOutcome::L;
    default: return o;
  }
}

std::string_view to_string(AlternatingOutcome o) noexcept {
  switch (o) {
    case AlternatingOutcome::L: return "L";
    case AlternatingOutcome::N: return "N";
    case AlternatingOutcome::P: return "P";
    case AlternatingOutcome::R: return "R";
  }
  return "?";
}

}  // namespace richman
