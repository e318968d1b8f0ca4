#include "richman/outcome.hpp"

#include <algorithm>

namespace richman {

OutcomeTuple::OutcomeTuple(Dollars total, std::vector<Player> winners)
    : total_(total), winners_(std::move(winners)) {
  if (total < 0) throw InvalidBudget("total budget must be nonnegative");
  if (winners_.size() != static_cast<std::size_t>(2 * (total + 1)))
    throw InvalidWord("outcome tuple for TB=" + std::to_string(total) +
                      " needs " + std::to_string(2 * (total + 1)) + " entries");
}

OutcomeTuple OutcomeTuple::constant(Dollars total, Player winner) {
  return OutcomeTuple(total,
                      std::vector<Player>(static_cast<std::size_t>(2 * (total + 1)), winner));
}

std::string word(const OutcomeTuple& o) {
  std::string out;
  out.reserve(o.winners().size());
  for (auto w : o.winners()) out += player_letter(w);
  return out;
}

OutcomeTuple parse_word(Dollars total, std::string_view text) {
  if (total < 0) throw InvalidWord("total budget must be nonnegative");
  if (text.size() != static_cast<std::size_t>(2 * (total + 1)))
    throw InvalidWord("word '" + std::string(text) + "' has length " +
                      std::to_string(text.size()) + ", expected " +
                      std::to_string(2 * (total + 1)));
  std::vector<Player> winners;
  for (char c : text) {
    if (c == 'L') winners.push_back(Player::Left);
    else if (c == 'R') winners.push_back(Player::Right);
    else throw InvalidWord(std::string("letter '") + c + "' is not L or R");
  }
  return OutcomeTuple(total, std::move(winners));
}

namespace {

// L > R; "x <= y" on partial outcomes.
bool leq(Player x, Player y) { return x == Player::Right || y == Player::Left; }

bool half_monotone(const OutcomeTuple& o, Player marker) {
  for (Dollars p = 0; p < o.total(); ++p)
    if (!leq(o.at(p, marker), o.at(p + 1, marker))) return false;
  return true;
}

// Smallest winning budget in a monotone half, TB + 1 if none.
Dollars threshold(const OutcomeTuple& o, Player marker) {
  Dollars t = o.total() + 1;
  while (t > 0 && o.at(t - 1, marker) == Player::Left) --t;
  return t;
}

}  // namespace

FeasibilityReport feasibility(const OutcomeTuple& o) {
  FeasibilityReport r;
  r.monotone_with_marker = half_monotone(o, Player::Left);
  r.monotone_without_marker = half_monotone(o, Player::Right);
  r.marker_worth = true;
  for (Dollars p = 0; p < o.total(); ++p)
    if (!leq(o.at(p, Player::Left), o.at(p + 1, Player::Right))) r.marker_worth = false;
  r.feasible = r.monotone_with_marker && r.monotone_without_marker && r.marker_worth;
  return r;
}

std::string to_string(const ShortForm& sf) {
  return "(" + std::to_string(sf.a) + "," + std::to_string(sf.b) + ")";
}

ShortForm to_short_form(const OutcomeTuple& o) {
  const auto report = feasibility(o);
  if (!report.monotone_with_marker || !report.monotone_without_marker)
    throw NonMonotone("outcome " + word(o) + " is not monotone");
  return {threshold(o, Player::Left), threshold(o, Player::Right)};
}

OutcomeTuple from_short_form(Dollars total, const ShortForm& sf) {
  if (total < 0) throw ShortFormOutOfRange("total budget must be nonnegative");
  if (sf.a < 0 || sf.a > total + 1 || sf.b < 0 || sf.b > total + 1)
    throw ShortFormOutOfRange("short form " + to_string(sf) + " outside 0.." +
                              std::to_string(total + 1));
  std::vector<Player> winners;
  for (Player marker : {Player::Left, Player::Right}) {
    const Dollars t = marker == Player::Left ? sf.a : sf.b;
    for (Dollars p = total; p >= 0; --p)
      winners.push_back(p >= t ? Player::Left : Player::Right);
  }
  return OutcomeTuple(total, std::move(winners));
}

OutcomeTuple conjugate_outcome(const OutcomeTuple& o) {
  std::vector<Player> winners(o.winners().rbegin(), o.winners().rend());
  for (auto& w : winners) w = opponent(w);
  return OutcomeTuple(o.total(), std::move(winners));
}

ShortForm conjugate_short_form(Dollars total, const ShortForm& sf) noexcept {
  return {total + 1 - sf.b, total + 1 - sf.a};
}

std::vector<ShortForm> enumerate_feasible(Dollars total) {
  std::vector<ShortForm> out;
  for (Dollars a = 0; a <= total + 1; ++a)
    for (Dollars b = 0; b <= std::min(a + 1, total + 1); ++b) out.push_back({a, b});
  return out;
}

std::int64_t count_feasible(Dollars total) {
  return static_cast<std::int64_t>(enumerate_feasible(total).size());
}

}  // namespace richman
