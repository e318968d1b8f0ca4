// Outcome tuples, word notation, feasibility and short forms.
//
// A tuple for total budget TB lists the perfect-play winner at
//   (marker Left, p = TB), ..., (marker Left, p = 0),
//   (marker Right, p = TB), ..., (marker Right, p = 0)
// and its word spells those winners with the letters L and R.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "richman/bidding.hpp"

namespace richman {

class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonMonotone : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ShortFormOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class OutcomeTuple {
 public:
  OutcomeTuple(Dollars total, std::vector<Player> winners);

  /// Every coordinate won by `winner`.
  static OutcomeTuple constant(Dollars total, Player winner);

  Dollars total() const noexcept { return total_; }
  const std::vector<Player>& winners() const noexcept { return winners_; }

  static std::size_t index_of(Dollars total, Dollars left, Player marker) noexcept {
    const auto half = static_cast<std::size_t>(total + 1);
    const auto offset = static_cast<std::size_t>(total - left);
    return marker == Player::Left ? offset : half + offset;
  }

  Player at(Dollars left, Player marker) const {
    return winners_.at(index_of(total_, left, marker));
  }
  Player at(const BudgetState& s) const { return at(s.left, s.marker); }

  bool operator==(const OutcomeTuple&) const = default;

 private:
  Dollars total_;
  std::vector<Player> winners_;
};

std::string word(const OutcomeTuple& o);
/// Throws InvalidWord on a bad length or a letter outside {L, R}.
OutcomeTuple parse_word(Dollars total, std::string_view text);

struct FeasibilityReport {
  bool monotone_with_marker = false;
  bool monotone_without_marker = false;
  bool marker_worth = false;
  bool feasible = false;
};

FeasibilityReport feasibility(const OutcomeTuple& o);

/// (a, b): smallest Left budget with which Left wins holding (a) or not
/// holding (b) the marker; TB + 1 when she never wins in that half.
struct ShortForm {
  Dollars a = 0;
  Dollars b = 0;

  bool feasible() const noexcept { return b <= a + 1; }
  auto operator<=>(const ShortForm&) const = default;
};

std::string to_string(const ShortForm& sf);

/// Throws NonMonotone when either half is not an upper set of budgets.
ShortForm to_short_form(const OutcomeTuple& o);

/// Throws ShortFormOutOfRange unless both components lie in 0..TB+1.
OutcomeTuple from_short_form(Dollars total, const ShortForm& sf);

/// Reverse the word and swap L with R.
OutcomeTuple conjugate_outcome(const OutcomeTuple& o);
ShortForm conjugate_short_form(Dollars total, const ShortForm& sf) noexcept;

constexpr std::int64_t triangular(std::int64_t n) noexcept { return n * (n + 1) / 2; }

/// All (a, b) with a, b in 0..TB+1 and b <= a + 1, lexicographic.
std::vector<ShortForm> enumerate_feasible(Dollars total);
std::int64_t count_feasible(Dollars total);

}  // namespace richman
