#include "richman/constructor.hpp"

#include "richman/solver.hpp"

namespace richman {

VerificationFailed::VerificationFailed(ShortForm target, std::string expected,
                                       std::string actual)
    : std::runtime_error("construction for " + to_string(target) + " produced " +
                         actual + ", expected " + expected),
      target_(target),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

std::vector<Dollars> BidSequencePair::left_budgets(bool upper_sequence) const {
  const auto& seq = upper_sequence ? upper : lower;
  std::vector<Dollars> out;
  for (const auto& s : seq) out.push_back(s.left);
  return out;
}

namespace {

// The dominating player wins the auction at minimum cost.
BudgetState forced_step(const BudgetState& s) {
  const Player d = s.dominating();
  const Dollars opp = s.budget(opponent(d));
  BudgetState next = s;
  Dollars paid;
  if (s.marker == d) {
    paid = opp;
    next.marker = opponent(d);
  } else {
    paid = opp + 1;
  }
  next.left = d == Player::Left ? s.left - paid : s.left + paid;
  return next;
}

}  // namespace

BidSequencePair forced_bid_sequence(Dollars total, Dollars p0, Dollars p0_other,
                                    Player marker_start) {
  if (p0 == p0_other)
    throw std::invalid_argument("forced_bid_sequence needs two distinct budgets");
  BudgetState upper{total, std::max(p0, p0_other), marker_start};
  BudgetState lower{total, std::min(p0, p0_other), marker_start};
  upper.validate();
  lower.validate();

  BidSequencePair pair;
  pair.total = total;
  pair.marker_start = marker_start;
  const std::size_t cap = 4 * static_cast<std::size_t>(total + 2);
  for (std::size_t stage = 0; stage < cap; ++stage) {
    pair.upper.push_back(upper);
    pair.lower.push_back(lower);
    if (upper.dominating() != lower.dominating()) {
      pair.flip_index = stage;
      return pair;
    }
    upper = forced_step(upper);
    lower = forced_step(lower);
  }
  throw std::logic_error("forced bid sequence did not terminate within " +
                         std::to_string(cap) + " stages");
}

Game chain_from_sequences(const BidSequencePair& pair) {
  const Game zero;
  Game node = Game::make({zero}, {zero});
  for (std::size_t i = pair.flip_index; i-- > 0;) {
    if (pair.dominating(i) == Player::Left)
      node = Game::make({node}, {zero});
    else
      node = Game::make({zero}, {node});
  }
  return node;
}

std::optional<Game> build_threshold_chain(Dollars total, Dollars threshold,
                                          Player side) {
  if (total < 0 || threshold < 0 || threshold > total + 1)
    throw std::out_of_range("threshold " + std::to_string(threshold) +
                            " outside 0.." + std::to_string(total + 1));
  const Game zero;
  if (side == Player::Left) {
    if (threshold == total + 1) return std::nullopt;
    if (threshold == 0) return Game::make({zero}, {});
  } else {
    if (threshold == 0) return std::nullopt;
    if (threshold == total + 1) return Game::make({}, {zero});
  }
  // After the opening round the marker sits with the player who did not move.
  const Player marker = opponent(side);
  return chain_from_sequences(
      forced_bid_sequence(total, threshold, threshold - 1, marker));
}

bool separates(Dollars total, const Game& candidate, Dollars threshold, Player side) {
  Solver solver(total);
  const Player marker = opponent(side);
  return solver.solve(candidate, threshold, marker) == Player::Left &&
         solver.solve(candidate, threshold - 1, marker) == Player::Right;
}

std::optional<Game> search_threshold_chain(Dollars total, Dollars threshold,
                                           Player side, std::size_t max_length,
                                           std::size_t max_candidates) {
  if (threshold < 1 || threshold > total)
    return build_threshold_chain(total, threshold, side);
  const Game zero;
  const Game star = Game::make({zero}, {zero});
  std::size_t tried = 0;
  for (std::size_t length = 0; length <= max_length; ++length) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < length; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      if (tried++ == max_candidates) return std::nullopt;
      Game node = star;
      std::size_t c = code;
      for (std::size_t i = 0; i < length; ++i, c /= 3) {
        switch (c % 3) {
          case 0: node = Game::make({zero}, {node}); break;
          case 1: node = Game::make({node}, {zero}); break;
          default: node = Game::make({node}, {node}); break;
        }
      }
      if (separates(total, node, threshold, side)) return node;
    }
  }
  return std::nullopt;
}

namespace {

Game assemble(const std::optional<Game>& left, const std::optional<Game>& right) {
  std::vector<Game> l, r;
  if (left) l.push_back(*left);
  if (right) r.push_back(*right);
  return Game::make(std::move(l), std::move(r));
}

}  // namespace

Construction construct_verified(Dollars total, const ShortForm& sf) {
  if (total < 0) throw InfeasibleShortForm("total budget must be nonnegative");
  if (sf.a < 0 || sf.a > total + 1 || sf.b < 0 || sf.b > total + 1)
    throw InfeasibleShortForm("short form " + to_string(sf) + " outside 0.." +
                              std::to_string(total + 1));
  if (!sf.feasible())
    throw InfeasibleShortForm("short form " + to_string(sf) +
                              " violates b <= a + 1");

  const Game zero;
  const std::string expected = word(from_short_form(total, sf));
  Solver solver(total);
  auto attempt = [&](const Game& g) -> std::optional<OutcomeTuple> {
    OutcomeTuple o = solver.outcome(g);
    if (word(o) == expected) return o;
    return std::nullopt;
  };

  Game candidate;
  if (sf == ShortForm{0, 0}) {
    candidate = Game::make({zero}, {});
  } else if (sf == ShortForm{total + 1, total + 1}) {
    candidate = Game::make({}, {zero});
  } else if (sf == ShortForm{total + 1, 0}) {
    candidate = zero;
  } else {
    candidate = assemble(build_threshold_chain(total, sf.a, Player::Left),
                         build_threshold_chain(total, sf.b, Player::Right));
  }
  const OutcomeTuple first = solver.outcome(candidate);
  if (word(first) == expected) return {candidate, first, false};

  const std::size_t max_length = 2 * static_cast<std::size_t>(total + 2);
  auto left = search_threshold_chain(total, sf.a, Player::Left, max_length);
  auto right = search_threshold_chain(total, sf.b, Player::Right, max_length);
  if ((left || sf.a == total + 1) && (right || sf.b == 0)) {
    const Game fallback = assemble(left, right);
    if (auto o = attempt(fallback)) return {fallback, *o, true};
  }
  throw VerificationFailed(sf, expected, word(first));
}

Game construct(Dollars total, const ShortForm& sf) {
  return construct_verified(total, sf).game;
}

}  // namespace richman
