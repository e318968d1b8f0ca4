#include "richman/solver.hpp"

#include <mutex>

namespace richman {

std::optional<std::size_t> BidMatrix::left_security_row() const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool all = true;
    for (auto w : cells[i]) all = all && w == Player::Left;
    if (all) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> BidMatrix::right_security_column() const {
  for (std::size_t j = 0; j < right_bids.size(); ++j) {
    bool all = true;
    for (const auto& row : cells) all = all && row[j] == Player::Right;
    if (all) return j;
  }
  return std::nullopt;
}

Solver::Solver(Dollars total) : total_(total) {
  if (total < 0) throw InvalidBudget("total budget must be nonnegative");
}

void Solver::check(const BudgetState& s) const {
  s.validate();
  if (s.total != total_)
    throw InvalidBudget("state has TB=" + std::to_string(s.total) +
                        " but solver is for TB=" + std::to_string(total_));
}

std::size_t Solver::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

bool Solver::left_wins_cell(const Game& g, const BudgetState& s, const Bid& lb,
                            const Bid& rb) {
  const Resolution res = resolve_bids(s, lb, rb);
  const auto options = g.options(res.mover);
  if (options.empty()) return res.mover == Player::Right;
  if (res.mover == Player::Left) {
    for (const auto& o : options)
      if (left_wins(o, res.next.left, res.next.marker)) return true;
    return false;
  }
  for (const auto& o : options)
    if (!left_wins(o, res.next.left, res.next.marker)) return false;
  return true;
}

bool Solver::left_wins(const Game& g, Dollars left, Player marker) {
  const std::uint64_t key = (std::uint64_t{g.id()} << 32) |
                            (static_cast<std::uint64_t>(left) << 1) |
                            static_cast<std::uint64_t>(marker);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const BudgetState s{total_, left, marker};
  const auto left_bids = legal_bids(s, Player::Left);
  const auto right_bids = legal_bids(s, Player::Right);
  bool result = false;
  for (const auto& lb : left_bids) {
    bool row = true;
    for (const auto& rb : right_bids) {
      if (!left_wins_cell(g, s, lb, rb)) {
        row = false;
        break;
      }
    }
    if (row) {
      result = true;
      break;
    }
  }

  std::unique_lock lock(mutex_);
  memo_.emplace(key, result);
  return result;
}

Player Solver::solve(const Game& g, const BudgetState& s) {
  check(s);
  return left_wins(g, s.left, s.marker) ? Player::Left : Player::Right;
}

OutcomeTuple Solver::outcome(const Game& g) {
  std::vector<Player> winners;
  winners.reserve(static_cast<std::size_t>(2 * (total_ + 1)));
  for (Player marker : {Player::Left, Player::Right})
    for (Dollars p = total_; p >= 0; --p) winners.push_back(solve(g, p, marker));
  return OutcomeTuple(total_, std::move(winners));
}

Player Solver::cell(const Game& g, const BudgetState& s, const Bid& left_bid,
                    const Bid& right_bid) {
  check(s);
  return left_wins_cell(g, s, left_bid, right_bid) ? Player::Left : Player::Right;
}

BidMatrix Solver::bid_matrix(const Game& g, const BudgetState& s) {
  check(s);
  BidMatrix m;
  m.left_bids = legal_bids(s, Player::Left);
  m.right_bids = legal_bids(s, Player::Right);
  for (const auto& lb : m.left_bids) {
    auto& row = m.cells.emplace_back();
    for (const auto& rb : m.right_bids)
      row.push_back(left_wins_cell(g, s, lb, rb) ? Player::Left : Player::Right);
  }
  return m;
}

std::optional<std::size_t> Solver::choose_move(const Game& g,
                                               const BudgetState& after,
                                               Player mover) {
  check(after);
  const auto options = g.options(mover);
  if (options.empty()) return std::nullopt;
  for (std::size_t i = 0; i < options.size(); ++i)
    if (solve(options[i], after) == mover) return i;
  return 0;
}

Action Solver::best_action(const Game& g, const BudgetState& s, Player who) {
  check(s);
  const Player winner = solve(g, s);

  // The winner's first bid that wins against every reply.
  auto security_bid = [&](Player w) {
    const auto own = legal_bids(s, w);
    const auto replies = legal_bids(s, opponent(w));
    for (const auto& b : own) {
      bool secure = true;
      for (const auto& r : replies) {
        const Bid& lb = w == Player::Left ? b : r;
        const Bid& rb = w == Player::Left ? r : b;
        const bool left = left_wins_cell(g, s, lb, rb);
        if (left != (w == Player::Left)) {
          secure = false;
          break;
        }
      }
      if (secure) return b;
    }
    // Unreachable while the saddle property holds.
    throw std::logic_error("no security bid for the solved winner");
  };

  const Bid own = winner == who ? security_bid(who) : Bid::pass();
  const Bid other = winner == who ? Bid::pass() : security_bid(opponent(who));
  const Bid& lb = who == Player::Left ? own : other;
  const Bid& rb = who == Player::Left ? other : own;
  const Resolution res = resolve_bids(s, lb, rb);

  Action action{own, std::nullopt};
  if (res.mover == who) action.option = choose_move(g, res.next, who);
  return action;
}

Player solve(const Game& g, const BudgetState& s) {
  return Solver(s.total).solve(g, s);
}

OutcomeTuple solve_outcome(const Game& g, Dollars total) {
  return Solver(total).outcome(g);
}

BidMatrix bid_matrix(const Game& g, const BudgetState& s) {
  return Solver(s.total).bid_matrix(g, s);
}

Action best_action(const Game& g, const BudgetState& s, Player who) {
  return Solver(s.total).best_action(g, s, who);
}

}  // namespace richman
