// Interactive play against the perfect-play engine.

#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "richman/bidding.hpp"
#include "richman/game.hpp"
#include "richman/records.hpp"
#include "richman/solver.hpp"

namespace richman {

class WrongPhase : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BadMoveIndex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnknownSession : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class Phase { AwaitingBid, AwaitingHumanMove, Finished };

std::string_view to_string(Phase p) noexcept;

struct Round {
  BudgetState before;
  Bid left_bid;
  Bid right_bid;
  Player mover = Player::Left;
  BudgetState after;
  Game position_before;
  std::optional<std::size_t> move_index;  // empty until the mover has moved
  std::optional<Game> moved_to;
};

class PlaySession {
 public:
  /// Throws InvalidBudget for an invalid state.
  PlaySession(std::string id, Game form, BudgetState state, Player human);

  const std::string& id() const noexcept { return id_; }
  const Game& initial_form() const noexcept { return initial_form_; }
  const Game& form() const noexcept { return form_; }
  const BudgetState& state() const noexcept { return state_; }
  Player human() const noexcept { return human_; }
  Player engine() const noexcept { return opponent(human_); }
  Phase phase() const noexcept { return phase_; }
  std::optional<Player> winner() const noexcept { return winner_; }
  const std::vector<Round>& history() const noexcept { return history_; }

  /// The engine's bid for the current state. Depends on the state alone, so
  /// it is committed before the human bid is seen.
  Bid engine_bid();

  /// One auction. If the engine wins it also moves. Throws WrongPhase or
  /// IllegalBid; the session is unchanged on error.
  const Round& submit_bid(const Bid& human_bid);

  /// Throws WrongPhase or BadMoveIndex.
  void submit_move(std::size_t option_index);

  json snapshot() const;

 private:
  void apply_move(std::size_t index);

  std::string id_;
  Game initial_form_;
  BudgetState initial_state_;
  Game form_;
  BudgetState state_;
  Player human_;
  Phase phase_ = Phase::AwaitingBid;
  std::optional<Player> winner_;
  std::vector<Round> history_;
  std::shared_ptr<Solver> solver_;
};

/// In-memory sessions with idle-time eviction. Requests for one session are
/// serialized; distinct sessions proceed concurrently.
class SessionStore {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionStore(std::chrono::seconds ttl = std::chrono::minutes(30));

  /// Returns the new session's id.
  std::string create(Game form, BudgetState state, Player human);

  /// Runs fn under the session's lock. Throws UnknownSession.
  void with(const std::string& id, const std::function<void(PlaySession&)>& fn);

  std::size_t size();

  /// Drops sessions idle since before `now - ttl`.
  void evict(Clock::time_point now);

 private:
  struct Entry {
    std::mutex mutex;
    std::unique_ptr<PlaySession> session;
    Clock::time_point last_used;
  };

  std::string fresh_id();

  std::chrono::seconds ttl_;
  std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> entries_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

}  // namespace richman
