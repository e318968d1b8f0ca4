#include "richman/play.hpp"

#include <random>

#include "richman/notation.hpp"

namespace richman {

std::string_view to_string(Phase p) noexcept {
  switch (p) {
    case Phase::AwaitingBid: return "awaiting_bid";
    case Phase::AwaitingHumanMove: return "awaiting_human_move";
    case Phase::Finished: return "finished";
  }
  return "?";
}

PlaySession::PlaySession(std::string id, Game form, BudgetState state, Player human)
    : id_(std::move(id)),
      initial_form_(form),
      initial_state_(state),
      form_(form),
      state_(state),
      human_(human) {
  state_.validate();
  solver_ = std::make_shared<Solver>(state_.total);
}

Bid PlaySession::engine_bid() { return solver_->best_action(form_, state_, engine()).bid; }

const Round& PlaySession::submit_bid(const Bid& human_bid) {
  if (phase_ != Phase::AwaitingBid)
    throw WrongPhase(std::string("cannot bid while ") + std::string(to_string(phase_)));
  if (!is_legal(state_, human_, human_bid))
    throw IllegalBid("illegal bid " + to_string(human_bid) + " for " +
                     std::string(player_name(human_)) + " at " + to_string(state_));

  const Bid engine = engine_bid();
  Round round;
  round.before = state_;
  round.position_before = form_;
  round.left_bid = human_ == Player::Left ? human_bid : engine;
  round.right_bid = human_ == Player::Left ? engine : human_bid;
  const Resolution res = resolve_bids(state_, round.left_bid, round.right_bid);
  round.mover = res.mover;
  round.after = res.next;
  history_.push_back(round);
  state_ = res.next;

  if (!form_.has_options(res.mover)) {
    phase_ = Phase::Finished;
    winner_ = opponent(res.mover);
  } else if (res.mover == this->engine()) {
    apply_move(*solver_->choose_move(form_, state_, res.mover));
  } else {
    phase_ = Phase::AwaitingHumanMove;
  }
  return history_.back();
}

void PlaySession::submit_move(std::size_t option_index) {
  if (phase_ != Phase::AwaitingHumanMove)
    throw WrongPhase(std::string("cannot move while ") + std::string(to_string(phase_)));
  const auto options = form_.options(human_);
  if (option_index >= options.size())
    throw BadMoveIndex("option " + std::to_string(option_index) + " out of range; " +
                       std::to_string(options.size()) + " available");
  apply_move(option_index);
}

void PlaySession::apply_move(std::size_t index) {
  Round& round = history_.back();
  const Game next = form_.options(round.mover)[index];
  round.move_index = index;
  round.moved_to = next;
  form_ = next;
  phase_ = Phase::AwaitingBid;
}

json PlaySession::snapshot() const {
  json history = json::array();
  for (const auto& r : history_) {
    json move = nullptr;
    if (r.move_index)
      move = {{"index", *r.move_index}, {"game", render(*r.moved_to)}};
    history.push_back({{"position", render(r.position_before)},
                       {"before", to_json(r.before)},
                       {"left_bid", to_json(r.left_bid)},
                       {"right_bid", to_json(r.right_bid)},
                       {"mover", player_name(r.mover)},
                       {"after", to_json(r.after)},
                       {"move", move}});
  }
  json options = json::array();
  if (phase_ == Phase::AwaitingHumanMove)
    for (const auto& o : form_.options(human_)) options.push_back(render(o));

  return {{"id", id_},
          {"initial_game", render(initial_form_)},
          {"initial_state", to_json(initial_state_)},
          {"game", render(form_)},
          {"state", to_json(state_)},
          {"human_side", player_name(human_)},
          {"engine_side", player_name(engine())},
          {"phase", to_string(phase_)},
          {"winner", winner_ ? json(player_name(*winner_)) : json(nullptr)},
          {"options", options},
          {"history", history}};
}

SessionStore::SessionStore(std::chrono::seconds ttl)
    : ttl_(ttl), salt_(std::random_device{}()) {}

std::string SessionStore::fresh_id() {
  std::mt19937_64 mix(salt_ ^ (++counter_ * 0x9e3779b97f4a7c15ull));
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  for (auto v = mix(); id.size() < 16; v >>= 4) id += kHex[v & 0xf];
  return id;
}

std::string SessionStore::create(Game form, BudgetState state, Player human) {
  evict(Clock::now());
  std::lock_guard lock(mutex_);
  std::string id = fresh_id();
  while (entries_.count(id)) id = fresh_id();
  auto entry = std::make_shared<Entry>();
  entry->session = std::make_unique<PlaySession>(id, form, state, human);
  entry->last_used = Clock::now();
  entries_.emplace(id, std::move(entry));
  return id;
}

void SessionStore::with(const std::string& id,
                        const std::function<void(PlaySession&)>& fn) {
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(id);
    if (it == entries_.end()) throw UnknownSession("unknown session '" + id + "'");
    entry = it->second;
  }
  std::lock_guard lock(entry->mutex);
  entry->last_used = Clock::now();
  fn(*entry->session);
}

std::size_t SessionStore::size() {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void SessionStore::evict(Clock::time_point now) {
  std::lock_guard lock(mutex_);
  for (auto it = entries_.begin(); it != entries_.end();) {
    bool stale;
    {
      std::lock_guard entry_lock(it->second->mutex);
      stale = it->second->last_used + ttl_ < now;
    }
    it = stale ? entries_.erase(it) : std::next(it);
  }
}

}  // namespace richman
