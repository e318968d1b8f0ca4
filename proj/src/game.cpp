#include "richman/game.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace richman {

namespace {

struct SideKey {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;
  bool operator==(const SideKey&) const = default;
};

struct SideKeyHash {
  std::size_t operator()(const SideKey& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (auto id : k.left) mix(id);
    mix(0xffffffffull);
    for (auto id : k.right) mix(id);
    return h;
  }
};

std::vector<Game> dedupe(std::vector<Game> options) {
  std::unordered_set<std::uint32_t> seen;
  std::vector<Game> out;
  out.reserve(options.size());
  for (const auto& g : options) {
    if (seen.insert(g.id()).second) out.push_back(g);
  }
  return out;
}

std::vector<std::uint32_t> sorted_ids(const std::vector<Game>& options) {
  std::vector<std::uint32_t> ids;
  ids.reserve(options.size());
  for (const auto& g : options) ids.push_back(g.id());
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

class Interner {
 public:
  static Interner& instance() {
    static Interner interner;
    return interner;
  }

  const detail::Node* zero() const { return zero_; }

  const detail::Node* intern(std::vector<Game> left, std::vector<Game> right) {
    left = dedupe(std::move(left));
    right = dedupe(std::move(right));
    SideKey key{sorted_ids(left), sorted_ids(right)};

    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;

    std::uint32_t birthday = 0;
    for (const auto& g : left) birthday = std::max(birthday, g.birthday() + 1);
    for (const auto& g : right) birthday = std::max(birthday, g.birthday() + 1);

    auto& node = nodes_.emplace_back();
    node.id = static_cast<std::uint32_t>(nodes_.size() - 1);
    node.birthday = birthday;
    node.left = std::move(left);
    node.right = std::move(right);
    table_.emplace(std::move(key), &node);
    return &node;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return nodes_.size();
  }

  static Game wrap(const detail::Node* node) { return Game(node); }

 private:
  Interner() {
    auto& node = nodes_.emplace_back();
    node.id = 0;
    node.birthday = 0;
    table_.emplace(SideKey{}, &node);
    zero_ = &node;
  }

  std::mutex mutex_;
  // deque keeps node addresses stable; handles point straight at them.
  std::deque<detail::Node> nodes_;
  std::unordered_map<SideKey, const detail::Node*, SideKeyHash> table_;
  const detail::Node* zero_ = nullptr;
};

Game::Game() : node_(Interner::instance().zero()) {}

Game Game::make(std::vector<Game> left, std::vector<Game> right) {
  return Game(Interner::instance().intern(std::move(left), std::move(right)));
}

std::size_t interned_count() { return Interner::instance().size(); }

namespace {
Game conjugate_memo(const Game& g, std::unordered_map<std::uint32_t, Game>& memo) {
  if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
  std::vector<Game> left, right;
  for (const auto& r : g.right_options()) left.push_back(conjugate_memo(r, memo));
  for (const auto& l : g.left_options()) right.push_back(conjugate_memo(l, memo));
  Game out = Game::make(std::move(left), std::move(right));
  memo.emplace(g.id(), out);
  return out;
}
}  // namespace

Game conjugate(const Game& g) {
  std::unordered_map<std::uint32_t, Game> memo;
  return conjugate_memo(g, memo);
}

}  // namespace richman
