// Literal game forms {L-options | R-options}, interned so that structurally
// identical forms share one identity.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace richman {

enum class Player : std::uint8_t { Left = 0, Right = 1 };

constexpr Player opponent(Player p) noexcept {
  return p == Player::Left ? Player::Right : Player::Left;
}

constexpr char player_letter(Player p) noexcept {
  return p == Player::Left ? 'L' : 'R';
}

class Game;

namespace detail {
struct Node;
}

/// Handle to an immutable, interned game form. Copying is cheap; equality is
/// identity of the interned node, which coincides with structural equality.
class Game {
 public:
  /// The form 0 = {|}.
  Game();

  /// Interns {left | right}. Options are deduplicated by identity, keeping
  /// the first occurrence; the surviving order is that of the first
  /// construction of this form.
  static Game make(std::vector<Game> left, std::vector<Game> right);

  static Game zero() { return Game(); }

  std::uint32_t id() const noexcept;
  std::span<const Game> left_options() const noexcept;
  std::span<const Game> right_options() const noexcept;
  std::span<const Game> options(Player who) const noexcept {
    return who == Player::Left ? left_options() : right_options();
  }
  bool has_options(Player who) const noexcept { return !options(who).empty(); }
  bool is_zero() const noexcept;

  /// 0 for the form 0, otherwise 1 + the largest option birthday.
  std::uint32_t birthday() const noexcept;

  friend bool operator==(const Game& a, const Game& b) noexcept {
    return a.node_ == b.node_;
  }

 private:
  explicit Game(const detail::Node* node) : node_(node) {}
  const detail::Node* node_;

  friend struct detail::Node;
  friend class Interner;
};

namespace detail {
struct Node {
  std::uint32_t id;
  std::uint32_t birthday;
  std::vector<Game> left;
  std::vector<Game> right;
};
}  // namespace detail

inline std::uint32_t Game::id() const noexcept { return node_->id; }
inline std::span<const Game> Game::left_options() const noexcept {
  return node_->left;
}
inline std::span<const Game> Game::right_options() const noexcept {
  return node_->right;
}
inline bool Game::is_zero() const noexcept {
  return node_->left.empty() && node_->right.empty();
}
inline std::uint32_t Game::birthday() const noexcept { return node_->birthday; }

/// Number of distinct forms interned so far.
std::size_t interned_count();

/// Swap Left and Right options recursively.
Game conjugate(const Game& g);

}  // namespace richman

template <>
struct std::hash<richman::Game> {
  std::size_t operator()(const richman::Game& g) const noexcept {
    return std::hash<std::uint32_t>{}(g.id());
  }
};
