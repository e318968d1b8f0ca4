#include "richman/notation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

namespace richman {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("at offset " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

std::vector<NamedForm> build_named_forms() {
  const Game zero;
  const Game star = Game::make({zero}, {zero});
  const Game one = Game::make({zero}, {});
  const Game minus_one = Game::make({}, {zero});
  const Game star2 = Game::make({star}, {star});
  const Game up = Game::make({zero}, {star});
  const Game down = Game::make({star}, {zero});
  return {
      {"0", zero},
      {"*", star},
      {"*2", star2},
      {"1", one},
      {"-1", minus_one},
      {"1/2", Game::make({zero}, {one})},
      {"^", up},
      {"v", down},
      {"^sym", Game::make({star2}, {star})},
      {"+-1", Game::make({one}, {minus_one})},
  };
}

// Longest token first so that "*2" wins over "*", "^sym" over "^", and so on.
constexpr std::array<std::string_view, 10> kTokensByLength = {
    "^sym", "1/2", "+-1", "*2", "-1", "0", "*", "1", "^", "v"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Game parse_all() {
    Game g = parse_game();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Game parse_game() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a game");
    if (text_[pos_] == '{') {
      ++pos_;
      std::vector<Game> left = parse_options('|');
      expect('|');
      std::vector<Game> right = parse_options('}');
      expect('}');
      return Game::make(std::move(left), std::move(right));
    }
    return parse_named();
  }

  std::vector<Game> parse_options(char terminator) {
    std::vector<Game> out;
    if (peek(terminator)) return out;
    out.push_back(parse_game());
    while (peek(',')) {
      ++pos_;
      out.push_back(parse_game());
    }
    return out;
  }

  Game parse_named() {
    const std::string_view rest = text_.substr(pos_);
    for (auto token : kTokensByLength) {
      if (rest.starts_with(token)) {
        pos_ += token.size();
        return *lookup_named(token);
      }
    }
    // Report the whole offending word, not just its first character.
    std::size_t end = pos_;
    while (end < text_.size() && text_[end] != ',' && text_[end] != '|' &&
           text_[end] != '}' && text_[end] != '{' &&
           !std::isspace(static_cast<unsigned char>(text_[end])))
      ++end;
    if (end == pos_) fail("expected a game");
    fail("unknown named token '" + std::string(text_.substr(pos_, end - pos_)) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Game& g, std::string& out) {
  if (auto name = name_of(g)) {
    out += *name;
    return;
  }
  out += '{';
  bool first = true;
  for (const auto& l : g.left_options()) {
    if (!first) out += ',';
    first = false;
    render_into(l, out);
  }
  out += '|';
  first = true;
  for (const auto& r : g.right_options()) {
    if (!first) out += ',';
    first = false;
    render_into(r, out);
  }
  out += '}';
}

}  // namespace

const std::vector<NamedForm>& named_forms() {
  static const std::vector<NamedForm> forms = build_named_forms();
  return forms;
}

std::optional<Game> lookup_named(std::string_view name) {
  for (const auto& f : named_forms())
    if (f.name == name) return f.expansion;
  return std::nullopt;
}

std::optional<std::string_view> name_of(const Game& g) {
  std::optional<std::string_view> best;
  for (const auto& f : named_forms()) {
    if (!(f.expansion == g)) continue;
    if (!best || f.name.size() < best->size() ||
        (f.name.size() == best->size() && f.name < *best))
      best = f.name;
  }
  return best;
}

Game parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Game& g) {
  std::string out;
  render_into(g, out);
  return out;
}

}  // namespace richman
