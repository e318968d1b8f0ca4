// Text notation for literal forms.
//
//   game  := named | "{" opts "|" opts "}"
//   opts  := empty | game ("," game)*
//   named := "0" | "*" | "*2" | "1" | "-1" | "1/2" | "^" | "v" | "^sym" | "+-1"
//
// Whitespace is insignificant between tokens.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "richman/game.hpp"

namespace richman {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct NamedForm {
  std::string_view name;
  Game expansion;
};

/// The built-in names, in declaration order.
const std::vector<NamedForm>& named_forms();

std::optional<Game> lookup_named(std::string_view name);

/// Shortest name whose expansion is exactly g (ties broken alphabetically).
std::optional<std::string_view> name_of(const Game& g);

Game parse(std::string_view text);
std::string render(const Game& g);

}  // namespace richman
