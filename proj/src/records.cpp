#include "richman/records.hpp"

namespace richman {

std::string_view player_name(Player p) noexcept {
  return p == Player::Left ? "Left" : "Right";
}

json outcome_record(const OutcomeTuple& o) {
  const auto report = feasibility(o);
  json short_form = nullptr;
  if (report.monotone_with_marker && report.monotone_without_marker) {
    const ShortForm sf = to_short_form(o);
    short_form = {{"a", sf.a}, {"b", sf.b}};
  }
  return {{"tb", o.total()},
          {"word", word(o)},
          {"short_form", short_form},
          {"feasible", report.feasible}};
}

json lattice_record(const Lattice& l) {
  json nodes = json::array();
  for (const auto& n : l.nodes) nodes.push_back({n.a, n.b});
  json edges = json::array();
  for (const auto& [from, to] : l.edges)
    edges.push_back({json{from.a, from.b}, json{to.a, to.b}});
  return {{"tb", l.total}, {"nodes", nodes}, {"edges", edges}};
}

json to_json(const Bid& b) {
  return {{"amount", b.amount}, {"include_marker", b.include_marker}};
}

json to_json(const BudgetState& s) {
  return {{"tb", s.total},
          {"left_budget", s.left},
          {"right_budget", s.right()},
          {"marker", player_name(s.marker)}};
}

}  // namespace richman
