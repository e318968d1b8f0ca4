// The join-semilattice of short forms and its finite outcome lattices.
//
// Nodes are pairs (a, b) with b <= a + 1. An edge runs from (a, b) to
// (a', b') iff a + b + 1 = a' + b', a <= a' and b <= b', so edges point away
// from (0,0) = "Left always wins" toward outcomes less favourable to Left.

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "richman/outcome.hpp"

namespace richman {

class MixedTotalBudget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool gamma_has_edge(const ShortForm& from, const ShortForm& to) noexcept;

struct Lattice {
  Dollars total = 0;
  std::set<ShortForm> nodes;
  std::set<std::pair<ShortForm, ShortForm>> edges;

  ShortForm top() const noexcept { return {0, 0}; }
  ShortForm bottom() const noexcept { return {total + 1, total + 1}; }
  bool contains(const ShortForm& sf) const { return nodes.count(sf) != 0; }

  /// Directed path from `from` to `to` (the empty path included).
  bool reachable(const ShortForm& from, const ShortForm& to) const;
};

Lattice build_lattice(Dollars total);

/// x <= y as outcomes: y's thresholds are componentwise at most x's. Both
/// must be feasible short forms for `total` (ShortFormOutOfRange otherwise).
bool order_leq(Dollars total, const ShortForm& x, const ShortForm& y);
/// Componentwise min of the thresholds.
ShortForm join(Dollars total, const ShortForm& x, const ShortForm& y);
/// Componentwise max of the thresholds.
ShortForm meet(Dollars total, const ShortForm& x, const ShortForm& y);

/// The same on monotone outcome tuples; MixedTotalBudget when the totals
/// differ.
bool order_leq(const OutcomeTuple& x, const OutcomeTuple& y);
OutcomeTuple join(const OutcomeTuple& x, const OutcomeTuple& y);
OutcomeTuple meet(const OutcomeTuple& x, const OutcomeTuple& y);

std::string export_dot(const Lattice& l);

}  // namespace richman
