#include "richman/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace richman {

bool gamma_has_edge(const ShortForm& from, const ShortForm& to) noexcept {
  return from.a + from.b + 1 == to.a + to.b && from.a <= to.a && from.b <= to.b;
}

Lattice build_lattice(Dollars total) {
  if (total < 0) throw InvalidBudget("total budget must be nonnegative");
  Lattice l;
  l.total = total;
  // The pairs of the semilattice below the seam a + b = TB + 1, plus the
  // conjugates of those strictly below it. The seam itself is shared.
  for (Dollars a = 0; a <= total + 1; ++a) {
    for (Dollars b = 0; b <= a + 1 && a + b <= total + 1; ++b) {
      l.nodes.insert({a, b});
      if (a + b <= total) l.nodes.insert(conjugate_short_form(total, {a, b}));
    }
  }
  for (const auto& x : l.nodes)
    for (const auto& y : l.nodes)
      if (gamma_has_edge(x, y)) l.edges.insert({x, y});
  return l;
}

bool Lattice::reachable(const ShortForm& from, const ShortForm& to) const {
  std::set<ShortForm> seen{from};
  std::deque<ShortForm> queue{from};
  while (!queue.empty()) {
    const ShortForm x = queue.front();
    queue.pop_front();
    if (x == to) return true;
    for (auto it = edges.lower_bound({x, ShortForm{-1, -1}});
         it != edges.end() && it->first == x; ++it) {
      if (seen.insert(it->second).second) queue.push_back(it->second);
    }
  }
  return false;
}

namespace {

void require_node(Dollars total, const ShortForm& sf) {
  if (sf.a < 0 || sf.b < 0 || sf.a > total + 1 || sf.b > total + 1 || !sf.feasible())
    throw ShortFormOutOfRange(to_string(sf) + " is not a feasible short form for TB=" +
                              std::to_string(total));
}

void require_same_total(const OutcomeTuple& x, const OutcomeTuple& y) {
  if (x.total() != y.total())
    throw MixedTotalBudget("outcomes for TB=" + std::to_string(x.total()) +
                           " and TB=" + std::to_string(y.total()));
}

}  // namespace

bool order_leq(Dollars total, const ShortForm& x, const ShortForm& y) {
  require_node(total, x);
  require_node(total, y);
  return y.a <= x.a && y.b <= x.b;
}

ShortForm join(Dollars total, const ShortForm& x, const ShortForm& y) {
  require_node(total, x);
  require_node(total, y);
  return {std::min(x.a, y.a), std::min(x.b, y.b)};
}

ShortForm meet(Dollars total, const ShortForm& x, const ShortForm& y) {
  require_node(total, x);
  require_node(total, y);
  return {std::max(x.a, y.a), std::max(x.b, y.b)};
}

bool order_leq(const OutcomeTuple& x, const OutcomeTuple& y) {
  require_same_total(x, y);
  return order_leq(x.total(), to_short_form(x), to_short_form(y));
}

OutcomeTuple join(const OutcomeTuple& x, const OutcomeTuple& y) {
  require_same_total(x, y);
  return from_short_form(x.total(), join(x.total(), to_short_form(x), to_short_form(y)));
}

OutcomeTuple meet(const OutcomeTuple& x, const OutcomeTuple& y) {
  require_same_total(x, y);
  return from_short_form(x.total(), meet(x.total(), to_short_form(x), to_short_form(y)));
}

std::string export_dot(const Lattice& l) {
  auto label = [](const ShortForm& sf) {
    return "\"" + std::to_string(sf.a) + "," + std::to_string(sf.b) + "\"";
  };
  std::ostringstream out;
  out << "// outcome lattice, TB=" << l.total << "\n"
      << "// top " << label(l.top()) << " = Left always wins, bottom "
      << label(l.bottom()) << " = Right always wins\n"
      << "// edges run from more to less Left-favourable outcomes\n"
      << "digraph L" << l.total << " {\n";
  for (const auto& n : l.nodes) out << "  " << label(n) << ";\n";
  for (const auto& [from, to] : l.edges)
    out << "  " << label(from) << " -> " << label(to) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace richman
