// JSON records shared by the command line and the HTTP service.
//
//   outcome: { "tb", "word", "short_form": {"a", "b"} | null, "feasible" }
//   lattice: { "tb", "nodes": [[a,b],...], "edges": [[[a,b],[a',b']],...] }

#pragma once

#include "json.hpp"

#include "richman/lattice.hpp"
#include "richman/outcome.hpp"

namespace richman {

using json = nlohmann::json;

/// short_form is null when the tuple is not monotone.
json outcome_record(const OutcomeTuple& o);
json lattice_record(const Lattice& l);
json to_json(const Bid& b);
json to_json(const BudgetState& s);

std::string_view player_name(Player p) noexcept;  // "Left" / "Right"

}  // namespace richman
