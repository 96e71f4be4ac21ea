#pragma once

#include <nlohmann/json.hpp>

#include "litf/closure_system.hpp"
#include "litf/finite_lattice.hpp"
#include "litf/lattice_valued.hpp"

namespace litf::io {

using nlohmann::json;

// FiniteLattice: { "elements": [label, ...], "leq": [[i, j], ...] }
// Pairs may be covering or full order pairs, by index or by label; the
// reflexive-transitive closure is taken on load. Output lists covers only.
json to_json(const FiniteLattice& lattice);
FiniteLattice lattice_from_json(const json& j);

// LValuedFunction: { "domain": [...], "lattice": <FiniteLattice>,
//                    "values": { label: element } }
// A domain made of all 2^n bit-strings of one length loads as a cube.
json to_json(const LValuedFunction& mu);
LValuedFunction function_from_json(const json& j);

// ClosureSystem over a cube: { "n": int, "members": [[bitstring, ...], ...] }
// Over a labelled domain:   { "domain": [...], "members": [[label, ...], ...] }
json to_json(const ClosureSystem& system);
ClosureSystem closure_system_from_json(const json& j);

/// Sorted member labels of a subset.
json subset_to_json(const Domain& domain, const Subset& s);

/// Parses JSON text, rethrowing syntax errors as ParseError.
json parse(std::string_view text);

}  // namespace litf::io
