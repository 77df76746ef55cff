#pragma once

#include "json.hpp"

#include "homind/automata.hpp"
#include "homind/circuit.hpp"
#include "homind/classauto.hpp"
#include "homind/decide.hpp"
#include "homind/equivalence.hpp"
#include "homind/graph.hpp"
#include "homind/qmatrix.hpp"

namespace homind {

using Json = nlohmann::ordered_json;

// All readers throw std::invalid_argument on malformed input; all rational
// weights travel as canonical strings "p" or "p/q".

// {"n": 4, "directed": false, "edges": [[0,1],[1,2]], "colours": [...]}
// "directed" defaults to false, "colours" may be absent.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"type": "mwa", "alphabet": [...], "states": n,
//  "alpha": [...], "transitions": {"A12": [[...]], ...}, "eta": [...]}
Json mwa_to_json(const MWA& a);
MWA mwa_from_json(const Json& j);

// {"type": "mta", "states": n,
//  "symbols": [{"name": "glue", "arity": 2, "mu": [[...]]}, ...],
//  "eta": [...]}
Json mta_to_json(const MTA& a);
MTA mta_from_json(const Json& j);

// {"equivalent": false, "witness": "A12 J1", "values": ["3", "5/2"],
//  "method": "basis"}
// witness/values are null when equivalent; "trials" appears for the
// randomised method only.
Json verdict_to_json(const EquivVerdict& v);

// {"kind": "word", "k": 3, "directed": false, "states": [...],
//  "initial": "s0", "accepting": [...],
//  "step": {"s0": {"A12": "s1", ...}, ...},
//  "glue_step": {"s0": {"s0": "s0", ...}, ...},   (tree kind only)
//  "small_members": [graph, ...]}
// "directed" and "small_members" may be absent on input.
Json class_automaton_to_json(const ClassAutomaton& a);
ClassAutomaton class_automaton_from_json(const Json& j);

// {"indistinguishable": false, "witness": graph, "hom_counts": ["20", "16"],
//  "witness_source": "small-member 2"}
// witness fields are null when indistinguishable.
Json homind_verdict_to_json(const HomIndVerdict& v);

// [["1", "-2/3"], ["0", "4"]]; rows of entries, integers may come in bare
Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

// {"gates": [{"label": "0"}, {"label": "1"},
//            {"label": "+", "children": [0, 1]}], "output": 2}
// leaves omit "children"; "x" may be spelled "*"; "output" defaults to the
// unique gate no other gate consumes.
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

// file helpers
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace homind
