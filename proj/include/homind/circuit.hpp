#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homind/graph.hpp"
#include "homind/rational.hpp"

namespace homind {

// Variable-free arithmetic circuit: an acyclic multigraph of gates. Leaves
// carry label "0" or "1" and have no children; internal gates carry "+" or
// "x" and have exactly two children (which may coincide). Subtraction is
// rejected everywhere here; callers with "-" gates must eliminate them first.
struct Circuit {
    struct Gate {
        std::string label;          // "0", "1", "+", "x"
        std::vector<int> children;  // empty for leaves, two ids otherwise
    };
    std::vector<Gate> gates;
    int output = -1;  // the unique gate no other gate feeds from

    void validate() const;  // throws std::invalid_argument on malformed data
};

// height of every gate: leaves 0, otherwise 1 + max over children
std::vector<int> circuit_heights(const Circuit& c);

// exact value of the output gate
Integer eval_circuit(const Circuit& c);

// A circuit is normalised when both children of each height-h gate sit at
// height h-1, "+" appears only at even heights, "x" only at odd ones, and
// the output height is even. The graph encoding below assumes this shape.
bool is_normalised_circuit(const Circuit& c);

// Pads a subtraction-free circuit into normalised shape without changing its
// value: "+" filler gates pair a wire with a 0 leaf, "x" filler gates with a
// 1 leaf. Throws on "-" labels.
Circuit normalise_circuit(const Circuit& c);

// Encodes a normalised circuit as a pair of coloured digraphs. Both child
// wires of every internal gate are subdivided by an "S"-coloured vertex and
// point from gate to child; the two S vertices of an "x" gate are joined by
// arcs both ways. The second graph additionally has a "T"-coloured vertex
// with an arc onto the output gate. Vertex order: gates by id, then the two
// S vertices per internal gate in gate order (left wire first), then T.
std::pair<Graph, Graph> circuit_to_graph(const Circuit& c);

// Probe graphs whose pinned hom counts into circuit encodings read off gate
// values: a gate g of height h in an encoded circuit satisfies
//   hom(probe(h), G(C); root -> g) = probe_scale(h) * val(g).
// probe(0) is a single "1"-coloured vertex; odd levels are an "x" root with
// two subdivided wires (S vertices adjacent both ways) onto copies of the
// level below; even levels are a "+" root with one subdivided wire. The root
// is vertex 0. With exact_depth = false the second branch of every "x" node
// collapses to the level-0 leaf, giving a probe that is still legal for the
// encoding's shape constraints but has leaves at uneven depths.
struct ProbeGraph {
    Graph g;
    int root = 0;
};
ProbeGraph build_probe(int h, bool exact_depth = true);

// probe(h) plus a "T"-coloured vertex arcing onto the root; hom counts into
// the hatted encoding then see circuits of matching height only.
Graph build_f_h(int h, bool exact_depth = true);

// the scaling constant probe_scale(h) = 2^(2^ceil(h/2) - 1)
Integer probe_scale(int h);

// Normalised circuit computing the requested non-negative value, built from
// the binary expansion: each power of two is doubled up from a 1 leaf, and
// summands fold together two height levels at a time. The output height is
// even and at least min_height (odd requests round up); values with many or
// high bits force extra height on their own.
Circuit value_circuit(const Integer& value, int min_height = 0);

}  // namespace homind
