#pragma once

#include <optional>
#include <string>

#include "homind/automata.hpp"
#include "homind/classauto.hpp"
#include "homind/graph.hpp"

namespace homind {

// Weighted word automaton of a host graph at width k: one state per k-tuple
// of host vertices, initial and final weights all one, each generator letter
// acting by its homomorphism tensor. Its value on a word w equals the number
// of homomorphisms from the graph w builds into the host.
MWA build_graph_mwa(const Graph& G, int k);

// Tree analogue: value on a term t counts homomorphisms from the graph t
// builds. Symbols: nullary "1", binary "glue", the unary generator letters.
MTA build_graph_mta(const Graph& G, int k);

// The class automaton as a weighted automaton over the same alphabet: 0/1
// transition rows following the deterministic step, value 1 exactly on
// accepted words (terms).
MWA build_class_mwa(const ClassAutomaton& cls);
MTA build_class_mta(const ClassAutomaton& cls);

// Outcome of a homomorphism-indistinguishability test. When distinguished,
// `witness` is a class member with different homomorphism counts into the two
// graphs (hom_g vs hom_h, re-verified by direct enumeration) and
// witness_source says where it came from: "small-member <i>", "word <w>"
// (the word rebuilds the witness, leftmost letter applied last), "term <t>",
// or for the spectral deciders "vertex-count" / a cycle or path length.
struct HomIndVerdict {
    bool indistinguishable = true;
    std::optional<Graph> witness;
    Rational hom_g, hom_h;
    std::string witness_source;
};

// Decides whether G and H have equal homomorphism counts from every member of
// the class: compares the explicit small members first, then tests the
// product of the class automaton with each host for equivalence by closing
// the reachable vectors per class state. Hosts must be nonempty, uncoloured
// and match the class direction.
HomIndVerdict decide_homind(const ClassAutomaton& cls, const Graph& G, const Graph& H);

// Spectral shortcuts. Directed cycles: counts are the traces of adjacency
// powers, so indistinguishability is |V(G)| = |V(H)| plus equality of
// characteristic polynomials after zero-padding to a common size. Undirected
// cycles drop the vertex-count condition (members start at C_3); cycles and
// paths add the walk counts 1^T A^j 1.
HomIndVerdict decide_directed_cycles_fast(const Graph& G, const Graph& H);
HomIndVerdict decide_cycles_fast(const Graph& G, const Graph& H);
HomIndVerdict decide_cyclespaths_fast(const Graph& G, const Graph& H);

}  // namespace homind
