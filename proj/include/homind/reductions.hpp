#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homind/graph.hpp"
#include "homind/qmatrix.hpp"

namespace homind {

// Nonnegative matrix pair whose characteristic polynomials agree iff those of
// the inputs do.  Writing A+ / A- for the positive and negative parts of A
// (entrywise, A = A+ - A-) and |A| = A+ + A-, the outputs are the 3n x 3n
// block matrices
//   D = [ A+ A- 0; A- A+ 0; 0 0 |B| ],   E = [ B+ B- 0; B- B+ 0; 0 0 |A| ].
// The top-left 2x2 block is similar to diag(|A|, A), so char(D) =
// char(A) char(|A|) char(|B|) and char(E) = char(B) char(|A|) char(|B|);
// the common factor cancels.  Inputs must be square, integral and of equal
// size n >= 1.
std::pair<QMatrix, QMatrix> posdet_lift(const QMatrix& a, const QMatrix& b);

// Comparing char(A) against a fixed monic integer polynomial, phrased as a
// nonnegative matrix pair via posdet_lift against the companion matrix of
// x^n + coeffs[n-1] x^{n-1} + ... + coeffs[0].  coeffs.size() must equal the
// size of A, and everything must be integral.
std::pair<QMatrix, QMatrix> vcp_to_pair(const QMatrix& a, const std::vector<Rational>& coeffs);

// Simple digraph built from a square nonnegative integer matrix A so that
// closed-walk counts recover the power traces of A at a fixed stretch b:
//   tr(M^{b k}) = b * tr(A^k)   for all k >= 1, and
//   tr(M^m)    = 0              whenever b does not divide m,
// where M is the adjacency matrix of the digraph.  Vertices 0..n-1 are the
// originals; each arc u->v of weight w becomes one gadget per set bit i of w,
// and the bit-i gadget is a chain of i two-arc diamonds (x -> {d, d'} -> y)
// followed by b - 2i single arcs, so it carries exactly 2^i walks from u to
// v, all of length b.  b is the smallest even number accommodating the
// widest bit (b = max(2t, 1) with t the highest bit index of the largest
// entry), so entries <= 1 give b = 1 and M = A.  Gadget interiors are
// numbered after the originals: entries scanned in row-major order, bits
// ascending, each gadget's vertices in chain order (per level: the two
// diamond interiors, then the next chain vertex).
struct BitGraph {
    Graph g;  // directed
    int b;    // common gadget length
};
BitGraph weighted_to_simple(const QMatrix& a);

// Pair combination with, for every connected F,
//   hom(F, first) - hom(F, second)
//     = (hom(F,g) - hom(F,h))^2 + (hom(F,g2) - hom(F,h2))^2,
// so the outputs agree on a class of connected graphs iff both input pairs
// do.  first = GxG + HxH + G'xG' + H'xH', second = 2 GxH + 2 G'xH' (x the
// tensor product, + disjoint union).  All four graphs must be uncoloured and
// of the same mode.
std::pair<Graph, Graph> and_combine(const Graph& g, const Graph& h, const Graph& g2,
                                    const Graph& h2);

// Cycle-and-path indistinguishability of (g, h) to plain cycle
// indistinguishability: combines the pair with its complement pair via
// and_combine.  Cycle counts of the complements stand in for path counts of
// the originals.  Undirected, uncoloured inputs.
std::pair<Graph, Graph> cyclespaths_to_cycles(const Graph& g, const Graph& h);

// Cycle indistinguishability of (g, h) to cycle-and-path
// indistinguishability, assuming equal vertex and edge counts; if the counts
// differ the fixed, clearly distinguishable pair (K1, K1 + K1) is returned.
// Mixes each input with the two cover graphs of a triangle and of a
// 4-cycle: with T0, T1 the even/odd covers of C3,
//   hom(C_m, gxT0 + hxT1) - hom(C_m, hxT0 + gxT1)
//     = (hom(C_m,g) - hom(C_m,h)) (hom(C_m,T0) - hom(C_m,T1)),
// and the cover difference is nonzero exactly for odd m; the C4 covers
// handle even m; paths never tell covers apart.  The two mixture pairs are
// then merged with and_combine.  Undirected, uncoloured inputs.
std::pair<Graph, Graph> cycles_to_cyclespaths(const Graph& g, const Graph& h);

// Anchor graphs for decolour: connected, undirected, pairwise incomparable
// under homomorphisms (no hom in either direction between distinct members).
// The attachment tip of every member is its vertex 0.
struct GadgetFamily {
    Graph p, q;                      // arc-direction anchors
    Graph v;                         // indicator anchor shared by all vertices
    std::map<std::string, Graph> k;  // per-colour indicator anchors

    // largest member order; controls all path lengths in decolour
    int ell() const;
    // throws std::invalid_argument on any violated requirement; the
    // incomparability check is an exhaustive homomorphism search
    void validate() const;
};

// Fixed anchor list (triangle-free 4-chromatic blocks of pairwise distinct
// odd girth / clique structure), assigned p, q, v, then one per palette
// entry in order.  Throws if the palette needs more anchors than available.
GadgetFamily default_gadget_family(const std::vector<std::string>& palette);

// decolour output plus the block offsets tests and decompositions rely on.
// Vertex layout: originals 0..n-1 first.  Then per original vertex u
// (ascending) an indicator block: 2l-1 path vertices (u side first), the
// colour anchor, 2l-1 path vertices, the shared anchor v.  Then per stored
// edge (u,w) (in stored order) a direction block: 10l-1 path vertices from
// u, junction p1, 2l-1 path vertices, junction p2, 10l-1 path vertices to w,
// then 2l-1 stub vertices from p1 and the p anchor, then 2l-1 stub vertices
// from p2 and the q anchor.  All paths attach to anchor tips (vertex 0).
struct Decoloured {
    Graph g;  // undirected, uncoloured
    int ell;
    std::vector<int> indicator_base;  // per original vertex
    std::vector<int> direction_base;  // per stored edge
};

// Plain-graph encoding of a (possibly directed, possibly coloured) simple
// graph: long attachment paths make the anchors the only dense spots, the
// p/q asymmetry encodes arc direction, the colour anchor encodes the colour.
// Uncoloured inputs use the "" entry of fam.k; coloured inputs need every
// colour present as a key.  Undirected inputs are encoded along their stored
// (min, max) orientation.
Decoloured decolour(const Graph& g, const GadgetFamily& fam);

// Path decomposition of decolour(g, fam).g of width at most
// l * (pw(g) + 1) - 1; computes the exact pathwidth of g, so g.n <= 24.
std::vector<std::vector<int>> decolour_path_decomposition(const Graph& g,
                                                          const GadgetFamily& fam);

}  // namespace homind
