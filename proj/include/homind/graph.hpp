#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "homind/qmatrix.hpp"
#include "homind/rational.hpp"

namespace homind {

// Finite graph, simple, optionally directed, optionally vertex-coloured.
// Loops are permitted only in directed mode (a 1-cycle needs one). Undirected
// edges are stored once with u <= v. colours is either empty (uncoloured) or
// has one symbol per vertex.
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> colours;

    Graph() = default;
    explicit Graph(int n_, bool directed_ = false) : n(n_), directed(directed_) {}

    bool coloured() const { return !colours.empty(); }
    // inserting an existing edge is a no-op (simple graph)
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    size_t edge_count() const { return edges.size(); }

    // neighbour lists; for undirected graphs all three coincide
    std::vector<std::vector<int>> adjacency_out() const;
    std::vector<std::vector<int>> adjacency_in() const;
    std::vector<std::vector<int>> adjacency_und() const;  // underlying undirected

    void validate() const;  // throws std::invalid_argument on malformed data
};

// same directedness and same colouredness
bool same_mode(const Graph& a, const Graph& b);

// --- constructors -----------------------------------------------------------

// path on n vertices (n-1 edges); n >= 1
Graph make_path(int n_vertices);
// cycle on m vertices. Directed: m >= 1 (1 = loop, 2 = digon). Undirected
// cycles start at m >= 3.
Graph make_cycle(int m, bool directed = false);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
// Kneser graph K(r, s): r-subsets of [s], edges between disjoint sets
Graph make_kneser(int r, int s);
// circulant: vertices 0..n-1, i adjacent to i+d mod n per offset d
Graph make_circulant(int n, const std::vector<int>& offsets);
// Mycielski construction: shadows plus apex; chromatic number goes up by one,
// triangles are not introduced
Graph make_mycielski(const Graph& base);

// --- combinators -------------------------------------------------------------

Graph disjoint_union(const Graph& a, const Graph& b);
// categorical (tensor) product: V = V(a) x V(b), edges componentwise
Graph tensor_product(const Graph& a, const Graph& b);
Graph complement(const Graph& g);  // undirected, loop-free

// --- predicates --------------------------------------------------------------

bool is_connected(const Graph& g);  // underlying undirected connectivity
bool is_single_cycle(const Graph& g);
bool is_single_path(const Graph& g);
bool is_single_directed_cycle(const Graph& g);

// --- homomorphisms ------------------------------------------------------------

// Number of homomorphisms F -> G by plain backtracking: arcs preserved in
// directed mode, colours preserved when both graphs are coloured. Modes must
// match. Exact count.
Integer hom_count(const Graph& F, const Graph& G);
// with vertices of F pinned to vertices of G (distinct F-vertices may share
// an image)
Integer hom_count_pinned(const Graph& F, const Graph& G,
                         const std::vector<std::pair<int, int>>& pins);
// backtracking with early exit; true iff at least one homomorphism exists
bool hom_exists(const Graph& F, const Graph& G);

// exact isomorphism test, |V| <= 16
bool is_isomorphic(const Graph& a, const Graph& b);

// 0/1 (or weight) adjacency matrix; A[u][v] = 1 iff arc u->v (undirected both)
QMatrix adjacency_matrix(const Graph& g);

// --- CFI construction ---------------------------------------------------------

// Even-subset CFI graph of a connected undirected simple base graph. Vertices
// are pairs (v, S) with S an even subset of the edges at v; (u,S) ~ (v,T) iff
// uv is an edge and (uv in S) xor (uv in T) equals the twist bit of uv.
// parity 0 twists nothing; parity 1 twists exactly the smallest edge.
Graph cfi(const Graph& base, int parity);

// --- width machinery -----------------------------------------------------------

// exact pathwidth via vertex-separation subset DP; |V| <= 24 guard
bool pathwidth_at_most(const Graph& g, int w);
int pathwidth(const Graph& g);

// Validates that bags form a path decomposition of g (cover vertices, cover
// edges, contiguous occurrence) and returns its width. Throws on violation.
int validate_path_decomposition(const Graph& g, const std::vector<std::vector<int>>& bags);

// Any valid path decomposition, found greedily (not necessarily optimal).
// Used to assemble decompositions of gadget graphs.
std::vector<std::vector<int>> greedy_path_decomposition(const Graph& g);

// Optimal-width bags recovered from the vertex-separation DP; |V| <= 24 guard.
std::vector<std::vector<int>> optimal_path_decomposition(const Graph& g);

}  // namespace homind
