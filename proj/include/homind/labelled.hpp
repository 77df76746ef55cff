#pragma once

#include <string>
#include <vector>

#include "homind/graph.hpp"
#include "homind/qmatrix.hpp"

namespace homind {

// Graph together with k labelled vertices (label i+1 sits on vertex
// labels[i]). Labels produced by the generator algebra below are always
// pairwise distinct, but the type does not require it.
struct LabelledGraph {
    Graph g;
    std::vector<int> labels;

    int width() const { return (int)labels.size(); }
    void validate() const;
};

// Graph with k input labels and k output labels. Serves as an operator on
// k-labelled graphs via series composition.
struct BilabelledGraph {
    Graph g;
    std::vector<int> in_labels, out_labels;

    int width() const { return (int)in_labels.size(); }
    void validate() const;
};

// The generator alphabet at width k. Undirected letters: "Aij" for
// 1 <= i < j <= k puts an edge between labels i and j; "Ji" moves label i to
// a fresh isolated vertex. Directed mode has "Aij" for every ordered pair
// i != j (arc from label i to label j). k is capped at 9 so letter names
// stay single digit per label.
struct GenLetter {
    std::string name;
    BilabelledGraph op;
};
std::vector<GenLetter> generators(int k, bool directed = false);
// the letter's operator, by name; throws on unknown names
BilabelledGraph generator_op(const std::string& name, int k, bool directed = false);

// k fresh isolated labelled vertices; the unit everything is built from
LabelledGraph ones(int k, bool directed = false);

// K applied to X: disjoint union with K's output label i identified with X's
// label i, result labelled by K's input labels.
LabelledGraph series(const BilabelledGraph& K, const LabelledGraph& X);

// X and Y overlaid: label i of X identified with label i of Y
LabelledGraph glue(const LabelledGraph& X, const LabelledGraph& Y);

// Word decoding: w = w1 w2 ... wl maps to w1 applied to (w2 applied to
// ... (wl applied to the unit)). The underlying graph always has pathwidth
// at most k-1.
LabelledGraph pw_decode(const std::vector<std::string>& word, int k, bool directed = false);

// Rooted term over the alphabet: generator letters are unary, "glue" is
// binary, "1" is the nullary unit.
struct Term {
    std::string symbol;
    std::vector<Term> children;
};
// textual form "A12(glue(J1(1),A12(1)))"
Term term_parse(const std::string& s);
std::string term_str(const Term& t);
// underlying graphs of terms have treewidth at most k-1
LabelledGraph tw_decode(const Term& t, int k, bool directed = false);

// index of an assignment tuple (one host vertex per label, first label most
// significant) in 0 .. n^k - 1, and back
size_t tuple_index(const std::vector<int>& xs, int n);
std::vector<int> index_tuple(size_t idx, int k, int n);

// Homomorphism tensors over a host graph G with n vertices.
// hom_vector(X, G)[idx(x)] counts homs X.g -> G sending label i to x_i.
// hom_matrix(K, G)[idx(x)][idx(y)] counts homs sending input labels to x and
// output labels to y. Composition laws:
//   hom_vector(series(K, X)) = hom_matrix(K) * hom_vector(X)
//   hom_vector(glue(X, Y))   = pointwise product
std::vector<Rational> hom_vector(const LabelledGraph& X, const Graph& G);
QMatrix hom_matrix(const BilabelledGraph& K, const Graph& G);

}  // namespace homind
