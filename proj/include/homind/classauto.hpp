#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "homind/graph.hpp"
#include "homind/labelled.hpp"

namespace homind {

// Deterministic automaton describing a graph class F over the width-k
// generator alphabet. Word kind: a word is accepted iff the graph it builds
// (letters applied to the unit left to right) lies in F. Tree kind adds the
// binary glue composition. Members of F on fewer than k vertices cannot be
// built at width k at all, so they travel alongside as an explicit list;
// members on exactly k vertices may appear in both (consistency is the
// builder's obligation).
struct ClassAutomaton {
    enum class Kind { Word, Tree };

    Kind kind = Kind::Word;
    int k = 0;
    bool directed = false;
    std::vector<std::string> states;
    std::string initial;
    std::set<std::string> accepting;
    // step[state][letter] -> state, total on the width-k alphabet
    std::map<std::string, std::map<std::string, std::string>> step;
    // tree kind only; total and symmetric
    std::map<std::string, std::map<std::string, std::string>> glue_step;
    std::vector<Graph> small_members;

    void validate() const;
    const std::string& next(const std::string& state, const std::string& letter) const;
    const std::string& glue_next(const std::string& a, const std::string& b) const;
    bool is_accepting(const std::string& state) const { return accepting.count(state) > 0; }
};

// Runs the word through the automaton, first letter first.
std::string run_word(const ClassAutomaton& a, const std::vector<std::string>& word);
bool accepts_word(const ClassAutomaton& a, const std::vector<std::string>& word);
// Bottom-up state of a term ("1" at the leaves).
std::string run_term(const ClassAutomaton& a, const Term& t);
bool accepts_term(const ClassAutomaton& a, const Term& t);

// Built-in classes:
//   "cycles"            undirected cycles C_m (m >= 3), width 3
//   "cycles-and-paths"  undirected cycles and paths, width 3
//   "directed-cycles"   directed cycles (with the one-vertex edgeless graph
//                       counted as the length-0 cycle), width 3
//   "pathwidth-le<w>"   all graphs of pathwidth <= w, accept-all at width w+1
//   "treewidth-le<w>"   all graphs of treewidth <= w, tree kind, accept-all
// The accept-all classes enumerate their sub-width members explicitly, which
// caps <w> at 3.
ClassAutomaton builtin_class(const std::string& name);

// every graph on 1..maxn vertices, one per isomorphism class
std::vector<Graph> small_graph_catalogue(int maxn);

}  // namespace homind
