#pragma once

// Hand-rolled witness words for specific graphs, used to probe class automata
// and decoders from the test side. Steps are listed in building order and
// reversed before returning, since decoding applies the rightmost letter
// first.

#include <algorithm>
#include <string>
#include <vector>

namespace oracles {

// Width-3 undirected word for the m-vertex path, m >= 3. Builds a 3-path and
// then grows one end, always retiring a label currently sitting on an
// interior vertex. Shorter paths have fewer than 3 vertices and are not
// expressible at this width.
inline std::vector<std::string> path_word(int m) {
    std::vector<std::string> steps = {"A12", "A23"};
    for (int i = 0; i < m - 3; ++i) {
        steps.push_back(i % 2 == 0 ? "J2" : "J1");
        steps.push_back("A12");
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

// Width-3 undirected word for the m-cycle, m >= 3: the path construction
// plus a closing edge between the two ends (label 3 and the moving end).
inline std::vector<std::string> cycle_word(int m) {
    std::vector<std::string> steps = {"A12", "A23"};
    int t = m - 3;
    for (int i = 0; i < t; ++i) {
        steps.push_back(i % 2 == 0 ? "J2" : "J1");
        steps.push_back("A12");
    }
    steps.push_back(t % 2 == 0 ? "A13" : "A23");
    std::reverse(steps.begin(), steps.end());
    return steps;
}

// Width-3 directed word for the directed m-cycle, m >= 3. The walk's head
// alternates between labels 3 and 2; the tail stays on label 1 until the
// closing arc.
inline std::vector<std::string> directed_cycle_word(int m) {
    std::vector<std::string> steps = {"A12", "A23"};
    std::string end = "3";
    for (int i = 0; i < m - 3; ++i) {
        std::string fresh = (end == "3") ? "2" : "3";
        steps.push_back("J" + fresh);
        steps.push_back("A" + end + fresh);
        end = fresh;
    }
    steps.push_back("A" + end + "1");
    std::reverse(steps.begin(), steps.end());
    return steps;
}

}  // namespace oracles
