#pragma once

// Exhaustive generation of normalised circuits for the encoding tests.
// Children are generated with left <= right; swapping wires yields an
// isomorphic encoding, so hom counts are unaffected by the fold.

#include <vector>

#include "homind/circuit.hpp"

namespace enumeration {

// every normalised circuit with at most max_gates gates and height at most
// max_height (labels forced by level parity: "x" odd, "+" even)
std::vector<homind::Circuit> all_normalised_circuits(int max_gates, int max_height);

}  // namespace enumeration
