#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homind/automata.hpp"

namespace homind {

// Outcome of a zero-ness or equivalence check. When not equivalent, the
// witness (a word "A12 J1 ..." or a term "glue(A12(1),1)") re-evaluates on
// both automata to the stated values.
struct EquivVerdict {
    bool equivalent = true;
    std::optional<std::string> witness;
    std::optional<std::pair<Rational, Rational>> values;
    std::string method;  // "basis" | "rank" | "closure" | "random"
    int trials = 0;      // only meaningful for the randomised method
};

std::string word_str(const std::vector<std::string>& word);
std::vector<std::string> word_parse(const std::string& s);

// Incremental row echelon form used as a span membership test. insert()
// reduces the row against the pivots collected so far and either absorbs the
// residual (independent, returns true) or discards it.
struct Echelon {
    std::vector<std::pair<size_t, std::vector<Rational>>> rows;  // pivot col, reduced row

    bool insert(std::vector<Rational> v);
    size_t rank() const { return rows.size(); }
};

// --- word automata ---------------------------------------------------------------

// Basis of the forward space span{alpha * M(w)}, grown breadth-first from the
// empty word (letters tried in alphabet order). Vectors are the raw reached
// rows, each tagged with its generating word; there are at most `states` of
// them.
struct BasisVector {
    std::vector<std::string> word;
    QMatrix vec;  // 1 x states
};
std::vector<BasisVector> mwa_forward_basis(const MWA& A);

// Zero iff every forward-basis vector is orthogonal to eta. The witness is
// the tag of the first violating vector in basis order.
EquivVerdict mwa_is_zero_basis(const MWA& A);

// Rank formulation of the zero test: with A2 = A (x) A and T2 the sum of its
// transition matrices, the automaton is zero iff the lower-triangular block
// system forcing y_{i+1} = T2 y_i, y_1 = eta2, alpha2(y_1 + ... + y_n) = 0 is
// consistent, i.e. iff rank([A|b]) < n^3 + 1. Exponential in memory; kept as
// the independently-derived reference algorithm. 0 states count as zero.
bool mwa_is_zero_rank(const MWA& A);

struct MwaEquivOptions {
    // run the rank method as a cross-check when the difference automaton has
    // at most this many states; disagreement is a logic error
    size_t rank_crosscheck_bound = 4;
};

// Equivalence via the basis zero test on A (-) B.
EquivVerdict mwa_equiv(const MWA& A, const MWA& B, const MwaEquivOptions& opts = {});

// --- tree automata ---------------------------------------------------------------

// Basis of span{mu(t)}, seeded with the nullary vectors and closed under
// every symbol's multilinear action, applied to tuples of basis vectors.
// Candidates are explored smallest-term-first (ties by symbol order), so the
// tags are minimal under that order.
struct TermBasisVector {
    Term term;
    QMatrix vec;  // 1 x states
};
std::vector<TermBasisVector> mta_reach_basis(const MTA& A);

EquivVerdict mta_is_zero_closure(const MTA& A);
EquivVerdict mta_equiv(const MTA& A, const MTA& B);

// Samples `trials` random terms (size capped by the total state count) and
// compares values. "Not equivalent" verdicts carry a checked witness;
// "equivalent" verdicts may err.
EquivVerdict mta_equiv_randomised(const MTA& A, const MTA& B, uint64_t seed, int trials);

}  // namespace homind
