#pragma once

#include <string>
#include <vector>

#include "homind/labelled.hpp"
#include "homind/qmatrix.hpp"

namespace homind {

// Weighted word automaton over the rationals: a word w1 ... wl maps to
// alpha * M(w1) * ... * M(wl) * eta. Zero states is legal and denotes the
// zero function.
struct MWA {
    std::vector<std::string> alphabet;
    size_t states = 0;
    QMatrix alpha;               // 1 x states
    std::vector<QMatrix> trans;  // one states x states matrix per letter
    QMatrix eta;                 // states x 1

    void validate() const;
    size_t letter(const std::string& name) const;  // index into alphabet, throws
};

Rational mwa_eval(const MWA& A, const std::vector<std::string>& word);

MWA mwa_zero(const std::vector<std::string>& alphabet);
// direct sum; alphabets must agree
MWA mwa_sum(const MWA& A, const MWA& B);
// recognises A(w) - B(w)
MWA mwa_difference(const MWA& A, const MWA& B);
// Kronecker product, recognises A(w) * B(w)
MWA mwa_product(const MWA& A, const MWA& B);

// Weighted tree automaton over a ranked alphabet. A term sigma(t1,...,tn)
// maps to the row vector (mu(t1) (x) ... (x) mu(tn)) * mu(sigma), where
// mu(sigma) has shape states^arity x states; the empty Kronecker product is
// the 1x1 identity, so nullary symbols contribute their mu row directly.
// The value of a term is mu(t) * eta.
struct MTASymbol {
    std::string name;
    int arity = 0;
    QMatrix mu;
};

struct MTA {
    std::vector<MTASymbol> symbols;
    size_t states = 0;
    QMatrix eta;  // states x 1

    void validate() const;
    size_t symbol(const std::string& name) const;
};

Rational mta_eval(const MTA& A, const Term& t);
// mu(t) itself, a 1 x states row
QMatrix mta_weight_vector(const MTA& A, const Term& t);

// the ranked alphabet of an MTA, name/arity pairs only
std::vector<std::pair<std::string, int>> mta_signature(const MTA& A);

MTA mta_zero(const std::vector<std::pair<std::string, int>>& signature);
MTA mta_sum(const MTA& A, const MTA& B);
MTA mta_difference(const MTA& A, const MTA& B);
MTA mta_product(const MTA& A, const MTA& B);

}  // namespace homind
