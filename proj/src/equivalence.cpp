#include "homind/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace homind {

std::string word_str(const std::vector<std::string>& word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += word[i];
    }
    return out;
}

std::vector<std::string> word_parse(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> word;
    std::string tok;
    while (in >> tok) word.push_back(tok);
    return word;
}

bool Echelon::insert(std::vector<Rational> v) {
    for (const auto& [p, r] : rows) {
        if (v[p] == 0) continue;
        Rational c = v[p];
        for (size_t j = p; j < v.size(); ++j) v[j] -= c * r[j];
    }
    size_t p = v.size();
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            p = j;
            break;
        }
    if (p == v.size()) return false;
    Rational lead = v[p];
    for (size_t j = p; j < v.size(); ++j) v[j] /= lead;
    rows.emplace_back(p, std::move(v));
    return true;
}

std::vector<BasisVector> mwa_forward_basis(const MWA& A) {
    A.validate();
    std::vector<BasisVector> basis;
    Echelon ech;
    std::deque<size_t> work;
    if (ech.insert(A.alpha.a)) {
        basis.push_back({{}, A.alpha});
        work.push_back(0);
    }
    while (!work.empty()) {
        size_t i = work.front();
        work.pop_front();
        for (size_t li = 0; li < A.alphabet.size(); ++li) {
            QMatrix next = mat_mul(basis[i].vec, A.trans[li]);
            if (!ech.insert(next.a)) continue;
            std::vector<std::string> w = basis[i].word;
            w.push_back(A.alphabet[li]);
            work.push_back(basis.size());
            basis.push_back({std::move(w), std::move(next)});
        }
    }
    return basis;
}

EquivVerdict mwa_is_zero_basis(const MWA& A) {
    EquivVerdict v;
    v.method = "basis";
    for (const BasisVector& b : mwa_forward_basis(A)) {
        Rational val = mat_mul(b.vec, A.eta).at(0, 0);
        if (val == 0) continue;
        v.equivalent = false;
        v.witness = word_str(b.word);
        v.values = {val, Rational(0)};
        return v;
    }
    return v;
}

bool mwa_is_zero_rank(const MWA& A) {
    A.validate();
    size_t n = A.states;
    if (n == 0) return true;
    MWA A2 = mwa_product(A, A);
    size_t n2 = n * n;
    QMatrix T2(n2, n2);
    for (const QMatrix& M : A2.trans) T2 = mat_add(T2, M);
    // Unknowns y_0..y_{n-1} with y_0 = eta2 and y_{i} = T2 y_{i-1}; those
    // equations pin y uniquely, so consistency reduces to the final row
    // alpha2 (y_0 + ... + y_{n-1}) = 0. Each alpha2 T2^i eta2 is a sum of
    // squared word values, hence the system is consistent exactly when the
    // automaton is zero. Last column is the right-hand side.
    size_t rows = n * n2 + 1;
    QMatrix sys(rows, rows);
    for (size_t blk = 0; blk < n; ++blk)
        for (size_t r = 0; r < n2; ++r) {
            sys.at(blk * n2 + r, blk * n2 + r) = 1;
            if (blk > 0)
                for (size_t c = 0; c < n2; ++c)
                    sys.at(blk * n2 + r, (blk - 1) * n2 + c) = -T2.at(r, c);
        }
    for (size_t blk = 0; blk < n; ++blk)
        for (size_t c = 0; c < n2; ++c) sys.at(rows - 1, blk * n2 + c) = A2.alpha.at(0, c);
    for (size_t r = 0; r < n2; ++r) sys.at(r, rows - 1) = A2.eta.at(r, 0);
    return mat_rank(sys) < rows;
}

EquivVerdict mwa_equiv(const MWA& A, const MWA& B, const MwaEquivOptions& opts) {
    MWA D = mwa_difference(A, B);
    EquivVerdict v = mwa_is_zero_basis(D);
    if (!v.equivalent) {
        std::vector<std::string> w = word_parse(*v.witness);
        v.values = {mwa_eval(A, w), mwa_eval(B, w)};
    }
    if (D.states <= opts.rank_crosscheck_bound && mwa_is_zero_rank(D) != v.equivalent)
        throw std::logic_error("mwa_equiv: basis and rank methods disagree");
    return v;
}

namespace {

struct SparseMu {
    int arity = 0;
    std::vector<std::tuple<size_t, size_t, Rational>> nz;  // (row, col, value)
};

// (v_1 (x) ... (x) v_m) * mu for basis rows v_i, exploiting sparsity of mu.
// Row index r of mu decodes into one state per child, first child most
// significant, matching the eval convention.
QMatrix apply_symbol(size_t states, const SparseMu& mu, const std::vector<const QMatrix*>& rows) {
    QMatrix out(1, states);
    for (const auto& [r, c, val] : mu.nz) {
        Rational prod = val;
        size_t rr = r;
        for (int i = mu.arity - 1; i >= 0; --i) {
            prod *= rows[i]->at(0, rr % states);
            if (prod == 0) break;
            rr /= states;
        }
        if (prod != 0) out.at(0, c) += prod;
    }
    return out;
}

int term_size(const Term& t) {
    int s = 1;
    for (const Term& c : t.children) s += term_size(c);
    return s;
}

struct Candidate {
    int size = 0;
    size_t seq = 0;
    Term term;
    QMatrix vec;
};

struct CandidateOrder {
    bool operator()(const Candidate& a, const Candidate& b) const {
        if (a.size != b.size) return a.size > b.size;
        return a.seq > b.seq;
    }
};

}  // namespace

std::vector<TermBasisVector> mta_reach_basis(const MTA& A) {
    A.validate();
    std::vector<SparseMu> sparse(A.symbols.size());
    for (size_t si = 0; si < A.symbols.size(); ++si) {
        const MTASymbol& sym = A.symbols[si];
        sparse[si].arity = sym.arity;
        for (size_t r = 0; r < sym.mu.rows; ++r)
            for (size_t c = 0; c < sym.mu.cols; ++c)
                if (sym.mu.at(r, c) != 0) sparse[si].nz.emplace_back(r, c, sym.mu.at(r, c));
    }

    std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> work;
    size_t seq = 0;
    for (size_t si = 0; si < A.symbols.size(); ++si)
        if (A.symbols[si].arity == 0)
            work.push({1, seq++, Term{A.symbols[si].name, {}}, A.symbols[si].mu});

    std::vector<TermBasisVector> basis;
    std::vector<int> sizes;
    Echelon ech;
    while (!work.empty()) {
        Candidate cand = work.top();
        work.pop();
        if (!ech.insert(cand.vec.a)) continue;
        size_t fresh = basis.size();
        basis.push_back({std::move(cand.term), std::move(cand.vec)});
        sizes.push_back(cand.size);
        // close under every symbol, over tuples that use the fresh vector at
        // least once (older tuples are already queued)
        for (size_t si = 0; si < A.symbols.size(); ++si) {
            int m = A.symbols[si].arity;
            if (m == 0) continue;
            std::vector<size_t> idx(m, 0);
            while (true) {
                bool uses_fresh = false;
                for (int i = 0; i < m; ++i)
                    if (idx[i] == fresh) uses_fresh = true;
                if (uses_fresh) {
                    std::vector<const QMatrix*> rows(m);
                    Term t{A.symbols[si].name, {}};
                    int size = 1;
                    for (int i = 0; i < m; ++i) {
                        rows[i] = &basis[idx[i]].vec;
                        t.children.push_back(basis[idx[i]].term);
                        size += sizes[idx[i]];
                    }
                    work.push({size, seq++, std::move(t), apply_symbol(A.states, sparse[si], rows)});
                }
                int i = m - 1;
                while (i >= 0 && idx[i] == fresh) idx[i--] = 0;
                if (i < 0) break;
                ++idx[i];
            }
        }
    }
    return basis;
}

EquivVerdict mta_is_zero_closure(const MTA& A) {
    EquivVerdict v;
    v.method = "closure";
    for (const TermBasisVector& b : mta_reach_basis(A)) {
        Rational val = mat_mul(b.vec, A.eta).at(0, 0);
        if (val == 0) continue;
        v.equivalent = false;
        v.witness = term_str(b.term);
        v.values = {val, Rational(0)};
        return v;
    }
    return v;
}

EquivVerdict mta_equiv(const MTA& A, const MTA& B) {
    MTA D = mta_difference(A, B);
    EquivVerdict v = mta_is_zero_closure(D);
    if (!v.equivalent) {
        Term t = term_parse(*v.witness);
        v.values = {mta_eval(A, t), mta_eval(B, t)};
    }
    return v;
}

namespace {

Term random_term(std::mt19937_64& rng, const MTA& A, int budget) {
    std::vector<size_t> feasible;
    for (size_t si = 0; si < A.symbols.size(); ++si)
        if (1 + A.symbols[si].arity <= budget) feasible.push_back(si);
    // a nullary symbol exists by precondition, so budget >= 1 never strands us
    size_t si = feasible[std::uniform_int_distribution<size_t>(0, feasible.size() - 1)(rng)];
    int m = A.symbols[si].arity;
    Term t{A.symbols[si].name, {}};
    int remaining = budget - 1;
    for (int i = 0; i < m; ++i) {
        int reserve = m - 1 - i;  // each later child still needs budget >= 1
        int bi = std::uniform_int_distribution<int>(1, remaining - reserve)(rng);
        t.children.push_back(random_term(rng, A, bi));
        remaining -= term_size(t.children.back());
    }
    return t;
}

}  // namespace

EquivVerdict mta_equiv_randomised(const MTA& A, const MTA& B, uint64_t seed, int trials) {
    A.validate();
    B.validate();
    if (mta_signature(A) != mta_signature(B))
        throw std::invalid_argument("mta_equiv_randomised: signature mismatch");
    EquivVerdict v;
    v.method = "random";
    bool has_nullary = false;
    for (const MTASymbol& s : A.symbols)
        if (s.arity == 0) has_nullary = true;
    if (!has_nullary) return v;  // no terms at all, both functions are empty
    int cap = (int)std::max<size_t>(A.states + B.states, 1);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        Term t = random_term(rng, A, cap);
        Rational va = mta_eval(A, t), vb = mta_eval(B, t);
        v.trials = i + 1;
        if (va != vb) {
            v.equivalent = false;
            v.witness = term_str(t);
            v.values = {va, vb};
            return v;
        }
    }
    v.trials = trials;
    return v;
}

}  // namespace homind
