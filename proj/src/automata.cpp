#include "homind/automata.hpp"

#include <set>
#include <stdexcept>

namespace homind {

namespace {

size_t checked_pow(size_t base, int exp) {
    size_t p = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && p > ((size_t)1 << 40) / base)
            throw std::invalid_argument("automaton: state space too large");
        p *= base;
    }
    return p;
}

}  // namespace

void MWA::validate() const {
    std::set<std::string> names(alphabet.begin(), alphabet.end());
    if (names.size() != alphabet.size())
        throw std::invalid_argument("mwa: duplicate letter in alphabet");
    if (alpha.rows != 1 || alpha.cols != states)
        throw std::invalid_argument("mwa: alpha must be 1 x states");
    if (eta.rows != states || eta.cols != 1)
        throw std::invalid_argument("mwa: eta must be states x 1");
    if (trans.size() != alphabet.size())
        throw std::invalid_argument("mwa: one transition matrix per letter required");
    for (const auto& M : trans)
        if (M.rows != states || M.cols != states)
            throw std::invalid_argument("mwa: transition matrix shape mismatch");
}

size_t MWA::letter(const std::string& name) const {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return i;
    throw std::invalid_argument("mwa: unknown letter " + name);
}

Rational mwa_eval(const MWA& A, const std::vector<std::string>& word) {
    QMatrix v = A.alpha;
    for (const auto& w : word) v = mat_mul(v, A.trans[A.letter(w)]);
    return mat_mul(v, A.eta).at(0, 0);
}

MWA mwa_zero(const std::vector<std::string>& alphabet) {
    MWA z;
    z.alphabet = alphabet;
    z.states = 0;
    z.alpha = QMatrix(1, 0);
    z.eta = QMatrix(0, 1);
    z.trans.assign(alphabet.size(), QMatrix(0, 0));
    return z;
}

static void require_same_alphabet(const MWA& A, const MWA& B) {
    if (A.alphabet != B.alphabet) throw std::invalid_argument("mwa: alphabet mismatch");
}

MWA mwa_sum(const MWA& A, const MWA& B) {
    require_same_alphabet(A, B);
    MWA s;
    s.alphabet = A.alphabet;
    s.states = A.states + B.states;
    s.alpha = QMatrix(1, s.states);
    for (size_t i = 0; i < A.states; ++i) s.alpha.at(0, i) = A.alpha.at(0, i);
    for (size_t i = 0; i < B.states; ++i) s.alpha.at(0, A.states + i) = B.alpha.at(0, i);
    s.eta = QMatrix(s.states, 1);
    for (size_t i = 0; i < A.states; ++i) s.eta.at(i, 0) = A.eta.at(i, 0);
    for (size_t i = 0; i < B.states; ++i) s.eta.at(A.states + i, 0) = B.eta.at(i, 0);
    for (size_t l = 0; l < A.trans.size(); ++l)
        s.trans.push_back(direct_sum(A.trans[l], B.trans[l]));
    return s;
}

MWA mwa_difference(const MWA& A, const MWA& B) {
    MWA negb = B;
    negb.eta = mat_scale(Rational(-1), B.eta);
    return mwa_sum(A, negb);
}

MWA mwa_product(const MWA& A, const MWA& B) {
    require_same_alphabet(A, B);
    MWA p;
    p.alphabet = A.alphabet;
    p.states = A.states * B.states;
    p.alpha = kron(A.alpha, B.alpha);
    p.eta = kron(A.eta, B.eta);
    for (size_t l = 0; l < A.trans.size(); ++l) p.trans.push_back(kron(A.trans[l], B.trans[l]));
    return p;
}

// --- tree automata ---------------------------------------------------------------

void MTA::validate() const {
    std::set<std::string> names;
    for (const auto& s : symbols) {
        if (!names.insert(s.name).second)
            throw std::invalid_argument("mta: duplicate symbol " + s.name);
        if (s.arity < 0 || s.arity > 8) throw std::invalid_argument("mta: bad arity");
        if (s.mu.rows != checked_pow(states, s.arity) || s.mu.cols != states)
            throw std::invalid_argument("mta: weight matrix shape mismatch for " + s.name);
    }
    if (eta.rows != states || eta.cols != 1)
        throw std::invalid_argument("mta: eta must be states x 1");
}

size_t MTA::symbol(const std::string& name) const {
    for (size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return i;
    throw std::invalid_argument("mta: unknown symbol " + name);
}

QMatrix mta_weight_vector(const MTA& A, const Term& t) {
    const MTASymbol& s = A.symbols[A.symbol(t.symbol)];
    if ((size_t)s.arity != t.children.size())
        throw std::invalid_argument("mta: arity mismatch at symbol " + t.symbol);
    QMatrix row = QMatrix::identity(1);
    for (const auto& c : t.children) row = kron(row, mta_weight_vector(A, c));
    return mat_mul(row, s.mu);
}

Rational mta_eval(const MTA& A, const Term& t) {
    return mat_mul(mta_weight_vector(A, t), A.eta).at(0, 0);
}

std::vector<std::pair<std::string, int>> mta_signature(const MTA& A) {
    std::vector<std::pair<std::string, int>> sig;
    for (const auto& s : A.symbols) sig.push_back({s.name, s.arity});
    return sig;
}

MTA mta_zero(const std::vector<std::pair<std::string, int>>& signature) {
    MTA z;
    z.states = 0;
    z.eta = QMatrix(0, 1);
    for (auto& [name, arity] : signature)
        z.symbols.push_back({name, arity, QMatrix(arity == 0 ? 1 : 0, 0)});
    return z;
}

static void require_same_signature(const MTA& A, const MTA& B) {
    if (mta_signature(A) != mta_signature(B))
        throw std::invalid_argument("mta: signature mismatch");
}

MTA mta_sum(const MTA& A, const MTA& B) {
    require_same_signature(A, B);
    MTA s;
    s.states = A.states + B.states;
    s.eta = QMatrix(s.states, 1);
    for (size_t i = 0; i < A.states; ++i) s.eta.at(i, 0) = A.eta.at(i, 0);
    for (size_t i = 0; i < B.states; ++i) s.eta.at(A.states + i, 0) = B.eta.at(i, 0);
    for (size_t si = 0; si < A.symbols.size(); ++si) {
        const auto& sa = A.symbols[si];
        const auto& sb = B.symbols[si];
        int n = sa.arity;
        QMatrix mu(checked_pow(s.states, n), s.states);
        std::vector<size_t> tup(n);
        for (size_t r = 0; r < mu.rows; ++r) {
            size_t rem = r;
            bool all_a = true, all_b = true;
            for (int i = n - 1; i >= 0; --i) {
                tup[i] = rem % (s.states == 0 ? 1 : s.states);
                rem /= (s.states == 0 ? 1 : s.states);
                if (tup[i] < A.states) all_b = false;
                else all_a = false;
            }
            // the empty tuple of a nullary symbol is "all A" and "all B" at
            // once and must feed both blocks; mixed tuples stay zero
            if (all_a) {
                size_t ra = 0;
                for (int i = 0; i < n; ++i) ra = ra * A.states + tup[i];
                for (size_t c = 0; c < A.states; ++c) mu.at(r, c) = sa.mu.at(ra, c);
            }
            if (all_b) {
                size_t rb = 0;
                for (int i = 0; i < n; ++i) rb = rb * B.states + (tup[i] - A.states);
                for (size_t c = 0; c < B.states; ++c) mu.at(r, A.states + c) = sb.mu.at(rb, c);
            }
        }
        s.symbols.push_back({sa.name, n, std::move(mu)});
    }
    return s;
}

MTA mta_difference(const MTA& A, const MTA& B) {
    MTA negb = B;
    negb.eta = mat_scale(Rational(-1), B.eta);
    return mta_sum(A, negb);
}

MTA mta_product(const MTA& A, const MTA& B) {
    require_same_signature(A, B);
    MTA p;
    p.states = A.states * B.states;
    p.eta = kron(A.eta, B.eta);
    for (size_t si = 0; si < A.symbols.size(); ++si) {
        const auto& sa = A.symbols[si];
        const auto& sb = B.symbols[si];
        int n = sa.arity;
        QMatrix mu(checked_pow(p.states, n), p.states);
        std::vector<size_t> ta(n), tb(n);
        for (size_t r = 0; r < mu.rows; ++r) {
            size_t rem = r;
            for (int i = n - 1; i >= 0; --i) {
                size_t pi = rem % (p.states == 0 ? 1 : p.states);
                rem /= (p.states == 0 ? 1 : p.states);
                ta[i] = pi / (B.states == 0 ? 1 : B.states);
                tb[i] = pi % (B.states == 0 ? 1 : B.states);
            }
            size_t ra = 0, rb = 0;
            for (int i = 0; i < n; ++i) {
                ra = ra * A.states + ta[i];
                rb = rb * B.states + tb[i];
            }
            for (size_t ca = 0; ca < A.states; ++ca) {
                const Rational& va = sa.mu.at(ra, ca);
                if (va == 0) continue;
                for (size_t cb = 0; cb < B.states; ++cb)
                    mu.at(r, ca * B.states + cb) = va * sb.mu.at(rb, cb);
            }
        }
        p.symbols.push_back({sa.name, n, std::move(mu)});
    }
    return p;
}

}  // namespace homind
