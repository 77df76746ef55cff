#include "homind/decide.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "homind/equivalence.hpp"
#include "homind/labelled.hpp"

namespace homind {

namespace {

size_t checked_power(int n, int k) {
    size_t p = 1;
    for (int i = 0; i < k; ++i) {
        p *= (size_t)n;
        if (p > 200000) throw std::invalid_argument("graph automaton: n^k too large");
    }
    return p;
}

QMatrix ones_row(size_t d) {
    QMatrix v(1, d);
    for (size_t j = 0; j < d; ++j) v.at(0, j) = 1;
    return v;
}

Rational row_sum(const QMatrix& v) {
    Rational s = 0;
    for (size_t j = 0; j < v.cols; ++j) s += v.at(0, j);
    return s;
}

}  // namespace

MWA build_graph_mwa(const Graph& G, int k) {
    G.validate();
    if (G.n < 1) throw std::invalid_argument("build_graph_mwa: host must have a vertex");
    size_t d = checked_power(G.n, k);
    MWA m;
    m.states = d;
    m.alpha = ones_row(d);
    m.eta = QMatrix(d, 1);
    for (size_t i = 0; i < d; ++i) m.eta.at(i, 0) = 1;
    for (const auto& g : generators(k, G.directed)) {
        m.alphabet.push_back(g.name);
        m.trans.push_back(hom_matrix(g.op, G));
    }
    m.validate();
    return m;
}

MTA build_graph_mta(const Graph& G, int k) {
    G.validate();
    if (G.n < 1) throw std::invalid_argument("build_graph_mta: host must have a vertex");
    size_t d = checked_power(G.n, k);
    MTA m;
    m.states = d;
    m.symbols.push_back({"1", 0, ones_row(d)});
    QMatrix gl(d * d, d);
    for (size_t i = 0; i < d; ++i) gl.at(i * d + i, i) = 1;
    m.symbols.push_back({"glue", 2, std::move(gl)});
    for (const auto& g : generators(k, G.directed))
        m.symbols.push_back({g.name, 1, mat_transpose(hom_matrix(g.op, G))});
    m.eta = QMatrix(d, 1);
    for (size_t i = 0; i < d; ++i) m.eta.at(i, 0) = 1;
    m.validate();
    return m;
}

MWA build_class_mwa(const ClassAutomaton& cls) {
    cls.validate();
    if (cls.kind != ClassAutomaton::Kind::Word)
        throw std::invalid_argument("build_class_mwa: needs a word-kind class");
    size_t d = cls.states.size();
    std::map<std::string, size_t> idx;
    for (size_t i = 0; i < d; ++i) idx[cls.states[i]] = i;
    MWA m;
    m.states = d;
    m.alpha = QMatrix(1, d);
    m.alpha.at(0, idx.at(cls.initial)) = 1;
    m.eta = QMatrix(d, 1);
    for (const auto& s : cls.accepting) m.eta.at(idx.at(s), 0) = 1;
    for (const auto& g : generators(cls.k, cls.directed)) {
        m.alphabet.push_back(g.name);
        QMatrix t(d, d);
        for (size_t i = 0; i < d; ++i) t.at(i, idx.at(cls.next(cls.states[i], g.name))) = 1;
        m.trans.push_back(std::move(t));
    }
    m.validate();
    return m;
}

MTA build_class_mta(const ClassAutomaton& cls) {
    cls.validate();
    if (cls.kind != ClassAutomaton::Kind::Tree)
        throw std::invalid_argument("build_class_mta: needs a tree-kind class");
    size_t d = cls.states.size();
    std::map<std::string, size_t> idx;
    for (size_t i = 0; i < d; ++i) idx[cls.states[i]] = i;
    MTA m;
    m.states = d;
    QMatrix unit(1, d);
    unit.at(0, idx.at(cls.initial)) = 1;
    m.symbols.push_back({"1", 0, std::move(unit)});
    QMatrix gl(d * d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            gl.at(i * d + j, idx.at(cls.glue_next(cls.states[i], cls.states[j]))) = 1;
    m.symbols.push_back({"glue", 2, std::move(gl)});
    for (const auto& g : generators(cls.k, cls.directed)) {
        QMatrix t(d, d);
        for (size_t i = 0; i < d; ++i) t.at(i, idx.at(cls.next(cls.states[i], g.name))) = 1;
        m.symbols.push_back({g.name, 1, std::move(t)});
    }
    m.eta = QMatrix(d, 1);
    for (const auto& s : cls.accepting) m.eta.at(idx.at(s), 0) = 1;
    m.validate();
    return m;
}

namespace {

// class states from which some accepting state is reachable
std::set<std::string> acceptance_reachable(const ClassAutomaton& cls) {
    std::set<std::string> good = cls.accepting;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& s : cls.states) {
            if (good.count(s)) continue;
            bool ok = false;
            for (const auto& [l, t] : cls.step.at(s))
                if (good.count(t)) {
                    ok = true;
                    break;
                }
            if (!ok && cls.kind == ClassAutomaton::Kind::Tree)
                for (const auto& s2 : cls.states)
                    if (good.count(cls.glue_next(s, s2))) {
                        ok = true;
                        break;
                    }
            if (ok) {
                good.insert(s);
                grew = true;
            }
        }
    }
    return good;
}

std::vector<Rational> concat_rows(const QMatrix& a, const QMatrix& b) {
    std::vector<Rational> v;
    v.reserve(a.cols + b.cols);
    for (size_t j = 0; j < a.cols; ++j) v.push_back(a.at(0, j));
    for (size_t j = 0; j < b.cols; ++j) v.push_back(b.at(0, j));
    return v;
}

HomIndVerdict checked_witness(const Graph& W, const Graph& G, const Graph& H, const Rational& sg,
                              const Rational& sh, const std::string& source) {
    Rational cg = Rational(hom_count(W, G));
    Rational ch = Rational(hom_count(W, H));
    if (cg != sg || ch != sh)
        throw std::logic_error("decide_homind: witness counts disagree with the automaton (" +
                               source + ": " + rat_str(cg) + " vs " + rat_str(sg) + ", " +
                               rat_str(ch) + " vs " + rat_str(sh) + ")");
    HomIndVerdict v;
    v.indistinguishable = false;
    v.witness = W;
    v.hom_g = sg;
    v.hom_h = sh;
    v.witness_source = source;
    return v;
}

// Closes the reachable pairs (class state, joint host vector) of the product
// automata breadth-first, keeping one echelon basis per class state. A word
// distinguishes the hosts iff some reachable vector at an accepting state has
// different block sums, and it is enough to test the basis vectors.
std::optional<HomIndVerdict> word_product_closure(const ClassAutomaton& cls, const Graph& G,
                                                  const Graph& H) {
    const auto gens = generators(cls.k, cls.directed);
    std::vector<QMatrix> mg, mh;
    for (const auto& g : gens) {
        mg.push_back(hom_matrix(g.op, G));
        mh.push_back(hom_matrix(g.op, H));
    }
    const auto live = acceptance_reachable(cls);
    if (!live.count(cls.initial)) return std::nullopt;

    struct Node {
        std::string state;
        std::vector<std::string> word;  // letters in application order, innermost first
        QMatrix vg, vh;
    };
    std::map<std::string, Echelon> span;
    std::deque<Node> todo;

    auto consider = [&](Node nd) -> std::optional<HomIndVerdict> {
        if (!span[nd.state].insert(concat_rows(nd.vg, nd.vh))) return std::nullopt;
        if (cls.is_accepting(nd.state)) {
            Rational sg = row_sum(nd.vg), sh = row_sum(nd.vh);
            if (sg != sh) {
                std::vector<std::string> decode_order(nd.word.rbegin(), nd.word.rend());
                if (!accepts_word(cls, nd.word))
                    throw std::logic_error("decide_homind: witness word not accepted");
                Graph W = pw_decode(decode_order, cls.k, cls.directed).g;
                return checked_witness(W, G, H, sg, sh, "word " + word_str(decode_order));
            }
        }
        todo.push_back(std::move(nd));
        return std::nullopt;
    };

    if (auto v = consider({cls.initial, {}, ones_row(mg.empty() ? checked_power(G.n, cls.k)
                                                                : (size_t)mg[0].rows),
                           ones_row(mh.empty() ? checked_power(H.n, cls.k) : (size_t)mh[0].rows)}))
        return v;
    while (!todo.empty()) {
        Node cur = std::move(todo.front());
        todo.pop_front();
        for (size_t i = 0; i < gens.size(); ++i) {
            const std::string& nxt = cls.next(cur.state, gens[i].name);
            if (!live.count(nxt)) continue;
            Node nd{nxt, cur.word, mat_mul(cur.vg, mg[i]), mat_mul(cur.vh, mh[i])};
            nd.word.push_back(gens[i].name);
            if (auto v = consider(std::move(nd))) return v;
        }
    }
    return std::nullopt;
}

std::optional<HomIndVerdict> tree_product_closure(const ClassAutomaton& cls, const Graph& G,
                                                  const Graph& H) {
    const auto gens = generators(cls.k, cls.directed);
    std::vector<QMatrix> mg, mh;
    for (const auto& g : gens) {
        mg.push_back(mat_transpose(hom_matrix(g.op, G)));
        mh.push_back(mat_transpose(hom_matrix(g.op, H)));
    }
    const auto live = acceptance_reachable(cls);
    if (!live.count(cls.initial)) return std::nullopt;

    struct Entry {
        std::string state;
        Term term;
        QMatrix vg, vh;
        size_t size;
    };
    struct Cand {
        size_t size;
        uint64_t seq;
        Entry e;
        bool operator<(const Cand& o) const {
            return size != o.size ? size > o.size : seq > o.seq;  // min-heap
        }
    };
    std::map<std::string, Echelon> span;
    std::vector<Entry> basis;
    std::priority_queue<Cand> todo;
    uint64_t seq = 0;

    size_t dg = checked_power(G.n, cls.k), dh = checked_power(H.n, cls.k);
    todo.push({1, seq++, {cls.initial, Term{"1", {}}, ones_row(dg), ones_row(dh), 1}});

    while (!todo.empty()) {
        Entry e = todo.top().e;
        todo.pop();
        if (!live.count(e.state)) continue;
        if (!span[e.state].insert(concat_rows(e.vg, e.vh))) continue;
        if (cls.is_accepting(e.state)) {
            Rational sg = row_sum(e.vg), sh = row_sum(e.vh);
            if (sg != sh) {
                if (!accepts_term(cls, e.term))
                    throw std::logic_error("decide_homind: witness term not accepted");
                Graph W = tw_decode(e.term, cls.k, cls.directed).g;
                return checked_witness(W, G, H, sg, sh, "term " + term_str(e.term));
            }
        }
        basis.push_back(e);
        const Entry& fresh = basis.back();
        for (size_t i = 0; i < gens.size(); ++i) {
            Entry nx{cls.next(fresh.state, gens[i].name),
                     Term{gens[i].name, {fresh.term}},
                     mat_mul(fresh.vg, mg[i]),
                     mat_mul(fresh.vh, mh[i]),
                     fresh.size + 1};
            todo.push({nx.size, seq++, std::move(nx)});
        }
        for (const auto& other : basis) {
            QMatrix pg(1, dg), ph(1, dh);
            for (size_t j = 0; j < dg; ++j) pg.at(0, j) = fresh.vg.at(0, j) * other.vg.at(0, j);
            for (size_t j = 0; j < dh; ++j) ph.at(0, j) = fresh.vh.at(0, j) * other.vh.at(0, j);
            Entry nx{cls.glue_next(fresh.state, other.state),
                     Term{"glue", {fresh.term, other.term}},
                     std::move(pg),
                     std::move(ph),
                     fresh.size + other.size};
            todo.push({nx.size, seq++, std::move(nx)});
        }
    }
    return std::nullopt;
}

}  // namespace

HomIndVerdict decide_homind(const ClassAutomaton& cls, const Graph& G, const Graph& H) {
    cls.validate();
    G.validate();
    H.validate();
    if (G.directed != cls.directed || H.directed != cls.directed)
        throw std::invalid_argument("decide_homind: host direction must match the class");
    if (!G.colours.empty() || !H.colours.empty())
        throw std::invalid_argument("decide_homind: hosts must be uncoloured");
    if (G.n < 1 || H.n < 1)
        throw std::invalid_argument("decide_homind: hosts need at least one vertex");

    for (size_t i = 0; i < cls.small_members.size(); ++i) {
        const Graph& F = cls.small_members[i];
        Rational cg = Rational(hom_count(F, G));
        Rational ch = Rational(hom_count(F, H));
        if (cg != ch) {
            HomIndVerdict v;
            v.indistinguishable = false;
            v.witness = F;
            v.hom_g = cg;
            v.hom_h = ch;
            v.witness_source = "small-member " + std::to_string(i);
            return v;
        }
    }

    auto hit = cls.kind == ClassAutomaton::Kind::Word ? word_product_closure(cls, G, H)
                                                      : tree_product_closure(cls, G, H);
    if (hit) return *hit;
    return HomIndVerdict{};
}

namespace {

QMatrix padded_adjacency(const Graph& g, int n) {
    QMatrix a(n, n);
    QMatrix raw = adjacency_matrix(g);
    for (size_t i = 0; i < raw.rows; ++i)
        for (size_t j = 0; j < raw.cols; ++j) a.at(i, j) = raw.at(i, j);
    return a;
}

void require_plain(const Graph& G, const Graph& H, bool directed, const char* who) {
    G.validate();
    H.validate();
    if (G.directed != directed || H.directed != directed)
        throw std::invalid_argument(std::string(who) + ": wrong edge direction mode");
    if (!G.colours.empty() || !H.colours.empty())
        throw std::invalid_argument(std::string(who) + ": hosts must be uncoloured");
    if (G.n < 1 || H.n < 1)
        throw std::invalid_argument(std::string(who) + ": hosts need at least one vertex");
}

HomIndVerdict indist() { return HomIndVerdict{}; }

HomIndVerdict from_counts(Graph W, const Rational& a, const Rational& b, std::string source) {
    HomIndVerdict v;
    v.indistinguishable = false;
    v.witness = std::move(W);
    v.hom_g = a;
    v.hom_h = b;
    v.witness_source = std::move(source);
    return v;
}

}  // namespace

HomIndVerdict decide_directed_cycles_fast(const Graph& G, const Graph& H) {
    require_plain(G, H, true, "decide_directed_cycles_fast");
    if (G.n != H.n)
        return from_counts(Graph(1, true), G.n, H.n, "vertex-count");
    int n = G.n;
    QMatrix A = padded_adjacency(G, n), B = padded_adjacency(H, n);
    if (newton_charpoly_equal(A, B)) return indist();
    auto ta = power_traces(A, n), tb = power_traces(B, n);
    for (int m = 1; m <= n; ++m)
        if (ta[m - 1] != tb[m - 1])
            return from_counts(make_cycle(m, true), ta[m - 1], tb[m - 1],
                               "directed cycle length " + std::to_string(m));
    throw std::logic_error("decide_directed_cycles_fast: traces all equal yet polynomials differ");
}

HomIndVerdict decide_cycles_fast(const Graph& G, const Graph& H) {
    require_plain(G, H, false, "decide_cycles_fast");
    int n = std::max(G.n, H.n);
    QMatrix A = padded_adjacency(G, n), B = padded_adjacency(H, n);
    if (newton_charpoly_equal(A, B)) return indist();
    int bound = G.n + H.n + 2;
    auto ta = power_traces(A, bound), tb = power_traces(B, bound);
    for (int m = 3; m <= bound; ++m)
        if (ta[m - 1] != tb[m - 1])
            return from_counts(make_cycle(m), ta[m - 1], tb[m - 1],
                               "cycle length " + std::to_string(m));
    // distinct nonzero spectra must differ in some trace of order 3..|G|+|H|+2
    throw std::logic_error("decide_cycles_fast: no witness in the trace window");
}

HomIndVerdict decide_cyclespaths_fast(const Graph& G, const Graph& H) {
    require_plain(G, H, false, "decide_cyclespaths_fast");
    int n = std::max(G.n, H.n);
    QMatrix A = padded_adjacency(G, n), B = padded_adjacency(H, n);
    int bound = G.n + H.n + 2;
    std::vector<Rational> wa, wb;  // walks of length j counted from all starts: 1^T A^j 1
    {
        QMatrix ua = ones_row(n), ub = ones_row(n);
        // account for padding: the all-ones row sees the padded rows too, but
        // padded vertices are isolated, so only the vertex counts need fixing
        wa.push_back(Rational(G.n));
        wb.push_back(Rational(H.n));
        for (int j = 1; j <= bound; ++j) {
            ua = mat_mul(ua, A);
            ub = mat_mul(ub, B);
            wa.push_back(row_sum(ua));
            wb.push_back(row_sum(ub));
        }
    }
    if (newton_charpoly_equal(A, B) && wa == wb) return indist();
    auto ta = power_traces(A, bound), tb = power_traces(B, bound);
    for (int s = 1; s <= bound; ++s) {
        if (wa[s - 1] != wb[s - 1])
            return from_counts(make_path(s), wa[s - 1], wb[s - 1],
                               "path on " + std::to_string(s) + " vertices");
        if (s >= 3 && ta[s - 1] != tb[s - 1])
            return from_counts(make_cycle(s), ta[s - 1], tb[s - 1],
                               "cycle length " + std::to_string(s));
    }
    throw std::logic_error("decide_cyclespaths_fast: no witness in the trace window");
}

}  // namespace homind
