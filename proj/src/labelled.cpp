#include "homind/labelled.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homind {

void LabelledGraph::validate() const {
    g.validate();
    for (int v : labels)
        if (v < 0 || v >= g.n) throw std::invalid_argument("labelled graph: label off graph");
}

void BilabelledGraph::validate() const {
    g.validate();
    if (in_labels.size() != out_labels.size())
        throw std::invalid_argument("bilabelled graph: label arity mismatch");
    for (int v : in_labels)
        if (v < 0 || v >= g.n) throw std::invalid_argument("bilabelled graph: label off graph");
    for (int v : out_labels)
        if (v < 0 || v >= g.n) throw std::invalid_argument("bilabelled graph: label off graph");
}

static void check_width(int k) {
    if (k < 1 || k > 9) throw std::invalid_argument("label width must be between 1 and 9");
}

LabelledGraph ones(int k, bool directed) {
    check_width(k);
    LabelledGraph x;
    x.g = Graph(k, directed);
    x.labels.resize(k);
    std::iota(x.labels.begin(), x.labels.end(), 0);
    return x;
}

static BilabelledGraph edge_letter(int i, int j, int k, bool directed) {
    BilabelledGraph b;
    b.g = Graph(k, directed);
    b.g.add_edge(i - 1, j - 1);
    b.in_labels.resize(k);
    std::iota(b.in_labels.begin(), b.in_labels.end(), 0);
    b.out_labels = b.in_labels;
    return b;
}

static BilabelledGraph fresh_letter(int i, int k, bool directed) {
    BilabelledGraph b;
    b.g = Graph(k + 1, directed);
    b.out_labels.resize(k);
    std::iota(b.out_labels.begin(), b.out_labels.end(), 0);
    b.in_labels = b.out_labels;
    b.in_labels[i - 1] = k;  // the fresh vertex takes over label i
    return b;
}

std::vector<GenLetter> generators(int k, bool directed) {
    check_width(k);
    std::vector<GenLetter> out;
    for (int i = 1; i <= k; ++i)
        for (int j = directed ? 1 : i + 1; j <= k; ++j) {
            if (i == j) continue;
            out.push_back({"A" + std::to_string(i) + std::to_string(j),
                           edge_letter(i, j, k, directed)});
        }
    for (int i = 1; i <= k; ++i)
        out.push_back({"J" + std::to_string(i), fresh_letter(i, k, directed)});
    return out;
}

BilabelledGraph generator_op(const std::string& name, int k, bool directed) {
    check_width(k);
    auto digit = [&](char c) {
        int d = c - '0';
        if (d < 1 || d > k) throw std::invalid_argument("unknown generator letter: " + name);
        return d;
    };
    if (name.size() == 3 && name[0] == 'A') {
        int i = digit(name[1]), j = digit(name[2]);
        if (i == j || (!directed && i > j))
            throw std::invalid_argument("unknown generator letter: " + name);
        return edge_letter(i, j, k, directed);
    }
    if (name.size() == 2 && name[0] == 'J') return fresh_letter(digit(name[1]), k, directed);
    throw std::invalid_argument("unknown generator letter: " + name);
}

// Disjoint union of a and b with the given vertex pairs (a-vertex, b-vertex)
// identified. Outputs the mapping of old vertices to new ones.
static Graph quotient(const Graph& a, const Graph& b,
                      const std::vector<std::pair<int, int>>& merges,
                      std::vector<int>& where_a, std::vector<int>& where_b) {
    int total = a.n + b.n;
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (auto [x, y] : merges) parent[find(a.n + y)] = find(x);
    std::vector<int> id(total, -1);
    int next = 0;
    for (int v = 0; v < total; ++v) {
        int r = find(v);
        if (id[r] < 0) id[r] = next++;
    }
    Graph g(next, a.directed);
    auto map_edge = [&](int off, std::pair<int, int> e) {
        int u = id[find(off + e.first)], v = id[find(off + e.second)];
        if (!g.directed && u == v)
            throw std::invalid_argument("composition collapsed an edge to a loop");
        g.add_edge(u, v);
    };
    for (auto e : a.edges) map_edge(0, e);
    for (auto e : b.edges) map_edge(a.n, e);
    where_a.resize(a.n);
    where_b.resize(b.n);
    for (int v = 0; v < a.n; ++v) where_a[v] = id[find(v)];
    for (int v = 0; v < b.n; ++v) where_b[v] = id[find(a.n + v)];
    return g;
}

LabelledGraph series(const BilabelledGraph& K, const LabelledGraph& X) {
    if (K.width() != X.width()) throw std::invalid_argument("series: width mismatch");
    if (K.g.directed != X.g.directed) throw std::invalid_argument("series: mode mismatch");
    std::vector<std::pair<int, int>> merges;
    for (int i = 0; i < K.width(); ++i) merges.push_back({K.out_labels[i], X.labels[i]});
    std::vector<int> wa, wb;
    LabelledGraph r;
    r.g = quotient(K.g, X.g, merges, wa, wb);
    r.labels.resize(K.width());
    for (int i = 0; i < K.width(); ++i) r.labels[i] = wa[K.in_labels[i]];
    return r;
}

LabelledGraph glue(const LabelledGraph& X, const LabelledGraph& Y) {
    if (X.width() != Y.width()) throw std::invalid_argument("glue: width mismatch");
    if (X.g.directed != Y.g.directed) throw std::invalid_argument("glue: mode mismatch");
    std::vector<std::pair<int, int>> merges;
    for (int i = 0; i < X.width(); ++i) merges.push_back({X.labels[i], Y.labels[i]});
    std::vector<int> wa, wb;
    LabelledGraph r;
    r.g = quotient(X.g, Y.g, merges, wa, wb);
    r.labels.resize(X.width());
    for (int i = 0; i < X.width(); ++i) r.labels[i] = wa[X.labels[i]];
    return r;
}

LabelledGraph pw_decode(const std::vector<std::string>& word, int k, bool directed) {
    LabelledGraph x = ones(k, directed);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        x = series(generator_op(*it, k, directed), x);
    return x;
}

// --- terms -------------------------------------------------------------------

namespace {

struct TermParser {
    const std::string& s;
    size_t pos = 0;

    explicit TermParser(const std::string& s_) : s(s_) {}

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }

    Term parse() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("term parse: symbol expected at " +
                                                      std::to_string(start));
        Term t;
        t.symbol = s.substr(start, pos - start);
        skip_ws();
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            while (true) {
                t.children.push_back(parse());
                skip_ws();
                if (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            if (pos >= s.size() || s[pos] != ')')
                throw std::invalid_argument("term parse: ')' expected");
            ++pos;
        }
        return t;
    }
};

}  // namespace

Term term_parse(const std::string& s) {
    TermParser p(s);
    Term t = p.parse();
    p.skip_ws();
    if (p.pos != s.size()) throw std::invalid_argument("term parse: trailing input");
    return t;
}

std::string term_str(const Term& t) {
    std::string out = t.symbol;
    if (!t.children.empty()) {
        out += "(";
        for (size_t i = 0; i < t.children.size(); ++i) {
            if (i) out += ",";
            out += term_str(t.children[i]);
        }
        out += ")";
    }
    return out;
}

LabelledGraph tw_decode(const Term& t, int k, bool directed) {
    if (t.symbol == "1") {
        if (!t.children.empty()) throw std::invalid_argument("tw_decode: unit takes no arguments");
        return ones(k, directed);
    }
    if (t.symbol == "glue") {
        if (t.children.size() != 2) throw std::invalid_argument("tw_decode: glue is binary");
        return glue(tw_decode(t.children[0], k, directed), tw_decode(t.children[1], k, directed));
    }
    if (t.children.size() != 1)
        throw std::invalid_argument("tw_decode: letter " + t.symbol + " is unary");
    return series(generator_op(t.symbol, k, directed), tw_decode(t.children[0], k, directed));
}

// --- homomorphism tensors -------------------------------------------------------

size_t tuple_index(const std::vector<int>& xs, int n) {
    size_t idx = 0;
    for (int x : xs) idx = idx * n + (size_t)x;
    return idx;
}

std::vector<int> index_tuple(size_t idx, int k, int n) {
    std::vector<int> xs(k);
    for (int i = k - 1; i >= 0; --i) {
        xs[i] = (int)(idx % n);
        idx /= n;
    }
    return xs;
}

static size_t checked_power(int n, int k) {
    size_t p = 1;
    for (int i = 0; i < k; ++i) {
        if (n > 0 && p > (size_t)4e6 / n)
            throw std::invalid_argument("hom tensor: state space too large");
        p *= (size_t)n;
    }
    return p;
}

std::vector<Rational> hom_vector(const LabelledGraph& X, const Graph& G) {
    int k = X.width();
    size_t total = checked_power(G.n, k);
    std::vector<Rational> v(total);
    std::vector<std::pair<int, int>> pins(k);
    for (size_t idx = 0; idx < total; ++idx) {
        auto xs = index_tuple(idx, k, G.n);
        for (int i = 0; i < k; ++i) pins[i] = {X.labels[i], xs[i]};
        v[idx] = Rational(hom_count_pinned(X.g, G, pins));
    }
    return v;
}

QMatrix hom_matrix(const BilabelledGraph& K, const Graph& G) {
    int k = K.width();
    size_t total = checked_power(G.n, k);
    if (total > 2000) throw std::invalid_argument("hom tensor: state space too large");
    QMatrix M(total, total);
    std::vector<std::pair<int, int>> pins(2 * k);
    for (size_t r = 0; r < total; ++r) {
        auto xs = index_tuple(r, k, G.n);
        for (int i = 0; i < k; ++i) pins[i] = {K.in_labels[i], xs[i]};
        for (size_t c = 0; c < total; ++c) {
            auto ys = index_tuple(c, k, G.n);
            for (int i = 0; i < k; ++i) pins[k + i] = {K.out_labels[i], ys[i]};
            M.at(r, c) = Rational(hom_count_pinned(K.g, G, pins));
        }
    }
    return M;
}

}  // namespace homind
