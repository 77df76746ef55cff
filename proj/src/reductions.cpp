#include "homind/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace homind {

// --- characteristic-polynomial reductions ------------------------------------

std::pair<QMatrix, QMatrix> posdet_lift(const QMatrix& a, const QMatrix& b) {
    if (a.rows != a.cols || b.rows != b.cols)
        throw std::invalid_argument("posdet_lift: inputs must be square");
    if (a.rows != b.rows) throw std::invalid_argument("posdet_lift: size mismatch");
    if (a.rows == 0) throw std::invalid_argument("posdet_lift: empty matrix");
    if (!mat_is_integral(a) || !mat_is_integral(b))
        throw std::invalid_argument("posdet_lift: integral entries required");

    const size_t n = a.rows;
    QMatrix d(3 * n, 3 * n), e(3 * n, 3 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational ap = a.at(i, j) > 0 ? a.at(i, j) : Rational(0);
            Rational am = a.at(i, j) < 0 ? -a.at(i, j) : Rational(0);
            Rational bp = b.at(i, j) > 0 ? b.at(i, j) : Rational(0);
            Rational bm = b.at(i, j) < 0 ? -b.at(i, j) : Rational(0);
            d.at(i, j) = ap;
            d.at(i, n + j) = am;
            d.at(n + i, j) = am;
            d.at(n + i, n + j) = ap;
            d.at(2 * n + i, 2 * n + j) = bp + bm;
            e.at(i, j) = bp;
            e.at(i, n + j) = bm;
            e.at(n + i, j) = bm;
            e.at(n + i, n + j) = bp;
            e.at(2 * n + i, 2 * n + j) = ap + am;
        }
    return {d, e};
}

std::pair<QMatrix, QMatrix> vcp_to_pair(const QMatrix& a, const std::vector<Rational>& coeffs) {
    if (a.rows != a.cols) throw std::invalid_argument("vcp_to_pair: input must be square");
    if (coeffs.size() != a.rows)
        throw std::invalid_argument("vcp_to_pair: need one coefficient per row");
    std::vector<Rational> c(coeffs);
    c.push_back(Rational(1));
    return posdet_lift(a, companion(QPoly(std::move(c))));
}

// --- weight elimination -------------------------------------------------------

BitGraph weighted_to_simple(const QMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("weighted_to_simple: input must be square");
    if (a.rows == 0) throw std::invalid_argument("weighted_to_simple: empty matrix");
    if (!mat_is_integral(a))
        throw std::invalid_argument("weighted_to_simple: integral entries required");

    const size_t n = a.rows;
    Integer maxw = 0;
    for (const auto& x : a.a) {
        if (x < 0) throw std::invalid_argument("weighted_to_simple: negative entry");
        Integer w = boost::multiprecision::numerator(x);
        if (w > maxw) maxw = w;
    }
    int t = 0;
    while ((Integer(1) << (t + 1)) - 1 < maxw) ++t;
    const int b = std::max(2 * t, 1);

    BitGraph out;
    out.b = b;
    Graph& g = out.g;
    g = Graph((int)n, true);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) {
            Integer w = boost::multiprecision::numerator(a.at(u, v));
            for (int i = 0; (Integer(1) << i) <= w; ++i) {
                if (!bit_test(w, (unsigned)i)) continue;
                // i diamonds then b - 2i single arcs, one walk doubling per
                // diamond, total length exactly b
                int x = (int)u;
                const int singles = b - 2 * i;
                for (int s = 0; s < i; ++s) {
                    int d1 = g.n++, d2 = g.n++;
                    int y = (s == i - 1 && singles == 0) ? (int)v : g.n++;
                    g.add_edge(x, d1);
                    g.add_edge(x, d2);
                    g.add_edge(d1, y);
                    g.add_edge(d2, y);
                    x = y;
                }
                for (int s = 0; s < singles; ++s) {
                    int y = (s == singles - 1) ? (int)v : g.n++;
                    g.add_edge(x, y);
                    x = y;
                }
            }
        }
    return out;
}

// --- pair combinators ---------------------------------------------------------

std::pair<Graph, Graph> and_combine(const Graph& g, const Graph& h, const Graph& g2,
                                    const Graph& h2) {
    for (const Graph* x : {&g, &h, &g2, &h2}) {
        if (x->directed != g.directed)
            throw std::invalid_argument("and_combine: mixed directedness");
        if (x->coloured()) throw std::invalid_argument("and_combine: coloured input");
    }
    Graph first = disjoint_union(disjoint_union(tensor_product(g, g), tensor_product(h, h)),
                                 disjoint_union(tensor_product(g2, g2), tensor_product(h2, h2)));
    Graph gh = tensor_product(g, h);
    Graph gh2 = tensor_product(g2, h2);
    Graph second = disjoint_union(disjoint_union(gh, gh), disjoint_union(gh2, gh2));
    return {first, second};
}

std::pair<Graph, Graph> cyclespaths_to_cycles(const Graph& g, const Graph& h) {
    if (g.directed || h.directed)
        throw std::invalid_argument("cyclespaths_to_cycles: undirected inputs required");
    return and_combine(g, h, complement(g), complement(h));
}

std::pair<Graph, Graph> cycles_to_cyclespaths(const Graph& g, const Graph& h) {
    if (g.directed || h.directed)
        throw std::invalid_argument("cycles_to_cyclespaths: undirected inputs required");
    if (g.coloured() || h.coloured())
        throw std::invalid_argument("cycles_to_cyclespaths: uncoloured inputs required");
    if (g.n != h.n || g.edges.size() != h.edges.size())
        return {make_path(1), disjoint_union(make_path(1), make_path(1))};

    Graph t0 = cfi(make_cycle(3), 0), t1 = cfi(make_cycle(3), 1);
    Graph f0 = cfi(make_cycle(4), 0), f1 = cfi(make_cycle(4), 1);
    Graph mix3a = disjoint_union(tensor_product(g, t0), tensor_product(h, t1));
    Graph mix3b = disjoint_union(tensor_product(h, t0), tensor_product(g, t1));
    Graph mix4a = disjoint_union(tensor_product(g, f0), tensor_product(h, f1));
    Graph mix4b = disjoint_union(tensor_product(h, f0), tensor_product(g, f1));
    return and_combine(mix3a, mix3b, mix4a, mix4b);
}

// --- decolouring --------------------------------------------------------------

namespace {

// 12 vertices, 4-regular, triangle-free, chromatic number 4
Graph chvatal_graph() {
    Graph g(12);
    const int es[24][2] = {{0, 1}, {0, 4}, {0, 6}, {0, 9},  {1, 2},  {1, 5},  {1, 7},  {2, 3},
                           {2, 6}, {2, 8}, {3, 4}, {3, 7},  {3, 9},  {4, 5},  {4, 8},  {5, 10},
                           {5, 11}, {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 10}, {9, 10}, {9, 11}};
    for (auto& e : es) g.add_edge(e[0], e[1]);
    return g;
}

// 7 vertices, 11 edges, unit-distance, chromatic number 4, no K4
Graph moser_spindle() {
    Graph g(7);
    const int es[11][2] = {{0, 1}, {0, 2}, {0, 5}, {0, 6}, {1, 2}, {1, 3},
                           {2, 3}, {3, 4}, {4, 5},  {4, 6}, {5, 6}};
    for (auto& e : es) g.add_edge(e[0], e[1]);
    return g;
}

// pairwise incomparable anchors, smallest first; the triangle-bearing ones
// cannot reach the triangle-free ones and each pair was screened by
// exhaustive search (GadgetFamily::validate rechecks whatever is used)
std::vector<Graph> anchor_pool() {
    std::vector<Graph> pool;
    pool.push_back(moser_spindle());                 // 7 vertices
    pool.push_back(make_circulant(10, {1, 2}));      // 10
    pool.push_back(make_circulant(11, {1, 2}));      // 11
    pool.push_back(make_mycielski(make_cycle(5)));   // 11
    pool.push_back(chvatal_graph());                 // 12
    pool.push_back(make_circulant(13, {1, 5}));      // 13
    return pool;
}

// path of m edges from a to b through m-1 fresh vertices starting at `base`
void wire_path(Graph& g, int a, int b, int base, int m) {
    int prev = a;
    for (int j = 0; j < m - 1; ++j) {
        g.add_edge(prev, base + j);
        prev = base + j;
    }
    g.add_edge(prev, b);
}

// appends blob's vertices (tip first) and edges; returns the tip index
int paste_blob(Graph& g, const Graph& blob) {
    int base = g.n;
    g.n += blob.n;
    for (auto [u, v] : blob.edges) g.add_edge(base + u, base + v);
    return base;
}

}  // namespace

int GadgetFamily::ell() const {
    int m = std::max({p.n, q.n, v.n});
    for (const auto& [c, g] : k) m = std::max(m, g.n);
    return m;
}

void GadgetFamily::validate() const {
    std::vector<std::pair<std::string, const Graph*>> members = {
        {"p", &p}, {"q", &q}, {"v", &v}};
    for (const auto& [c, g] : k) members.push_back({"k[" + c + "]", &g});
    for (const auto& [name, g] : members) {
        if (g->directed)
            throw std::invalid_argument("GadgetFamily: " + name + " must be undirected");
        if (g->coloured())
            throw std::invalid_argument("GadgetFamily: " + name + " must be uncoloured");
        if (g->n < 1) throw std::invalid_argument("GadgetFamily: " + name + " is empty");
        if (!is_connected(*g))
            throw std::invalid_argument("GadgetFamily: " + name + " must be connected");
    }
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            if (hom_exists(*members[i].second, *members[j].second) ||
                hom_exists(*members[j].second, *members[i].second))
                throw std::invalid_argument("GadgetFamily: " + members[i].first + " and " +
                                            members[j].first + " are comparable");
        }
}

GadgetFamily default_gadget_family(const std::vector<std::string>& palette) {
    auto pool = anchor_pool();
    GadgetFamily f;
    f.p = pool[0];
    f.q = pool[1];
    f.v = pool[2];
    for (const auto& c : palette) {
        if (f.k.count(c)) continue;
        if (3 + f.k.size() >= pool.size())
            throw std::invalid_argument(
                "default_gadget_family: palette larger than the built-in anchor list");
        f.k[c] = pool[3 + f.k.size()];
    }
    return f;
}

Decoloured decolour(const Graph& g, const GadgetFamily& fam) {
    if (g.coloured()) {
        for (const auto& c : g.colours)
            if (!fam.k.count(c))
                throw std::invalid_argument("decolour: no anchor for colour " + c);
    } else if (!fam.k.count("")) {
        throw std::invalid_argument("decolour: family lacks the \"\" anchor");
    }

    const int L = fam.ell();
    Decoloured out;
    out.ell = L;
    Graph& r = out.g;
    r = Graph(g.n);

    for (int u = 0; u < g.n; ++u) {
        out.indicator_base.push_back(r.n);
        const Graph& kb = fam.k.at(g.coloured() ? g.colours[u] : "");
        int ib = r.n;
        r.n += 2 * L - 1;
        int ktip = paste_blob(r, kb);
        wire_path(r, u, ktip, ib, 2 * L);
        int vb = r.n;
        r.n += 2 * L - 1;
        int vtip = paste_blob(r, fam.v);
        wire_path(r, u, vtip, vb, 2 * L);
    }

    for (auto [u, w] : g.edges) {
        out.direction_base.push_back(r.n);
        int ab = r.n;
        r.n += 10 * L - 1;
        int p1 = r.n++;
        int mb = r.n;
        r.n += 2 * L - 1;
        int p2 = r.n++;
        int cb = r.n;
        r.n += 10 * L - 1;
        int sb = r.n;
        r.n += 2 * L - 1;
        int ptip = paste_blob(r, fam.p);
        int tb = r.n;
        r.n += 2 * L - 1;
        int qtip = paste_blob(r, fam.q);
        wire_path(r, u, p1, ab, 10 * L);
        wire_path(r, p1, p2, mb, 2 * L);
        wire_path(r, p2, w, cb, 10 * L);
        wire_path(r, p1, ptip, sb, 2 * L);
        wire_path(r, p2, qtip, tb, 2 * L);
    }
    return out;
}

namespace {

// chain of bags B + {x_j, x_{j+1}} along vertices xs; anchors may repeat B
// members, bag entries are deduped
void emit_chain(std::vector<std::vector<int>>& bags, const std::vector<int>& base,
                const std::vector<int>& xs, int carry = -1) {
    for (size_t j = 0; j + 1 < xs.size(); ++j) {
        std::vector<int> bag = base;
        if (carry >= 0) bag.push_back(carry);
        bag.push_back(xs[j]);
        bag.push_back(xs[j + 1]);
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        bags.push_back(std::move(bag));
    }
}

std::vector<int> path_vertices(int from, int base, int m, int to) {
    std::vector<int> xs = {from};
    for (int j = 0; j < m - 1; ++j) xs.push_back(base + j);
    xs.push_back(to);
    return xs;
}

void emit_blob_bag(std::vector<std::vector<int>>& bags, const std::vector<int>& base, int tip,
                   int bn, int carry = -1) {
    std::vector<int> bag = base;
    if (carry >= 0) bag.push_back(carry);
    for (int x = tip; x < tip + bn; ++x) bag.push_back(x);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    bags.push_back(std::move(bag));
}

}  // namespace

std::vector<std::vector<int>> decolour_path_decomposition(const Graph& g,
                                                          const GadgetFamily& fam) {
    Decoloured d = decolour(g, fam);
    const int L = d.ell;
    if (g.n == 0) return {};

    auto kblob_n = [&](int u) {
        return fam.k.at(g.coloured() ? g.colours[u] : "").n;
    };

    std::vector<std::vector<int>> bags;
    if (g.edges.empty()) {
        // one chain per vertex, walked anchor to anchor: width L - 1 exactly
        for (int u = 0; u < g.n; ++u) {
            int ib = d.indicator_base[u];
            int ktip = ib + 2 * L - 1;
            int kn = kblob_n(u);
            int vb = ktip + kn;
            int vtip = vb + 2 * L - 1;
            emit_blob_bag(bags, {}, ktip, kn);
            auto kpath = path_vertices(u, ib, 2 * L, ktip);
            std::reverse(kpath.begin(), kpath.end());
            emit_chain(bags, {}, kpath);
            emit_chain(bags, {}, path_vertices(u, vb, 2 * L, vtip));
            emit_blob_bag(bags, {}, vtip, fam.v.n);
        }
        return bags;
    }

    auto base_pd = optimal_path_decomposition(g);
    std::vector<char> ind_done(g.n, 0), dir_done(g.edges.size(), 0);
    for (const auto& bag : base_pd) {
        bags.push_back(bag);
        std::vector<char> in_bag(g.n, 0);
        for (int x : bag) in_bag[x] = 1;

        for (int u : bag) {
            if (ind_done[u]) continue;
            ind_done[u] = 1;
            int ib = d.indicator_base[u];
            int ktip = ib + 2 * L - 1;
            int kn = kblob_n(u);
            int vb = ktip + kn;
            int vtip = vb + 2 * L - 1;
            emit_chain(bags, bag, path_vertices(u, ib, 2 * L, ktip));
            emit_blob_bag(bags, bag, ktip, kn);
            emit_chain(bags, bag, path_vertices(u, vb, 2 * L, vtip));
            emit_blob_bag(bags, bag, vtip, fam.v.n);
        }
        for (size_t e = 0; e < g.edges.size(); ++e) {
            if (dir_done[e]) continue;
            auto [u, w] = g.edges[e];
            if (!in_bag[u] || !in_bag[w]) continue;
            dir_done[e] = 1;
            int db = d.direction_base[e];
            int ab = db;
            int p1 = ab + 10 * L - 1;
            int mb = p1 + 1;
            int p2 = mb + 2 * L - 1;
            int cb = p2 + 1;
            int sb = cb + 10 * L - 1;
            int ptip = sb + 2 * L - 1;
            int tb = ptip + fam.p.n;
            int qtip = tb + 2 * L - 1;
            // junctions are carried across their side stubs so every vertex
            // keeps a contiguous run of bags
            emit_chain(bags, bag, path_vertices(u, ab, 10 * L, p1));
            emit_chain(bags, bag, path_vertices(p1, sb, 2 * L, ptip), p1);
            emit_blob_bag(bags, bag, ptip, fam.p.n, p1);
            emit_chain(bags, bag, path_vertices(p1, mb, 2 * L, p2));
            emit_chain(bags, bag, path_vertices(p2, tb, 2 * L, qtip), p2);
            emit_blob_bag(bags, bag, qtip, fam.q.n, p2);
            emit_chain(bags, bag, path_vertices(p2, cb, 10 * L, w));
        }
    }
    return bags;
}

}  // namespace homind
