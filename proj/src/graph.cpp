#include "homind/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace homind {

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (!directed) {
        if (u == v) throw std::invalid_argument("add_edge: loop in undirected graph");
        if (u > v) std::swap(u, v);
    }
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return;
    edges.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
    if (!directed && u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency_out() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        if (!directed && u != v) adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> Graph::adjacency_in() const {
    if (!directed) return adjacency_out();
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) adj[v].push_back(u);
    return adj;
}

std::vector<std::vector<int>> Graph::adjacency_und() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u == v) {
            adj[u].push_back(u);
            continue;
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

void Graph::validate() const {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (!directed && u > v) throw std::invalid_argument("graph: undirected edge not canonical");
        if (!directed && u == v) throw std::invalid_argument("graph: loop in undirected graph");
        if (!seen.insert({u, v}).second) throw std::invalid_argument("graph: duplicate edge");
    }
    if (!colours.empty() && (int)colours.size() != n)
        throw std::invalid_argument("graph: colour list size mismatch");
}

bool same_mode(const Graph& a, const Graph& b) {
    return a.directed == b.directed && a.coloured() == b.coloured();
}

// --- constructors -----------------------------------------------------------

Graph make_path(int n_vertices) {
    if (n_vertices < 1) throw std::invalid_argument("make_path: need at least one vertex");
    Graph g(n_vertices);
    for (int i = 0; i + 1 < n_vertices; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int m, bool directed) {
    if (directed) {
        if (m < 1) throw std::invalid_argument("make_cycle: directed cycle needs length >= 1");
        Graph g(m, true);
        for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
        return g;
    }
    if (m < 3) throw std::invalid_argument("make_cycle: undirected cycle needs length >= 3");
    Graph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph make_kneser(int r, int s) {
    if (r < 1 || s < r) throw std::invalid_argument("make_kneser: need 1 <= r <= s");
    std::vector<uint32_t> sets;
    for (uint32_t m = 0; m < (1u << s); ++m)
        if (__builtin_popcount(m) == r) sets.push_back(m);
    Graph g((int)sets.size());
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0) g.add_edge((int)i, (int)j);
    return g;
}

Graph make_circulant(int n, const std::vector<int>& offsets) {
    if (n < 1) throw std::invalid_argument("make_circulant: need n >= 1");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int d : offsets) {
            int u = ((v + d) % n + n) % n;
            if (u != v) g.add_edge(std::min(u, v), std::max(u, v));
        }
    return g;
}

Graph make_mycielski(const Graph& base) {
    if (base.directed || base.coloured())
        throw std::invalid_argument("make_mycielski: plain undirected input only");
    // vertices: originals 0..n-1, shadows n..2n-1, apex 2n. Shadow i copies
    // the neighbourhood of i; the apex sees every shadow. Keeps odd girth >= 5
    // intact while raising the chromatic number by one.
    Graph g(2 * base.n + 1);
    int apex = 2 * base.n;
    for (auto [u, v] : base.edges) {
        g.add_edge(u, v);
        g.add_edge(u, base.n + v);
        g.add_edge(v, base.n + u);
    }
    for (int i = 0; i < base.n; ++i) g.add_edge(base.n + i, apex);
    return g;
}

// --- combinators -------------------------------------------------------------

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (!same_mode(a, b)) throw std::invalid_argument("disjoint_union: mode mismatch");
    Graph g(a.n + b.n, a.directed);
    if (a.coloured()) {
        g.colours = a.colours;
        g.colours.insert(g.colours.end(), b.colours.begin(), b.colours.end());
    }
    for (auto [u, v] : a.edges) g.add_edge(u, v);
    for (auto [u, v] : b.edges) g.add_edge(a.n + u, a.n + v);
    return g;
}

Graph tensor_product(const Graph& a, const Graph& b) {
    if (!same_mode(a, b)) throw std::invalid_argument("tensor_product: mode mismatch");
    if (a.coloured()) throw std::invalid_argument("tensor_product: coloured graphs unsupported");
    Graph g(a.n * b.n, a.directed);
    auto id = [&](int x, int y) { return x * b.n + y; };
    // bulk-build: per-edge sorted insertion is quadratic and the products the
    // reductions build run into six-digit edge counts
    std::vector<std::pair<int, int>> es;
    es.reserve(a.edges.size() * b.edges.size() * (a.directed ? 1 : 2));
    auto put = [&](int u, int v) {
        if (!g.directed) {
            if (u == v) return;
            if (u > v) std::swap(u, v);
        }
        es.emplace_back(u, v);
    };
    for (auto [u, v] : a.edges)
        for (auto [x, y] : b.edges) {
            put(id(u, x), id(v, y));
            if (!a.directed) put(id(u, y), id(v, x));
        }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    g.edges = std::move(es);
    return g;
}

Graph complement(const Graph& g) {
    if (g.directed) throw std::invalid_argument("complement: undirected only");
    Graph c(g.n);
    c.colours = g.colours;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

// --- predicates --------------------------------------------------------------

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    auto adj = g.adjacency_und();
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == g.n;
}

bool is_single_cycle(const Graph& g) {
    if (g.directed || g.n < 3) return false;
    if (g.edge_count() != (size_t)g.n) return false;
    auto adj = g.adjacency_und();
    for (int v = 0; v < g.n; ++v)
        if (adj[v].size() != 2) return false;
    return is_connected(g);
}

bool is_single_path(const Graph& g) {
    if (g.directed || g.n < 1) return false;
    if (g.edge_count() != (size_t)g.n - 1) return false;  // acyclic once connected
    auto adj = g.adjacency_und();
    for (int v = 0; v < g.n; ++v)
        if (adj[v].size() > 2) return false;
    return is_connected(g);
}

bool is_single_directed_cycle(const Graph& g) {
    if (!g.directed || g.n < 1) return false;
    if (g.edge_count() != (size_t)g.n) return false;
    auto out = g.adjacency_out(), in = g.adjacency_in();
    for (int v = 0; v < g.n; ++v)
        if (out[v].size() != 1 || in[v].size() != 1) return false;
    return is_connected(g);
}

// --- homomorphisms ------------------------------------------------------------

namespace {

struct HomSearch {
    const Graph& F;
    const Graph& G;
    std::vector<std::vector<int>> f_out, f_in;
    std::vector<std::vector<int>> g_out, g_in;
    std::unordered_set<int64_t> g_arcs;  // u*n+v for every arc (both ways if undirected)
    std::vector<int> order;
    std::vector<int> assign;
    Integer count{0};
    bool stop_at_one = false;

    HomSearch(const Graph& F_, const Graph& G_) : F(F_), G(G_) {
        f_out = F.adjacency_out();
        f_in = F.adjacency_in();
        g_out = G.adjacency_out();
        g_in = G.adjacency_in();
        for (auto [u, v] : G.edges) {
            g_arcs.insert((int64_t)u * G.n + v);
            if (!G.directed) g_arcs.insert((int64_t)v * G.n + u);
        }
        assign.assign(F.n, -1);
    }

    bool arc(int x, int y) const { return g_arcs.count((int64_t)x * G.n + y) > 0; }

    bool colour_ok(int f, int x) const {
        return !F.coloured() || F.colours[f] == G.colours[x];
    }

    // every already-assigned F-neighbour of f must be consistent with f -> x
    bool consistent(int f, int x) const {
        for (int u : f_out[f]) {
            int xu = assign[u];
            if (u == f) {  // loop
                if (!arc(x, x)) return false;
            } else if (xu >= 0 && !arc(x, xu))
                return false;
        }
        if (F.directed)
            for (int u : f_in[f]) {
                int xu = assign[u];
                if (u != f && xu >= 0 && !arc(xu, x)) return false;
            }
        return true;
    }

    void build_order() {
        // BFS from already-pinned vertices, then component by component, so
        // most vertices enter with an assigned neighbour to prune against
        std::vector<char> inorder(F.n, 0);
        std::queue<int> q;
        auto und = F.adjacency_und();
        auto push = [&](int v) {
            if (!inorder[v]) {
                inorder[v] = 1;
                order.push_back(v);
                q.push(v);
            }
        };
        for (int v = 0; v < F.n; ++v)
            if (assign[v] >= 0) push(v);
        for (int start = 0; start <= F.n; ++start) {
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : und[u]) push(v);
            }
            if (start < F.n) push(start);
        }
    }

    void rec(size_t idx) {
        if (idx == order.size()) {
            ++count;
            return;
        }
        int f = order[idx];
        if (assign[f] >= 0) {  // pinned
            rec(idx + 1);
            return;
        }
        // candidates from one assigned neighbour's adjacency when available
        const std::vector<int>* cands = nullptr;
        std::vector<int> all;
        for (int u : f_out[f])
            if (u != f && assign[u] >= 0) {
                cands = F.directed ? &g_in[assign[u]] : &g_out[assign[u]];
                break;
            }
        if (!cands && F.directed)
            for (int u : f_in[f])
                if (u != f && assign[u] >= 0) {
                    cands = &g_out[assign[u]];
                    break;
                }
        if (!cands) {
            all.resize(G.n);
            std::iota(all.begin(), all.end(), 0);
            cands = &all;
        }
        for (int x : *cands) {
            if (stop_at_one && count > 0) break;
            if (!colour_ok(f, x) || !consistent(f, x)) continue;
            assign[f] = x;
            rec(idx + 1);
            assign[f] = -1;
        }
    }
};

}  // namespace

Integer hom_count_pinned(const Graph& F, const Graph& G,
                         const std::vector<std::pair<int, int>>& pins) {
    if (!same_mode(F, G)) throw std::invalid_argument("hom_count: mode mismatch");
    if (F.n == 0) return Integer(1);  // the empty map
    HomSearch hs(F, G);
    for (auto [f, x] : pins) {
        if (f < 0 || f >= F.n || x < 0 || x >= G.n)
            throw std::invalid_argument("hom_count_pinned: pin out of range");
        if (hs.assign[f] >= 0 && hs.assign[f] != x) return Integer(0);
        hs.assign[f] = x;
    }
    // pinned images must be consistent among themselves and colour-correct
    for (auto [f, x] : pins)
        if (!hs.colour_ok(f, x) || !hs.consistent(f, x)) return Integer(0);
    hs.build_order();
    hs.rec(0);
    return hs.count;
}

Integer hom_count(const Graph& F, const Graph& G) { return hom_count_pinned(F, G, {}); }

bool hom_exists(const Graph& F, const Graph& G) {
    if (!same_mode(F, G)) throw std::invalid_argument("hom_exists: mode mismatch");
    if (F.n == 0) return true;
    if (G.n == 0) return false;
    HomSearch hs(F, G);
    hs.stop_at_one = true;
    hs.build_order();
    hs.rec(0);
    return hs.count > 0;
}

// --- isomorphism ----------------------------------------------------------------

namespace {

std::vector<std::tuple<int, int, std::string>> vertex_signatures(const Graph& g) {
    auto out = g.adjacency_out(), in = g.adjacency_in();
    std::vector<std::tuple<int, int, std::string>> sig(g.n);
    for (int v = 0; v < g.n; ++v)
        sig[v] = {(int)out[v].size(), (int)in[v].size(),
                  g.coloured() ? g.colours[v] : std::string()};
    return sig;
}

bool iso_rec(const Graph& a, const Graph& b, const std::vector<int>& order, size_t idx,
             std::vector<int>& map, std::vector<char>& used,
             const std::vector<std::tuple<int, int, std::string>>& siga,
             const std::vector<std::tuple<int, int, std::string>>& sigb) {
    if (idx == order.size()) return true;
    int u = order[idx];
    for (int x = 0; x < b.n; ++x) {
        if (used[x] || siga[u] != sigb[x]) continue;
        bool ok = true;
        for (size_t j = 0; j < idx && ok; ++j) {
            int w = order[j];
            if (a.has_edge(u, w) != b.has_edge(x, map[w])) ok = false;
            if (a.directed && a.has_edge(w, u) != b.has_edge(map[w], x)) ok = false;
        }
        if (a.has_edge(u, u) != b.has_edge(x, x)) ok = false;
        if (!ok) continue;
        map[u] = x;
        used[x] = 1;
        if (iso_rec(a, b, order, idx + 1, map, used, siga, sigb)) return true;
        used[x] = 0;
        map[u] = -1;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n > 16 || b.n > 16) throw std::invalid_argument("is_isomorphic: bounded to 16 vertices");
    if (a.n != b.n || a.directed != b.directed || a.coloured() != b.coloured()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    auto siga = vertex_signatures(a), sigb = vertex_signatures(b);
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    // order a's vertices by decreasing constraint (degree)
    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int u, int v) { return siga[u] > siga[v]; });
    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    return iso_rec(a, b, order, 0, map, used, siga, sigb);
}

QMatrix adjacency_matrix(const Graph& g) {
    QMatrix A(g.n, g.n);
    for (auto [u, v] : g.edges) {
        A.at(u, v) = 1;
        if (!g.directed) A.at(v, u) = 1;
    }
    return A;
}

// --- CFI ----------------------------------------------------------------------

Graph cfi(const Graph& base, int parity) {
    if (base.directed) throw std::invalid_argument("cfi: base must be undirected");
    if (!is_connected(base)) throw std::invalid_argument("cfi: base must be connected");
    if (parity != 0 && parity != 1) throw std::invalid_argument("cfi: parity must be 0 or 1");

    // sorted edge copy so "smallest edge" is well defined regardless of how
    // the base was assembled
    auto bedges = base.edges;
    std::sort(bedges.begin(), bedges.end());

    // incident edge indices per vertex
    std::vector<std::vector<int>> inc(base.n);
    for (size_t e = 0; e < bedges.size(); ++e) {
        inc[bedges[e].first].push_back((int)e);
        inc[bedges[e].second].push_back((int)e);
    }
    for (int v = 0; v < base.n; ++v)
        if (inc[v].size() > 20) throw std::invalid_argument("cfi: degree too large");

    // vertices: (v, even subset of inc(v)), encoded per-vertex by mask index
    std::vector<std::vector<uint32_t>> masks(base.n);
    std::vector<std::pair<int, uint32_t>> verts;
    std::map<std::pair<int, uint32_t>, int> index;
    for (int v = 0; v < base.n; ++v) {
        int d = (int)inc[v].size();
        for (uint32_t m = 0; m < (1u << d); ++m)
            if (__builtin_popcount(m) % 2 == 0) {
                index[{v, m}] = (int)verts.size();
                verts.push_back({v, m});
                masks[v].push_back(m);
            }
    }
    Graph g((int)verts.size());
    if (base.coloured()) {
        g.colours.resize(g.n);
        for (int i = 0; i < g.n; ++i) g.colours[i] = base.colours[verts[i].first];
    }
    // twist the lexicographically smallest edge when parity = 1 (edge 0 of
    // the sorted list)
    for (size_t e = 0; e < bedges.size(); ++e) {
        auto [u, v] = bedges[e];
        int twist = (parity == 1 && e == 0) ? 1 : 0;
        int pu = (int)(std::find(inc[u].begin(), inc[u].end(), (int)e) - inc[u].begin());
        int pv = (int)(std::find(inc[v].begin(), inc[v].end(), (int)e) - inc[v].begin());
        for (uint32_t su : masks[u])
            for (uint32_t sv : masks[v]) {
                int bu = (su >> pu) & 1, bv = (sv >> pv) & 1;
                if ((bu ^ bv) == twist) g.add_edge(index[{u, su}], index[{v, sv}]);
            }
    }
    return g;
}

// --- width machinery -------------------------------------------------------------

namespace {

std::vector<uint32_t> und_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

}  // namespace

bool pathwidth_at_most(const Graph& g, int w) { return pathwidth(g) <= w; }

// Vertex separation: min over vertex orders of the max boundary size of a
// prefix. That number equals the pathwidth.
int pathwidth(const Graph& g) {
    if (g.n > 24) throw std::invalid_argument("pathwidth: exact search bounded to 24 vertices");
    if (g.n == 0) return -1;
    auto adj = und_masks(g);
    const uint32_t full = (1u << g.n) - 1;
    std::vector<uint8_t> f(full + 1, 255);
    f[0] = 0;
    for (uint32_t S = 1; S <= full; ++S) {
        // boundary size of prefix S
        int cost = 0;
        for (uint32_t T = S; T;) {
            int v = __builtin_ctz(T);
            T &= T - 1;
            if (adj[v] & ~S) ++cost;
        }
        int best = 255;
        for (uint32_t T = S; T;) {
            int v = __builtin_ctz(T);
            T &= T - 1;
            best = std::min(best, (int)f[S & ~(1u << v)]);
        }
        f[S] = (uint8_t)std::max(best, cost);
    }
    return (int)f[full];
}

// Re-runs the separation DP and walks an optimal order out of it. Bag i is
// the boundary of the first i-1 placed vertices plus the i-th vertex, which
// yields bags of size at most pathwidth+1.
std::vector<std::vector<int>> optimal_path_decomposition(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("optimal_path_decomposition: empty graph");
    if (g.n > 24)
        throw std::invalid_argument("optimal_path_decomposition: exact search bounded to 24 vertices");
    auto adj = und_masks(g);
    const uint32_t full = (1u << g.n) - 1;
    std::vector<uint8_t> f(full + 1, 255);
    f[0] = 0;
    for (uint32_t S = 1; S <= full; ++S) {
        int cost = 0;
        for (uint32_t T = S; T;) {
            int v = __builtin_ctz(T);
            T &= T - 1;
            if (adj[v] & ~S) ++cost;
        }
        int best = 255;
        for (uint32_t T = S; T;) {
            int v = __builtin_ctz(T);
            T &= T - 1;
            best = std::min(best, (int)f[S & ~(1u << v)]);
        }
        f[S] = (uint8_t)std::max(best, cost);
    }
    // peel vertices off the full set along non-increasing f values
    std::vector<int> order(g.n);
    uint32_t S = full;
    for (int i = g.n - 1; i >= 0; --i) {
        int pick = -1;
        for (uint32_t T = S; T;) {
            int v = __builtin_ctz(T);
            T &= T - 1;
            if (f[S & ~(1u << v)] <= f[S]) {
                pick = v;
                break;
            }
        }
        order[i] = pick;
        S &= ~(1u << pick);
    }
    std::vector<std::vector<int>> bags;
    uint32_t placed = 0;
    for (int v : order) {
        std::vector<int> bag;
        for (uint32_t T = placed; T;) {
            int u = __builtin_ctz(T);
            T &= T - 1;
            if (adj[u] & ~placed) bag.push_back(u);
        }
        bag.push_back(v);
        bags.push_back(std::move(bag));
        placed |= 1u << v;
    }
    return bags;
}

int validate_path_decomposition(const Graph& g, const std::vector<std::vector<int>>& bags) {
    if (bags.empty()) throw std::invalid_argument("path decomposition: no bags");
    std::vector<int> first(g.n, -1), last(g.n, -1);
    size_t width = 0;
    for (size_t i = 0; i < bags.size(); ++i) {
        std::set<int> uniq(bags[i].begin(), bags[i].end());
        if (uniq.size() != bags[i].size())
            throw std::invalid_argument("path decomposition: duplicate vertex in bag");
        width = std::max(width, uniq.size());
        for (int v : uniq) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("path decomposition: bad vertex");
            if (first[v] < 0) first[v] = (int)i;
            last[v] = (int)i;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (first[v] < 0) throw std::invalid_argument("path decomposition: vertex uncovered");
    for (int v = 0; v < g.n; ++v) {
        for (int i = first[v]; i <= last[v]; ++i) {
            if (std::find(bags[i].begin(), bags[i].end(), v) == bags[i].end())
                throw std::invalid_argument("path decomposition: occurrence not contiguous");
        }
    }
    for (auto [u, v] : g.edges) {
        bool covered = false;
        for (const auto& bag : bags) {
            bool hu = std::find(bag.begin(), bag.end(), u) != bag.end();
            bool hv = std::find(bag.begin(), bag.end(), v) != bag.end();
            if (hu && hv) {
                covered = true;
                break;
            }
        }
        if (!covered) throw std::invalid_argument("path decomposition: edge uncovered");
    }
    return (int)width - 1;
}

std::vector<std::vector<int>> greedy_path_decomposition(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("greedy_path_decomposition: empty graph");
    auto und = g.adjacency_und();
    auto width_of = [&](const std::vector<int>& order) {
        std::vector<int> pos(g.n);
        for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
        int w = 0;
        for (int i = 0; i < g.n; ++i) {
            int bag = 1;  // order[i] itself
            for (int j = 0; j < i; ++j) {
                int u = order[j];
                for (int x : und[u])
                    if (pos[x] >= i) {
                        ++bag;
                        break;
                    }
            }
            w = std::max(w, bag);
        }
        return w;
    };
    // try BFS orders from every vertex plus the identity, keep the best
    std::vector<int> best;
    int bestw = g.n + 1;
    std::vector<std::vector<int>> starts;
    std::vector<int> ident(g.n);
    std::iota(ident.begin(), ident.end(), 0);
    starts.push_back(ident);
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> order;
        std::vector<char> seen(g.n, 0);
        std::queue<int> q;
        for (int off = 0; off < g.n; ++off) {
            int root = (s + off) % g.n;
            if (seen[root]) continue;
            seen[root] = 1;
            q.push(root);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                order.push_back(u);
                for (int v : und[u])
                    if (!seen[v]) {
                        seen[v] = 1;
                        q.push(v);
                    }
            }
        }
        starts.push_back(order);
    }
    for (auto& order : starts) {
        int w = width_of(order);
        if (w < bestw) {
            bestw = w;
            best = order;
        }
    }
    // bags from the winning order: bag_i = {order[i]} + earlier vertices with
    // a neighbour at or past i
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[best[i]] = i;
    std::vector<std::vector<int>> bags(g.n);
    for (int i = 0; i < g.n; ++i) {
        bags[i].push_back(best[i]);
        for (int j = 0; j < i; ++j) {
            int u = best[j];
            for (int x : und[u])
                if (pos[x] >= i) {
                    bags[i].push_back(u);
                    break;
                }
        }
    }
    return bags;
}

}  // namespace homind
