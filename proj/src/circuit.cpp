#include "homind/circuit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace homind {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

bool leaf_label(const std::string& s) { return s == "0" || s == "1"; }
bool internal_label(const std::string& s) { return s == "+" || s == "x" || s == "-"; }

}  // namespace

void Circuit::validate() const {
    if (gates.empty()) bad("circuit: no gates");
    int n = (int)gates.size();
    if (output < 0 || output >= n) bad("circuit: output id out of range");
    std::vector<char> consumed(n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& g = gates[i];
        if (leaf_label(g.label)) {
            if (!g.children.empty()) bad("circuit: leaf with children");
        } else if (internal_label(g.label)) {
            if (g.children.size() != 2) bad("circuit: internal gate needs two children");
            for (int c : g.children) {
                if (c < 0 || c >= n) bad("circuit: child id out of range");
                consumed[c] = 1;
            }
        } else {
            bad("circuit: unknown gate label '" + g.label + "'");
        }
    }
    for (int i = 0; i < n; ++i) {
        if (i == output && consumed[i]) bad("circuit: output gate is consumed by another gate");
        if (i != output && !consumed[i]) bad("circuit: gate " + std::to_string(i) + " feeds nothing");
    }
    // acyclicity by iterative colouring
    std::vector<char> state(n, 0);  // 0 fresh, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack{{output, 0}};
    state[output] = 1;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < gates[v].children.size()) {
            int c = gates[v].children[next++];
            if (state[c] == 1) bad("circuit: cycle through gate " + std::to_string(c));
            if (state[c] == 0) {
                state[c] = 1;
                stack.push_back({c, 0});
            }
        } else {
            state[v] = 2;
            stack.pop_back();
        }
    }
}

std::vector<int> circuit_heights(const Circuit& c) {
    c.validate();
    int n = (int)c.gates.size();
    std::vector<int> h(n, -1);
    std::vector<std::pair<int, size_t>> stack{{c.output, 0}};
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < c.gates[v].children.size()) {
            int ch = c.gates[v].children[next++];
            if (h[ch] < 0) stack.push_back({ch, 0});
        } else {
            int best = -1;
            for (int ch : c.gates[v].children) best = std::max(best, h[ch]);
            h[v] = best + 1;
            stack.pop_back();
        }
    }
    return h;
}

Integer eval_circuit(const Circuit& c) {
    c.validate();
    int n = (int)c.gates.size();
    std::vector<Integer> val(n);
    std::vector<char> have(n, 0);
    std::vector<std::pair<int, size_t>> stack{{c.output, 0}};
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < c.gates[v].children.size()) {
            int ch = c.gates[v].children[next++];
            if (!have[ch]) stack.push_back({ch, 0});
        } else {
            const auto& g = c.gates[v];
            if (g.label == "0")
                val[v] = 0;
            else if (g.label == "1")
                val[v] = 1;
            else if (g.label == "+")
                val[v] = val[g.children[0]] + val[g.children[1]];
            else if (g.label == "x")
                val[v] = val[g.children[0]] * val[g.children[1]];
            else
                bad("eval_circuit: subtraction gate present; eliminate it first");
            have[v] = 1;
            stack.pop_back();
        }
    }
    return val[c.output];
}

bool is_normalised_circuit(const Circuit& c) {
    auto h = circuit_heights(c);
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const auto& g = c.gates[i];
        if (g.label == "-") return false;
        if (g.children.empty()) continue;
        for (int ch : g.children)
            if (h[ch] != h[i] - 1) return false;
        if (g.label == "+" && h[i] % 2 != 0) return false;
        if (g.label == "x" && h[i] % 2 != 1) return false;
    }
    return h[c.output] % 2 == 0;
}

namespace {

// Incremental builder that can lift wires through filler levels. Fillers
// follow a fixed scheme: a "x" stub multiplies by a constant-one subtree, a
// "+" stub adds a constant-zero subtree, so values never change.
struct Builder {
    Circuit out;
    std::map<int, int> zeros, ones;  // even height -> gate id

    int gate(const std::string& label, std::vector<int> children) {
        out.gates.push_back({label, std::move(children)});
        return (int)out.gates.size() - 1;
    }

    int zero_at(int h) {  // even h
        auto it = zeros.find(h);
        if (it != zeros.end()) return it->second;
        int id;
        if (h == 0) {
            id = gate("0", {});
        } else {
            int z = zero_at(h - 2);
            int m = gate("x", {z, z});
            id = gate("+", {m, m});
        }
        zeros[h] = id;
        return id;
    }

    int one_at(int h) {  // even h
        auto it = ones.find(h);
        if (it != ones.end()) return it->second;
        int id;
        if (h == 0) {
            id = gate("1", {});
        } else {
            int o = one_at(h - 2);
            int z = zero_at(h - 2);
            int num = gate("x", {o, o});
            int den = gate("x", {z, z});
            id = gate("+", {num, den});
        }
        ones[h] = id;
        return id;
    }

    // wire sits at height from (parity matching from); returns a wire of the
    // same value at height to
    int lift(int id, int from, int to) {
        while (from < to) {
            if (from % 2 == 0) {
                id = gate("x", {id, one_at(from)});
            } else {
                int z = gate("x", {zero_at(from - 1), zero_at(from - 1)});
                id = gate("+", {id, z});
            }
            ++from;
        }
        return id;
    }
};

}  // namespace

Circuit normalise_circuit(const Circuit& c) {
    c.validate();
    for (const auto& g : c.gates)
        if (g.label == "-") bad("normalise_circuit: subtraction gate present; eliminate it first");
    auto h = circuit_heights(c);
    Builder b;
    int n = (int)c.gates.size();
    std::vector<int> id(n, -1), lvl(n, -1);
    // children always have smaller height, so height order is topological
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int bq) { return h[a] < h[bq]; });
    for (int v : order) {
        const auto& g = c.gates[v];
        if (g.children.empty()) {
            id[v] = b.gate(g.label, {});
            lvl[v] = 0;
            continue;
        }
        int c0 = g.children[0], c1 = g.children[1];
        // lift both children to a common height of the parity the gate needs
        int want = (g.label == "+") ? 1 : 0;  // child parity: odd under +, even under x
        int t = std::max(lvl[c0], lvl[c1]);
        if (t % 2 != want) ++t;
        int w0 = b.lift(id[c0], lvl[c0], t);
        int w1 = (c0 == c1) ? w0 : b.lift(id[c1], lvl[c1], t);
        id[v] = b.gate(g.label, {w0, w1});
        lvl[v] = t + 1;
    }
    int root = id[c.output];
    int top = lvl[c.output];
    if (top % 2 != 0) {
        root = b.lift(root, top, top + 1);
        ++top;
    }
    b.out.output = root;
    b.out.validate();
    return b.out;
}

std::pair<Graph, Graph> circuit_to_graph(const Circuit& c) {
    if (!is_normalised_circuit(c)) bad("circuit_to_graph: circuit is not normalised");
    int n = (int)c.gates.size();
    int internal = 0;
    for (const auto& g : c.gates)
        if (!g.children.empty()) ++internal;
    Graph plain(n + 2 * internal, true);
    plain.colours.assign(plain.n, "");
    int s = n;
    for (int i = 0; i < n; ++i) {
        const auto& g = c.gates[i];
        plain.colours[i] = g.label;
        if (g.children.empty()) continue;
        int s0 = s++, s1 = s++;
        plain.colours[s0] = plain.colours[s1] = "S";
        plain.add_edge(i, s0);
        plain.add_edge(s0, g.children[0]);
        plain.add_edge(i, s1);
        plain.add_edge(s1, g.children[1]);
        if (g.label == "x") {
            plain.add_edge(s0, s1);
            plain.add_edge(s1, s0);
        }
    }
    Graph hat(plain.n + 1, true);
    hat.colours = plain.colours;
    hat.colours.push_back("T");
    for (auto [u, v] : plain.edges) hat.add_edge(u, v);
    hat.add_edge(plain.n, c.output);
    return {plain, hat};
}

namespace {

// subgraph paste: append other's vertices after the current ones
int paste(Graph& g, const Graph& other) {
    int base = g.n;
    g.n += other.n;
    g.colours.insert(g.colours.end(), other.colours.begin(), other.colours.end());
    for (auto [u, v] : other.edges) g.add_edge(base + u, base + v);
    return base;
}

}  // namespace

ProbeGraph build_probe(int h, bool exact_depth) {
    if (h < 0) bad("build_probe: negative height");
    if (h == 0) {
        Graph g(1, true);
        g.colours = {"1"};
        return {g, 0};
    }
    if (h % 2 == 1) {
        ProbeGraph left = build_probe(h - 1, exact_depth);
        ProbeGraph right = exact_depth ? build_probe(h - 1, exact_depth) : build_probe(0, true);
        Graph g(3, true);
        g.colours = {"x", "S", "S"};
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(2, 1);
        int lb = paste(g, left.g);
        int rb = paste(g, right.g);
        g.add_edge(1, lb + left.root);
        g.add_edge(2, rb + right.root);
        return {g, 0};
    }
    ProbeGraph sub = build_probe(h - 1, exact_depth);
    Graph g(2, true);
    g.colours = {"+", "S"};
    g.add_edge(0, 1);
    int base = paste(g, sub.g);
    g.add_edge(1, base + sub.root);
    return {g, 0};
}

Graph build_f_h(int h, bool exact_depth) {
    ProbeGraph p = build_probe(h, exact_depth);
    Graph g = p.g;
    int t = g.n;
    ++g.n;
    g.colours.push_back("T");
    g.add_edge(t, p.root);
    return g;
}

Integer probe_scale(int h) {
    if (h < 0 || h > 40) bad("probe_scale: height out of supported range");
    unsigned e = (unsigned)((h + 1) / 2);
    Integer r = 1;
    r <<= (1u << e) - 1;
    return r;
}

Circuit value_circuit(const Integer& value, int min_height) {
    if (value < 0) bad("value_circuit: negative value");
    if (min_height < 0) bad("value_circuit: negative height");
    int target = min_height + (min_height % 2);
    Builder b;
    // bit values, highest exponent first
    std::vector<unsigned> bits;
    for (Integer v = value; v > 0; v >>= 1) bits.insert(bits.begin(), (v & 1) == 1 ? 1u : 0u);
    int acc = -1, lvl = 0;
    if (bits.empty()) {
        acc = b.zero_at(target);
        lvl = target;
    } else {
        // powers of two double up from a 1 leaf: 2^e costs height 2e
        std::vector<int> pow_id{b.one_at(0)};
        std::vector<int> pow_lvl{0};
        for (size_t e = 1; e < bits.size(); ++e) {
            int m = b.gate("x", {pow_id[e - 1], b.one_at((int)(2 * e - 2))});
            pow_id.push_back(b.gate("+", {m, m}));
            pow_lvl.push_back((int)(2 * e));
        }
        size_t top = bits.size() - 1;
        acc = pow_id[top];
        lvl = pow_lvl[top];
        for (size_t e = top; e-- > 0;) {
            if (!bits[bits.size() - 1 - e]) continue;
            int term = b.lift(pow_id[e], pow_lvl[e], lvl);
            int ma = b.gate("x", {acc, b.one_at(lvl)});
            int mt = b.gate("x", {term, b.one_at(lvl)});
            acc = b.gate("+", {ma, mt});
            lvl += 2;
        }
        acc = b.lift(acc, lvl, std::max(lvl, target));
    }
    b.out.output = acc;
    b.out.validate();
    return b.out;
}

}  // namespace homind
