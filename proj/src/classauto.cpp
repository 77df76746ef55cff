#include "homind/classauto.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace homind {

void ClassAutomaton::validate() const {
    if (k < 1 || k > 9) throw std::invalid_argument("class automaton: k out of range");
    if (states.empty()) throw std::invalid_argument("class automaton: no states");
    std::set<std::string> seen(states.begin(), states.end());
    if (seen.size() != states.size())
        throw std::invalid_argument("class automaton: duplicate state names");
    if (!seen.count(initial)) throw std::invalid_argument("class automaton: unknown initial state");
    for (const auto& s : accepting)
        if (!seen.count(s)) throw std::invalid_argument("class automaton: unknown accepting state");
    const auto gens = generators(k, directed);
    for (const auto& s : states) {
        auto it = step.find(s);
        if (it == step.end())
            throw std::invalid_argument("class automaton: missing step row for state " + s);
        if (it->second.size() != gens.size())
            throw std::invalid_argument("class automaton: step row for " + s +
                                        " does not match the alphabet");
        for (const auto& g : gens) {
            auto jt = it->second.find(g.name);
            if (jt == it->second.end())
                throw std::invalid_argument("class automaton: state " + s + " missing letter " +
                                            g.name);
            if (!seen.count(jt->second))
                throw std::invalid_argument("class automaton: step target not a state");
        }
    }
    if (step.size() != states.size())
        throw std::invalid_argument("class automaton: step rows for unknown states");
    if (kind == Kind::Tree) {
        if (glue_step.size() != states.size())
            throw std::invalid_argument("class automaton: glue_step must be total");
        for (const auto& a : states) {
            auto it = glue_step.find(a);
            if (it == glue_step.end() || it->second.size() != states.size())
                throw std::invalid_argument("class automaton: glue_step must be total");
            for (const auto& b : states) {
                auto jt = it->second.find(b);
                if (jt == it->second.end())
                    throw std::invalid_argument("class automaton: glue_step must be total");
                if (!seen.count(jt->second))
                    throw std::invalid_argument("class automaton: glue_step target not a state");
            }
        }
        for (const auto& a : states)
            for (const auto& b : states)
                if (glue_step.at(a).at(b) != glue_step.at(b).at(a))
                    throw std::invalid_argument("class automaton: glue_step is not symmetric");
    } else if (!glue_step.empty()) {
        throw std::invalid_argument("class automaton: word kind must not carry glue_step");
    }
    for (const auto& g : small_members) {
        g.validate();
        if (g.directed != directed)
            throw std::invalid_argument("class automaton: small member direction mismatch");
    }
}

const std::string& ClassAutomaton::next(const std::string& state,
                                        const std::string& letter) const {
    auto it = step.find(state);
    if (it == step.end()) throw std::invalid_argument("class automaton: unknown state " + state);
    auto jt = it->second.find(letter);
    if (jt == it->second.end())
        throw std::invalid_argument("class automaton: unknown letter " + letter);
    return jt->second;
}

const std::string& ClassAutomaton::glue_next(const std::string& a, const std::string& b) const {
    auto it = glue_step.find(a);
    if (it == glue_step.end()) throw std::invalid_argument("class automaton: unknown state " + a);
    auto jt = it->second.find(b);
    if (jt == it->second.end()) throw std::invalid_argument("class automaton: unknown state " + b);
    return jt->second;
}

std::string run_word(const ClassAutomaton& a, const std::vector<std::string>& word) {
    std::string s = a.initial;
    for (const auto& w : word) s = a.next(s, w);
    return s;
}

bool accepts_word(const ClassAutomaton& a, const std::vector<std::string>& word) {
    return a.is_accepting(run_word(a, word));
}

std::string run_term(const ClassAutomaton& a, const Term& t) {
    if (t.symbol == "1") {
        if (!t.children.empty()) throw std::invalid_argument("run_term: 1 takes no children");
        return a.initial;
    }
    if (t.symbol == "glue") {
        if (t.children.size() != 2) throw std::invalid_argument("run_term: glue takes two children");
        return a.glue_next(run_term(a, t.children[0]), run_term(a, t.children[1]));
    }
    if (t.children.size() != 1)
        throw std::invalid_argument("run_term: letter takes one child");
    return a.next(run_term(a, t.children[0]), t.symbol);
}

bool accepts_term(const ClassAutomaton& a, const Term& t) { return a.is_accepting(run_term(a, t)); }

namespace {

// Boundary summary for the width-3 cycle and path machines. A state remembers,
// for the graph built so far, just how the three boundary labels sit inside
// it: each connected component that still touches the boundary is either a
// lone labelled vertex or a path segment whose two ends are a label or are
// frozen (label retired, end can never be extended again). Everything not
// recorded is either impossible to complete or already irrelevant.
constexpr int kFrozen = 0;

struct USeg {
    bool single = false;
    int a = 0, b = 0;        // ends, kFrozen or a label; a <= b
    std::set<int> inter;     // labels currently interior
    bool two = false;        // segment has exactly two vertices
};

struct UState {
    bool dead = false, cycle = false;
    std::vector<USeg> comps;
    std::set<std::pair<int, int>> adj;  // label pairs joined by an edge, i < j
};

std::string encode_u(const UState& st) {
    if (st.dead) return "dead";
    if (st.cycle) {
        std::ostringstream os;
        os << "cycle";
        for (const auto& e : st.adj) os << "+" << e.first << e.second;
        return os.str();
    }
    std::vector<std::string> parts;
    for (const auto& c : st.comps) {
        std::ostringstream os;
        if (c.single) {
            os << "v" << c.a;
        } else {
            os << "p" << c.a << c.b << (c.two ? "=" : "-");
            for (int x : c.inter) os << x;
        }
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "." : "") << parts[i];
    for (const auto& e : st.adj) os << "+" << e.first << e.second;
    return os.str();
}

struct Loc {
    int comp = -1;
    enum { None, Single, End, Inter } role = None;
};

Loc locate_u(const UState& st, int lab) {
    for (size_t i = 0; i < st.comps.size(); ++i) {
        const auto& c = st.comps[i];
        if (c.single) {
            if (c.a == lab) return {(int)i, Loc::Single};
        } else {
            if (c.a == lab || c.b == lab) return {(int)i, Loc::End};
            if (c.inter.count(lab)) return {(int)i, Loc::Inter};
        }
    }
    throw std::logic_error("boundary label missing from state");
}

void drop_adj(UState& st, int lab) {
    for (auto it = st.adj.begin(); it != st.adj.end();)
        it = (it->first == lab || it->second == lab) ? st.adj.erase(it) : std::next(it);
}

UState norm_u(UState st) {
    // a component frozen at both ends can only survive as the whole graph
    for (auto& c : st.comps)
        if (!c.single && c.a == kFrozen && c.b == kFrozen && st.comps.size() > 1)
            return UState{true, false, {}, {}};
    for (auto& c : st.comps)
        if (!c.single && c.a > c.b) std::swap(c.a, c.b);
    return st;
}

// "A12" -> edge letter {1, 2}, "J3" -> relabel letter {3, 0}
std::pair<int, int> parse_letter(const std::string& name) {
    if (name.size() == 3 && name[0] == 'A') return {name[1] - '0', name[2] - '0'};
    if (name.size() == 2 && name[0] == 'J') return {name[1] - '0', 0};
    throw std::invalid_argument("unknown generator letter " + name);
}

UState step_u(const UState& st, const GenLetter& g) {
    if (st.dead) return UState{true, false, {}, {}};
    auto [gi, gj] = parse_letter(g.name);
    if (st.cycle) {
        // once closed, only edges already on the cycle keep it alive
        if (gj != 0 && st.adj.count({std::min(gi, gj), std::max(gi, gj)})) return st;
        return UState{true, false, {}, {}};
    }
    UState nx = st;
    if (gj != 0) {
        int i = std::min(gi, gj), j = std::max(gi, gj);
        if (st.adj.count({i, j})) return st;  // edge already present
        Loc li = locate_u(st, i), lj = locate_u(st, j);
        if (li.role == Loc::Inter || lj.role == Loc::Inter)
            return UState{true, false, {}, {}};  // would raise a degree past 2
        nx.adj.insert({i, j});
        auto& ci = nx.comps[li.comp];
        auto& cj = nx.comps[lj.comp];
        if (li.comp == lj.comp) {
            // both ends of one segment: closes it into a cycle
            if (ci.two) return UState{true, false, {}, {}};  // would double an edge
            if (st.comps.size() == 1) return UState{false, true, {}, nx.adj};
            return UState{true, false, {}, {}};
        }
        if (li.role == Loc::Single && lj.role == Loc::Single) {
            ci = USeg{false, i, j, {}, true};
            nx.comps.erase(nx.comps.begin() + lj.comp);
        } else if (li.role == Loc::Single || lj.role == Loc::Single) {
            int lone = li.role == Loc::Single ? i : j;
            int end = li.role == Loc::Single ? j : i;
            auto& seg = li.role == Loc::Single ? cj : ci;
            int other = seg.a == end ? seg.b : seg.a;
            seg.inter.insert(end);
            seg = USeg{false, lone, other, seg.inter, false};
            nx.comps.erase(nx.comps.begin() + (li.role == Loc::Single ? li.comp : lj.comp));
        } else {
            // two segment ends, different components: concatenate
            int oi = ci.a == i ? ci.b : ci.a;
            int oj = cj.a == j ? cj.b : cj.a;
            std::set<int> inter = ci.inter;
            inter.insert(cj.inter.begin(), cj.inter.end());
            inter.insert(i);
            inter.insert(j);
            ci = USeg{false, oi, oj, inter, false};
            nx.comps.erase(nx.comps.begin() + lj.comp);
        }
        return norm_u(nx);
    }
    // retire the label, then give it a fresh isolated vertex
    int lab = gi;
    Loc l = locate_u(st, lab);
    if (l.role == Loc::Single)
        return UState{true, false, {}, {}};  // leaves an isolated unlabelled vertex behind
    drop_adj(nx, lab);
    auto& c = nx.comps[l.comp];
    if (l.role == Loc::End) {
        (c.a == lab ? c.a : c.b) = kFrozen;
    } else {
        c.inter.erase(lab);
    }
    nx.comps.push_back(USeg{true, lab, lab, {}, false});
    return norm_u(nx);
}

bool path_accepting(const UState& st) {
    return !st.dead && !st.cycle && st.comps.size() == 1 && !st.comps[0].single;
}

// Directed variant: components are directed path segments. Retiring any label
// that is not interior pins a vertex at in- or out-degree 0, which no directed
// cycle tolerates, so those moves go straight to the dead state.
struct DSeg {
    bool single = false;
    int src = 0, snk = 0;
    std::set<int> inter;
    bool two = false;
};

struct DState {
    bool dead = false, cycle = false;
    std::vector<DSeg> comps;
    std::set<std::pair<int, int>> arcs;  // ordered label pairs with an arc
};

std::string encode_d(const DState& st) {
    if (st.dead) return "dead";
    if (st.cycle) {
        std::ostringstream os;
        os << "cycle";
        for (const auto& e : st.arcs) os << ">" << e.first << e.second;
        return os.str();
    }
    std::vector<std::string> parts;
    for (const auto& c : st.comps) {
        std::ostringstream os;
        if (c.single) {
            os << "v" << c.src;
        } else {
            os << "p" << c.src << c.snk << (c.two ? "=" : "-");
            for (int x : c.inter) os << x;
        }
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "." : "") << parts[i];
    for (const auto& e : st.arcs) os << ">" << e.first << e.second;
    return os.str();
}

Loc locate_d(const DState& st, int lab) {
    for (size_t i = 0; i < st.comps.size(); ++i) {
        const auto& c = st.comps[i];
        if (c.single) {
            if (c.src == lab) return {(int)i, Loc::Single};
        } else {
            if (c.src == lab || c.snk == lab) return {(int)i, Loc::End};
            if (c.inter.count(lab)) return {(int)i, Loc::Inter};
        }
    }
    throw std::logic_error("boundary label missing from state");
}

DState step_d(const DState& st, const GenLetter& g) {
    if (st.dead) return DState{true, false, {}, {}};
    auto [gi, gj] = parse_letter(g.name);
    if (st.cycle) {
        if (gj != 0 && st.arcs.count({gi, gj})) return st;
        return DState{true, false, {}, {}};
    }
    DState nx = st;
    if (gj != 0) {
        int i = gi, j = gj;  // arc i -> j
        if (st.arcs.count({i, j})) return st;
        Loc li = locate_d(st, i), lj = locate_d(st, j);
        // i needs a free out-slot: lone vertex or the sink end of a segment
        bool out_free = li.role == Loc::Single ||
                        (li.role == Loc::End && st.comps[li.comp].snk == i);
        bool in_free = lj.role == Loc::Single ||
                       (lj.role == Loc::End && st.comps[lj.comp].src == j);
        if (!out_free || !in_free) return DState{true, false, {}, {}};
        nx.arcs.insert({i, j});
        auto& ci = nx.comps[li.comp];
        auto& cj = nx.comps[lj.comp];
        if (li.comp == lj.comp) {
            if (st.comps.size() == 1) return DState{false, true, {}, nx.arcs};
            return DState{true, false, {}, {}};
        }
        if (li.role == Loc::Single && lj.role == Loc::Single) {
            ci = DSeg{false, i, j, {}, true};
            nx.comps.erase(nx.comps.begin() + lj.comp);
        } else if (li.role == Loc::Single) {
            // prepend lone i in front of the source j
            cj.inter.insert(j);
            cj = DSeg{false, i, cj.snk, cj.inter, false};
            nx.comps.erase(nx.comps.begin() + li.comp);
        } else if (lj.role == Loc::Single) {
            ci.inter.insert(i);
            ci = DSeg{false, ci.src, j, ci.inter, false};
            nx.comps.erase(nx.comps.begin() + lj.comp);
        } else {
            std::set<int> inter = ci.inter;
            inter.insert(cj.inter.begin(), cj.inter.end());
            inter.insert(i);
            inter.insert(j);
            ci = DSeg{false, ci.src, cj.snk, inter, false};
            nx.comps.erase(nx.comps.begin() + lj.comp);
        }
        return nx;
    }
    int lab = gi;
    Loc l = locate_d(st, lab);
    if (l.role != Loc::Inter) return DState{true, false, {}, {}};
    for (auto it = nx.arcs.begin(); it != nx.arcs.end();)
        it = (it->first == lab || it->second == lab) ? nx.arcs.erase(it) : std::next(it);
    nx.comps[l.comp].inter.erase(lab);
    nx.comps.push_back(DSeg{true, lab, lab, {}, false});
    return nx;
}

template <typename State, typename StepFn, typename EncodeFn>
std::map<std::string, State> explore(ClassAutomaton& a, const State& init, StepFn&& stepper,
                                     EncodeFn&& enc) {
    const auto gens = generators(a.k, a.directed);
    std::map<std::string, State> pool;
    std::deque<std::string> todo;
    a.initial = enc(init);
    pool.emplace(a.initial, init);
    todo.push_back(a.initial);
    a.states.push_back(a.initial);
    while (!todo.empty()) {
        std::string name = todo.front();
        todo.pop_front();
        State cur = pool.at(name);
        for (const auto& g : gens) {
            State nx = stepper(cur, g);
            std::string nname = enc(nx);
            if (!pool.count(nname)) {
                pool.emplace(nname, nx);
                a.states.push_back(nname);
                todo.push_back(nname);
            }
            a.step[name][g.name] = nname;
        }
    }
    return pool;
}

ClassAutomaton make_cycle_class(bool with_paths) {
    ClassAutomaton a;
    a.kind = ClassAutomaton::Kind::Word;
    a.k = 3;
    a.directed = false;
    UState init;
    for (int l = 1; l <= 3; ++l) init.comps.push_back(USeg{true, l, l, {}, false});
    auto pool = explore(
        a, init, [](const UState& s, const GenLetter& g) { return step_u(s, g); },
        [](const UState& s) { return encode_u(s); });
    for (const auto& [name, st] : pool)
        if (st.cycle || (with_paths && path_accepting(st))) a.accepting.insert(name);
    a.small_members.push_back(make_cycle(3));
    if (with_paths) {
        a.small_members.clear();
        a.small_members.push_back(make_path(1));
        a.small_members.push_back(make_path(2));
        a.small_members.push_back(make_path(3));
        a.small_members.push_back(make_cycle(3));
    }
    return a;
}

ClassAutomaton make_directed_cycle_class() {
    ClassAutomaton a;
    a.kind = ClassAutomaton::Kind::Word;
    a.k = 3;
    a.directed = true;
    DState init;
    for (int l = 1; l <= 3; ++l) init.comps.push_back(DSeg{true, l, l, {}, false});
    auto pool = explore(
        a, init, [](const DState& s, const GenLetter& g) { return step_d(s, g); },
        [](const DState& s) { return encode_d(s); });
    for (const auto& [name, st] : pool)
        if (st.cycle) a.accepting.insert(name);
    a.small_members.push_back(Graph(1, true));  // the length-0 cycle
    a.small_members.push_back(make_cycle(1, true));
    a.small_members.push_back(make_cycle(2, true));
    a.small_members.push_back(make_cycle(3, true));
    return a;
}

ClassAutomaton make_width_class(int width, bool tree) {
    if (width < 0) throw std::invalid_argument("builtin_class: width must be >= 0");
    if (width > 3)
        throw std::invalid_argument("builtin_class: width capped at 3 (small member catalogue)");
    ClassAutomaton a;
    a.kind = tree ? ClassAutomaton::Kind::Tree : ClassAutomaton::Kind::Word;
    a.k = width + 1;
    a.directed = false;
    a.states = {"all"};
    a.initial = "all";
    a.accepting = {"all"};
    for (const auto& g : generators(a.k, false)) a.step["all"][g.name] = "all";
    if (tree) a.glue_step["all"]["all"] = "all";
    a.small_members = small_graph_catalogue(a.k - 1);
    return a;
}

}  // namespace

std::vector<Graph> small_graph_catalogue(int maxn) {
    if (maxn > 4) throw std::invalid_argument("small_graph_catalogue: capped at 4 vertices");
    std::vector<Graph> out;
    for (int n = 1; n <= maxn; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
        std::vector<Graph> classes;
        for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
            Graph g(n);
            for (size_t b = 0; b < slots.size(); ++b)
                if (mask & (1u << b)) g.add_edge(slots[b].first, slots[b].second);
            bool fresh = true;
            for (const auto& h : classes)
                if (is_isomorphic(g, h)) {
                    fresh = false;
                    break;
                }
            if (fresh) classes.push_back(g);
        }
        for (auto& g : classes) out.push_back(std::move(g));
    }
    return out;
}

ClassAutomaton builtin_class(const std::string& name) {
    ClassAutomaton a;
    if (name == "cycles") {
        a = make_cycle_class(false);
    } else if (name == "cycles-and-paths") {
        a = make_cycle_class(true);
    } else if (name == "directed-cycles") {
        a = make_directed_cycle_class();
    } else if (name.rfind("pathwidth-le", 0) == 0 || name.rfind("treewidth-le", 0) == 0) {
        bool tree = name[0] == 't';
        std::string suffix = name.substr(12);
        if (suffix.empty() || suffix.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("builtin_class: bad width suffix in " + name);
        a = make_width_class(std::stoi(suffix), tree);
    } else {
        throw std::invalid_argument("builtin_class: unknown class " + name);
    }
    a.validate();
    return a;
}

}  // namespace homind
