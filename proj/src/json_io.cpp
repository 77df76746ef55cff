#include "homind/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace homind {

namespace {

// wrap json's own exceptions into invalid_argument with some context
[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Rational> rat_array(const Json& j, size_t expect) {
    if (!j.is_array() || j.size() != expect) bad("rational array of wrong shape");
    std::vector<Rational> out;
    for (const auto& e : j) {
        if (!e.is_string()) bad("rational entries must be strings");
        out.push_back(rat_parse(e.get<std::string>()));
    }
    return out;
}

Json rat_row(const QMatrix& m, size_t r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
    return row;
}

Json matrix_json(const QMatrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows; ++r) rows.push_back(rat_row(m, r));
    return rows;
}

QMatrix matrix_from(const Json& j, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows) bad("matrix of wrong shape");
    QMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        auto vals = rat_array(j.at(r), cols);
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = vals[c];
    }
    return m;
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    j["directed"] = g.directed;
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = edges;
    if (g.coloured()) j["colours"] = g.colours;
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) bad("graph must be an object");
    const Json& n = field(j, "n");
    if (!n.is_number_integer()) bad("graph: 'n' must be an integer");
    bool directed = false;
    if (j.contains("directed")) {
        if (!j.at("directed").is_boolean()) bad("graph: 'directed' must be a boolean");
        directed = j.at("directed").get<bool>();
    }
    Graph g(n.get<int>(), directed);
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) bad("graph: 'edges' must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e.at(0).is_number_integer() ||
            !e.at(1).is_number_integer())
            bad("graph: each edge must be a pair of integers");
        int u = e.at(0).get<int>(), v = e.at(1).get<int>();
        if (u < 0 || u >= g.n || v < 0 || v >= g.n) bad("graph: edge endpoint out of range");
        g.add_edge(u, v);
    }
    if (j.contains("colours")) {
        const Json& cs = j.at("colours");
        if (!cs.is_array() || (int)cs.size() != g.n)
            bad("graph: 'colours' must list one colour per vertex");
        for (const auto& c : cs) {
            if (!c.is_string()) bad("graph: colours must be strings");
            g.colours.push_back(c.get<std::string>());
        }
    }
    g.validate();
    return g;
}

Json mwa_to_json(const MWA& a) {
    Json j;
    j["type"] = "mwa";
    j["alphabet"] = a.alphabet;
    j["states"] = a.states;
    j["alpha"] = rat_row(a.alpha, 0);
    Json trans;
    for (size_t l = 0; l < a.alphabet.size(); ++l) trans[a.alphabet[l]] = matrix_json(a.trans[l]);
    j["transitions"] = trans.is_null() ? Json::object() : trans;
    Json eta = Json::array();
    for (size_t i = 0; i < a.states; ++i) eta.push_back(rat_str(a.eta.at(i, 0)));
    j["eta"] = eta;
    return j;
}

MWA mwa_from_json(const Json& j) {
    if (!j.is_object()) bad("mwa must be an object");
    if (field(j, "type").get<std::string>() != "mwa") bad("expected type 'mwa'");
    MWA a;
    const Json& alph = field(j, "alphabet");
    if (!alph.is_array()) bad("mwa: 'alphabet' must be an array");
    for (const auto& l : alph) {
        if (!l.is_string()) bad("mwa: letters must be strings");
        a.alphabet.push_back(l.get<std::string>());
    }
    const Json& st = field(j, "states");
    if (!st.is_number_unsigned() && !st.is_number_integer()) bad("mwa: 'states' must be an integer");
    long long sll = st.get<long long>();
    if (sll < 0) bad("mwa: 'states' must be nonnegative");
    a.states = (size_t)sll;
    auto alpha = rat_array(field(j, "alpha"), a.states);
    a.alpha = QMatrix(1, a.states);
    for (size_t i = 0; i < a.states; ++i) a.alpha.at(0, i) = alpha[i];
    const Json& trans = field(j, "transitions");
    if (!trans.is_object()) bad("mwa: 'transitions' must be an object");
    for (const auto& name : a.alphabet) {
        if (!trans.contains(name)) bad("mwa: no transition matrix for letter " + name);
        a.trans.push_back(matrix_from(trans.at(name), a.states, a.states));
    }
    if (trans.size() != a.alphabet.size()) bad("mwa: transitions for letters not in the alphabet");
    auto eta = rat_array(field(j, "eta"), a.states);
    a.eta = QMatrix(a.states, 1);
    for (size_t i = 0; i < a.states; ++i) a.eta.at(i, 0) = eta[i];
    a.validate();
    return a;
}

Json mta_to_json(const MTA& a) {
    Json j;
    j["type"] = "mta";
    j["states"] = a.states;
    Json symbols = Json::array();
    for (const auto& s : a.symbols) {
        Json sj;
        sj["name"] = s.name;
        sj["arity"] = s.arity;
        sj["mu"] = matrix_json(s.mu);
        symbols.push_back(sj);
    }
    j["symbols"] = symbols;
    Json eta = Json::array();
    for (size_t i = 0; i < a.states; ++i) eta.push_back(rat_str(a.eta.at(i, 0)));
    j["eta"] = eta;
    return j;
}

MTA mta_from_json(const Json& j) {
    if (!j.is_object()) bad("mta must be an object");
    if (field(j, "type").get<std::string>() != "mta") bad("expected type 'mta'");
    MTA a;
    const Json& st = field(j, "states");
    long long sll = st.is_number() ? st.get<long long>() : -1;
    if (sll < 0) bad("mta: 'states' must be a nonnegative integer");
    a.states = (size_t)sll;
    const Json& symbols = field(j, "symbols");
    if (!symbols.is_array()) bad("mta: 'symbols' must be an array");
    for (const auto& sj : symbols) {
        MTASymbol s;
        s.name = field(sj, "name").get<std::string>();
        s.arity = field(sj, "arity").get<int>();
        if (s.arity < 0 || s.arity > 8) bad("mta: bad arity for " + s.name);
        size_t rows = 1;
        for (int i = 0; i < s.arity; ++i) rows *= a.states;
        s.mu = matrix_from(field(sj, "mu"), rows, a.states);
        a.symbols.push_back(std::move(s));
    }
    auto eta = rat_array(field(j, "eta"), a.states);
    a.eta = QMatrix(a.states, 1);
    for (size_t i = 0; i < a.states; ++i) a.eta.at(i, 0) = eta[i];
    a.validate();
    return a;
}

Json verdict_to_json(const EquivVerdict& v) {
    Json j;
    j["equivalent"] = v.equivalent;
    j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
    if (v.values)
        j["values"] = Json::array({rat_str(v.values->first), rat_str(v.values->second)});
    else
        j["values"] = nullptr;
    j["method"] = v.method;
    if (v.method == "random") j["trials"] = v.trials;
    return j;
}

Json class_automaton_to_json(const ClassAutomaton& a) {
    Json j;
    j["kind"] = a.kind == ClassAutomaton::Kind::Word ? "word" : "tree";
    j["k"] = a.k;
    j["directed"] = a.directed;
    j["states"] = a.states;
    j["initial"] = a.initial;
    j["accepting"] = std::vector<std::string>(a.accepting.begin(), a.accepting.end());
    Json step = Json::object();
    for (const auto& s : a.states) {
        Json row = Json::object();
        for (const auto& [l, t] : a.step.at(s)) row[l] = t;
        step[s] = std::move(row);
    }
    j["step"] = std::move(step);
    if (a.kind == ClassAutomaton::Kind::Tree) {
        Json gs = Json::object();
        for (const auto& s : a.states) {
            Json row = Json::object();
            for (const auto& [s2, t] : a.glue_step.at(s)) row[s2] = t;
            gs[s] = std::move(row);
        }
        j["glue_step"] = std::move(gs);
    }
    Json members = Json::array();
    for (const auto& g : a.small_members) members.push_back(graph_to_json(g));
    j["small_members"] = std::move(members);
    return j;
}

ClassAutomaton class_automaton_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("class automaton: expected an object");
    ClassAutomaton a;
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "word")
        a.kind = ClassAutomaton::Kind::Word;
    else if (kind == "tree")
        a.kind = ClassAutomaton::Kind::Tree;
    else
        throw std::invalid_argument("class automaton: kind must be word or tree");
    a.k = field(j, "k").get<int>();
    if (j.contains("directed")) a.directed = j["directed"].get<bool>();
    for (const auto& s : field(j, "states")) a.states.push_back(s.get<std::string>());
    a.initial = field(j, "initial").get<std::string>();
    for (const auto& s : field(j, "accepting")) a.accepting.insert(s.get<std::string>());
    const Json& step = field(j, "step");
    if (!step.is_object()) throw std::invalid_argument("class automaton: step must be an object");
    for (auto it = step.begin(); it != step.end(); ++it) {
        if (!it.value().is_object())
            throw std::invalid_argument("class automaton: step rows must be objects");
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
            a.step[it.key()][jt.key()] = jt.value().get<std::string>();
    }
    if (j.contains("glue_step")) {
        const Json& gs = j["glue_step"];
        if (!gs.is_object())
            throw std::invalid_argument("class automaton: glue_step must be an object");
        for (auto it = gs.begin(); it != gs.end(); ++it)
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
                a.glue_step[it.key()][jt.key()] = jt.value().get<std::string>();
    }
    if (j.contains("small_members"))
        for (const auto& gj : j["small_members"]) a.small_members.push_back(graph_from_json(gj));
    a.validate();
    return a;
}

Json homind_verdict_to_json(const HomIndVerdict& v) {
    Json j;
    j["indistinguishable"] = v.indistinguishable;
    if (v.witness) {
        j["witness"] = graph_to_json(*v.witness);
        j["hom_counts"] = Json::array({rat_str(v.hom_g), rat_str(v.hom_h)});
        j["witness_source"] = v.witness_source;
    } else {
        j["witness"] = nullptr;
        j["hom_counts"] = nullptr;
        j["witness_source"] = nullptr;
    }
    return j;
}

Json qmatrix_to_json(const QMatrix& m) { return matrix_json(m); }

QMatrix qmatrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix: nonempty array of rows required");
    size_t rows = j.size();
    if (!j.at(0).is_array() || j.at(0).empty()) bad("matrix: rows must be nonempty arrays");
    size_t cols = j.at(0).size();
    QMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        const Json& row = j.at(r);
        if (!row.is_array() || row.size() != cols) bad("matrix: ragged rows");
        for (size_t c = 0; c < cols; ++c) {
            const Json& e = row.at(c);
            if (e.is_number_integer())
                m.at(r, c) = Rational(e.get<long long>());
            else if (e.is_string())
                m.at(r, c) = rat_parse(e.get<std::string>());
            else
                bad("matrix: entries must be integers or rational strings");
        }
    }
    return m;
}

Json circuit_to_json(const Circuit& c) {
    Json gates = Json::array();
    for (const auto& g : c.gates) {
        Json jg;
        jg["label"] = g.label;
        if (!g.children.empty()) jg["children"] = g.children;
        gates.push_back(jg);
    }
    Json j;
    j["gates"] = gates;
    j["output"] = c.output;
    return j;
}

Circuit circuit_from_json(const Json& j) {
    Circuit c;
    const Json& gates = field(j, "gates");
    if (!gates.is_array()) bad("circuit: 'gates' must be an array");
    for (const auto& jg : gates) {
        Circuit::Gate g;
        const Json& lbl = field(jg, "label");
        if (!lbl.is_string()) bad("circuit: gate labels must be strings");
        g.label = lbl.get<std::string>();
        if (g.label == "*") g.label = "x";
        if (jg.contains("children")) {
            const Json& ch = jg.at("children");
            if (!ch.is_array()) bad("circuit: 'children' must be an array");
            for (const auto& x : ch) {
                if (!x.is_number_integer()) bad("circuit: children must be gate indices");
                g.children.push_back(x.get<int>());
            }
        }
        c.gates.push_back(std::move(g));
    }
    if (j.contains("output")) {
        const Json& out = j.at("output");
        if (!out.is_number_integer()) bad("circuit: 'output' must be an integer");
        c.output = out.get<int>();
    } else {
        std::vector<char> used(c.gates.size(), 0);
        for (const auto& g : c.gates)
            for (int x : g.children)
                if (x >= 0 && (size_t)x < used.size()) used[x] = 1;
        c.output = -1;
        for (size_t i = 0; i < used.size(); ++i)
            if (!used[i]) {
                if (c.output >= 0) bad("circuit: several candidate outputs, give 'output'");
                c.output = (int)i;
            }
    }
    c.validate();
    return c;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace homind
