#include <random>

#include "doctest.h"
#include "homind/automata.hpp"
#include "homind/json_io.hpp"
#include "support/words.hpp"

using namespace homind;

namespace {

// the graph automaton: states are k-tuples of host vertices, letters act by
// their homomorphism matrices, boundary vectors are all ones
MWA graph_mwa_explicit(const Graph& G, int k, bool directed = false) {
    MWA a;
    size_t states = 1;
    for (int i = 0; i < k; ++i) states *= (size_t)G.n;
    a.states = states;
    a.alpha = QMatrix(1, states);
    a.eta = QMatrix(states, 1);
    for (size_t i = 0; i < states; ++i) a.alpha.at(0, i) = a.eta.at(i, 0) = 1;
    for (auto& gen : generators(k, directed)) {
        a.alphabet.push_back(gen.name);
        a.trans.push_back(hom_matrix(gen.op, G));
    }
    return a;
}

MTA graph_mta_explicit(const Graph& G, int k, bool directed = false) {
    MTA a;
    size_t states = 1;
    for (int i = 0; i < k; ++i) states *= (size_t)G.n;
    a.states = states;
    a.eta = QMatrix(states, 1);
    for (size_t i = 0; i < states; ++i) a.eta.at(i, 0) = 1;
    QMatrix unit(1, states);
    for (size_t i = 0; i < states; ++i) unit.at(0, i) = 1;
    a.symbols.push_back({"1", 0, unit});
    QMatrix g(states * states, states);
    for (size_t i = 0; i < states; ++i) g.at(i * states + i, i) = 1;
    a.symbols.push_back({"glue", 2, g});
    for (auto& gen : generators(k, directed))
        a.symbols.push_back({gen.name, 1, mat_transpose(hom_matrix(gen.op, G))});
    return a;
}

MWA random_mwa(std::mt19937_64& rng, const std::vector<std::string>& alphabet, size_t states) {
    MWA a;
    a.alphabet = alphabet;
    a.states = states;
    auto rnd = [&]() { return Rational((int)(rng() % 7) - 3); };
    a.alpha = QMatrix(1, states);
    a.eta = QMatrix(states, 1);
    for (size_t i = 0; i < states; ++i) {
        a.alpha.at(0, i) = rnd();
        a.eta.at(i, 0) = rnd();
    }
    for (size_t l = 0; l < alphabet.size(); ++l) {
        QMatrix m(states, states);
        for (size_t r = 0; r < states; ++r)
            for (size_t c = 0; c < states; ++c) m.at(r, c) = rnd();
        a.trans.push_back(m);
    }
    return a;
}

std::vector<std::string> random_word(std::mt19937_64& rng,
                                     const std::vector<std::string>& alphabet, int maxlen) {
    std::vector<std::string> w;
    int len = (int)(rng() % (maxlen + 1));
    for (int i = 0; i < len; ++i) w.push_back(alphabet[rng() % alphabet.size()]);
    return w;
}

}  // namespace

TEST_CASE("mwa eval equals pinned hom counting") {
    std::mt19937_64 rng(41);
    for (bool directed : {false, true}) {
        Graph G = directed ? make_cycle(3, true) : make_cycle(4);
        if (directed) G.add_edge(0, 0);
        int k = 2;
        auto A = graph_mwa_explicit(G, k, directed);
        A.validate();
        std::vector<std::string> names = A.alphabet;
        for (int trial = 0; trial < 12; ++trial) {
            auto w = random_word(rng, names, 5);
            auto X = pw_decode(w, k, directed);
            CHECK(mwa_eval(A, w) == Rational(hom_count(X.g, G)));
        }
    }
    // width 3 against the hand-built cycle words
    auto G = make_complete(3);
    auto A = graph_mwa_explicit(G, 3);
    for (int m = 3; m <= 6; ++m)
        CHECK(mwa_eval(A, oracles::cycle_word(m)) == Rational(hom_count(make_cycle(m), G)));
}

TEST_CASE("mta eval equals pinned hom counting") {
    auto G = make_cycle(4);
    auto A = graph_mta_explicit(G, 2);
    A.validate();
    for (const char* s :
         {"1", "A12(1)", "J1(A12(1))", "glue(A12(1),A12(1))", "A12(glue(J1(A12(1)),A12(1)))",
          "glue(J1(1),glue(A12(1),J2(1)))"}) {
        auto t = term_parse(s);
        auto X = tw_decode(t, 2);
        CHECK(mta_eval(A, t) == Rational(hom_count(X.g, G)));
    }
    CHECK_THROWS_AS(mta_eval(A, term_parse("glue(1,1,1)")), std::invalid_argument);
    CHECK_THROWS_AS(mta_eval(A, term_parse("nosuch(1)")), std::invalid_argument);
}

TEST_CASE("mwa closure operations") {
    std::mt19937_64 rng(43);
    std::vector<std::string> alph = {"a", "b"};
    for (int trial = 0; trial < 10; ++trial) {
        auto A = random_mwa(rng, alph, 1 + rng() % 3);
        auto B = random_mwa(rng, alph, 1 + rng() % 3);
        auto S = mwa_sum(A, B);
        auto D = mwa_difference(A, B);
        auto P = mwa_product(A, B);
        auto Z = mwa_zero(alph);
        S.validate();
        D.validate();
        P.validate();
        Z.validate();
        CHECK(S.states == A.states + B.states);
        CHECK(P.states == A.states * B.states);
        CHECK(Z.states == 0);
        for (int i = 0; i < 6; ++i) {
            auto w = random_word(rng, alph, 6);
            auto va = mwa_eval(A, w), vb = mwa_eval(B, w);
            CHECK(mwa_eval(S, w) == va + vb);
            CHECK(mwa_eval(D, w) == va - vb);
            CHECK(mwa_eval(P, w) == va * vb);
            CHECK(mwa_eval(Z, w) == 0);
        }
    }
    auto A = random_mwa(rng, alph, 2);
    auto C = random_mwa(rng, {"a"}, 2);
    CHECK_THROWS_AS(mwa_sum(A, C), std::invalid_argument);
    CHECK_THROWS_AS(mwa_eval(A, {"nosuch"}), std::invalid_argument);
}

TEST_CASE("mta closure operations") {
    // use small graph automata as a source of interesting tree automata
    auto A = graph_mta_explicit(make_path(2), 2);
    auto B = graph_mta_explicit(make_cycle(3), 2);
    auto S = mta_sum(A, B);
    auto D = mta_difference(A, B);
    auto P = mta_product(A, B);
    auto Z = mta_zero(mta_signature(A));
    S.validate();
    D.validate();
    P.validate();
    Z.validate();
    for (const char* s :
         {"1", "A12(1)", "glue(A12(1),J1(A12(1)))", "A12(glue(J2(A12(1)),A12(1)))"}) {
        auto t = term_parse(s);
        auto va = mta_eval(A, t), vb = mta_eval(B, t);
        CHECK(mta_eval(S, t) == va + vb);
        CHECK(mta_eval(D, t) == va - vb);
        CHECK(mta_eval(P, t) == va * vb);
        CHECK(mta_eval(Z, t) == 0);
    }
    CHECK_THROWS_AS(mta_sum(A, mta_zero({{"1", 0}})), std::invalid_argument);
}

TEST_CASE("graph json round trip") {
    auto g = make_cycle(5);
    auto j = graph_to_json(g);
    auto g2 = graph_from_json(j);
    CHECK(g2.n == 5);
    CHECK(g2.edges == g.edges);
    CHECK(!g2.directed);

    Graph d(3, true);
    d.add_edge(0, 0);
    d.add_edge(2, 1);
    d.colours = {"x", "y", "y"};
    auto d2 = graph_from_json(graph_to_json(d));
    CHECK(d2.directed);
    CHECK(d2.edges == d.edges);
    CHECK(d2.colours == d.colours);

    // "directed" defaults to false
    auto plain = graph_from_json(Json::parse(R"({"n":2,"edges":[[0,1]]})"));
    CHECK(!plain.directed);
    CHECK(plain.edge_count() == 1);

    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,2]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,1]],"colours":["a"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("automata json round trips") {
    std::mt19937_64 rng(47);
    auto A = random_mwa(rng, {"A12", "J1", "J2"}, 3);
    auto j = mwa_to_json(A);
    auto A2 = mwa_from_json(j);
    CHECK(A2.alphabet == A.alphabet);
    CHECK(A2.states == A.states);
    for (int i = 0; i < 8; ++i) {
        auto w = random_word(rng, A.alphabet, 5);
        CHECK(mwa_eval(A, w) == mwa_eval(A2, w));
    }
    CHECK(mwa_to_json(A2) == j);

    // zero automaton survives the trip
    auto Z = mwa_from_json(mwa_to_json(mwa_zero({"a"})));
    CHECK(Z.states == 0);
    CHECK(mwa_eval(Z, {"a", "a"}) == 0);

    auto T = graph_mta_explicit(make_path(2), 2);
    auto tj = mta_to_json(T);
    auto T2 = mta_from_json(tj);
    for (const char* s : {"1", "glue(A12(1),J1(1))"}) {
        auto t = term_parse(s);
        CHECK(mta_eval(T, t) == mta_eval(T2, t));
    }
    CHECK(mta_to_json(T2) == tj);

    // shape violations are rejected
    auto broken = j;
    broken["alpha"] = Json::array({"1"});
    CHECK_THROWS_AS(mwa_from_json(broken), std::invalid_argument);
    broken = j;
    broken["transitions"].erase("J1");
    CHECK_THROWS_AS(mwa_from_json(broken), std::invalid_argument);
    broken = j;
    broken["eta"][0] = "1/0";
    CHECK_THROWS_AS(mwa_from_json(broken), std::invalid_argument);
}
