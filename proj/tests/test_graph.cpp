#include "atcert/errors.hpp"
#include "atcert/graph.hpp"
#include "atcert/graph_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace atcert;

namespace {

Graph p3() { return path_graph(3); }

// Every orientation of g, as arc lists.
std::vector<std::vector<Arc>> all_orientations(const Graph& g) {
    std::vector<std::vector<Arc>> out;
    int m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        std::vector<Arc> arcs;
        for (int i = 0; i < m; ++i) {
            const auto& e = g.edge(i);
            arcs.push_back(mask >> i & 1U ? Arc{e.v, e.u} : Arc{e.u, e.v});
        }
        out.push_back(arcs);
    }
    return out;
}

}  // namespace

TEST_CASE("graph construction canonicalises and rejects bad edges") {
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edge(0) == Edge{0, 2});
    CHECK(g.edge(1) == Edge{1, 2});
    CHECK(g.degree(2) == 2);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), MalformedInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), MalformedInput);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), MalformedInput);
}

TEST_CASE("is_matching examples") {
    CHECK(is_matching(p3(), std::vector<Edge>{{0, 1}}));
    CHECK_FALSE(is_matching(p3(), std::vector<Edge>{{0, 1}, {1, 2}}));
    CHECK(is_matching(complete_graph(4), std::vector<Edge>{}));
    CHECK_THROWS_AS(is_matching(p3(), std::vector<Edge>{{0, 2}}), MalformedInput);
}

TEST_CASE("is_forest examples") {
    auto k3 = complete_graph(3);
    CHECK(is_forest(k3, std::vector<Edge>{{0, 1}, {1, 2}}));
    CHECK_FALSE(is_forest(k3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}));
    CHECK(is_forest(k3, std::vector<Edge>{}));
    CHECK_THROWS_AS(is_forest(p3(), std::vector<Edge>{{0, 2}}), MalformedInput);
}

TEST_CASE("is_acyclic_orientation examples") {
    auto k3 = complete_graph(3);
    std::vector<Arc> cyc{{0, 1}, {1, 2}, {2, 0}}, trans{{0, 1}, {0, 2}, {1, 2}};
    CHECK_FALSE(is_acyclic_orientation(Orientation::from_arcs(k3, cyc)));
    CHECK(is_acyclic_orientation(Orientation::from_arcs(k3, trans)));
    CHECK(is_acyclic_orientation(Orientation(Graph(4), {})));
}

TEST_CASE("degeneracy examples") {
    CHECK(degeneracy_order(complete_graph(4)).degeneracy == 3);
    CHECK(degeneracy_order(cycle_graph(4)).degeneracy == 2);
    CHECK(degeneracy_order(path_graph(5)).degeneracy == 1);
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(degeneracy_order(star).degeneracy == 1);
    CHECK(degeneracy_order(star).order.size() == 5);
}

TEST_CASE("delete_edges examples") {
    CHECK(delete_edges(complete_graph(3), std::vector<Edge>{{0, 1}}) == Graph(3, {{0, 2}, {1, 2}}));
    CHECK(delete_edges(complete_graph(4), std::vector<Edge>{}) == complete_graph(4));
    auto c4 = delete_edges(complete_graph(4), std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK_THROWS_AS(delete_edges(p3(), std::vector<Edge>{{0, 2}}), MalformedInput);
}

TEST_CASE("orientation degrees add up and acyclicity agrees with topological order") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : oracle::connected_graphs(n))
            for (const auto& arcs : all_orientations(g)) {
                auto d = Orientation::from_arcs(g, arcs);
                for (int v = 0; v < n; ++v) CHECK(d.out_degree(v) + d.in_degree(v) == g.degree(v));
                CHECK(is_acyclic_orientation(d) == topological_order(d).has_value());
            }
}

TEST_CASE("acyclicity agrees with topological order on every orientation of 5-vertex graphs") {
    long checked = 0;
    for (const auto& g : oracle::connected_graphs(5))
        for (const auto& arcs : all_orientations(g)) {
            auto d = Orientation::from_arcs(g, arcs);
            auto topo = topological_order(d);
            REQUIRE(is_acyclic_orientation(d) == topo.has_value());
            if (topo) {
                std::vector<int> pos(5);
                for (int i = 0; i < 5; ++i) pos[(*topo)[i]] = i;
                for (const auto& a : arcs) REQUIRE(pos[a.tail] < pos[a.head]);
            }
            ++checked;
        }
    CHECK(checked > 3000);
}

TEST_CASE("degeneracy bounds the minimum degree of every induced subgraph") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::connected_graphs(n)) {
            int k = degeneracy_order(g).degeneracy;
            CHECK(k == oracle::peel_degeneracy(g));
            for (std::uint32_t sub = 1; sub < (1U << n); ++sub) {
                std::vector<int> vs;
                for (int v = 0; v < n; ++v)
                    if (sub >> v & 1U) vs.push_back(v);
                auto h = induced_subgraph(g, vs);
                int mindeg = h.vertex_count();
                for (int v = 0; v < h.vertex_count(); ++v) mindeg = std::min(mindeg, h.degree(v));
                REQUIRE(mindeg <= k);
            }
        }
}

TEST_CASE("delete then re-add reproduces the graph") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto g = oracle::random_graph(rng, 7, 15);
        std::vector<Edge> s;
        for (const auto& e : g.edges())
            if (rng() % 3 == 0) s.push_back(e);
        CHECK(add_edges(delete_edges(g, s), s) == g);
    }
}

TEST_CASE("signatures default to positive and restrict by edge") {
    auto k3 = complete_graph(3);
    Signature plus(k3);
    for (int i = 0; i < 3; ++i) CHECK(plus.sign(i) == 1);
    Signature s(k3, {1, -1, 1});
    CHECK(s.sign(0, 2) == -1);
    auto r = s.restrict_to(Graph(3, {{0, 2}}));
    CHECK(r.sign(0) == -1);
    CHECK_THROWS(Signature(k3, {1, 0, 1}));
}

TEST_CASE("wagner graph shape") {
    auto w = wagner_graph();
    CHECK(w.vertex_count() == 8);
    CHECK(w.edge_count() == 12);
    CHECK(w.has_edge(0, 4));
    CHECK(w.has_edge(7, 0));
}

TEST_CASE("graph text format round trip") {
    auto parsed = parse_graph_string("3 2\n0 1\n1 2\n");
    CHECK(parsed.graph == path_graph(3));
    CHECK_FALSE(parsed.signature);
    auto signed_g = parse_graph_string("3 2\n0 1 +\n1 2 -\n");
    REQUIRE(signed_g.signature);
    CHECK(signed_g.signature->sign(1) == -1);
    CHECK(format_graph(signed_g.graph, &*signed_g.signature) == "3 2\n0 1 +\n1 2 -\n");
    CHECK(parse_graph_string(format_graph(wagner_graph())).graph == wagner_graph());
    CHECK(parse_graph_string("3 2\n\n0 1\n\n1 2\n").graph == path_graph(3));
}

TEST_CASE("graph text format errors carry line and column") {
    auto fails_at = [](const std::string& text, int line, int column) {
        try {
            parse_graph_string(text);
        } catch (const MalformedInput& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
            return;
        }
        FAIL("no error for: " << text);
    };
    fails_at("3 2\n0 1\n0 1\n", 3, 1);   // duplicate
    fails_at("3 1\n1 1\n", 2, 3);        // loop
    fails_at("3 1\n1 0\n", 2, 3);        // u > v
    fails_at("3 1\n0 3\n", 2, 3);        // out of range
    fails_at("3 1\n0 x\n", 2, 3);        // not a number
    fails_at("3 2\n0 1\n1 2 +\n", 3, 5); // mixed columns
    fails_at("3 1\n0 1 *\n", 2, 5);      // bad sign
    fails_at("3 2\n0 1\n", 3, 1);        // too few lines
    CHECK_THROWS_AS(parse_graph_string(""), MalformedInput);
    CHECK_THROWS_AS(parse_graph_string("2 1\n0 1\n0 1\n"), MalformedInput);  // trailing content
}
