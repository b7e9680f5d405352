#include <random>
#include <stdexcept>

#include "doctest.h"
#include "reference_oracles.hpp"
#include "rmk/enumerate.hpp"
#include "rmk/graph.hpp"

using namespace rmk;

namespace {
Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}
Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}
}  // namespace

TEST_CASE("graph6 decodes the known records") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == complete(4));

    Graph k3 = parse_graph6("Bw");
    CHECK(k3.n() == 3);
    CHECK(k3 == complete(3));

    CHECK(parse_graph6(">>graph6<<C~") == complete(4));
}

TEST_CASE("graph6 rejects malformed records with byte offsets") {
    // "D??" is the valid empty graph on 5 vertices (10 bits -> 2 data bytes),
    // per the reference encoder; length errors sit on either side of it
    CHECK(parse_graph6("D??") == Graph(5, {}));
    CHECK(refori::graph6_reference(5, {}) == "D??");
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);    // truncated
    CHECK_THROWS_AS(parse_graph6("D???"), ParseError);  // trailing garbage
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C\x1f"), ParseError);  // byte below '?'
    try {
        parse_graph6("D?");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("graph6 encoder matches the independent reference encoder") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<Edge> edges;
        std::vector<std::pair<int, int>> ref_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) {
                    edges.emplace_back(u, v);
                    ref_edges.emplace_back(u, v);
                }
        Graph g(n, edges);
        CHECK(encode_graph6(g) == refori::graph6_reference(n, ref_edges));
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("contract_edge on the small cases") {
    CHECK(contract_edge(complete(3), {0, 1}) == complete(2));
    CHECK(contract_edge(cycle(4), {0, 1}) == complete(3));
    CHECK(contract_edge(complete(4), {2, 3}) == complete(3));
    CHECK_THROWS_AS(contract_edge(cycle(4), {0, 2}), std::invalid_argument);
}

TEST_CASE("contraction never grows and stays simple") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_connected_graph(3 + rng() % 6, 0.5, rng);
        Edge e = g.edges()[rng() % g.edges().size()];
        Graph c = contract_edge(g, e);
        CHECK(c.n() == g.n() - 1);
        for (const Edge& f : c.edges()) {
            CHECK(f.u != f.v);
            CHECK(f.v < c.n());
        }
    }
}

TEST_CASE("induced subgraphs") {
    Graph k4 = complete(4);
    CHECK(induced_subgraph(k4, bit(0) | bit(1) | bit(3)).graph == complete(3));
    Graph c4 = cycle(4);
    InducedSubgraph p = induced_subgraph(c4, bit(0) | bit(1) | bit(2));
    CHECK(p.graph.edge_count() == 2);  // path a-b-c
    CHECK(induced_subgraph(c4, 0).graph.n() == 0);
    CHECK(induced_subgraph(c4, c4.all_vertices()).graph == c4);
    CHECK_THROWS_AS(induced_subgraph(c4, bit(5)), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    Graph g = cycle(5);
    CHECK(parse_edge_list(encode_edge_list(g)) == g);
    CHECK_THROWS_AS(parse_edge_list("3\n0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 5"), ParseError);
}

TEST_CASE("dot output flags the roots") {
    RootedGraph rg(cycle(4), {0, 1, 2, 3});
    std::string dot = write_dot(rg);
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("v0 [shape=box") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);

    RootedGraph k3(Graph(3, {{0, 1}, {1, 2}, {0, 2}}), {0, 1, 2});
    CHECK(write_dot(k3).find("--") != std::string::npos);

    std::string empty = write_dot(RootedGraph(Graph(3, {}), {0, 1, 2}));
    CHECK(empty.find("--") == std::string::npos);
}

TEST_CASE("canonical enumeration counts the known graph numbers") {
    CHECK(all_graphs_upto_iso(2).size() == 2);
    CHECK(all_graphs_upto_iso(3).size() == 4);
    CHECK(all_graphs_upto_iso(4).size() == 11);
    CHECK(all_graphs_upto_iso(5).size() == 34);
    CHECK(all_graphs_upto_iso(6).size() == 156);
    CHECK(filter_connected(all_graphs_upto_iso(5)).size() == 21);
    CHECK(filter_connected(all_graphs_upto_iso(6)).size() == 112);
}

TEST_CASE("graph6 long length prefix at the vertex cap") {
    std::mt19937_64 rng(63);
    for (int n : {63, 64}) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 7 == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        std::string rec = encode_graph6(g);
        CHECK(static_cast<unsigned char>(rec[0]) == 126);
        CHECK(parse_graph6(rec) == g);
    }
    CHECK_THROWS_AS(parse_graph6("~??B??"), ParseError);  // 66 vertices: over the cap
}
