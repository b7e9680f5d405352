#include <random>
#include <stdexcept>

#include "doctest.h"
#include "reference_oracles.hpp"
#include "rmk/enumerate.hpp"
#include "rmk/structure.hpp"

using namespace rmk;

namespace {
Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}
}  // namespace

TEST_CASE("web validity on the seeds and small non-webs") {
    Web chord = web_seed_chord();
    CHECK(is_web(chord.h, chord.quad));
    CHECK(chord.triangles().size() == 2);

    Web center = web_seed_center();
    CHECK(is_web(center.h, center.quad));
    CHECK(center.triangles().size() == 4);

    // K4 has no quadrilateral outer face
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!is_web(k4, {0, 1, 2, 3}));
    // plain quad: inner face not a triangle
    CHECK(!is_web(cycle(4), {0, 1, 2, 3}));
    // stacked vertex leaves a non-facial triangle
    Graph stacked(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {4, 0}, {4, 1}, {4, 2}});
    CHECK(!is_web(stacked, {0, 1, 2, 3}));
}

TEST_CASE("web ops preserve the web conditions") {
    Web w = web_seed_chord();
    std::optional<Web> split = web_split_edge(w, {0, 2});
    REQUIRE(split);
    CHECK(split->h.n() == 5);
    CHECK(is_web(split->h, split->quad));
    // splitting a quad border edge is refused
    CHECK(!web_split_edge(w, {0, 1}));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Web r = random_web(4 + static_cast<int>(rng() % 7), rng);
        CHECK(is_web(r.h, r.quad));
        CHECK(r.h.edge_count() == 3 * r.h.n() - 7);
    }
}

TEST_CASE("web envelope certifies a plain cycle") {
    Graph c6 = cycle(6);
    std::optional<Web> w = web_envelope(c6, {0, 1, 2, 3});
    REQUIRE(w);
    CHECK(is_web(w->h, w->quad));
    // the instance is a spanning subgraph of its envelope
    for (const Edge& e : c6.edges()) CHECK(w->h.has_edge(e.u, e.v));
}

TEST_CASE("class graphs match the catalogue") {
    ClassInstance a = build_class_graph('A', std::nullopt, {});
    CHECK(a.rg.graph.n() == 5);
    CHECK(a.rg.graph.edge_count() == 7);

    ClassInstance b = build_class_graph('B', std::nullopt, {});
    CHECK(b.rg.graph.n() == 6);
    CHECK(b.rg.graph.edge_count() == 9);

    ClassInstance c = build_class_graph('C', std::nullopt, {});
    CHECK(c.rg.graph.n() == 7);
    CHECK(c.rg.graph.edge_count() == 11);

    ClassInstance d = build_class_graph('D', web_seed_chord(), {});
    CHECK(d.rg.graph.n() == 4);
    CHECK(d.rg.graph.edge_count() == 5);

    ClassInstance e = build_class_graph('E', web_seed_chord(), {});
    CHECK(e.rg.graph.n() == 6);
    ClassInstance f = build_class_graph('F', web_seed_chord(), {});
    CHECK(f.rg.graph.n() == 8);

    // clique attachments become cliques joined to their triangle
    ClassInstance ac = build_class_graph('A', std::nullopt, {{0, 2}});
    CHECK(ac.rg.graph.n() == 7);
    const CliqueAttachment& att = ac.cert.cliques[0];
    for (int v : att.vertices)
        for (int t : att.triangle) CHECK(ac.rg.graph.has_edge(v, t));
    CHECK(ac.rg.graph.has_edge(att.vertices[0], att.vertices[1]));
}

TEST_CASE("generated class instances are K4(X)-free and reproducible") {
    std::mt19937_64 seeds(99);
    for (char cls : {'A', 'B', 'C', 'D', 'E', 'F'}) {
        for (int i = 0; i < 12; ++i) {
            std::uint64_t s = seeds();
            ClassInstance inst = generate_class(cls, s, 10, 2);
            ClassInstance again = generate_class(cls, s, 10, 2);
            CHECK(inst.rg.graph == again.rg.graph);
            OracleResult r = find_rooted_minor(inst.rg, builtin_pattern(PatternId::K4X));
            CHECK(r.no());
        }
    }
}

TEST_CASE("cycle through roots") {
    RootedGraph c4(cycle(4), {0, 1, 2, 3});
    std::optional<CycleView> c = cycle_through_roots(c4);
    REQUIRE(c);
    CHECK(c->order.size() == 4);

    // bowtie is not 2-connected: precondition error
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(cycle_through_roots(RootedGraph(bowtie, {0, 1, 3, 4})),
                    std::invalid_argument);

    // every generated 2-connected web subgraph has a root cycle
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        ClassInstance inst = generate_class('D', rng(), 9, 1);
        if (vertex_connectivity(inst.rg.graph) < 2) continue;
        CHECK(cycle_through_roots(inst.rg).has_value());
    }
}

TEST_CASE("planted chain instances") {
    for (int links : {1, 2, 3, 4}) {
        for (bool block : {false, true}) {
            if (links == 1 && block) continue;
            PlantedInstance inst = plant_chain(links, block);
            INFO("links=", links, " block=", block);
            REQUIRE(inst.web);
            CHECK(is_web(inst.web->h, inst.web->quad));
            for (const Edge& e : inst.rg.graph.edges())
                CHECK(inst.web->h.has_edge(e.u, e.v));
            CHECK(vertex_connectivity(inst.rg.graph) >= 2);
            // all planted chains are W4-free and K4-free
            CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::K4X)).no());
            CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::W4X)).no());
            // the detector reports a chain witness on every cycle
            W4Decision d = decide_w4_by_obstructions(inst.rg);
            CHECK(d.has_w4 == Outcome::No);
            for (const ObstructionWitness& w : d.witnesses) CHECK(w.kind == 1);
        }
    }
}

TEST_CASE("planted chain with padding") {
    PlantedInstance inst = plant_chain(2, true, 2);
    CHECK(inst.rg.graph.n() == 10);
    REQUIRE(inst.web);
    CHECK(is_web(inst.web->h, inst.web->quad));
    W4Decision d = decide_w4_by_obstructions(inst.rg);
    CHECK(d.has_w4 == Outcome::No);
}

TEST_CASE("planted rooted triangle is a pure kind-2 instance") {
    PlantedInstance inst = plant_triangle_rooted();
    REQUIRE(inst.web);
    CHECK(is_web(inst.web->h, inst.web->quad));
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::K4X)).no());
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::W4X)).no());
    W4Decision d = decide_w4_by_obstructions(inst.rg);
    REQUIRE(d.has_w4 == Outcome::No);
    bool saw2 = false;
    for (const ObstructionWitness& w : d.witnesses) {
        CHECK(w.kind >= 2);
        if (w.kind == 2) saw2 = true;
    }
    CHECK(saw2);
}

TEST_CASE("planted triangle-chain is a pure kind-3 instance") {
    PlantedInstance inst = plant_triangle_with_chain();
    REQUIRE(inst.web);
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::K4X)).no());
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::W4X)).no());
    W4Decision d = decide_w4_by_obstructions(inst.rg);
    REQUIRE(d.has_w4 == Outcome::No);
    bool saw3 = false;
    for (const ObstructionWitness& w : d.witnesses) {
        CHECK(w.kind >= 3);
        if (w.kind == 3) saw3 = true;
    }
    CHECK(saw3);
}

TEST_CASE("planted double-triangle chain is a pure kind-4 instance") {
    PlantedInstance inst = plant_double_triangle_chain();
    REQUIRE(inst.web);
    CHECK(is_web(inst.web->h, inst.web->quad));
    for (const Edge& e : inst.rg.graph.edges()) CHECK(inst.web->h.has_edge(e.u, e.v));
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::K4X)).no());
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::W4X)).no());
    W4Decision d = decide_w4_by_obstructions(inst.rg);
    REQUIRE(d.has_w4 == Outcome::No);
    bool saw4 = false;
    for (const ObstructionWitness& w : d.witnesses) {
        CHECK(w.kind >= 4);
        if (w.kind == 4) saw4 = true;
    }
    CHECK(saw4);
}

TEST_CASE("planted linked triangles is a pure kind-5 instance") {
    PlantedInstance inst = plant_linked_triangles();
    REQUIRE(inst.web);
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::K4X)).no());
    CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::W4X)).no());
    W4Decision d = decide_w4_by_obstructions(inst.rg);
    REQUIRE(d.has_w4 == Outcome::No);
    bool saw5 = false;
    for (const ObstructionWitness& w : d.witnesses) {
        CHECK(w.kind == 5);
        saw5 = true;
    }
    CHECK(saw5);
}

TEST_CASE("obstruction decision matches the oracle on generated webs") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int i = 0; i < 160; ++i) {
        ClassInstance inst = generate_class('D', rng(), 9, 1);
        if (vertex_connectivity(inst.rg.graph) < 2) continue;
        if (!find_rooted_minor(inst.rg, builtin_pattern(PatternId::K4X)).no()) continue;
        W4Decision d = decide_w4_by_obstructions(inst.rg);
        OracleResult o = find_rooted_minor(inst.rg, builtin_pattern(PatternId::W4X));
        REQUIRE(!o.unknown());
        if (d.has_w4 == Outcome::Unknown) continue;
        INFO("graph6 ", encode_graph6(inst.rg.graph));
        CHECK((d.has_w4 == Outcome::Yes) == o.yes());
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("k22 paths: small cases") {
    // C4 in order a,c,b,d: pairs {a,b},{c,d} sit crosswise
    CHECK(k22_via_disjoint_paths(cycle(4), 0, 2, 1, 3));
    // path a-b-c-d never
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!k22_via_disjoint_paths(p4, 0, 1, 2, 3));
    CHECK_THROWS_AS(k22_via_disjoint_paths(p4, 0, 0, 2, 3), std::invalid_argument);

    // paired pattern plus the s1s2 edge: always present
    Graph h(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k22_via_disjoint_paths(h, 0, 1, 2, 3));
}

TEST_CASE("k22 decision equals the oracle exhaustively to n=6") {
    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : filter_connected(all_graphs_upto_iso(n)))
            for (const std::vector<int>& rs : root_subsets(n, 4)) {
                const int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                for (const int* pp : pairing) {
                    int a = rs[pp[0]], b = rs[pp[1]], c = rs[pp[2]], d = rs[pp[3]];
                    RootedGraph rg(g, {a, b, c, d});
                    bool structural = k22_via_disjoint_paths(g, a, b, c, d);
                    OracleResult o = find_rooted_minor(rg, builtin_pattern(PatternId::K22X));
                    REQUIRE(!o.unknown());
                    CHECK(structural == o.yes());
                }
            }
}

TEST_CASE("webs rooted in outer order never contain the paired pattern") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 60; ++i) {
        ClassInstance inst = generate_class('D', rng(), 9, 2);
        if (vertex_connectivity(inst.rg.graph) < 2) continue;
        const std::vector<int>& q = inst.rg.roots;
        // roots in quad order t1,t2,s1,s2: pairs are (q0,q1) and (q2,q3)
        CHECK(!k22_via_disjoint_paths(inst.rg.graph, q[0], q[1], q[2], q[3]));
    }
}

TEST_CASE("decide_k24 on the catalogue") {
    std::mt19937_64 rng(321);
    for (int i = 0; i < 25; ++i) {
        ClassInstance a = generate_class('A', rng(), 9, 2);
        if (vertex_connectivity(a.rg.graph) >= 2) {
            StructuralDecision d = decide_k24(a.rg, &a.cert);
            CHECK(d.outcome == Outcome::No);
            CHECK(find_rooted_minor(a.rg, builtin_pattern(PatternId::K24X)).no());
        }
        for (char cls : {'B', 'C'}) {
            ClassInstance inst = generate_class(cls, rng(), 10, 2);
            if (vertex_connectivity(inst.rg.graph) < 2) continue;
            StructuralDecision d = decide_k24(inst.rg, &inst.cert);
            CHECK(d.outcome == Outcome::Yes);
            CHECK(find_rooted_minor(inst.rg, builtin_pattern(PatternId::K24X)).yes());
        }
    }
}

TEST_CASE("decide_k24 agrees with the oracle on web and E/F instances") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 60; ++i) {
        char cls = "DEF"[rng() % 3];
        ClassInstance inst = generate_class(cls, rng(), 10, 2);
        if (vertex_connectivity(inst.rg.graph) < 2) continue;
        StructuralDecision d = decide_k24(inst.rg, &inst.cert);
        OracleResult o = find_rooted_minor(inst.rg, builtin_pattern(PatternId::K24X));
        REQUIRE(!o.unknown());
        if (d.outcome == Outcome::Unknown) continue;
        INFO("class ", cls, " graph6 ", encode_graph6(inst.rg.graph));
        CHECK((d.outcome == Outcome::Yes) == o.yes());
    }
}

TEST_CASE("find_lprime matches the oracle on its own graph and small cases") {
    const Pattern& lpx = builtin_pattern(PatternId::LpX);
    RootedGraph lp(lpx.h, {0, 1, 2});
    LPrimeResult r = find_lprime(lpx.h, {0, 1, 2});
    REQUIRE(r.outcome == Outcome::Yes);
    CHECK(verify_lprime_witness(lpx.h, {0, 1, 2}, *r.witness));
    CHECK(find_rooted_minor(lp, lpx).yes());

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(find_lprime(k4, {0, 1, 2}).outcome == Outcome::No);
    CHECK(find_lprime(cycle(6), {0, 2, 4}).outcome == Outcome::No);
}

TEST_CASE("find_lprime equals the oracle on random graphs") {
    std::mt19937_64 rng(1234);
    const Pattern& lpx = builtin_pattern(PatternId::LpX);
    int yes = 0;
    for (int i = 0; i < 50; ++i) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_connected_graph(n, 0.42, rng);
        std::array<int, 3> roots{0, 1, 2};
        LPrimeResult r = find_lprime(g, roots);
        OracleResult o = find_rooted_minor(RootedGraph(g, {0, 1, 2}), lpx);
        REQUIRE(!o.unknown());
        if (r.outcome == Outcome::Unknown) continue;
        INFO("graph6 ", encode_graph6(g));
        CHECK((r.outcome == Outcome::Yes) == o.yes());
        if (r.outcome == Outcome::Yes) {
            CHECK(verify_lprime_witness(g, roots, *r.witness));
            ++yes;
        }
    }
    CHECK(yes > 0);
}

TEST_CASE("three-connected webs: outer roots are k4x-free, an interior root is not") {
    // quad + centre, with a clique fattening the interior
    ClassInstance ci = build_class_graph('D', web_seed_center(), {{0, 2}});
    const Graph& g = ci.rg.graph;
    REQUIRE(vertex_connectivity(g) >= 3);
    CHECK(find_rooted_minor(ci.rg, builtin_pattern(PatternId::K4X)).no());
    // swapping a quad root for a clique vertex yields the minor
    int clique_vertex = ci.cert.cliques[0].vertices[0];
    RootedGraph moved(g, {0, 1, 2, clique_vertex});
    CHECK(find_rooted_minor(moved, builtin_pattern(PatternId::K4X)).yes());
    // and the centre works too
    RootedGraph centre(g, {0, 1, 2, 4});
    CHECK(find_rooted_minor(centre, builtin_pattern(PatternId::K4X)).yes());
}

TEST_CASE("find_lprime equals the oracle on generated web subgraphs") {
    std::mt19937_64 rng(777);
    const Pattern& lpx = builtin_pattern(PatternId::LpX);
    int done = 0, yes = 0;
    for (int i = 0; i < 60 && done < 40; ++i) {
        ClassInstance inst = generate_class('D', rng(), 10, 2);
        const Graph& g = inst.rg.graph;
        if (vertex_connectivity(g) < 2) continue;
        std::array<int, 3> roots{0, 1, 2};
        LPrimeResult r = find_lprime(g, roots);
        OracleResult o = find_rooted_minor(RootedGraph(g, {0, 1, 2}), lpx);
        REQUIRE(!o.unknown());
        if (r.outcome == Outcome::Unknown) continue;
        INFO("graph6 ", encode_graph6(g));
        CHECK((r.outcome == Outcome::Yes) == o.yes());
        if (r.outcome == Outcome::Yes) {
            CHECK(verify_lprime_witness(g, roots, *r.witness));
            CHECK(lprime_witness_to_json(*r.witness).find("\"c1\"") != std::string::npos);
            ++yes;
        }
        ++done;
    }
    CHECK(done >= 30);
    CHECK(yes > 0);
}

TEST_CASE("crossing separations on a planted web cross as predicted") {
    PlantedInstance p = plant_chain(4, false, 0);
    const Graph& g = p.rg.graph;
    auto seps = enumerate_2_separations(g);
    int crossed = 0;
    for (const auto& f1 : seps)
        for (const auto& f2 : seps) {
            const Separation &s1 = f1.sep, &s2 = f2.sep;
            if (s1.order() != 2 || s2.order() != 2) continue;
            if (s1.boundary() & s2.boundary()) continue;
            std::vector<int> b2 = to_vector(s2.boundary());
            std::vector<int> b1 = to_vector(s1.boundary());
            bool crossing =
                ((contains(s1.strict_a(), b2[0]) && contains(s1.strict_b(), b2[1])) ||
                 (contains(s1.strict_a(), b2[1]) && contains(s1.strict_b(), b2[0]))) &&
                ((contains(s2.strict_a(), b1[0]) && contains(s2.strict_b(), b1[1])) ||
                 (contains(s2.strict_a(), b1[1]) && contains(s2.strict_b(), b1[0])));
            if (!crossing) continue;
            Separation out = submodular_cross(g, s1, s2);
            CHECK(is_separation(g, out));
            CHECK(out.order() == 2);
            CHECK((out.a & ~s1.a) == 0);
            CHECK((s1.b & ~out.b) == 0);
            ++crossed;
        }
    CHECK(crossed > 0);
}
