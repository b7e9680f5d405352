#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rmk/enumerate.hpp"
#include "rmk/reductions.hpp"

using namespace rmk;

namespace {
Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

OracleResult reduced_answer(const Instance& inst) {
    FixpointResult fr = fixpoint_reduce(inst);
    return evaluate(*fr.tree);
}

PatternId id_of(const std::string& name) {
    return name == "k4x"    ? PatternId::K4X
           : name == "w4x"  ? PatternId::W4X
           : name == "k24x" ? PatternId::K24X
           : name == "k22x" ? PatternId::K22X
           : name == "lx"   ? PatternId::LX
                            : PatternId::LpX;
}
}  // namespace

TEST_CASE("cut rewrites") {
    // bowtie, roots split two and two across the cut vertex: forced no
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    Instance split{RootedGraph(bowtie, {0, 1, 3, 4}), PatternId::K4X};
    std::optional<ReductionStep> step = reduce_cut_vertex(split);
    REQUIRE(step);
    CHECK(step->combine == Combine::ForcedNo);

    // root at the cut vertex, remaining roots on both sides: also forced no
    Instance at_cut{RootedGraph(bowtie, {0, 1, 2, 3}), PatternId::K4X};
    step = reduce_cut_vertex(at_cut);
    REQUIRE(step);
    CHECK(step->combine == Combine::ForcedNo);

    // all roots in one block: the pendant block is dropped
    Graph k4_pendant(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
    Instance oneside{RootedGraph(k4_pendant, {0, 1, 2, 3}), PatternId::K4X};
    step = reduce_cut_vertex(oneside);
    REQUIRE(step);
    CHECK(step->combine == Combine::Same);
    REQUIRE(step->children.size() == 1);
    CHECK(step->children[0].rg.graph.n() == 4);

    // far root replaced by the cut vertex
    Graph far_root(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    Instance far{RootedGraph(far_root, {0, 1, 2, 4}), PatternId::K4X};
    step = reduce_cut_vertex(far);
    REQUIRE(step);
    CHECK(step->combine == Combine::Same);
    REQUIRE(step->children.size() == 1);
    // child is the K4 block with the cut vertex standing in for the far root
    CHECK(step->children[0].rg.roots == std::vector<int>{0, 1, 2, 3});
    CHECK(find_rooted_minor(step->children[0].rg, builtin_pattern(PatternId::K4X)).yes());
}

TEST_CASE("2-separation rewrites for the wheel pattern") {
    // C4, roots in order, boundary {1,3}: two boundary roots, one root each
    // side: forced no
    Instance c4{RootedGraph(cycle(4), {0, 1, 2, 3}), PatternId::W4X};
    std::optional<ReductionStep> step = reduce_2_separation(c4);
    REQUIRE(step);
    CHECK(step->combine == Combine::ForcedNo);

    FixpointResult fr = fixpoint_reduce(c4);
    CHECK(fr.trace.steps.size() == 1);
    CHECK(evaluate(*fr.tree).no());

    // 2+2 split across a root-free boundary: or-combine
    Graph dd(6, {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    Instance two{RootedGraph(dd, {0, 1, 2, 3}), PatternId::W4X};
    step = reduce_2_separation(two);
    REQUIRE(step);
    CHECK(step->combine == Combine::Or);
    CHECK(step->children.size() == 2);
}

TEST_CASE("all-one-side rewrite keeps the oracle answer") {
    // C4 plus an apex over an edge, all roots on the cycle
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 1}, {4, 2}});
    for (PatternId pid : {PatternId::K4X, PatternId::W4X, PatternId::K22X, PatternId::K24X,
                          PatternId::LX}) {
        Instance inst{RootedGraph(g, {0, 1, 2, 3}), pid};
        OracleResult direct = find_rooted_minor(inst.rg, builtin_pattern(pid));
        OracleResult red = reduced_answer(inst);
        CHECK(direct.outcome == red.outcome);
    }
}

TEST_CASE("three-connected inputs are irreducible leaves") {
    std::vector<Edge> e;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
    Instance k5{RootedGraph(Graph(5, e), {0, 1, 2, 3}), PatternId::W4X};
    FixpointResult fr = fixpoint_reduce(k5);
    CHECK(fr.trace.steps.empty());
    REQUIRE(fr.leaves.size() == 1);
    CHECK(fr.leaves[0].rg.graph == k5.rg.graph);
}

TEST_CASE("class instance reductions match the oracle across all patterns") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 24; ++i) {
        char cls = "ABCDEF"[rng() % 6];
        ClassInstance ci = generate_class(cls, rng(), 9, 1);
        for (const std::string& name : builtin_pattern_names()) {
            const Pattern& p = builtin_pattern(name);
            if (p.arity != 4) continue;
            Instance inst{ci.rg, id_of(name)};
            OracleResult direct = find_rooted_minor(inst.rg, p);
            OracleResult red = reduced_answer(inst);
            REQUIRE(!direct.unknown());
            REQUIRE(!red.unknown());
            INFO("class ", cls, " pattern ", name, " graph6 ", encode_graph6(ci.rg.graph));
            CHECK(direct.outcome == red.outcome);
        }
    }
}

TEST_CASE("random graph reductions match the oracle, all built-ins") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 50; ++i) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_connected_graph(n, 0.4, rng);
        for (const std::string& name : builtin_pattern_names()) {
            const Pattern& p = builtin_pattern(name);
            std::vector<int> roots;
            VertexSet used = 0;
            while (static_cast<int>(roots.size()) < p.arity) {
                int v = static_cast<int>(rng() % n);
                if (!contains(used, v)) {
                    roots.push_back(v);
                    used |= bit(v);
                }
            }
            Instance inst{RootedGraph(g, roots), id_of(name)};
            OracleResult direct = find_rooted_minor(inst.rg, p);
            OracleResult red = reduced_answer(inst);
            REQUIRE(!direct.unknown());
            REQUIRE(!red.unknown());
            INFO("pattern ", name, " graph6 ", encode_graph6(g));
            CHECK(direct.outcome == red.outcome);
        }
    }
}

TEST_CASE("trace is serializable and leaves shrink") {
    Instance inst{RootedGraph(cycle(6), {0, 1, 2, 3}), PatternId::W4X};
    FixpointResult fr = fixpoint_reduce(inst);
    std::string j = trace_to_json(inst, fr);
    CHECK(j.find("\"lemma\"") != std::string::npos);
    for (const Instance& leaf : fr.leaves) CHECK(leaf.rg.graph.n() <= inst.rg.graph.n());
}

TEST_CASE("planar reduction contracts clique attachments") {
    // web with one clique of size 2 on a triangle
    ClassInstance ci = build_class_graph('D', web_seed_center(), {{0, 2}});
    REQUIRE(ci.cert.cliques.size() == 1);
    Graph r3 = reduce_to_planar(ci.rg.graph, ci.cert, true);
    CHECK(is_planar(r3));
    CHECK(r3.n() == ci.rg.graph.n() - 1);  // the clique contracts to one apex
    Graph r2 = reduce_to_planar(ci.rg.graph, ci.cert, false);
    CHECK(is_planar(r2));

    // empty cliques: identity
    ClassInstance plain = build_class_graph('D', web_seed_center(), {});
    CHECK(reduce_to_planar(plain.rg.graph, plain.cert, true) == plain.rg.graph);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 30; ++i) {
        ClassInstance inst = generate_class('D', rng(), 11, 3);
        CHECK(is_planar(reduce_to_planar(inst.rg.graph, inst.cert, true)));
        CHECK(is_planar(reduce_to_planar(inst.rg.graph, inst.cert, false)));
    }
}

TEST_CASE("paired-pattern root order carries the pairing through rewrites") {
    Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    // root 5 sits beyond the cut vertex 4
    Instance inst{RootedGraph(g, {0, 1, 3, 5}), PatternId::K22X};
    OracleResult direct = find_rooted_minor(inst.rg, builtin_pattern(PatternId::K22X));
    OracleResult red = reduced_answer(inst);
    CHECK(direct.outcome == red.outcome);
}

TEST_CASE("the full class C graph reduces to a forced-no answer for the wheel") {
    ClassInstance c = build_class_graph('C', std::nullopt, {});
    Instance inst{c.rg, PatternId::W4X};
    FixpointResult fr = fixpoint_reduce(inst);
    CHECK(!fr.trace.steps.empty());
    bool saw_two_two = false;
    for (const auto& s : fr.trace.steps)
        if (s.lemma == "sep-two-two") saw_two_two = true;
    CHECK(saw_two_two);
    CHECK(evaluate(*fr.tree).no());
    CHECK(find_rooted_minor(c.rg, builtin_pattern(PatternId::W4X)).no());
}

TEST_CASE("the full class B graph reaches yes through the three-way combiner") {
    ClassInstance b = build_class_graph('B', std::nullopt, {});
    Instance inst{b.rg, PatternId::K24X};
    FixpointResult fr = fixpoint_reduce(inst);
    bool saw_three_way = false;
    for (const auto& s : fr.trace.steps)
        if (s.lemma == "k24-two-two") saw_three_way = true;
    CHECK(saw_three_way);
    CHECK(evaluate(*fr.tree).yes());
}
