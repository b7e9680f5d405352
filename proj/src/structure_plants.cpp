#include <cassert>

#include "rmk/structure.hpp"

// Hand-built instances pinning down each obstruction kind. Each is a cycle
// through the four roots plus interior structure, with extra chords killing
// every lower-numbered obstruction so the detector's first witness has the
// intended kind. Envelopes certify that each instance spans a web.

namespace rmk {

namespace {

PlantedInstance finish(Graph g, std::vector<int> roots, int kind, const std::string& note,
                       std::optional<Web> web = std::nullopt) {
    PlantedInstance out;
    out.rg = RootedGraph(std::move(g), std::move(roots));
    out.kind = kind;
    out.note = note;
    out.web = web ? web
                  : web_envelope(out.rg.graph,
                                 {out.rg.roots[0], out.rg.roots[1], out.rg.roots[2],
                                  out.rg.roots[3]});
    return out;
}

// Cycle a-b-...-c-d-...-a given as an explicit vertex order; returns edges.
std::vector<Edge> cycle_edges(const std::vector<int>& order) {
    std::vector<Edge> out;
    for (size_t i = 0; i < order.size(); ++i)
        out.emplace_back(order[i], order[(i + 1) % order.size()]);
    return out;
}

// Subdivide the (a,b) cycle edge `padding` times to vary instance sizes
// without touching the planted separations.
Graph pad_edge(const Graph& g, int a, int b, int padding) {
    if (padding <= 0) return g;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!(e == Edge(a, b))) edges.push_back(e);
    int prev = a;
    for (int i = 0; i < padding; ++i) {
        int z = g.n() + i;
        edges.emplace_back(prev, z);
        prev = z;
    }
    edges.emplace_back(prev, b);
    return Graph(g.n() + padding, edges);
}

}  // namespace

PlantedInstance plant_chain(int links, bool lprime_block, int padding) {
    // roots a=0 b=1 c=2 d=3 in cycle order
    if (links == 1) {
        Graph g(4, cycle_edges({0, 1, 2, 3}));
        return finish(pad_edge(g, 0, 1, padding), {0, 1, 2, 3}, 1, "chain n=1");
    }
    if (links == 2) {
        // cycle a-b-p-c-d with boundaries {a,p},{p,d}; the gap between them
        // holds either a single block vertex or a full L' block
        int p = 4;
        std::vector<Edge> edges = cycle_edges({0, 1, p, 2, 3});
        if (!lprime_block) {
            int m = 5;
            edges.emplace_back(m, 0);
            edges.emplace_back(m, p);
            edges.emplace_back(m, 3);
            Graph g(6, edges);
            return finish(pad_edge(g, 0, 1, padding), {0, 1, 2, 3}, 1, "chain n=2, no block");
        }
        int m1 = 5, m2 = 6, m3 = 7;
        for (Edge e : {Edge{p, m2}, Edge{p, m3}, Edge{3, m2}, Edge{0, m1}, Edge{m1, m2},
                       Edge{m1, m3}, Edge{m2, m3}})
            edges.push_back(e);
        Graph g(8, edges);
        return finish(pad_edge(g, 0, 1, padding), {0, 1, 2, 3}, 1, "chain n=2, embedded block");
    }
    if (links == 3) {
        // cycle a-b-p-c-d-q with boundaries {a,p},{p,q},{q,c}
        int p = 4, q = 5;
        std::vector<Edge> edges = cycle_edges({0, 1, p, 2, 3, q});
        if (lprime_block) {
            int m1 = 6, m2 = 7, m3 = 8;
            for (Edge e : {Edge{p, m2}, Edge{p, m3}, Edge{q, m2}, Edge{0, m1}, Edge{m1, m2},
                           Edge{m1, m3}, Edge{m2, m3}})
                edges.push_back(e);
            Graph g(9, edges);
            return finish(pad_edge(g, 0, 1, padding), {0, 1, 2, 3}, 1,
                          "chain n=3, embedded block (still minor-free)");
        }
        Graph g(6, edges);
        return finish(pad_edge(g, 0, 1, padding), {0, 1, 2, 3}, 1, "chain n=3");
    }
    // links == 4: cycle a-b-x1-x2-c-d-w1 with boundaries
    // {a,x1},{x1,w1},{w1,x2},{x2,d}
    int x1 = 4, x2 = 5, w1 = 6;
    std::vector<Edge> edges = cycle_edges({0, 1, x1, x2, 2, 3, w1});
    if (lprime_block) {
        int m1 = 7, m2 = 8, m3 = 9;
        for (Edge e : {Edge{x1, m2}, Edge{x1, m3}, Edge{w1, m2}, Edge{0, m1}, Edge{m1, m2},
                       Edge{m1, m3}, Edge{m2, m3}})
            edges.push_back(e);
        Graph g(10, edges);
        return finish(pad_edge(g, 0, 1, padding), {0, 1, 2, 3}, 1,
                      "chain n=4, embedded block");
    }
    Graph g(7, edges);
    return finish(pad_edge(g, 0, 1, padding), {0, 1, 2, 3}, 1, "chain n=4");
}

PlantedInstance plant_triangle_rooted() {
    // cycle a-b-y-d-v-c with the triangle {a,y},{a,v},{v,y}; the chords yv,
    // ay and av (all triangle boundary pairs) remove every chain
    int a = 0, b = 1, c = 2, d = 3, y = 4, v = 5;
    std::vector<Edge> edges = cycle_edges({a, b, y, d, v, c});
    edges.emplace_back(y, v);
    edges.emplace_back(a, y);
    edges.emplace_back(a, v);
    return finish(Graph(6, edges), {0, 1, 2, 3}, 2, "rooted triangle");
}

PlantedInstance plant_triangle_with_chain() {
    // cycle x-a-b-y-d-v-c with triangle {x,y},{x,v},{v,y} (root-free first
    // boundary) and the inner chain on {a,y} inside the two-root side; all
    // three triangle boundary pairs are chords, which kills the plain chains
    int a = 0, b = 1, c = 2, d = 3, x = 4, y = 5, v = 6;
    std::vector<Edge> edges = cycle_edges({x, a, b, y, d, v, c});
    edges.emplace_back(y, v);
    edges.emplace_back(x, v);
    edges.emplace_back(x, y);
    return finish(Graph(7, edges), {0, 1, 2, 3}, 3, "triangle plus chain");
}

PlantedInstance plant_double_triangle_chain() {
    // cycle a-v2-b-u2-u1-c-v1-d-w1-w2 carrying two facing triangles
    // {u1,w1},{u1,v1},{v1,w1} and {u2,w2},{u2,v2},{v2,w2}; the chords u1w1
    // and u2w2 kill the chains, and the strip between the triangles carries
    // the connecting chain on {u1,u2,w1,w2}
    int a = 0, b = 1, c = 2, d = 3, v2 = 4, u2 = 5, u1 = 6, v1 = 7, w1 = 8, w2 = 9;
    std::vector<Edge> edges = cycle_edges({a, v2, b, u2, u1, c, v1, d, w1, w2});
    // every triangle boundary pair becomes a chord, which leaves the
    // between-strip chain as the only obstruction shape
    for (Edge e : {Edge{u1, w1}, Edge{u2, w2}, Edge{u1, v1}, Edge{v1, w1}, Edge{v2, u2},
                   Edge{v2, w2}})
        edges.push_back(e);
    Graph g(10, edges);

    // explicit envelope: quad plus ring chords plus interior triangulation
    std::vector<Edge> env = edges;
    for (Edge e : {Edge{a, b}, Edge{b, c}, Edge{c, d}, Edge{d, a}, Edge{b, u1}, Edge{w1, a},
                   Edge{u1, w2}})
        env.push_back(e);
    Web web{Graph(10, env), {a, b, c, d}};
    assert(is_web(web.h, web.quad));
    return finish(g, {0, 1, 2, 3}, 4, "two triangles joined by a chain", web);
}

PlantedInstance plant_linked_triangles() {
    // cycle x-a-v2-b-y2-y1-c-v1-d with triangles {x,y1},{x,v1},{v1,y1} and
    // {x,y2},{x,v2},{v2,y2} sharing the boundary vertex x; the four chords
    // kill the chain, rooted-triangle and triangle-chain obstructions
    int a = 0, b = 1, c = 2, d = 3, x = 4, v2 = 5, y2 = 6, y1 = 7, v1 = 8;
    std::vector<Edge> edges = cycle_edges({x, a, v2, b, y2, y1, c, v1, d});
    edges.emplace_back(y1, v1);
    edges.emplace_back(x, y2);
    edges.emplace_back(v2, y2);
    edges.emplace_back(x, y1);
    edges.emplace_back(x, v2);
    edges.emplace_back(x, v1);
    return finish(Graph(9, edges), {0, 1, 2, 3}, 5, "linked triangles");
}

}  // namespace rmk
