#include <algorithm>
#include <cassert>
#include <set>

#include "rmk/structure.hpp"

namespace rmk {

std::vector<std::array<int, 3>> Web::triangles() const {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < h.n(); ++u)
        for (int v : to_vector(h.adj(u) & ~(bit(u + 1) - 1)))
            for (int w : to_vector((h.adj(u) & h.adj(v)) & ~(bit(v + 1) - 1)))
                out.push_back({u, v, w});
    return out;
}

namespace {

int triangle_count(const Graph& g) {
    int t = 0;
    for (const Edge& e : g.edges()) t += popcount(g.adj(e.u) & g.adj(e.v));
    return t / 3;
}

Graph with_apex(const Graph& g, const std::array<int, 4>& quad) {
    std::vector<Edge> edges = g.edges();
    for (int q : quad) edges.emplace_back(q, g.n());
    return Graph(g.n() + 1, edges);
}

}  // namespace

bool is_web(const Graph& h, const std::array<int, 4>& quad) {
    if (h.n() < 4 || h.n() > kMaxVertices - 1) return false;
    VertexSet qs = 0;
    for (int q : quad) {
        if (q < 0 || q >= h.n()) return false;
        qs |= bit(q);
    }
    if (popcount(qs) != 4) return false;
    for (int i = 0; i < 4; ++i)
        if (!h.has_edge(quad[i], quad[(i + 1) % 4])) return false;
    if (h.edge_count() != 3 * h.n() - 7) return false;
    if (!h.is_connected()) return false;
    if (h.n() > 2 && cut_vertices(h)) return false;
    if (!is_planar(h)) return false;
    if (!is_planar(with_apex(h, quad))) return false;
    if (triangle_count(h) != 2 * h.n() - 6) return false;
    return true;
}

Web web_seed_chord(bool diag_bd) {
    std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    edges.push_back(diag_bd ? Edge{1, 3} : Edge{0, 2});
    Web w{Graph(4, edges), {0, 1, 2, 3}};
    assert(is_web(w.h, w.quad));
    return w;
}

Web web_seed_center() {
    std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
    Web w{Graph(5, edges), {0, 1, 2, 3}};
    assert(is_web(w.h, w.quad));
    return w;
}

namespace {

// The two triangle apexes over an inner edge, nullopt when the edge is on the
// outer quad (one apex) or missing.
std::optional<std::pair<int, int>> inner_apexes(const Web& w, Edge e) {
    if (!w.h.has_edge(e.u, e.v)) return std::nullopt;
    std::vector<int> common = to_vector(w.h.adj(e.u) & w.h.adj(e.v));
    if (common.size() != 2) return std::nullopt;
    return std::make_pair(common[0], common[1]);
}

}  // namespace

std::optional<Web> web_split_edge(const Web& w, Edge e) {
    auto apex = inner_apexes(w, e);
    if (!apex) return std::nullopt;
    auto [z, zz] = *apex;
    if (w.h.has_edge(z, zz)) return std::nullopt;
    if (w.h.n() + 1 > kMaxVertices - 1) return std::nullopt;
    int m = w.h.n();
    std::vector<Edge> edges;
    for (const Edge& f : w.h.edges())
        if (!(f == e)) edges.push_back(f);
    edges.emplace_back(m, e.u);
    edges.emplace_back(m, e.v);
    edges.emplace_back(m, z);
    edges.emplace_back(m, zz);
    Web out{Graph(m + 1, edges), w.quad};
    if (!is_web(out.h, out.quad)) return std::nullopt;
    return out;
}

std::optional<Web> web_flip_edge(const Web& w, Edge e) {
    auto apex = inner_apexes(w, e);
    if (!apex) return std::nullopt;
    auto [z, zz] = *apex;
    if (w.h.has_edge(z, zz)) return std::nullopt;
    // the new diagonal must not close a non-facial triangle
    if (w.h.adj(z) & w.h.adj(zz) & ~bit(e.u) & ~bit(e.v)) return std::nullopt;
    std::vector<Edge> edges;
    for (const Edge& f : w.h.edges())
        if (!(f == e)) edges.push_back(f);
    edges.emplace_back(z, zz);
    Web out{Graph(w.h.n(), edges), w.quad};
    if (!is_web(out.h, out.quad)) return std::nullopt;
    return out;
}

Web random_web(int max_n, std::mt19937_64& rng) {
    Web w = (rng() % 2) ? web_seed_chord(rng() % 2) : web_seed_center();
    int attempts = 32 + 8 * max_n;
    while (attempts-- > 0) {
        const std::vector<Edge>& es = w.h.edges();
        Edge e = es[rng() % es.size()];
        bool want_split = w.h.n() < max_n && (rng() % 4) != 0;
        std::optional<Web> next = want_split ? web_split_edge(w, e) : web_flip_edge(w, e);
        if (next) w = *next;
        if (w.h.n() >= max_n && (rng() % 4) == 0) break;
    }
    return w;
}

std::optional<Web> web_envelope(const Graph& g, const std::array<int, 4>& roots) {
    const int n = g.n();
    if (n < 4) return std::nullopt;
    int target = 3 * n - 7;
    if (g.edge_count() > target) return std::nullopt;
    std::array<std::array<int, 4>, 3> orders = {{{roots[0], roots[1], roots[2], roots[3]},
                                                 {roots[0], roots[1], roots[3], roots[2]},
                                                 {roots[0], roots[2], roots[1], roots[3]}}};
    for (const std::array<int, 4>& quad : orders) {
        std::vector<Edge> required;
        bool bad = false;
        for (int i = 0; i < 4; ++i) {
            Edge e(quad[i], quad[(i + 1) % 4]);
            if (!g.has_edge(e.u, e.v)) required.push_back(e);
        }
        Graph base = g;
        for (const Edge& e : required) {
            if (base.edge_count() >= target) { bad = true; break; }
            base = with_edge(base, e);
            if (!is_planar(base)) { bad = true; break; }
        }
        if (bad) continue;
        std::vector<Edge> candidates;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!base.has_edge(u, v)) candidates.emplace_back(u, v);
        int need = target - base.edge_count();
        std::optional<Web> found;
        long long steps = 0;
        auto rec = [&](auto&& self, const Graph& cur, size_t from, int left) -> bool {
            if (++steps > 500000) return false;
            if (left == 0) {
                Web w{cur, quad};
                if (is_web(cur, quad)) {
                    found = w;
                    return true;
                }
                return false;
            }
            for (size_t i = from; i + left <= candidates.size() + 0u; ++i) {
                Graph nxt = with_edge(cur, candidates[i]);
                if (!is_planar(nxt)) continue;
                if (self(self, nxt, i + 1, left - 1)) return true;
            }
            return false;
        };
        if (rec(rec, base, 0, need)) return found;
    }
    return std::nullopt;
}

// --- class catalogue ---------------------------------------------------------

namespace {

struct Skeleton {
    Graph g;
    std::vector<int> roots;
    std::vector<std::array<int, 3>> triangles;
    std::optional<Web> web;  // relabeled into skeleton ids
};

Web relabel_web(const Web& w, int first_new, const std::array<int, 4>& quad_ids) {
    // local quad 0..3 -> quad_ids, local i >= 4 -> first_new + (i - 4)
    auto remap = [&](int v) { return v < 4 ? quad_ids[v] : first_new + (v - 4); };
    std::vector<Edge> edges;
    for (const Edge& e : w.h.edges()) edges.emplace_back(remap(e.u), remap(e.v));
    int n = std::max({quad_ids[0], quad_ids[1], quad_ids[2], quad_ids[3],
                      first_new + w.h.n() - 5});
    return Web{Graph(n + 1, edges), {quad_ids[0], quad_ids[1], quad_ids[2], quad_ids[3]}};
}

Skeleton class_skeleton(char cls, const std::optional<Web>& web_in) {
    Skeleton s;
    s.roots = {0, 1, 2, 3};
    switch (cls) {
        case 'A':
            s.g = Graph(5, {{0, 4}, {0, 3}, {1, 4}, {1, 3}, {2, 4}, {2, 3}, {3, 4}});
            s.triangles = {{0, 3, 4}, {1, 3, 4}, {2, 3, 4}};
            return s;
        case 'B':
            s.g = Graph(6, {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                            {4, 5}});
            s.triangles = {{0, 4, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}};
            return s;
        case 'C':
            s.g = Graph(7, {{0, 4}, {0, 6}, {1, 4}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6},
                            {4, 5}, {4, 6}, {5, 6}});
            s.triangles = {{0, 4, 6}, {1, 4, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}};
            return s;
        case 'D': {
            Web w = web_in.value();
            s.g = w.h;
            s.web = w;
            s.triangles = w.triangles();
            return s;
        }
        case 'E': {
            // web on (c,d,e,f) = (2,3,4,5), plus a=0, b=1
            Web w = relabel_web(web_in.value(), 6, {2, 3, 4, 5});
            std::vector<Edge> edges = w.h.edges();
            for (Edge e : {Edge{0, 4}, Edge{0, 5}, Edge{1, 4}, Edge{1, 5}}) edges.push_back(e);
            s.g = Graph(std::max(w.h.n(), 6), edges);
            s.web = w;
            s.triangles = w.triangles();
            s.triangles.push_back({0, 4, 5});
            s.triangles.push_back({1, 4, 5});
            return s;
        }
        case 'F': {
            // web on (e,f,g,h) = (4,5,6,7), plus a..d = 0..3
            Web w = relabel_web(web_in.value(), 8, {4, 5, 6, 7});
            std::vector<Edge> edges = w.h.edges();
            for (Edge e : {Edge{0, 4}, Edge{0, 5}, Edge{1, 4}, Edge{1, 5}, Edge{2, 6}, Edge{2, 7},
                           Edge{3, 6}, Edge{3, 7}})
                edges.push_back(e);
            s.g = Graph(std::max(w.h.n(), 8), edges);
            s.web = w;
            s.triangles = w.triangles();
            s.triangles.push_back({0, 4, 5});
            s.triangles.push_back({1, 4, 5});
            s.triangles.push_back({2, 6, 7});
            s.triangles.push_back({3, 6, 7});
            return s;
        }
        default:
            throw std::invalid_argument("unknown class (want A..F)");
    }
}

}  // namespace

ClassInstance build_class_graph(char cls, const std::optional<Web>& web,
                                const std::vector<std::pair<int, int>>& clique_sizes) {
    Skeleton s = class_skeleton(cls, web);
    Graph g = s.g;
    ClassCertificate cert;
    cert.cls = cls;
    cert.roots = s.roots;
    cert.web = s.web;
    for (auto [ti, size] : clique_sizes) {
        if (ti < 0 || ti >= static_cast<int>(s.triangles.size()))
            throw std::invalid_argument("clique attachment: no such triangle");
        const std::array<int, 3>& t = s.triangles[ti];
        CliqueAttachment att;
        att.triangle = t;
        std::vector<Edge> edges = g.edges();
        int base = g.n();
        for (int i = 0; i < size; ++i) {
            int v = base + i;
            att.vertices.push_back(v);
            for (int c : t) edges.emplace_back(v, c);
            for (int j = 0; j < i; ++j) edges.emplace_back(v, base + j);
        }
        g = Graph(base + size, edges);
        cert.cliques.push_back(att);
    }
    cert.full = g;
    ClassInstance inst;
    inst.rg = RootedGraph(g, s.roots);
    inst.cert = cert;
    return inst;
}

ClassInstance generate_class(char cls, std::uint64_t seed, int max_n, int max_clique) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);
    int skeleton_min = cls == 'A' ? 5 : cls == 'B' ? 6 : cls == 'C' ? 7
                       : cls == 'D' ? 4 : cls == 'E' ? 6 : 8;
    std::optional<Web> web;
    if (cls == 'D' || cls == 'E' || cls == 'F') {
        int extra_budget = std::max(0, max_n - skeleton_min);
        int web_n = 4 + (extra_budget ? static_cast<int>(rng() % (extra_budget + 1)) : 0);
        web = random_web(web_n, rng);
    }
    Skeleton s = class_skeleton(cls, web);
    // random clique attachments within the vertex budget
    std::vector<std::pair<int, int>> cliques;
    int room = max_n - s.g.n();
    for (size_t ti = 0; ti < s.triangles.size() && room > 0; ++ti) {
        if (rng() % 3 == 0) {
            int size = 1 + static_cast<int>(rng() % std::min(room, max_clique));
            cliques.emplace_back(static_cast<int>(ti), size);
            room -= size;
        }
    }
    ClassInstance full = build_class_graph(cls, web, cliques);

    // random 2-connected spanning subgraph
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Edge> drop;
        for (const Edge& e : full.rg.graph.edges())
            if (rng() % 5 == 0) drop.push_back(e);
        Graph g = without_edges(full.rg.graph, drop);
        if (!g.is_connected()) continue;
        if (g.n() > 2 && cut_vertices(g)) continue;
        ClassInstance inst = full;
        inst.rg = RootedGraph(g, full.cert.roots);
        inst.cert.deleted = drop;
        return inst;
    }
    ClassInstance inst = full;
    inst.cert.deleted = {};
    return inst;
}

// --- cycles -------------------------------------------------------------------

namespace {

struct CycleEnum {
    const Graph& g;
    VertexSet roots;
    int start;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    size_t max_cycles;
    std::vector<CycleView> out;
    bool overflow = false;

    std::vector<int> path;
    VertexSet on_path = 0;

    CycleEnum(const Graph& gr, VertexSet rts, std::uint64_t b, size_t mc)
        : g(gr), roots(rts), start(lowest(rts)), budget(b), max_cycles(mc) {}

    // missing roots must stay reachable from the current endpoint
    bool viable(int v) const {
        VertexSet missing = roots & ~on_path;
        if (!missing) return true;
        VertexSet free = (g.all_vertices() & ~on_path) | bit(v);
        VertexSet reach = bit(v);
        for (;;) {
            VertexSet nxt = (reach | g.neighbors(reach)) & free;
            if (nxt == reach) break;
            reach = nxt;
        }
        return !(missing & ~reach);
    }

    bool rec(int v, bool all) {
        if (++steps > budget) {
            overflow = true;
            return true;
        }
        for (int w : to_vector(g.adj(v))) {
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) continue;  // one direction only
                if (roots & ~on_path) continue;
                CycleView c{path, on_path};
                out.push_back(c);
                if (!all || out.size() >= max_cycles) return true;
                continue;
            }
            if (w == start || contains(on_path, w)) continue;
            path.push_back(w);
            on_path |= bit(w);
            bool done = viable(w) ? rec(w, all) : false;
            path.pop_back();
            on_path &= ~bit(w);
            if (done) return true;
        }
        return false;
    }

    void run(bool all) {
        path = {start};
        on_path = bit(start);
        rec(start, all);
    }
};

}  // namespace

std::optional<CycleView> cycle_through_roots(const RootedGraph& g, std::uint64_t budget) {
    if (vertex_connectivity(g.graph) < 2)
        throw std::invalid_argument("cycle_through_roots: graph not 2-connected");
    CycleEnum e(g.graph, g.root_set(), budget, 1);
    e.run(false);
    if (e.out.empty()) return std::nullopt;
    return e.out.front();
}

std::vector<CycleView> all_cycles_through_roots(const RootedGraph& g, std::uint64_t budget,
                                                size_t max_cycles) {
    if (vertex_connectivity(g.graph) < 2)
        throw std::invalid_argument("all_cycles_through_roots: graph not 2-connected");
    CycleEnum e(g.graph, g.root_set(), budget, max_cycles);
    e.run(true);
    if (e.overflow) throw std::runtime_error("cycle enumeration budget exhausted");
    return e.out;
}

}  // namespace rmk
