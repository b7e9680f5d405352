#include "rmk/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace rmk {

VertexSet cut_vertices(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("cut_vertices: graph disconnected");
    VertexSet cuts = 0;
    for (int v = 0; v < g.n(); ++v) {
        VertexSet rest = g.all_vertices() & ~bit(v);
        if (rest && !g.connected_within(rest)) cuts |= bit(v);
    }
    return cuts;
}

namespace {

// Unit-vertex-capacity max flow between s and t, small graphs only.
// Node 2v = v_in, 2v+1 = v_out.
struct VertexFlow {
    int n;
    std::vector<std::vector<int>> cap;

    VertexFlow(const Graph& g, int s, int t) : n(2 * g.n()), cap(n, std::vector<int>(n, 0)) {
        for (int v = 0; v < g.n(); ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? g.n() : 1;
        for (const Edge& e : g.edges()) {
            cap[2 * e.u + 1][2 * e.v] = 1;
            cap[2 * e.v + 1][2 * e.u] = 1;
        }
    }

    bool augment(int s, int t) {
        std::vector<int> prev(n, -1);
        prev[s] = s;
        std::vector<int> queue = {s};
        for (size_t q = 0; q < queue.size(); ++q) {
            int x = queue[q];
            if (x == t) break;
            for (int y = 0; y < n; ++y)
                if (prev[y] < 0 && cap[x][y] > 0) {
                    prev[y] = x;
                    queue.push_back(y);
                }
        }
        if (prev[t] < 0) return false;
        for (int y = t; y != s; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        return true;
    }
};

}  // namespace

std::vector<std::vector<int>> menger_paths(const Graph& g, int s, int t, int k) {
    if (s == t) throw std::invalid_argument("menger_paths: s == t");
    VertexFlow net(g, s, t);
    int src = 2 * s + 1, snk = 2 * t;
    int flow = 0;
    while (flow < k && net.augment(src, snk)) ++flow;

    // Decompose the flow into paths by walking saturated arcs.
    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> used(net.n, std::vector<int>(net.n, 0));
    for (int v = 0; v < g.n(); ++v) {
        used[2 * v][2 * v + 1] = 0;  // interior usage tracked via arc flow below
    }
    // flow on arc (x,y) = original cap - residual; original inter-vertex caps are 1
    auto arc_flow = [&](int uo, int vi) { return 1 - net.cap[uo][vi]; };
    for (int p = 0; p < flow; ++p) {
        std::vector<int> path = {s};
        int cur = s;
        while (cur != t) {
            int next = -1;
            for (int w : to_vector(g.adj(cur))) {
                if (arc_flow(2 * cur + 1, 2 * w) - used[2 * cur + 1][2 * w] > 0) {
                    next = w;
                    break;
                }
            }
            assert(next >= 0);
            used[2 * cur + 1][2 * next] += 1;
            path.push_back(next);
            cur = next;
        }
        paths.push_back(path);
    }
    return paths;
}

int vertex_connectivity(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
    if (!g.is_connected()) return 0;
    int best = g.n() - 1;
    bool complete = true;
    for (int s = 0; s < g.n() && complete; ++s)
        if (g.degree(s) != g.n() - 1) complete = false;
    if (complete) return g.n() - 1;
    for (int s = 0; s < g.n(); ++s)
        for (int t = s + 1; t < g.n(); ++t)
            if (!g.has_edge(s, t)) {
                VertexFlow net(g, s, t);
                int f = 0;
                while (f < best && net.augment(2 * s + 1, 2 * t)) ++f;
                best = std::min(best, f);
            }
    return best;
}

// --- left-right planarity test ---------------------------------------------

namespace {

struct LRTest {
    const Graph& g;
    int n;
    static constexpr int kNone = -1;

    // directed edges, 2 per undirected edge
    std::vector<int> esrc, edst;
    std::vector<std::vector<int>> out;  // oriented outgoing edges per vertex
    std::vector<int> height, parent_edge;
    std::vector<int> lowpt, lowpt2, nesting, ref, lowpt_edge, stack_bottom;
    std::vector<int> twin;  // opposite direction of same undirected edge
    std::vector<char> oriented;

    struct Interval {
        int low = kNone, high = kNone;
        bool empty() const { return low == kNone && high == kNone; }
    };
    struct Pair {
        Interval l, r;
        void swap_sides() { std::swap(l, r); }
    };
    std::vector<Pair> stack;
    bool planar = true;

    explicit LRTest(const Graph& gr) : g(gr), n(gr.n()) {
        int m = g.edge_count();
        esrc.reserve(2 * m);
        for (const Edge& e : g.edges()) {
            esrc.push_back(e.u); edst.push_back(e.v);
            esrc.push_back(e.v); edst.push_back(e.u);
        }
        twin.resize(2 * m);
        for (int i = 0; i < 2 * m; ++i) twin[i] = i ^ 1;
        out.assign(n, {});
        height.assign(n, kNone);
        parent_edge.assign(n, kNone);
        lowpt.assign(2 * m, 0);
        lowpt2.assign(2 * m, 0);
        nesting.assign(2 * m, 0);
        ref.assign(2 * m, kNone);
        lowpt_edge.assign(2 * m, kNone);
        stack_bottom.assign(2 * m, 0);
        oriented.assign(2 * m, 0);
    }

    void orient_dfs(int v) {
        int e = parent_edge[v];
        for (int w : to_vector(g.adj(v))) {
            // find the directed edge v->w
            int ei = kNone;
            for (int cand = 0; cand < static_cast<int>(esrc.size()); ++cand)
                if (esrc[cand] == v && edst[cand] == w) { ei = cand; break; }
            if (oriented[ei] || oriented[twin[ei]]) continue;
            oriented[ei] = 1;
            lowpt[ei] = height[v];
            lowpt2[ei] = height[v];
            if (height[w] == kNone) {
                parent_edge[w] = ei;
                height[w] = height[v] + 1;
                out[v].push_back(ei);
                orient_dfs(w);
            } else {
                lowpt[ei] = height[w];
                out[v].push_back(ei);
            }
            nesting[ei] = 2 * lowpt[ei];
            if (lowpt2[ei] < height[v]) nesting[ei] += 1;  // chordal
            if (e != kNone) {
                if (lowpt[ei] < lowpt[e]) {
                    lowpt2[e] = std::min(lowpt[e], lowpt2[ei]);
                    lowpt[e] = lowpt[ei];
                } else if (lowpt[ei] > lowpt[e]) {
                    lowpt2[e] = std::min(lowpt2[e], lowpt[ei]);
                } else {
                    lowpt2[e] = std::min(lowpt2[e], lowpt2[ei]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt[i.high] > lowpt[b];
    }

    int lowest(const Pair& p) const {
        if (p.l.empty()) return lowpt[p.r.low];
        if (p.r.empty()) return lowpt[p.l.low];
        return std::min(lowpt[p.l.low], lowpt[p.r.low]);
    }

    bool add_constraints(int ei, int e) {
        Pair p;
        // merge return edges of ei into p.r
        do {
            Pair q = stack.back();
            stack.pop_back();
            if (!q.l.empty()) q.swap_sides();
            if (!q.l.empty()) return false;
            if (lowpt[q.r.low] > lowpt[e]) {
                if (p.r.empty()) p.r.high = q.r.high;
                else ref[p.r.low] = q.r.high;
                p.r.low = q.r.low;
            } else {
                ref[q.r.low] = lowpt_edge[e];
            }
        } while (static_cast<int>(stack.size()) > stack_bottom[ei]);
        // merge conflicting return edges of earlier siblings into p.l
        while (!stack.empty() &&
               (conflicting(stack.back().l, ei) || conflicting(stack.back().r, ei))) {
            Pair q = stack.back();
            stack.pop_back();
            if (conflicting(q.r, ei)) q.swap_sides();
            if (conflicting(q.r, ei)) return false;
            if (q.r.high != kNone) {
                if (p.r.low != kNone) ref[p.r.low] = q.r.high;
                else p.r.high = q.r.high;
            }
            if (q.r.low != kNone) p.r.low = q.r.low;
            if (p.l.empty()) p.l.high = q.l.high;
            else ref[p.l.low] = q.l.high;
            p.l.low = q.l.low;
        }
        if (!(p.l.empty() && p.r.empty())) stack.push_back(p);
        return true;
    }

    void trim_back_edges(int u) {
        while (!stack.empty() && lowest(stack.back()) == height[u]) {
            Pair p = stack.back();
            stack.pop_back();
            (void)p;
        }
        if (!stack.empty()) {
            Pair p = stack.back();
            stack.pop_back();
            while (p.l.high != kNone && edst[p.l.high] == u) p.l.high = ref[p.l.high];
            if (p.l.high == kNone && p.l.low != kNone) {
                ref[p.l.low] = p.r.low;
                p.l.low = kNone;
            }
            while (p.r.high != kNone && edst[p.r.high] == u) p.r.high = ref[p.r.high];
            if (p.r.high == kNone && p.r.low != kNone) {
                ref[p.r.low] = p.l.low;
                p.r.low = kNone;
            }
            stack.push_back(p);
        }
    }

    bool test_dfs(int v) {
        int e = parent_edge[v];
        bool first = true;
        for (int ei : out[v]) {
            stack_bottom[ei] = static_cast<int>(stack.size());
            if (ei == parent_edge[edst[ei]]) {
                if (!test_dfs(edst[ei])) return false;
            } else {
                lowpt_edge[ei] = ei;
                stack.push_back(Pair{Interval{}, Interval{ei, ei}});
            }
            if (lowpt[ei] < height[v]) {
                if (first) {
                    lowpt_edge[e] = lowpt_edge[ei];
                } else {
                    if (!add_constraints(ei, e)) return false;
                }
            }
            first = false;
        }
        if (e != kNone) {
            int u = esrc[e];
            trim_back_edges(u);
            if (lowpt[e] < height[u]) {
                int hl = stack.empty() ? kNone : stack.back().l.high;
                int hr = stack.empty() ? kNone : stack.back().r.high;
                if (hl != kNone && (hr == kNone || lowpt[hl] > lowpt[hr])) ref[e] = hl;
                else ref[e] = hr;
            }
        }
        return true;
    }

    bool run() {
        if (g.n() <= 4) return true;
        if (g.edge_count() > 3 * g.n() - 6) return false;
        for (int v = 0; v < n; ++v)
            if (height[v] == kNone) {
                height[v] = 0;
                orient_dfs(v);
            }
        // sort adjacency by nesting depth
        for (int v = 0; v < n; ++v)
            std::stable_sort(out[v].begin(), out[v].end(),
                             [&](int a, int b) { return nesting[a] < nesting[b]; });
        for (int v = 0; v < n; ++v)
            if (parent_edge[v] == kNone) {
                stack.clear();
                if (!test_dfs(v)) return false;
            }
        return true;
    }
};

}  // namespace

bool is_planar(const Graph& g) {
    LRTest t(g);
    return t.run();
}

// --- separations -----------------------------------------------------------

bool is_separation(const Graph& g, const Separation& s) {
    if ((s.a | s.b) != g.all_vertices()) return false;
    VertexSet sa = s.strict_a();
    return !(g.neighbors(sa) & s.strict_b());
}

std::vector<Separation> separations_with_boundary(const Graph& g, VertexSet boundary,
                                                  bool one_vs_rest) {
    std::vector<Separation> out;
    VertexSet rest = g.all_vertices() & ~boundary;
    std::vector<VertexSet> comps = g.components(rest);
    size_t k = comps.size();
    if (k < 2) return out;
    std::set<Separation> seen;
    auto emit = [&](VertexSet aside) {
        VertexSet bside = rest & ~aside;
        if (!aside || !bside) return;
        Separation s{aside | boundary, bside | boundary};
        if (seen.insert(s).second) out.push_back(s);
        Separation f = s.flipped();
        if (seen.insert(f).second) out.push_back(f);
    };
    if (one_vs_rest || k > 16) {
        for (VertexSet c : comps) emit(c);
    } else {
        for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
            VertexSet aside = 0;
            for (size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1) aside |= comps[i];
            emit(aside);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool boundary_is_tight(const Graph& g, VertexSet boundary) {
    // tight: no strict subset of the boundary is itself a proper separation
    // boundary, i.e. removing any strict subset leaves g connected
    std::vector<int> bs = to_vector(boundary);
    int k = static_cast<int>(bs.size());
    for (int mask = 0; mask + 1 < (1 << k); ++mask) {
        VertexSet sub = 0;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) sub |= bit(bs[i]);
        VertexSet rest = g.all_vertices() & ~sub;
        if (rest && !g.connected_within(rest)) return false;
    }
    return true;
}

}  // namespace

std::vector<FlaggedSeparation> enumerate_2_separations(const Graph& g,
                                                       const SeparationOptions& opts) {
    if (!g.is_connected()) throw std::invalid_argument("enumerate_2_separations: disconnected");
    std::vector<FlaggedSeparation> out;
    std::vector<VertexSet> boundaries;
    if (opts.include_lower_orders && opts.max_order >= 1)
        for (int v = 0; v < g.n(); ++v) boundaries.push_back(bit(v));
    if (opts.max_order >= 2)
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) boundaries.push_back(bit(u) | bit(v));
    for (VertexSet bd : boundaries) {
        bool tight = boundary_is_tight(g, bd);
        for (const Separation& s : separations_with_boundary(g, bd, opts.one_vs_rest))
            out.push_back({s, tight});
    }
    std::sort(out.begin(), out.end(), [](const FlaggedSeparation& x, const FlaggedSeparation& y) {
        if (x.sep.boundary() != y.sep.boundary()) return x.sep.boundary() < y.sep.boundary();
        return x.sep.a < y.sep.a;
    });
    return out;
}

std::vector<Separation> tight_3_separations(const Graph& g) {
    std::vector<Separation> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            for (int w = v + 1; w < g.n(); ++w) {
                VertexSet bd = bit(u) | bit(v) | bit(w);
                if (!boundary_is_tight(g, bd)) continue;
                for (const Separation& s : separations_with_boundary(g, bd, true))
                    out.push_back(s);
            }
    return out;
}

Separation submodular_cross(const Graph& g, const Separation& s1, const Separation& s2) {
    if (!is_separation(g, s1) || !is_separation(g, s2))
        throw std::invalid_argument("submodular_cross: inputs are not separations");
    if (s1.order() != 2 || s2.order() != 2)
        throw std::invalid_argument("submodular_cross: boundaries must have order 2");
    std::vector<int> b1 = to_vector(s1.boundary());
    std::vector<int> b2 = to_vector(s2.boundary());
    int u = b1[0], v = b1[1], x = b2[0], y = b2[1];
    // order the boundary pairs so that x in A1\B1, y in B1\A1, u in A2\B2,
    // v in B2\A2; the hypothesis fails if no orientation fits
    if (!contains(s1.strict_a(), x)) std::swap(x, y);
    if (!contains(s2.strict_a(), u)) std::swap(u, v);
    if (!contains(s1.strict_a(), x) || !contains(s1.strict_b(), y) ||
        !contains(s2.strict_a(), u) || !contains(s2.strict_b(), v))
        throw std::invalid_argument("submodular_cross: separations do not cross as required");
    VertexSet aprime = s1.a & s2.a;
    VertexSet bprime = (g.all_vertices() & ~aprime) | bit(u) | bit(x);
    Separation result{aprime, bprime};
    assert(is_separation(g, result));
    assert(result.boundary() == (bit(u) | bit(x)));
    assert((result.a & ~s1.a) == 0);
    assert((s1.b & ~result.b) == 0);
    return result;
}

// --- chains and triangles ---------------------------------------------------

bool is_2_chain(const Graph& g, const TwoChain& c) {
    if (c.links.empty()) return false;
    for (const Separation& s : c.links)
        if (!is_separation(g, s) || !s.proper() || s.order() > 2) return false;
    for (size_t i = 0; i + 1 < c.links.size(); ++i) {
        const Separation& s = c.links[i];
        const Separation& t = c.links[i + 1];
        if ((s.a & ~t.a) || (t.b & ~s.b)) return false;             // nesting
        if (!(s.boundary() & t.boundary())) return false;           // shared vertex
    }
    return true;
}

bool is_terminal_separating(const TwoChain& c, VertexSet roots) {
    // One root strictly inside each end, the remaining roots on the end
    // boundaries (both of them when the chain is a single separation, one
    // each otherwise), and no root left floating in a middle region: this is
    // the distribution the cut reductions consume link by link.
    if (c.links.empty()) return false;
    const Separation& first = c.links.front();
    const Separation& last = c.links.back();
    if (popcount(first.strict_a() & roots) != 1) return false;
    if (popcount(last.strict_b() & roots) != 1) return false;
    VertexSet ends = first.boundary() | last.boundary();
    if (roots & ~(first.strict_a() | last.strict_b() | ends)) return false;
    if (c.links.size() == 1) return popcount(first.boundary() & roots) == 2;
    return popcount(first.boundary() & roots) == 1 && popcount(last.boundary() & roots) == 1;
}

bool SeparationTriangle::terminal_separating(VertexSet roots) const {
    // two roots in the first side, one strictly in each single side, and the
    // four placements cover four distinct roots
    return popcount(s1.a & roots) == 2 && popcount(s2.strict_a() & roots) == 1 &&
           popcount(s3.strict_a() & roots) == 1 &&
           popcount((s1.a | s2.strict_a() | s3.strict_a()) & roots) == 4;
}

bool is_separation_triangle(const Graph& g, const SeparationTriangle& t) {
    const Separation* ss[3] = {&t.s1, &t.s2, &t.s3};
    for (const Separation* s : ss)
        if (!is_separation(g, *s) || !s->proper() || s->order() != 2) return false;
    VertexSet b1 = t.s1.boundary(), b2 = t.s2.boundary(), b3 = t.s3.boundary();
    // boundaries {x,y},{x,v},{v,y} over three distinct vertices
    if (popcount(b1 | b2 | b3) != 3) return false;
    if (popcount(b1 & b2) != 1 || popcount(b2 & b3) != 1 || popcount(b1 & b3) != 1) return false;
    if ((b1 & b2) == (b2 & b3)) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (ss[i]->strict_a() & ss[j]->strict_a()) return false;
    return true;
}

namespace {

struct ChainSearch {
    const Graph& g;
    VertexSet roots;
    std::vector<Separation> nodes;
    std::vector<std::vector<int>> next;  // nesting successors sharing a boundary vertex
    std::vector<char> is_start, is_end;

    ChainSearch(const Graph& gr, VertexSet rts, const CycleView& c) : g(gr), roots(rts) {
        std::vector<int> cyc = to_vector(c.vset);
        std::set<Separation> seen;
        for (size_t i = 0; i < cyc.size(); ++i)
            for (size_t j = i + 1; j < cyc.size(); ++j) {
                VertexSet bd = bit(cyc[i]) | bit(cyc[j]);
                for (const Separation& s : separations_with_boundary(g, bd, false))
                    if (seen.insert(s).second) nodes.push_back(s);
            }
        size_t n = nodes.size();
        next.assign(n, {});
        is_start.assign(n, 0);
        is_end.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            const Separation& s = nodes[i];
            is_start[i] = popcount(s.strict_a() & roots) == 1;
            is_end[i] = popcount(s.strict_b() & roots) == 1;
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const Separation& t = nodes[j];
                if ((s.a & ~t.a) == 0 && (t.b & ~s.b) == 0 && !(s == t) &&
                    (s.boundary() & t.boundary()))
                    next[i].push_back(static_cast<int>(j));
            }
        }
    }

    // the terminal conditions only look at the first and last link
    bool pair_ok(int si, int se) const {
        TwoChain probe{si == se ? std::vector<Separation>{nodes[si]}
                                : std::vector<Separation>{nodes[si], nodes[se]}};
        return is_terminal_separating(probe, roots);
    }

    std::optional<TwoChain> find_any() {
        size_t n = nodes.size();
        for (size_t s = 0; s < n; ++s) {
            if (!is_start[s]) continue;
            std::vector<int> parent(n, -2);
            parent[s] = -1;
            std::vector<int> queue = {static_cast<int>(s)};
            for (size_t q = 0; q < queue.size(); ++q) {
                int i = queue[q];
                if (is_end[i] && pair_ok(static_cast<int>(s), i)) {
                    std::vector<Separation> links;
                    for (int j = i; j != -1; j = parent[j]) links.push_back(nodes[j]);
                    std::reverse(links.begin(), links.end());
                    return TwoChain{links};
                }
                for (int j : next[i])
                    if (parent[j] == -2) {
                        parent[j] = i;
                        queue.push_back(j);
                    }
            }
        }
        return std::nullopt;
    }

    std::vector<TwoChain> find_all_terminal(long long budget = 200000) {
        std::vector<TwoChain> out;
        std::vector<int> path;
        long long steps = 0;
        auto rec = [&](auto&& self, int i) -> void {
            if (++steps > budget) return;
            path.push_back(i);
            if (is_end[i] && pair_ok(path.front(), i)) {
                std::vector<Separation> links;
                for (int j : path) links.push_back(nodes[j]);
                out.push_back(TwoChain{links});
            }
            for (int j : next[i]) self(self, j);
            path.pop_back();
        };
        for (size_t i = 0; i < nodes.size(); ++i)
            if (is_start[i]) rec(rec, static_cast<int>(i));
        return out;
    }

    bool extendable(const TwoChain& c) {
        // another qualifying separation can be attached at either end
        for (const Separation& s : nodes) {
            if (!(s == c.links.front())) {
                const Separation& t = c.links.front();
                if ((s.a & ~t.a) == 0 && (t.b & ~s.b) == 0 && (s.boundary() & t.boundary())) {
                    TwoChain longer;
                    longer.links.push_back(s);
                    longer.links.insert(longer.links.end(), c.links.begin(), c.links.end());
                    if (is_terminal_separating(longer, roots)) return true;
                }
            }
            if (!(s == c.links.back())) {
                const Separation& t = c.links.back();
                if ((t.a & ~s.a) == 0 && (s.b & ~t.b) == 0 && (s.boundary() & t.boundary())) {
                    TwoChain longer = c;
                    longer.links.push_back(s);
                    if (is_terminal_separating(longer, roots)) return true;
                }
            }
        }
        return false;
    }
};

void check_cycle_preconditions(const Graph& g, VertexSet roots, const CycleView& c) {
    if (c.order.size() < 3) throw std::invalid_argument("cycle too short");
    for (size_t i = 0; i < c.order.size(); ++i) {
        int u = c.order[i], v = c.order[(i + 1) % c.order.size()];
        if (!g.has_edge(u, v)) throw std::invalid_argument("not a cycle of g");
    }
    if (roots & ~c.vset) throw std::invalid_argument("cycle misses a root");
}

}  // namespace

std::optional<TwoChain> find_terminal_2_chain(const Graph& g, VertexSet roots,
                                              const CycleView& c) {
    ChainSearch search(g, roots, c);
    return search.find_any();
}

std::vector<TwoChain> find_terminal_2_chains(const RootedGraph& g, const CycleView& c) {
    check_cycle_preconditions(g.graph, g.root_set(), c);
    if (vertex_connectivity(g.graph) < 2)
        throw std::invalid_argument("find_terminal_2_chains: graph not 2-connected");
    ChainSearch search(g.graph, g.root_set(), c);
    std::vector<TwoChain> all = search.find_all_terminal();
    std::vector<TwoChain> maximal;
    for (const TwoChain& ch : all)
        if (!search.extendable(ch)) maximal.push_back(ch);
    return maximal;
}

std::vector<SeparationTriangle> find_terminal_triangles(const Graph& g, VertexSet roots,
                                                        const CycleView& c) {
    std::vector<SeparationTriangle> out;
    std::vector<int> cyc = to_vector(c.vset);
    auto seps_for = [&](int p, int q) {
        return separations_with_boundary(g, bit(p) | bit(q), false);
    };
    size_t m = cyc.size();
    for (size_t ix = 0; ix < m; ++ix)
        for (size_t iy = 0; iy < m; ++iy)
            for (size_t iv = 0; iv < m; ++iv) {
                if (ix == iy || iy == iv || ix == iv) continue;
                int x = cyc[ix], y = cyc[iy], v = cyc[iv];
                for (const Separation& s1 : seps_for(x, y))
                    for (const Separation& s2 : seps_for(x, v))
                        for (const Separation& s3 : seps_for(v, y)) {
                            SeparationTriangle t{s1, s2, s3};
                            if (is_separation_triangle(g, t) && t.terminal_separating(roots))
                                out.push_back(t);
                        }
            }
    std::sort(out.begin(), out.end(), [](const SeparationTriangle& a, const SeparationTriangle& b) {
        auto key = [](const SeparationTriangle& t) {
            return std::tuple(t.s1.boundary(), t.s2.boundary(), t.s3.boundary(), t.s1.a, t.s2.a,
                              t.s3.a);
        };
        return key(a) < key(b);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SeparationTriangle& a, const SeparationTriangle& b) {
                              return a.s1 == b.s1 && a.s2 == b.s2 && a.s3 == b.s3;
                          }),
              out.end());
    return out;
}

std::vector<SeparationTriangle> find_terminal_triangles(const RootedGraph& g,
                                                       const CycleView& c) {
    check_cycle_preconditions(g.graph, g.root_set(), c);
    if (vertex_connectivity(g.graph) < 2)
        throw std::invalid_argument("find_terminal_triangles: graph not 2-connected");
    return find_terminal_triangles(g.graph, g.root_set(), c);
}

}  // namespace rmk
