#include "rmk/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rmk {

namespace {

struct BudgetExceeded {};

// Backtracking search over branch-set placements. Pattern vertices are placed
// in a fixed order: rooted slots by root position, then the rest ascending.
// Within a slot, connected candidate sets containing the seed are enumerated
// exactly once by banning each skipped extension vertex.
struct Search {
    const Graph& g;
    const Pattern& p;
    const std::vector<int>& map;      // root position -> slot
    const std::vector<int>& roots;    // root position -> vertex of g
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    int h;
    std::vector<int> order;
    std::vector<VertexSet> branch;
    std::vector<char> placed;
    VertexSet used = 0;
    std::optional<MinorModel> found;

    Search(const Graph& gr, const Pattern& pat, const std::vector<int>& m,
           const std::vector<int>& r, std::uint64_t b)
        : g(gr), p(pat), map(m), roots(r), budget(b), h(pat.h.n()) {
        std::vector<char> rooted(h, 0);
        for (int slot : m) {
            order.push_back(slot);
            rooted[slot] = 1;
        }
        for (int x = 0; x < h; ++x)
            if (!rooted[x]) order.push_back(x);
        branch.assign(h, 0);
        placed.assign(h, 0);
    }

    void tick() {
        if (++nodes > budget) throw BudgetExceeded{};
    }

    // Every placed slot must reach enough distinct free vertices for its
    // unplaced pattern neighbours, and every unplaced slot needs a free
    // component adjacent to all of its placed neighbours.
    bool feasible(int placed_count) const {
        VertexSet free = g.all_vertices() & ~used;
        if (popcount(free) < h - placed_count) return false;
        for (int i = 0; i < placed_count; ++i) {
            int x = order[i];
            int unplaced = 0;
            for (int y : to_vector(p.h.adj(x)))
                if (!placed[y]) ++unplaced;
            if (unplaced > popcount(g.neighbors(branch[x]) & free)) return false;
        }
        if (placed_count < h) {
            std::vector<VertexSet> comps = g.components(free);
            for (int i = placed_count; i < h; ++i) {
                int y = order[i];
                bool ok = false;
                for (VertexSet c : comps) {
                    bool fits = true;
                    for (int x : to_vector(p.h.adj(y)))
                        if (placed[x] && !(g.neighbors(branch[x]) & c)) {
                            fits = false;
                            break;
                        }
                    if (fits) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return false;
            }
        }
        return true;
    }

    bool adjacency_ok(int x) const {
        for (int y : to_vector(p.h.adj(x)))
            if (placed[y] && !(g.neighbors(branch[x]) & branch[y])) return false;
        return true;
    }

    // Start slot number idx (0-based position in `order`).
    bool start(int idx) {
        if (idx == h) {
            MinorModel m;
            m.branch_sets = branch;
            m.root_to_slot = map;
            found = m;
            return true;
        }
        int x = order[idx];
        if (idx < static_cast<int>(map.size())) return grow(idx, x, bit(roots[idx]), 0);
        VertexSet free = g.all_vertices() & ~used;
        for (int v : to_vector(free)) {
            if (grow(idx, x, bit(v), bit(v) - 1)) return true;
        }
        return false;
    }

    // Branch set of x is currently s: try to finalize, else extend by each
    // allowed neighbour (smallest first, banning skipped ones).
    bool grow(int idx, int x, VertexSet s, VertexSet banned) {
        tick();
        if (used & s) return false;
        branch[x] = s;
        placed[x] = 1;
        used |= s;
        if (adjacency_ok(x) && feasible(idx + 1) && start(idx + 1)) return true;
        used &= ~s;
        placed[x] = 0;
        branch[x] = 0;

        VertexSet ext = g.neighbors(s) & ~used & ~banned;
        while (ext) {
            int v = lowest(ext);
            ext &= ext - 1;
            if (grow(idx, x, s | bit(v), banned)) return true;
            banned |= bit(v);
        }
        return false;
    }
};

OracleResult search_all_maps(const Graph& g, const Pattern& p, const std::vector<int>& roots,
                             std::uint64_t budget) {
    if (p.h.n() > g.n()) return {Outcome::No, std::nullopt, 0};
    std::uint64_t total = 0;
    for (const std::vector<int>& map : p.family) {
        Search s(g, p, map, roots, budget > total ? budget - total : 0);
        try {
            bool ok = s.start(0);
            total += s.nodes;
            if (ok) return {Outcome::Yes, s.found, total};
        } catch (const BudgetExceeded&) {
            return {Outcome::Unknown, std::nullopt, budget};
        }
    }
    return {Outcome::No, std::nullopt, total};
}

}  // namespace

OracleResult find_rooted_minor(const RootedGraph& g, const Pattern& p, std::uint64_t budget) {
    if (static_cast<int>(g.roots.size()) != p.arity)
        throw std::invalid_argument("find_rooted_minor: root arity mismatch");

    if (!g.graph.is_connected()) {
        // All patterns here are connected: the minor, if any, lives in the
        // component holding every root.
        VertexSet rs = g.root_set();
        for (VertexSet c : g.graph.components(g.graph.all_vertices()))
            if (rs & c) {
                if (rs & ~c) return {Outcome::No, std::nullopt, 0};
                InducedSubgraph sub = induced_subgraph(g.graph, c);
                std::vector<int> roots;
                for (int r : g.roots) roots.push_back(sub.old_to_new[r]);
                OracleResult inner = search_all_maps(sub.graph, p, roots, budget);
                if (inner.model)
                    for (VertexSet& s : inner.model->branch_sets) {
                        VertexSet mapped = 0;
                        for (int v : to_vector(s)) mapped |= bit(sub.new_to_old[v]);
                        s = mapped;
                    }
                return inner;
            }
        return {Outcome::No, std::nullopt, 0};
    }
    return search_all_maps(g.graph, p, g.roots, budget);
}

OracleResult has_unrooted_minor(const Graph& g, const Graph& h, std::uint64_t budget) {
    Pattern p;
    p.name = "unrooted";
    p.h = h;
    for (int x = 0; x < h.n(); ++x) p.labels.push_back("u" + std::to_string(x + 1));
    p.arity = 0;
    p.family = {{}};
    if (h.n() == 0) return {Outcome::Yes, MinorModel{}, 0};
    if (!g.is_connected() && h.is_connected()) {
        std::uint64_t nodes = 0;
        for (VertexSet c : g.components(g.all_vertices())) {
            InducedSubgraph sub = induced_subgraph(g, c);
            OracleResult r = search_all_maps(sub.graph, p, {}, budget > nodes ? budget - nodes : 0);
            nodes += r.nodes;
            if (r.yes()) {
                for (VertexSet& s : r.model->branch_sets) {
                    VertexSet mapped = 0;
                    for (int v : to_vector(s)) mapped |= bit(sub.new_to_old[v]);
                    s = mapped;
                }
                r.nodes = nodes;
                return r;
            }
            if (r.unknown()) return r;
        }
        return {Outcome::No, std::nullopt, nodes};
    }
    return search_all_maps(g, p, {}, budget);
}

}  // namespace rmk
