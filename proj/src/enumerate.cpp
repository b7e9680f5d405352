#include "rmk/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rmk {

namespace {

std::vector<std::uint8_t> triangle_bits(const Graph& g, const std::vector<int>& perm) {
    // perm[new] = old
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<size_t>(g.n()) * (g.n() - 1) / 2);
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
    return bits;
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best = triangle_bits(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<std::uint8_t> cur = triangle_bits(g, perm);
        if (cur < best) best = cur;
    }
    return best;
}

std::vector<Graph> all_graphs_upto_iso(int n) {
    std::vector<Graph> level = {Graph(0, {})};
    for (int k = 1; k <= n; ++k) {
        std::map<std::vector<std::uint8_t>, Graph> next;
        for (const Graph& g : level) {
            // attach vertex k-1 with every possible neighbourhood
            for (VertexSet nb = 0; nb < (VertexSet{1} << (k - 1)); ++nb) {
                std::vector<Edge> edges = g.edges();
                for (int v : to_vector(nb)) edges.emplace_back(v, k - 1);
                Graph h(k, edges);
                next.emplace(canonical_form(h), h);
            }
        }
        level.clear();
        for (auto& [key, g] : next) level.push_back(g);
    }
    return level;
}

std::vector<Graph> filter_connected(const std::vector<Graph>& gs) {
    std::vector<Graph> out;
    for (const Graph& g : gs)
        if (g.n() > 0 && g.is_connected()) out.push_back(g);
    return out;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (g.is_connected()) return g;
    }
}

std::vector<std::vector<int>> root_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace rmk
