#include "rmk/graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rmk {

VertexSet set_of(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = lowest(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    std::set<Edge> dedup;
    for (const Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        dedup.insert(e);
    }
    edges_.assign(dedup.begin(), dedup.end());
    adj_.assign(n, 0);
    for (const Edge& e : edges_) {
        adj_[e.u] |= bit(e.v);
        adj_[e.v] |= bit(e.u);
    }
}

VertexSet Graph::neighbors(VertexSet s) const {
    VertexSet out = 0;
    for (VertexSet t = s; t;) {
        int v = lowest(t);
        t &= t - 1;
        out |= adj_[v];
    }
    return out & ~s;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return connected_within(all_vertices());
}

bool Graph::connected_within(VertexSet s) const {
    if (!s) return true;
    VertexSet reached = bit(lowest(s));
    for (;;) {
        VertexSet next = (reached | (neighbors(reached) & s)) & s;
        if (next == reached) break;
        reached = next;
    }
    return reached == s;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
    std::vector<VertexSet> comps;
    VertexSet left = within;
    while (left) {
        VertexSet c = bit(lowest(left));
        for (;;) {
            VertexSet next = (c | neighbors(c)) & within;
            if (next == c) break;
            c = next;
        }
        comps.push_back(c);
        left &= ~c;
    }
    return comps;
}

RootedGraph::RootedGraph(Graph g, std::vector<int> r) : graph(std::move(g)), roots(std::move(r)) {
    if (roots.size() != 3 && roots.size() != 4)
        throw std::invalid_argument("expected 3 or 4 roots");
    VertexSet seen = 0;
    for (int v : roots) {
        if (v < 0 || v >= graph.n()) throw std::invalid_argument("root out of range");
        if (contains(seen, v)) throw std::invalid_argument("roots not distinct");
        seen |= bit(v);
    }
}

VertexSet RootedGraph::root_set() const { return set_of(roots); }

Graph contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("contract_edge: edge not in graph");
    int keep = e.u, gone = e.v;  // e.u < e.v
    std::vector<int> remap(g.n());
    for (int v = 0; v < g.n(); ++v) remap[v] = v < gone ? v : v - 1;
    remap[gone] = remap[keep];
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
        int a = remap[f.u], b = remap[f.v];
        if (a != b) edges.emplace_back(a, b);
    }
    Graph out(g.n() - 1, edges);
    assert(out.n() < g.n());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~g.all_vertices()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    InducedSubgraph out;
    out.old_to_new.assign(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (contains(s, v)) {
            out.old_to_new[v] = next++;
            out.new_to_old.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (contains(s, e.u) && contains(s, e.v))
            edges.emplace_back(out.old_to_new[e.u], out.old_to_new[e.v]);
    out.graph = Graph(next, edges);
    return out;
}

Graph with_edge(const Graph& g, Edge e) { return with_edges(g, {e}); }

Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph(g.n(), edges);
}

Graph without_edges(const Graph& g, const std::vector<Edge>& removed) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
    return Graph(g.n(), edges);
}

namespace {

constexpr int kG6Low = 63;   // '?'
constexpr int kG6High = 126; // '~'

int g6_byte(const std::string& t, size_t i) {
    if (i >= t.size()) throw ParseError("graph6: truncated record at byte " + std::to_string(i));
    unsigned char c = static_cast<unsigned char>(t[i]);
    if (c < kG6Low || c > kG6High)
        throw ParseError("graph6: byte out of range at offset " + std::to_string(i));
    return c - kG6Low;
}

}  // namespace

Graph parse_graph6(const std::string& input) {
    std::string t = input;
    const std::string header = ">>graph6<<";
    if (t.rfind(header, 0) == 0) t = t.substr(header.size());
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
    if (t.empty()) throw ParseError("graph6: empty record");

    size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(t[0]) == kG6High) {
        if (t.size() >= 2 && static_cast<unsigned char>(t[1]) == kG6High)
            throw ParseError("graph6: vertex counts beyond 258047 unsupported (offset 1)");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(t, i);
        pos = 4;
    } else {
        n = g6_byte(t, 0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the supported 64");

    long long nbits = n * (n - 1) / 2;
    size_t want = pos + static_cast<size_t>((nbits + 5) / 6);
    if (t.size() != want) {
        if (t.size() < want) throw ParseError("graph6: truncated record at byte " + std::to_string(t.size()));
        throw ParseError("graph6: trailing garbage at byte " + std::to_string(want));
    }

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = g6_byte(t, pos + static_cast<size_t>(k / 6));
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Low));
    } else {
        out.push_back(static_cast<char>(kG6High));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Low));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Low));
        out.push_back(static_cast<char>((n & 63) + kG6Low));
    }
    int acc = 0, fill = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(acc + kG6Low));
                acc = fill = 0;
            }
        }
    }
    if (fill) out.push_back(static_cast<char>((acc << (6 - fill)) + kG6Low));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n;
    if (!(in >> n)) throw ParseError("edge list: missing vertex count");
    if (n < 0 || n > kMaxVertices) throw ParseError("edge list: vertex count out of range");
    std::vector<Edge> edges;
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

std::string write_dot(const RootedGraph& rg) {
    std::ostringstream out;
    out << "graph g {\n";
    VertexSet roots = rg.root_set();
    for (int v = 0; v < rg.graph.n(); ++v) {
        out << "  v" << v;
        if (contains(roots, v)) out << " [shape=box, root=true]";
        out << ";\n";
    }
    for (const Edge& e : rg.graph.edges()) out << "  v" << e.u << " -- v" << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rmk
