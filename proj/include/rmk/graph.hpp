#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rmk {

// Vertices are 0..n-1. Graphs are simple and undirected, immutable after
// construction. Algorithms in this library assume n <= 64 so that vertex
// sets fit in a single word; construction enforces it.
constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }
inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest(VertexSet s) { return __builtin_ctzll(s); }
VertexSet set_of(const std::vector<int>& vs);
std::vector<int> to_vector(VertexSet s);

struct Edge {
    int u, v;  // normalized u < v
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

class Graph {
public:
    Graph() = default;
    // Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet adj(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return u != v && contains(adj_[u], v); }
    int degree(int v) const { return popcount(adj_[v]); }
    VertexSet all_vertices() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }

    // Neighbourhood of a set, excluding the set itself.
    VertexSet neighbors(VertexSet s) const;

    bool is_connected() const;
    bool connected_within(VertexSet s) const;
    // Connected components of the induced subgraph on `within`.
    std::vector<VertexSet> components(VertexSet within) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
};

// Graph plus an ordered tuple of 3 or 4 distinct root vertices.
struct RootedGraph {
    Graph graph;
    std::vector<int> roots;

    RootedGraph() = default;
    RootedGraph(Graph g, std::vector<int> r);

    VertexSet root_set() const;
};

// Merges the endpoints of e into the lower-indexed one, collapses parallel
// edges, drops the loop, and renumbers vertices contiguously.
Graph contract_edge(const Graph& g, Edge e);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside S
    std::vector<int> new_to_old;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// Adds an edge (no-op if present).
Graph with_edge(const Graph& g, Edge e);
Graph with_edges(const Graph& g, const std::vector<Edge>& extra);
Graph without_edges(const Graph& g, const std::vector<Edge>& removed);

// graph6 records per the standard column-major upper-triangle ordering.
// Accepts one record, optionally prefixed with ">>graph6<<".
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// Plain text format: first line "n", then one "u v" line per edge.
Graph parse_edge_list(const std::string& text);
std::string encode_edge_list(const Graph& g);

// DOT output; roots get a shape attribute. Deterministic order.
std::string write_dot(const RootedGraph& g);

// Thrown by parsers with the offending byte offset in what().
struct ParseError : std::exception {
    std::string message;
    explicit ParseError(std::string m) : message(std::move(m)) {}
    const char* what() const noexcept override { return message.c_str(); }
};

}  // namespace rmk
