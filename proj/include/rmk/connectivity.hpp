#pragma once

#include <optional>
#include <vector>

#include "rmk/graph.hpp"

namespace rmk {

// --- basic connectivity ---------------------------------------------------

// Vertices whose removal disconnects g. Requires g connected.
VertexSet cut_vertices(const Graph& g);

// Minimum number of vertices whose removal disconnects g (n-1 for complete
// graphs). Requires n >= 2.
int vertex_connectivity(const Graph& g);

// Up to k pairwise internally disjoint (s,t)-paths, maximum cardinality.
// Each path is the full vertex sequence s..t.
std::vector<std::vector<int>> menger_paths(const Graph& g, int s, int t, int k);

// Decision-only planarity (left-right criterion).
bool is_planar(const Graph& g);

// --- separations ----------------------------------------------------------

// A pair (A,B) covering V with no edge between A\B and B\A. Proper when both
// strict sides are nonempty.
struct Separation {
    VertexSet a = 0, b = 0;

    VertexSet boundary() const { return a & b; }
    int order() const { return popcount(a & b); }
    VertexSet strict_a() const { return a & ~b; }
    VertexSet strict_b() const { return b & ~a; }
    bool proper() const { return strict_a() && strict_b(); }
    Separation flipped() const { return {b, a}; }
    friend bool operator==(const Separation& x, const Separation& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const Separation& x, const Separation& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

bool is_separation(const Graph& g, const Separation& s);

struct SeparationOptions {
    // With one_vs_rest, sides are a single component of G - boundary against
    // the rest; otherwise every 2-partition of the components is listed.
    bool one_vs_rest = true;
    int max_order = 2;
    bool include_lower_orders = true;
};

// Proper separations of order <= 2 with computed tight flags, ordered by
// (sorted boundary, sorted A).
struct FlaggedSeparation {
    Separation sep;
    bool tight = false;
};
std::vector<FlaggedSeparation> enumerate_2_separations(const Graph& g,
                                                       const SeparationOptions& opts = {});

// All proper separations with the given boundary, per `opts` side policy.
// Both orientations (A,B) and (B,A) are returned.
std::vector<Separation> separations_with_boundary(const Graph& g, VertexSet boundary,
                                                  bool one_vs_rest = false);

// Tight 3-separations (A,B) with all of X inside A, as used by the
// triangle-completion rewrite for K24 instances.
std::vector<Separation> tight_3_separations(const Graph& g);

// The crossing-separation corner: given boundaries {u,v} and {x,y} with
// x in A1\B1, y in B1\A1, u in A2\B2, v in B2\A2, returns the separation
// (A1 cap A2, rest) with boundary {u,x}.
Separation submodular_cross(const Graph& g, const Separation& s1, const Separation& s2);

// --- chains and triangles -------------------------------------------------

// Nested 2-separations with consecutive boundaries sharing a vertex.
struct TwoChain {
    std::vector<Separation> links;

    VertexSet first_boundary() const { return links.front().boundary(); }
    VertexSet last_boundary() const { return links.back().boundary(); }
};

bool is_2_chain(const Graph& g, const TwoChain& c);
// Terminal separating: both end boundaries hold a root, exactly one root
// strictly inside A1 and exactly one strictly inside Bn. Works for 3- or
// 4-element root sets.
bool is_terminal_separating(const TwoChain& c, VertexSet roots);

// Three 2-separations with boundaries {x,y},{x,v},{v,y} and pairwise disjoint
// strict A-sides. links[0] is the side holding two roots when terminal.
struct SeparationTriangle {
    Separation s1, s2, s3;

    bool terminal_separating(VertexSet roots) const;
};

bool is_separation_triangle(const Graph& g, const SeparationTriangle& t);

struct CycleView {
    std::vector<int> order;  // vertices in cyclic order
    VertexSet vset = 0;
};

// All maximal terminal separating 2-chains whose boundaries lie on C.
// Requires g 2-connected and all roots on the cycle.
std::vector<TwoChain> find_terminal_2_chains(const RootedGraph& g, const CycleView& c);

// Any terminal separating 2-chain with boundaries on C, or nullopt.
std::optional<TwoChain> find_terminal_2_chain(const Graph& g, VertexSet roots,
                                              const CycleView& c);

// All terminal separating triangles with boundaries on C.
std::vector<SeparationTriangle> find_terminal_triangles(const RootedGraph& g,
                                                        const CycleView& c);
std::vector<SeparationTriangle> find_terminal_triangles(const Graph& g, VertexSet roots,
                                                        const CycleView& c);

}  // namespace rmk
