#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rmk/connectivity.hpp"
#include "rmk/graph.hpp"
#include "rmk/oracle.hpp"

namespace rmk {

// --- webs -------------------------------------------------------------------

// A web skeleton: planar, outer face the 4-cycle on the roots, all inner
// faces triangles, every triangle a face. Since every triangle of such a
// graph is a face, `triangles` doubles as the inner face list.
struct Web {
    Graph h;
    std::array<int, 4> quad;  // outer cycle order

    std::vector<std::array<int, 3>> triangles() const;
};

// Checks the web conditions without extracting an embedding: planarity,
// |E| = 3|V| - 7, the quad cycle present, the quad on a common face (apex
// stays planar), and no triangle beyond the 2|V|-6 facial ones.
bool is_web(const Graph& h, const std::array<int, 4>& quad);

// Seed webs: the quad plus a chord, or the quad plus a universal centre.
Web web_seed_chord(bool diag_bd = false);
Web web_seed_center();

// Remove inner edge xy whose triangles are xyz and xyw, add a new vertex
// adjacent to x,y,z,w. Fails (nullopt) if zw is an edge.
std::optional<Web> web_split_edge(const Web& w, Edge e);
// Replace inner edge xy by the opposite diagonal zw.
std::optional<Web> web_flip_edge(const Web& w, Edge e);

// Random web on up to max_n vertices via seeded split/flip walks.
Web random_web(int max_n, std::mt19937_64& rng);

// Tries to extend g to a web on the same vertices by adding edges (the quad
// may be any of the three pairings of the roots). Used to certify hand-built
// instances.
std::optional<Web> web_envelope(const Graph& g, const std::array<int, 4>& roots);

// --- class catalogue ----------------------------------------------------------

struct CliqueAttachment {
    std::array<int, 3> triangle;
    std::vector<int> vertices;
};

struct ClassCertificate {
    char cls = 'D';                    // 'A'..'F'
    Graph full;                        // class graph with cliques, before deletions
    std::vector<int> roots;
    std::optional<Web> web;            // D/E/F: web skeleton on `full` vertex ids
    std::vector<CliqueAttachment> cliques;
    std::vector<Edge> deleted;
};

struct ClassInstance {
    RootedGraph rg;
    ClassCertificate cert;
};

// A random 2-connected spanning subgraph of a random class graph. Instances
// are deterministic in (cls, seed).
ClassInstance generate_class(char cls, std::uint64_t seed, int max_n = 10, int max_clique = 3);

// The bare class graphs with chosen web/cliques, no deletions.
ClassInstance build_class_graph(char cls, const std::optional<Web>& web,
                                const std::vector<std::pair<int, int>>& clique_sizes);

// --- cycles -------------------------------------------------------------------

// Some cycle through all roots of g, if one exists. Requires 2-connected.
std::optional<CycleView> cycle_through_roots(const RootedGraph& g,
                                             std::uint64_t budget = 2'000'000);
// Every cycle through all roots (deduplicated, deterministic order).
std::vector<CycleView> all_cycles_through_roots(const RootedGraph& g,
                                                std::uint64_t budget = 2'000'000,
                                                size_t max_cycles = 100000);

// --- the five-obstruction decision ---------------------------------------------

struct ObstructionWitness {
    int kind = 0;  // 1..5
    CycleView cycle;
    TwoChain chain;                    // kind 1, and the inner chain for 3/4
    SeparationTriangle t1, t2;         // kind 2/3 use t1; kinds 4/5 both
    VertexSet inner_region = 0;        // kinds 3/4: vertex set of the auxiliary graph
    std::vector<Edge> inner_edges;     // boundary edges added to the auxiliary graph
    std::vector<int> inner_roots;      // replacement root set of the auxiliary instance
};

std::string witness_to_json(const ObstructionWitness& w);

struct W4Decision {
    Outcome has_w4 = Outcome::Unknown;       // Yes: some root cycle has no obstruction
    std::vector<ObstructionWitness> witnesses;  // one per cycle when No
    std::optional<CycleView> unobstructed;      // when Yes
    std::uint64_t cycles = 0;
};

// Requires g 2-connected, K4(X)-free, and a spanning web subgraph (caller
// established). Iterates every cycle through the roots and searches the
// obstructions in order 1..5.
W4Decision decide_w4_by_obstructions(const RootedGraph& g, std::uint64_t budget = 2'000'000);

// Obstruction search for one cycle.
std::optional<ObstructionWitness> find_obstruction(const RootedGraph& g, const CycleView& c);

// --- K22 / K24 -----------------------------------------------------------------

// Disjoint-path characterization: an (a,c)-path avoiding a (b,d)-path exists
// and an (a,d)-path avoiding a (b,c)-path exists.
bool k22_via_disjoint_paths(const Graph& g, int a, int b, int c, int d);

struct StructuralDecision {
    Outcome outcome = Outcome::Unknown;
    std::string method;
};

// K24(X) on a generated instance: class A never, classes B/C always, webs by
// the W4 obstruction decision (with oracle fallback when W4 is present).
StructuralDecision decide_k24(const RootedGraph& g, const ClassCertificate* cert,
                              std::uint64_t budget = kDefaultBudget);

// --- L / L' ---------------------------------------------------------------------

struct LPrimeWitness {
    std::vector<int> c1, c2, c3;  // cycles as vertex orders
    std::vector<int> p1, p2, p3;  // paths from the roots, may be single vertices
};

struct LPrimeResult {
    Outcome outcome = Outcome::Unknown;
    std::optional<LPrimeWitness> witness;
};

std::string lprime_witness_to_json(const LPrimeWitness& w);

// Cycle-triple + path characterization of L'(X); cross-checked against the
// oracle pattern. Requires 2-connected and three distinct roots.
LPrimeResult find_lprime(const Graph& g, const std::array<int, 3>& roots,
                         std::uint64_t budget = 5'000'000);
bool verify_lprime_witness(const Graph& g, const std::array<int, 3>& roots,
                           const LPrimeWitness& w);

// L(X) on a certified instance: class A never, E/F via their web, webs by the
// chain parity rule with the embedded-L' search on even chains; triangle
// obstructions reduce to chain instances. Oracle fallback otherwise.
StructuralDecision decide_lx(const RootedGraph& g, const ClassCertificate* cert,
                             std::uint64_t budget = kDefaultBudget);

// --- planted obstruction instances ----------------------------------------------

struct PlantedInstance {
    RootedGraph rg;
    int kind = 0;            // obstruction kind this instance pins down
    std::optional<Web> web;  // certifying envelope
    std::string note;
};

// Chain instance along a cycle: `links` separations, anchored per the chain
// conventions; optional inner block carrying an L' between the first chord
// pair. Extra arc vertices pad the cycle.
PlantedInstance plant_chain(int links, bool lprime_block, int padding = 0);
PlantedInstance plant_triangle_rooted();            // pure kind 2
PlantedInstance plant_triangle_with_chain();        // pure kind 3
PlantedInstance plant_double_triangle_chain();      // pure kind 4
PlantedInstance plant_linked_triangles();           // pure kind 5

}  // namespace rmk
