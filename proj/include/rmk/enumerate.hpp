#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rmk/graph.hpp"

namespace rmk {

// Canonical form: the lexicographically smallest upper-triangle bit string
// (graph6 column order) over all vertex permutations. Only intended for the
// small-graph corpora (n <= 10 or so).
std::vector<std::uint8_t> canonical_form(const Graph& g);

// All graphs on exactly n vertices, one representative per isomorphism class.
std::vector<Graph> all_graphs_upto_iso(int n);

std::vector<Graph> filter_connected(const std::vector<Graph>& gs);

// Deterministic G(n, p) conditioned on connectivity.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

// All 4-element subsets / ordered arrangements of {0..n-1}, used to sweep
// root choices in the crosscheck corpora.
std::vector<std::vector<int>> root_subsets(int n, int k);

}  // namespace rmk
