#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rmk/oracle.hpp"
#include "rmk/pattern.hpp"
#include "rmk/structure.hpp"

namespace rmk {

// A rooted-minor question. Root order is significant for patterns whose map
// family is not symmetric (the paired pattern): rewrites replace roots
// positionally, which keeps every built-in family unchanged.
struct Instance {
    RootedGraph rg;
    PatternId pattern;
};

enum class Combine { Leaf, ForcedNo, Same, Or, And };

struct ReductionNode {
    Combine combine = Combine::Leaf;
    Instance instance;  // meaningful for leaves
    std::string lemma;  // rewrite that produced the children
    std::vector<int> boundary;
    std::vector<std::unique_ptr<ReductionNode>> children;
};

struct ReductionStep {
    std::string lemma;
    std::vector<int> boundary;
    Combine combine = Combine::Same;
    std::vector<Instance> children;
};

// Single-step rewrites. Absent when no case of the corresponding lemma group
// matches. Cut rewrites apply to every built-in pattern; the 2-separation
// group needs a 3-connected pattern; the k24/lx groups are pattern-specific.
std::optional<ReductionStep> reduce_cut_vertex(const Instance& inst);
std::optional<ReductionStep> reduce_2_separation(const Instance& inst);
std::optional<ReductionStep> reduce_k24(const Instance& inst);
std::optional<ReductionStep> reduce_lx(const Instance& inst);

// Highest-priority applicable rewrite: forced-no, then same-answer, then
// branching; ties broken by the lexicographically least boundary.
std::optional<ReductionStep> reduce_once(const Instance& inst);

struct ReductionTrace {
    struct Entry {
        std::string lemma;
        std::vector<int> boundary;
        Combine combine;
        std::vector<std::string> child_hashes;  // graph6 of each child
    };
    std::vector<Entry> steps;
};

struct FixpointResult {
    std::unique_ptr<ReductionNode> tree;
    std::vector<Instance> leaves;
    ReductionTrace trace;
};

FixpointResult fixpoint_reduce(const Instance& inst);

// Oracle-evaluates the leaves and folds the combiner tree.
OracleResult evaluate(const ReductionNode& node, std::uint64_t budget = kDefaultBudget);

std::string trace_to_json(const Instance& root, const FixpointResult& fr);

// Contracts each clique attachment per the web certificate: either the
// one-component-to-apex recipe (3-connected form) or the per-component
// two-neighbour contractions (2-connected form). The result is planar.
Graph reduce_to_planar(const Graph& g, const ClassCertificate& cert, bool three_connected_mode);

}  // namespace rmk
