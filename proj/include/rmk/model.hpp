#pragma once

#include <string>
#include <vector>

#include "rmk/graph.hpp"
#include "rmk/pattern.hpp"

namespace rmk {

// The checkable certificate of a rooted minor: one branch set per pattern
// vertex plus the root assignment (root position -> pattern vertex).
struct MinorModel {
    std::vector<VertexSet> branch_sets;  // indexed by pattern vertex
    std::vector<int> root_to_slot;       // indexed by root position
};

enum class ModelFault {
    None,
    Malformed,      // wrong shapes, empty or out-of-range branch set
    Disjointness,
    Connectivity,
    PatternEdge,
    RootPlacement,
    MapNotInFamily,
};

struct Verdict {
    ModelFault fault = ModelFault::None;
    std::string detail;
    bool ok() const { return fault == ModelFault::None; }
};

const char* fault_name(ModelFault f);

// Checks the four model invariants in a fixed order: disjointness,
// connectivity, pattern edges, root placement, map membership.
Verdict verify_model(const RootedGraph& g, const Pattern& p, const MinorModel& m);

std::string model_to_json(const RootedGraph& g, const Pattern& p, const MinorModel& m);
MinorModel model_from_json(const RootedGraph& g, const Pattern& p,
                           const std::string& json_text);

}  // namespace rmk
