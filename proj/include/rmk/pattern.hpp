#pragma once

#include <string>
#include <vector>

#include "rmk/graph.hpp"

namespace rmk {

// A target graph H together with the family of allowed root placements.
// Each map in the family assigns root i (by position in the root tuple) to a
// pattern vertex; maps are injective.
struct Pattern {
    std::string name;
    Graph h;
    std::vector<std::string> labels;        // one per pattern vertex
    std::vector<int> slots;                 // pattern vertices that can receive roots
    std::vector<std::vector<int>> family;   // family[k][i] = slot of root i
    int arity = 0;                          // number of roots

    int label_index(const std::string& l) const;
};

enum class PatternId { K4X, W4X, K24X, K22X, LX, LpX };

const Pattern& builtin_pattern(PatternId id);
const Pattern& builtin_pattern(const std::string& name);  // "k4x", "w4x", ...
const std::vector<std::string>& builtin_pattern_names();

// Pattern with the family reduced to maps satisfying pred(map).
Pattern restrict_family(const Pattern& p,
                        const std::vector<std::vector<int>>& family);

// True when for every map there is another agreeing everywhere except that
// the images of root positions i and j are exchanged. All built-in patterns
// satisfy this for every position pair.
bool family_swap_closed(const Pattern& p, int i, int j);

}  // namespace rmk
