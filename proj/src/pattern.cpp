#include "rmk/pattern.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rmk {

namespace {

// Families list their maps in lexicographic order of the slot tuple; the
// search tries them in this order and the first satisfiable map wins.
std::vector<std::vector<int>> all_bijections(const std::vector<int>& slots, int arity) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm = slots;
    std::sort(perm.begin(), perm.end());
    if (static_cast<int>(perm.size()) != arity)
        throw std::logic_error("bijection family needs |slots| == arity");
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Pattern make_k4x() {
    Pattern p;
    p.name = "k4x";
    p.h = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    p.labels = {"v1", "v2", "v3", "v4"};
    p.slots = {0, 1, 2, 3};
    p.arity = 4;
    p.family = all_bijections(p.slots, 4);
    return p;
}

Pattern make_w4x() {
    // rim 0-1-2-3, hub 4
    Pattern p;
    p.name = "w4x";
    p.h = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    p.labels = {"r1", "r2", "r3", "r4", "hub"};
    p.slots = {0, 1, 2, 3};
    p.arity = 4;
    p.family = all_bijections(p.slots, 4);
    return p;
}

Pattern make_k24x() {
    // t1..t4 = 0..3, s1 = 4, s2 = 5
    std::vector<Edge> edges;
    for (int t = 0; t < 4; ++t)
        for (int s = 4; s < 6; ++s) edges.emplace_back(t, s);
    Pattern p;
    p.name = "k24x";
    p.h = Graph(6, edges);
    p.labels = {"t1", "t2", "t3", "t4", "s1", "s2"};
    p.slots = {0, 1, 2, 3};
    p.arity = 4;
    p.family = all_bijections(p.slots, 4);
    return p;
}

Pattern make_k22x() {
    // s1 = 0, s2 = 1, t1 = 2, t2 = 3; roots (a,b) to the s side, (c,d) to the
    // t side, both orders on each side
    Pattern p;
    p.name = "k22x";
    p.h = Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    p.labels = {"s1", "s2", "t1", "t2"};
    p.slots = {0, 1, 2, 3};
    p.arity = 4;
    p.family = {{0, 1, 2, 3}, {0, 1, 3, 2}, {1, 0, 2, 3}, {1, 0, 3, 2}};
    return p;
}

Pattern make_lx() {
    // v1..v8 as vertices 0..7
    Pattern p;
    p.name = "lx";
    p.h = Graph(8, {{0, 1}, {0, 4}, {1, 6}, {1, 7}, {1, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5},
                    {5, 6}, {5, 7}, {6, 7}});
    p.labels = {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"};
    p.slots = {0, 2, 3, 4};  // v1, v3, v4, v5
    p.arity = 4;
    p.family = all_bijections(p.slots, 4);
    return p;
}

Pattern make_lpx() {
    // induced on {v2,v4,v5,v6,v7,v8}, renumbered v2=0 v4=1 v5=2 v6=3 v7=4 v8=5
    Pattern p;
    p.name = "lprimex";
    p.h = Graph(6, {{0, 4}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    p.labels = {"v2", "v4", "v5", "v6", "v7", "v8"};
    p.slots = {0, 1, 2};  // v2, v4, v5
    p.arity = 3;
    p.family = all_bijections(p.slots, 3);
    return p;
}

const std::map<std::string, Pattern>& pattern_table() {
    static const std::map<std::string, Pattern> table = [] {
        std::map<std::string, Pattern> t;
        for (const Pattern& p : {make_k4x(), make_w4x(), make_k24x(), make_k22x(), make_lx(),
                                 make_lpx()})
            t.emplace(p.name, p);
        return t;
    }();
    return table;
}

}  // namespace

int Pattern::label_index(const std::string& l) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return static_cast<int>(i);
    return -1;
}

const Pattern& builtin_pattern(PatternId id) {
    switch (id) {
        case PatternId::K4X: return builtin_pattern("k4x");
        case PatternId::W4X: return builtin_pattern("w4x");
        case PatternId::K24X: return builtin_pattern("k24x");
        case PatternId::K22X: return builtin_pattern("k22x");
        case PatternId::LX: return builtin_pattern("lx");
        case PatternId::LpX: return builtin_pattern("lprimex");
    }
    throw std::logic_error("unknown pattern id");
}

const Pattern& builtin_pattern(const std::string& name) {
    auto it = pattern_table().find(name);
    if (it == pattern_table().end()) throw std::invalid_argument("unknown pattern: " + name);
    return it->second;
}

const std::vector<std::string>& builtin_pattern_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, p] : pattern_table()) out.push_back(name);
        return out;
    }();
    return names;
}

Pattern restrict_family(const Pattern& p, const std::vector<std::vector<int>>& family) {
    Pattern out = p;
    out.family = family;
    if (out.family.empty()) throw std::invalid_argument("restrict_family: empty family");
    return out;
}

bool family_swap_closed(const Pattern& p, int i, int j) {
    for (const std::vector<int>& f : p.family) {
        std::vector<int> swapped = f;
        std::swap(swapped[i], swapped[j]);
        if (std::find(p.family.begin(), p.family.end(), swapped) == p.family.end()) return false;
    }
    return true;
}

}  // namespace rmk
