#include "rmk/model.hpp"

#include <algorithm>

#include "json.hpp"

namespace rmk {

const char* fault_name(ModelFault f) {
    switch (f) {
        case ModelFault::None: return "ok";
        case ModelFault::Malformed: return "malformed";
        case ModelFault::Disjointness: return "disjointness";
        case ModelFault::Connectivity: return "connectivity";
        case ModelFault::PatternEdge: return "pattern-edge";
        case ModelFault::RootPlacement: return "root-placement";
        case ModelFault::MapNotInFamily: return "map-not-in-family";
    }
    return "?";
}

Verdict verify_model(const RootedGraph& g, const Pattern& p, const MinorModel& m) {
    const int h = p.h.n();
    if (static_cast<int>(m.branch_sets.size()) != h)
        return {ModelFault::Malformed, "expected " + std::to_string(h) + " branch sets"};
    if (m.root_to_slot.size() != g.roots.size())
        return {ModelFault::Malformed, "root map arity mismatch"};
    for (int x = 0; x < h; ++x) {
        if (!m.branch_sets[x])
            return {ModelFault::Malformed, "empty branch set " + p.labels[x]};
        if (m.branch_sets[x] & ~g.graph.all_vertices())
            return {ModelFault::Malformed, "branch set " + p.labels[x] + " out of range"};
    }
    for (int x = 0; x < h; ++x)
        for (int y = x + 1; y < h; ++y)
            if (m.branch_sets[x] & m.branch_sets[y])
                return {ModelFault::Disjointness,
                        p.labels[x] + " and " + p.labels[y] + " overlap"};
    for (int x = 0; x < h; ++x)
        if (!g.graph.connected_within(m.branch_sets[x]))
            return {ModelFault::Connectivity, "branch set " + p.labels[x] + " disconnected"};
    for (const Edge& e : p.h.edges())
        if (!(g.graph.neighbors(m.branch_sets[e.u]) & m.branch_sets[e.v]))
            return {ModelFault::PatternEdge,
                    "no edge between " + p.labels[e.u] + " and " + p.labels[e.v]};
    for (size_t i = 0; i < g.roots.size(); ++i) {
        int slot = m.root_to_slot[i];
        if (slot < 0 || slot >= h)
            return {ModelFault::Malformed, "root slot out of range"};
        if (!contains(m.branch_sets[slot], g.roots[i]))
            return {ModelFault::RootPlacement,
                    "root " + std::to_string(g.roots[i]) + " not in " + p.labels[slot]};
    }
    if (std::find(p.family.begin(), p.family.end(), m.root_to_slot) == p.family.end())
        return {ModelFault::MapNotInFamily, "root map not in the pattern's family"};
    return {};
}

std::string model_to_json(const RootedGraph& g, const Pattern& p, const MinorModel& m) {
    nlohmann::ordered_json j;
    j["pattern"] = p.name;
    nlohmann::ordered_json sets = nlohmann::ordered_json::object();
    for (size_t x = 0; x < m.branch_sets.size(); ++x) sets[p.labels[x]] = to_vector(m.branch_sets[x]);
    j["branch_sets"] = sets;
    nlohmann::ordered_json rm = nlohmann::ordered_json::object();
    for (size_t i = 0; i < m.root_to_slot.size(); ++i)
        rm[std::to_string(g.roots[i])] = p.labels[m.root_to_slot[i]];
    j["root_map"] = rm;
    return j.dump(2);
}

MinorModel model_from_json(const RootedGraph& g, const Pattern& p,
                           const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw ParseError("model: invalid JSON");
    MinorModel m;
    m.branch_sets.assign(p.h.n(), 0);
    if (!j.contains("branch_sets") || !j.contains("root_map"))
        throw ParseError("model: missing branch_sets or root_map");
    for (auto& [label, verts] : j["branch_sets"].items()) {
        int x = p.label_index(label);
        if (x < 0) throw ParseError("model: unknown pattern vertex " + label);
        for (int v : verts.get<std::vector<int>>()) {
            if (v < 0 || v >= kMaxVertices) throw ParseError("model: vertex out of range");
            m.branch_sets[x] |= bit(v);
        }
    }
    for (int root : g.roots) {
        std::string key = std::to_string(root);
        if (!j["root_map"].contains(key)) throw ParseError("model: root " + key + " unmapped");
        int x = p.label_index(j["root_map"][key].get<std::string>());
        if (x < 0) throw ParseError("model: unknown pattern vertex in root_map");
        m.root_to_slot.push_back(x);
    }
    return m;
}

}  // namespace rmk
