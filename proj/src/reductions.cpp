#include "rmk/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "json.hpp"

namespace rmk {

namespace {

bool pattern_3connected(PatternId p) { return p == PatternId::K4X || p == PatternId::W4X; }

// G[side] plus the boundary edge, renumbered; new_roots given in old ids.
Instance side_child(const Instance& inst, VertexSet side, const std::vector<Edge>& extra,
                    const std::vector<int>& new_roots) {
    InducedSubgraph sub = induced_subgraph(inst.rg.graph, side);
    std::vector<Edge> add;
    for (const Edge& e : extra) add.emplace_back(sub.old_to_new[e.u], sub.old_to_new[e.v]);
    Graph g = with_edges(sub.graph, add);
    std::vector<int> roots;
    for (int r : new_roots) roots.push_back(sub.old_to_new[r]);
    return Instance{RootedGraph(g, roots), inst.pattern};
}

std::vector<int> replace_root(const std::vector<int>& roots, int old_root, int replacement) {
    std::vector<int> out = roots;
    for (int& r : out)
        if (r == old_root) r = replacement;
    return out;
}

std::vector<Edge> bd_edges(VertexSet bd) {
    std::vector<int> b = to_vector(bd);
    std::vector<Edge> out;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) out.emplace_back(b[i], b[j]);
    return out;
}

// A two-two rewrite replaces a pair of roots by the boundary pair; that is
// only sound when the map family tolerates either landing order.
void assert_swap_condition(PatternId pid, const std::vector<int>& roots, VertexSet replaced) {
    const Pattern& p = builtin_pattern(pid);
    std::vector<int> pos;
    for (size_t i = 0; i < roots.size(); ++i)
        if (contains(replaced, roots[i])) pos.push_back(static_cast<int>(i));
    assert(pos.size() == 2);
    assert(family_swap_closed(p, pos[0], pos[1]));
    (void)p;
}

}  // namespace

std::optional<ReductionStep> reduce_cut_vertex(const Instance& inst) {
    const Graph& g = inst.rg.graph;
    VertexSet roots = inst.rg.root_set();

    if (!g.is_connected()) {
        // route to the component holding the roots
        std::vector<VertexSet> comps = g.components(g.all_vertices());
        for (VertexSet c : comps)
            if (roots & c) {
                if (roots & ~c)
                    return ReductionStep{"disconnected-roots-split", {}, Combine::ForcedNo, {}};
                return ReductionStep{"root-component", {}, Combine::Same,
                                     {side_child(inst, c, {}, inst.rg.roots)}};
            }
        return ReductionStep{"disconnected-roots-split", {}, Combine::ForcedNo, {}};
    }

    for (int v = 0; v < g.n(); ++v) {
        VertexSet rest = g.all_vertices() & ~bit(v);
        std::vector<VertexSet> comps = g.components(rest);
        if (comps.size() < 2) continue;
        if (contains(roots, v)) {
            // root at the cut vertex: everything must live on one side
            int with_roots = 0;
            VertexSet side = 0;
            for (VertexSet c : comps)
                if (c & roots) {
                    ++with_roots;
                    side = c;
                }
            if (with_roots >= 2) return ReductionStep{"cut-root-split", {v}, Combine::ForcedNo, {}};
            if (with_roots == 0) side = comps.front();
            return ReductionStep{"cut-root-side", {v}, Combine::Same,
                                 {side_child(inst, side | bit(v), {}, inst.rg.roots)}};
        }
        std::vector<std::pair<VertexSet, int>> rooted;
        for (VertexSet c : comps)
            if (c & roots) rooted.emplace_back(c, popcount(c & roots));
        if (rooted.size() == 1) {
            return ReductionStep{"cut-all-one-side", {v}, Combine::Same,
                                 {side_child(inst, rooted[0].first | bit(v), {}, inst.rg.roots)}};
        }
        if (rooted.size() == 2) {
            // a single far root crosses the cut vertex
            VertexSet near = 0, far = 0;
            if (rooted[0].second == 1 && rooted[1].second >= 1) {
                far = rooted[0].first;
                near = rooted[1].first;
            }
            if (rooted[1].second == 1) {
                far = rooted[1].first;
                near = rooted[0].first;
            }
            if (popcount(far & roots) == 1 && popcount(near & roots) >= 2) {
                int d = lowest(far & roots);
                return ReductionStep{
                    "cut-far-root", {v}, Combine::Same,
                    {side_child(inst, near | bit(v), {}, replace_root(inst.rg.roots, d, v))}};
            }
            return ReductionStep{"cut-roots-split", {v}, Combine::ForcedNo, {}};
        }
        return ReductionStep{"cut-roots-split", {v}, Combine::ForcedNo, {}};
    }
    return std::nullopt;
}

namespace {

struct SplitInfo {
    VertexSet bd;
    std::vector<int> b;  // the two boundary vertices
    std::vector<VertexSet> comps;
    int bd_roots;
};

std::vector<SplitInfo> proper_2_splits(const Graph& g, VertexSet roots) {
    std::vector<SplitInfo> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            VertexSet bd = bit(u) | bit(v);
            std::vector<VertexSet> comps = g.components(g.all_vertices() & ~bd);
            if (comps.size() < 2) continue;
            out.push_back({bd, {u, v}, comps, popcount(bd & roots)});
        }
    return out;
}

// union of components holding exactly `want` roots, when achievable greedily
std::optional<VertexSet> assemble_side(const std::vector<VertexSet>& comps, VertexSet roots,
                                       int want) {
    VertexSet side = 0;
    int got = 0;
    for (VertexSet c : comps) {
        int k = popcount(c & roots);
        if (k && got + k <= want) {
            side |= c;
            got += k;
        }
    }
    if (got != want) return std::nullopt;
    // pad with rootless components to keep both sides nonempty later
    return side;
}

}  // namespace

std::optional<ReductionStep> reduce_2_separation(const Instance& inst) {
    if (!pattern_3connected(inst.pattern)) return std::nullopt;
    const Graph& g = inst.rg.graph;
    VertexSet roots = inst.rg.root_set();
    std::vector<SplitInfo> splits = proper_2_splits(g, roots);

    // forced no first
    for (const SplitInfo& s : splits) {
        if (s.bd_roots != 2) continue;
        int rooted = 0;
        for (VertexSet c : s.comps)
            if (c & roots) ++rooted;
        if (rooted >= 2)
            return ReductionStep{"sep-roots-split", s.b, Combine::ForcedNo, {}};
    }
    // same answer
    for (const SplitInfo& s : splits) {
        std::vector<VertexSet> rooted;
        for (VertexSet c : s.comps)
            if (c & roots) rooted.push_back(c);
        if (rooted.size() <= 1) {
            // all roots on one side: drop the rootless components
            VertexSet keep = rooted.empty() ? s.comps.front() : rooted.front();
            if ((keep | s.bd) == g.all_vertices()) continue;  // nothing removed
            return ReductionStep{"sep-all-one-side", s.b, Combine::Same,
                                 {side_child(inst, keep | s.bd, bd_edges(s.bd), inst.rg.roots)}};
        }
        if (s.bd_roots == 1 && rooted.size() == 2) {
            // one root in the boundary, one strictly on a side, two on the other
            for (int which = 0; which < 2; ++which) {
                VertexSet lone = rooted[which], pair = rooted[1 - which];
                if (popcount(lone & roots) == 1 && popcount(pair & roots) == 2) {
                    int d = lowest(lone & roots);
                    int v = s.b[0];
                    if (contains(roots, v)) v = s.b[1];
                    VertexSet side = g.all_vertices() & ~lone;
                    return ReductionStep{
                        "sep-root-in-cut", s.b, Combine::Same,
                        {side_child(inst, side, bd_edges(s.bd),
                                    replace_root(inst.rg.roots, d, v))}};
                }
            }
        }
    }
    // branching
    for (const SplitInfo& s : splits) {
        if (s.bd_roots != 0) continue;
        if (std::optional<VertexSet> aside = assemble_side(s.comps, roots, 2)) {
            VertexSet a = *aside, bside = 0;
            for (VertexSet c : s.comps)
                if (!(c & a)) bside |= c;
            if (popcount(bside & roots) != 2) continue;
            std::vector<int> ra = to_vector(s.bd), rb = to_vector(s.bd);
            // keep positional structure: replace each far root by a boundary
            // vertex, two per side
            std::vector<int> roots_a = inst.rg.roots, roots_b = inst.rg.roots;
            int ia = 0, ib = 0;
            for (size_t i = 0; i < inst.rg.roots.size(); ++i) {
                int r = inst.rg.roots[i];
                if (contains(a, r)) {
                    roots_b[i] = rb[ib++];
                } else {
                    roots_a[i] = ra[ia++];
                }
            }
            if (ia != 2 || ib != 2) continue;
            assert_swap_condition(inst.pattern, inst.rg.roots, bside & roots);
            assert_swap_condition(inst.pattern, inst.rg.roots, a & roots);
            return ReductionStep{"sep-two-two", s.b, Combine::Or,
                                 {side_child(inst, a | s.bd, bd_edges(s.bd), roots_a),
                                  side_child(inst, bside | s.bd, bd_edges(s.bd), roots_b)}};
        }
    }
    for (const SplitInfo& s : splits) {
        if (s.bd_roots != 0) continue;
        // one root strictly on a side, three on the other
        for (VertexSet lone : s.comps) {
            if (popcount(lone & roots) != 1) continue;
            VertexSet bside = g.all_vertices() & ~lone & ~s.bd;
            if (popcount(bside & roots) != 3) continue;
            int a = lowest(lone & roots);
            VertexSet side = g.all_vertices() & ~lone;
            return ReductionStep{
                "sep-one-three", s.b, Combine::Or,
                {side_child(inst, side, bd_edges(s.bd), replace_root(inst.rg.roots, a, s.b[0])),
                 side_child(inst, side, bd_edges(s.bd), replace_root(inst.rg.roots, a, s.b[1]))}};
        }
    }
    return std::nullopt;
}

std::optional<ReductionStep> reduce_k24(const Instance& inst) {
    if (inst.pattern != PatternId::K24X) return std::nullopt;
    const Graph& g = inst.rg.graph;
    VertexSet roots = inst.rg.root_set();
    std::vector<SplitInfo> splits = proper_2_splits(g, roots);

    for (const SplitInfo& s : splits) {
        if (s.bd_roots != 2) continue;
        int rooted = 0;
        for (VertexSet c : s.comps)
            if (c & roots) ++rooted;
        if (rooted >= 2) return ReductionStep{"k24-split-vertices", s.b, Combine::ForcedNo, {}};
    }
    for (const SplitInfo& s : splits) {
        std::vector<VertexSet> rooted;
        for (VertexSet c : s.comps)
            if (c & roots) rooted.push_back(c);
        if (rooted.size() <= 1) {
            VertexSet keep = rooted.empty() ? s.comps.front() : rooted.front();
            if ((keep | s.bd) == g.all_vertices()) continue;
            return ReductionStep{"k24-all-one-side", s.b, Combine::Same,
                                 {side_child(inst, keep | s.bd, bd_edges(s.bd), inst.rg.roots)}};
        }
        if (s.bd_roots == 1 && rooted.size() == 2) {
            for (int which = 0; which < 2; ++which) {
                VertexSet lone = rooted[which], pair = rooted[1 - which];
                if (popcount(lone & roots) == 1 && popcount(pair & roots) == 2) {
                    int a = lowest(lone & roots);
                    int v = s.b[0];
                    if (contains(roots, v)) v = s.b[1];
                    VertexSet side = g.all_vertices() & ~lone;
                    return ReductionStep{
                        "k24-root-in-cut", s.b, Combine::Same,
                        {side_child(inst, side, bd_edges(s.bd),
                                    replace_root(inst.rg.roots, a, v))}};
                }
            }
        }
    }
    // tight 3-separation with all roots inside
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            for (int w = v + 1; w < g.n(); ++w) {
                VertexSet bd = bit(u) | bit(v) | bit(w);
                std::vector<VertexSet> comps = g.components(g.all_vertices() & ~bd);
                if (comps.size() < 2) continue;
                VertexSet keep = 0;
                bool rootless_exists = false;
                for (VertexSet c : comps) {
                    if (c & roots) keep |= c;
                    else rootless_exists = true;
                }
                if (!rootless_exists || !keep) continue;
                // tightness
                bool tight = true;
                for (VertexSet sub :
                     {bit(u), bit(v), bit(w), bit(u) | bit(v), bit(u) | bit(w), bit(v) | bit(w),
                      VertexSet{0}})
                    if (sub != bd && !g.connected_within(g.all_vertices() & ~sub)) tight = false;
                if (!tight) continue;
                return ReductionStep{"k24-tight-triangle", {u, v, w}, Combine::Same,
                                     {side_child(inst, keep | bd, bd_edges(bd), inst.rg.roots)}};
            }
    // two roots strictly on each side: K24 on either side, or K22 on both
    for (const SplitInfo& s : splits) {
        if (s.bd_roots != 0) continue;
        if (std::optional<VertexSet> aside = assemble_side(s.comps, roots, 2)) {
            VertexSet a = *aside, bside = 0;
            for (VertexSet c : s.comps)
                if (!(c & a)) bside |= c;
            if (popcount(bside & roots) != 2) continue;
            std::vector<int> ra = to_vector(s.bd), rb = to_vector(s.bd);
            std::vector<int> roots_a = inst.rg.roots, roots_b = inst.rg.roots;
            int ia = 0, ib = 0;
            for (size_t i = 0; i < inst.rg.roots.size(); ++i) {
                int r = inst.rg.roots[i];
                if (contains(a, r)) roots_b[i] = rb[ib++];
                else roots_a[i] = ra[ia++];
            }
            if (ia != 2 || ib != 2) continue;
            assert_swap_condition(inst.pattern, inst.rg.roots, bside & roots);
            assert_swap_condition(inst.pattern, inst.rg.roots, a & roots);
            Instance a24 = side_child(inst, a | s.bd, bd_edges(s.bd), roots_a);
            Instance b24 = side_child(inst, bside | s.bd, bd_edges(s.bd), roots_b);
            // the paired pattern wants each side's own roots first
            std::vector<int> ka, kb;
            for (int r : inst.rg.roots)
                if (contains(a, r)) ka.push_back(r);
            for (int r : inst.rg.roots)
                if (contains(bside, r)) kb.push_back(r);
            ka.insert(ka.end(), ra.begin(), ra.end());
            kb.insert(kb.end(), rb.begin(), rb.end());
            Instance a22 = side_child(inst, a | s.bd, bd_edges(s.bd), ka);
            a22.pattern = PatternId::K22X;
            Instance b22 = side_child(inst, bside | s.bd, bd_edges(s.bd), kb);
            b22.pattern = PatternId::K22X;
            ReductionStep step{"k24-two-two", s.b, Combine::Or, {a24, b24, a22, b22}};
            return step;
        }
    }
    return std::nullopt;
}

std::optional<ReductionStep> reduce_lx(const Instance& inst) {
    if (inst.pattern != PatternId::LX) return std::nullopt;
    const Graph& g = inst.rg.graph;
    VertexSet roots = inst.rg.root_set();
    std::vector<SplitInfo> splits = proper_2_splits(g, roots);

    for (const SplitInfo& s : splits) {
        if (s.bd_roots != 2) continue;
        int rooted = 0;
        for (VertexSet c : s.comps)
            if (c & roots) ++rooted;
        if (rooted >= 2) return ReductionStep{"lx-terminal-pair", s.b, Combine::ForcedNo, {}};
    }
    for (const SplitInfo& s : splits) {
        std::vector<VertexSet> rooted;
        for (VertexSet c : s.comps)
            if (c & roots) rooted.push_back(c);
        if (rooted.size() <= 1) {
            VertexSet keep = rooted.empty() ? s.comps.front() : rooted.front();
            if ((keep | s.bd) == g.all_vertices()) continue;
            return ReductionStep{"lx-all-one-side", s.b, Combine::Same,
                                 {side_child(inst, keep | s.bd, bd_edges(s.bd), inst.rg.roots)}};
        }
    }
    // No two-two rewrite here: a branch set holding a boundary vertex can
    // bridge the separation and satisfy its adjacencies on the far side (the
    // degree-2 corners of the pattern make that realizable), so splitting is
    // not answer-preserving. An explicit bridging instance sits in the test
    // suite.
    return std::nullopt;
}

namespace {

int step_priority(const ReductionStep& s) {
    switch (s.combine) {
        case Combine::ForcedNo: return 0;
        case Combine::Same: return 1;
        default: return 2;
    }
}

}  // namespace

std::optional<ReductionStep> reduce_once(const Instance& inst) {
    std::optional<ReductionStep> best;
    for (auto reducer : {reduce_cut_vertex, reduce_2_separation, reduce_k24, reduce_lx}) {
        std::optional<ReductionStep> cand = reducer(inst);
        if (!cand) continue;
        if (!best || step_priority(*cand) < step_priority(*best)) best = cand;
    }
    return best;
}

namespace {

std::unique_ptr<ReductionNode> reduce_rec(const Instance& inst, ReductionTrace& trace,
                                          std::vector<Instance>& leaves, int depth) {
    auto node = std::make_unique<ReductionNode>();
    std::optional<ReductionStep> step = depth > 64 ? std::nullopt : reduce_once(inst);
    if (!step) {
        node->combine = Combine::Leaf;
        node->instance = inst;
        leaves.push_back(inst);
        return node;
    }
    // progress guard: every child is strictly smaller
    for (const Instance& child : step->children) {
        auto key = [](const Graph& g) { return std::pair(g.n(), g.edge_count()); };
        if (key(child.rg.graph) >= key(inst.rg.graph))
            throw std::logic_error("reduction step did not shrink the instance");
    }
    ReductionTrace::Entry entry{step->lemma, step->boundary, step->combine, {}};
    for (const Instance& child : step->children)
        entry.child_hashes.push_back(encode_graph6(child.rg.graph));
    trace.steps.push_back(entry);

    node->lemma = step->lemma;
    node->boundary = step->boundary;
    if (step->combine == Combine::ForcedNo) {
        node->combine = Combine::ForcedNo;
        return node;
    }
    if (step->combine == Combine::Same) {
        node->combine = Combine::Same;
        node->children.push_back(reduce_rec(step->children[0], trace, leaves, depth + 1));
        return node;
    }
    if (step->lemma == "k24-two-two") {
        // (k24 in A) or (k24 in B) or (k22 in A and k22 in B)
        node->combine = Combine::Or;
        node->children.push_back(reduce_rec(step->children[0], trace, leaves, depth + 1));
        node->children.push_back(reduce_rec(step->children[1], trace, leaves, depth + 1));
        auto both = std::make_unique<ReductionNode>();
        both->combine = Combine::And;
        both->lemma = "k24-two-two/k22-pair";
        both->children.push_back(reduce_rec(step->children[2], trace, leaves, depth + 1));
        both->children.push_back(reduce_rec(step->children[3], trace, leaves, depth + 1));
        node->children.push_back(std::move(both));
        return node;
    }
    node->combine = Combine::Or;
    for (const Instance& child : step->children)
        node->children.push_back(reduce_rec(child, trace, leaves, depth + 1));
    return node;
}

}  // namespace

FixpointResult fixpoint_reduce(const Instance& inst) {
    FixpointResult out;
    out.tree = reduce_rec(inst, out.trace, out.leaves, 0);
    return out;
}

OracleResult evaluate(const ReductionNode& node, std::uint64_t budget) {
    switch (node.combine) {
        case Combine::Leaf: {
            const Pattern& p = builtin_pattern(node.instance.pattern);
            if (node.instance.rg.graph.n() < p.h.n()) return {Outcome::No, std::nullopt, 0};
            return find_rooted_minor(node.instance.rg, p, budget);
        }
        case Combine::ForcedNo:
            return {Outcome::No, std::nullopt, 0};
        case Combine::Same:
            return evaluate(*node.children[0], budget);
        case Combine::Or: {
            bool unknown = false;
            std::uint64_t nodes = 0;
            for (const auto& c : node.children) {
                OracleResult r = evaluate(*c, budget);
                nodes += r.nodes;
                if (r.yes()) return {Outcome::Yes, std::nullopt, nodes};
                if (r.unknown()) unknown = true;
            }
            return {unknown ? Outcome::Unknown : Outcome::No, std::nullopt, nodes};
        }
        case Combine::And: {
            bool unknown = false;
            std::uint64_t nodes = 0;
            for (const auto& c : node.children) {
                OracleResult r = evaluate(*c, budget);
                nodes += r.nodes;
                if (r.no()) return {Outcome::No, std::nullopt, nodes};
                if (r.unknown()) unknown = true;
            }
            return {unknown ? Outcome::Unknown : Outcome::Yes, std::nullopt, nodes};
        }
    }
    return {Outcome::Unknown, std::nullopt, 0};
}

std::string trace_to_json(const Instance& root, const FixpointResult& fr) {
    nlohmann::ordered_json j;
    j["graph6"] = encode_graph6(root.rg.graph);
    j["roots"] = root.rg.roots;
    j["pattern"] = builtin_pattern(root.pattern).name;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const ReductionTrace::Entry& e : fr.trace.steps) {
        nlohmann::ordered_json s;
        s["lemma"] = e.lemma;
        s["boundary"] = e.boundary;
        s["combiner"] = e.combine == Combine::ForcedNo ? "forced-no"
                        : e.combine == Combine::Same   ? "same-answer"
                        : e.combine == Combine::Or     ? "or"
                                                       : "and";
        s["children"] = e.child_hashes;
        steps.push_back(s);
    }
    j["steps"] = steps;
    nlohmann::ordered_json leaves = nlohmann::ordered_json::array();
    for (const Instance& leaf : fr.leaves) {
        nlohmann::ordered_json l;
        l["graph6"] = encode_graph6(leaf.rg.graph);
        l["roots"] = leaf.rg.roots;
        l["pattern"] = builtin_pattern(leaf.pattern).name;
        leaves.push_back(l);
    }
    j["leaves"] = leaves;
    return j.dump(2);
}

Graph reduce_to_planar(const Graph& g, const ClassCertificate& cert,
                       bool three_connected_mode) {
    // group[v]: contraction class representative
    std::vector<int> group(g.n());
    std::iota(group.begin(), group.end(), 0);
    auto find = [&](int v) {
        while (group[v] != v) v = group[v] = group[group[v]];
        return v;
    };
    auto unite = [&](int a, int b) { group[find(a)] = find(b); };

    for (const CliqueAttachment& att : cert.cliques) {
        VertexSet cliq = 0;
        for (int v : att.vertices) cliq |= bit(v);
        if (!cliq) continue;
        std::vector<VertexSet> comps = g.components(cliq);
        auto t_neighbors = [&](VertexSet comp) {
            int k = 0;
            for (int t : att.triangle)
                if (g.neighbors(comp) & bit(t)) ++k;
            return k;
        };
        auto merge_into_triangle = [&](VertexSet comp) {
            int anchor = -1;
            for (int t : att.triangle)
                if (g.neighbors(comp) & bit(t)) {
                    anchor = t;
                    break;
                }
            if (anchor < 0) anchor = att.triangle[0];
            for (int v : to_vector(comp)) unite(v, anchor);
        };
        auto contract_comp = [&](VertexSet comp) {
            int rep = lowest(comp);
            for (int v : to_vector(comp)) unite(v, rep);
        };
        if (three_connected_mode) {
            for (size_t i = 0; i < comps.size(); ++i) {
                if (i == 0) contract_comp(comps[i]);
                else merge_into_triangle(comps[i]);
            }
        } else {
            // keep one full-degree apex if present, else up to three distinct
            // two-neighbour contractions
            int full = -1;
            for (size_t i = 0; i < comps.size(); ++i)
                if (t_neighbors(comps[i]) == 3) {
                    full = static_cast<int>(i);
                    break;
                }
            std::set<VertexSet> kept_profiles;
            for (size_t i = 0; i < comps.size(); ++i) {
                if (full >= 0) {
                    if (static_cast<int>(i) == full) contract_comp(comps[i]);
                    else merge_into_triangle(comps[i]);
                    continue;
                }
                VertexSet profile = 0;
                for (int t : att.triangle)
                    if (g.neighbors(comps[i]) & bit(t)) profile |= bit(t);
                if (popcount(profile) == 2 && !kept_profiles.count(profile)) {
                    kept_profiles.insert(profile);
                    contract_comp(comps[i]);
                } else {
                    merge_into_triangle(comps[i]);
                }
            }
        }
    }

    // quotient graph
    std::vector<int> rep_to_new(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (find(v) == v) rep_to_new[v] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = rep_to_new[find(e.u)], b = rep_to_new[find(e.v)];
        if (a != b) edges.emplace_back(a, b);
    }
    Graph out(next, edges);
    assert(is_planar(out));
    return out;
}

}  // namespace rmk
