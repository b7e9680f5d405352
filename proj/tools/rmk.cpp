// rmk: exact decisions for rooted minors with four (or three) roots.
//
// Subcommands: detect, reduce, generate, verify-model, crosscheck.
// Exit codes for detect: 0 minor found, 1 no minor, 2 undecided within
// budget, >2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rmk/enumerate.hpp"
#include "rmk/reductions.hpp"

using namespace rmk;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "edges") return parse_edge_list(text);
    return parse_graph6(text);
}

std::vector<int> parse_roots(const std::string& spec) {
    std::vector<int> roots;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) roots.push_back(std::stoi(item));
    return roots;
}

PatternId pattern_id(const std::string& name) {
    if (name == "k4x") return PatternId::K4X;
    if (name == "w4x") return PatternId::W4X;
    if (name == "k24x") return PatternId::K24X;
    if (name == "k22x") return PatternId::K22X;
    if (name == "lx") return PatternId::LX;
    if (name == "lprimex") return PatternId::LpX;
    throw CLI::ValidationError("--minor", "unknown minor " + name);
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("RMK_BUDGET")) return std::strtoull(env, nullptr, 10);
    return kDefaultBudget;
}

ordered_json cert_to_json(const ClassCertificate& cert, std::uint64_t seed) {
    ordered_json j;
    j["class"] = std::string(1, cert.cls);
    j["roots"] = cert.roots;
    j["full_graph6"] = encode_graph6(cert.full);
    if (cert.web) {
        j["web"] = {{"graph6", encode_graph6(cert.web->h)},
                    {"quad", std::vector<int>(cert.web->quad.begin(), cert.web->quad.end())}};
    }
    ordered_json cl = ordered_json::array();
    for (const CliqueAttachment& att : cert.cliques)
        cl.push_back({{"triangle", att.triangle}, {"vertices", att.vertices}});
    j["cliques"] = cl;
    ordered_json del = ordered_json::array();
    for (const Edge& e : cert.deleted) del.push_back({e.u, e.v});
    j["deleted"] = del;
    j["seed"] = seed;
    return j;
}

ClassCertificate cert_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ClassCertificate cert;
    cert.cls = j.at("class").get<std::string>().at(0);
    cert.roots = j.at("roots").get<std::vector<int>>();
    cert.full = parse_graph6(j.at("full_graph6").get<std::string>());
    if (j.contains("web")) {
        Web w;
        w.h = parse_graph6(j["web"].at("graph6").get<std::string>());
        std::vector<int> q = j["web"].at("quad").get<std::vector<int>>();
        std::copy_n(q.begin(), 4, w.quad.begin());
        cert.web = w;
    }
    for (const auto& att : j.at("cliques")) {
        CliqueAttachment a;
        std::vector<int> t = att.at("triangle").get<std::vector<int>>();
        std::copy_n(t.begin(), 3, a.triangle.begin());
        a.vertices = att.at("vertices").get<std::vector<int>>();
        cert.cliques.push_back(a);
    }
    for (const auto& e : j.at("deleted")) cert.deleted.emplace_back(e[0].get<int>(), e[1].get<int>());
    return cert;
}

int run_detect(const std::string& graph_path, const std::string& format,
               const std::string& roots_spec, const std::string& minor,
               const std::string& cert_path, std::uint64_t budget, const std::string& emit,
               bool json_out) {
    Graph g = load_graph(graph_path, format);
    RootedGraph rg(g, parse_roots(roots_spec));
    PatternId pid = pattern_id(minor);
    const Pattern& p = builtin_pattern(pid);
    if (static_cast<int>(rg.roots.size()) != p.arity)
        throw CLI::ValidationError("--roots", "root count does not match minor arity");

    ordered_json report;
    report["graph6"] = encode_graph6(g);
    report["roots"] = rg.roots;
    report["minor"] = minor;

    Outcome outcome;
    std::string method;
    OracleResult oracle_result;

    if (!cert_path.empty()) {
        ClassCertificate cert = cert_from_json(read_file(cert_path));
        method = "structural";
        if (pid == PatternId::K24X) {
            StructuralDecision d = decide_k24(rg, &cert, budget);
            outcome = d.outcome;
            method = "structural:" + d.method;
        } else if (pid == PatternId::LX) {
            StructuralDecision d = decide_lx(rg, &cert, budget);
            outcome = d.outcome;
            method = "structural:" + d.method;
        } else if (pid == PatternId::W4X) {
            W4Decision d = decide_w4_by_obstructions(rg);
            outcome = d.has_w4;
            method = "structural:obstructions";
            if (d.has_w4 == Outcome::No && !d.witnesses.empty())
                report["obstruction"] = nlohmann::json::parse(witness_to_json(d.witnesses[0]));
        } else {
            oracle_result = find_rooted_minor(rg, p, budget);
            outcome = oracle_result.outcome;
            method = "oracle";
        }
    } else {
        Instance inst{rg, pid};
        FixpointResult fr = fixpoint_reduce(inst);
        oracle_result = evaluate(*fr.tree, budget);
        outcome = oracle_result.outcome;
        method = fr.trace.steps.empty() ? "oracle" : "reduced+oracle";
        report["reduction_steps"] = fr.trace.steps.size();
        // attach the obstruction witness when the structural decision is
        // applicable and agrees
        if (pid == PatternId::W4X && outcome != Outcome::Unknown &&
            vertex_connectivity(g) >= 2) {
            OracleResult k4 = find_rooted_minor(rg, builtin_pattern(PatternId::K4X), budget);
            if (k4.no()) {
                W4Decision d = decide_w4_by_obstructions(rg);
                if (d.has_w4 == outcome && outcome == Outcome::No && !d.witnesses.empty()) {
                    report["obstruction"] = nlohmann::json::parse(witness_to_json(d.witnesses[0]));
                    method += "+structural-witness";
                }
            }
        }
    }

    report["method"] = method;
    report["verdict"] = outcome == Outcome::Yes ? "yes" : outcome == Outcome::No ? "no" : "unknown";
    if (oracle_result.model) {
        std::string mj = model_to_json(rg, p, *oracle_result.model);
        report["model"] = nlohmann::json::parse(mj);
        if (!emit.empty()) write_file(emit, mj);
    }
    if (json_out)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << minor << " " << report["verdict"].get<std::string>() << " (" << method
                  << ")\n";
    return outcome == Outcome::Yes ? 0 : outcome == Outcome::No ? 1 : 2;
}

int run_reduce(const std::string& graph_path, const std::string& format,
               const std::string& roots_spec, const std::string& minor,
               const std::string& trace_path, bool json_out) {
    Graph g = load_graph(graph_path, format);
    RootedGraph rg(g, parse_roots(roots_spec));
    Instance inst{rg, pattern_id(minor)};
    FixpointResult fr = fixpoint_reduce(inst);
    std::string tj = trace_to_json(inst, fr);
    if (!trace_path.empty()) write_file(trace_path, tj);
    if (json_out)
        std::cout << tj << "\n";
    else
        std::cout << fr.trace.steps.size() << " steps, " << fr.leaves.size() << " leaves\n";
    return 0;
}

int run_generate(const std::string& cls, std::uint64_t seed, int size, int max_clique,
                 const std::string& out_prefix, bool json_out) {
    if (cls.size() != 1 || cls[0] < 'A' || cls[0] > 'F')
        throw CLI::ValidationError("--class", "expected A..F");
    ClassInstance inst = generate_class(cls[0], seed, size, max_clique);
    std::string g6 = encode_graph6(inst.rg.graph);
    ordered_json cj = cert_to_json(inst.cert, seed);
    cj["graph6"] = g6;
    if (!out_prefix.empty()) {
        write_file(out_prefix + ".g6", g6 + "\n");
        write_file(out_prefix + ".cert.json", cj.dump(2) + "\n");
    }
    if (json_out)
        std::cout << cj.dump(2) << "\n";
    else
        std::cout << g6 << "\n";
    return 0;
}

int run_verify_model(const std::string& graph_path, const std::string& format,
                     const std::string& roots_spec, const std::string& minor,
                     const std::string& model_path) {
    Graph g = load_graph(graph_path, format);
    RootedGraph rg(g, parse_roots(roots_spec));
    const Pattern& p = builtin_pattern(pattern_id(minor));
    MinorModel m = model_from_json(rg, p, read_file(model_path));
    Verdict v = verify_model(rg, p, m);
    if (v.ok()) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "reject: " << fault_name(v.fault) << " (" << v.detail << ")\n";
    return 1;
}

struct CrosscheckStats {
    long long agree = 0, disagree = 0, unknown = 0;
    std::string counterexample;
};

void report_stats(const CrosscheckStats& s) {
    std::cout << "agree " << s.agree << ", disagree " << s.disagree << ", unknown " << s.unknown
              << "\n";
    if (!s.counterexample.empty()) std::cout << "counterexample: " << s.counterexample << "\n";
}

// Shrinks a disagreeing instance by deleting edges while the disagreement
// persists; `check` returns true when the two routes still disagree.
template <typename Check>
RootedGraph minimize(RootedGraph rg, Check check) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : rg.graph.edges()) {
            Graph smaller = without_edges(rg.graph, {e});
            RootedGraph cand(smaller, rg.roots);
            if (check(cand)) {
                rg = cand;
                changed = true;
                break;
            }
        }
    }
    return rg;
}

int run_crosscheck(const std::string& minor, const std::string& corpus, int n, int count,
                   std::uint64_t seed, std::uint64_t budget) {
    PatternId pid = pattern_id(minor);
    const Pattern& p = builtin_pattern(pid);
    CrosscheckStats stats;
    std::mt19937_64 rng(seed);

    // recompute both routes on a candidate instance; true while they still
    // disagree (used to minimize counterexamples)
    auto disagrees = [&](const RootedGraph& rg) {
        OracleResult o = find_rooted_minor(rg, p, budget);
        if (o.unknown()) return false;
        Outcome structural;
        if (pid == PatternId::K22X) {
            structural = k22_via_disjoint_paths(rg.graph, rg.roots[0], rg.roots[1], rg.roots[2],
                                                rg.roots[3])
                             ? Outcome::Yes
                             : Outcome::No;
        } else if (pid == PatternId::W4X && corpus == "web") {
            if (vertex_connectivity(rg.graph) < 2) return false;
            structural = decide_w4_by_obstructions(rg).has_w4;
        } else if (pid == PatternId::LpX) {
            structural = find_lprime(rg.graph, {rg.roots[0], rg.roots[1], rg.roots[2]}, budget)
                             .outcome;
        } else {
            Instance inst{rg, pid};
            FixpointResult fr = fixpoint_reduce(inst);
            structural = evaluate(*fr.tree, budget).outcome;
        }
        return structural != Outcome::Unknown && structural != o.outcome;
    };

    auto record = [&](const RootedGraph& rg, Outcome structural, Outcome oracle) {
        if (structural == Outcome::Unknown || oracle == Outcome::Unknown) {
            stats.unknown++;
            return;
        }
        if (structural == oracle) {
            stats.agree++;
            return;
        }
        stats.disagree++;
        if (stats.counterexample.empty()) {
            RootedGraph small = minimize(rg, disagrees);
            std::ostringstream ss;
            ss << encode_graph6(small.graph) << " roots";
            for (int r : small.roots) ss << " " << r;
            stats.counterexample = ss.str();
        }
    };

    if (corpus == "all3conn") {
        // every 3-connected graph up to iso carries a k4x or w4x minor
        for (int k = 4; k <= n; ++k)
            for (const Graph& g : all_graphs_upto_iso(k)) {
                if (!g.is_connected() || vertex_connectivity(g) < 3) continue;
                for (const std::vector<int>& roots : root_subsets(k, 4)) {
                    RootedGraph rg(g, roots);
                    OracleResult k4 = find_rooted_minor(rg, builtin_pattern(PatternId::K4X), budget);
                    OracleResult w4 = find_rooted_minor(rg, builtin_pattern(PatternId::W4X), budget);
                    bool holds = k4.yes() || w4.yes();
                    record(rg, holds ? Outcome::Yes : Outcome::No, Outcome::Yes);
                }
            }
    } else if (corpus == "web") {
        for (int i = 0; i < count; ++i) {
            ClassInstance inst = generate_class('D', rng(), n, 2);
            if (pid == PatternId::W4X) {
                W4Decision d = decide_w4_by_obstructions(inst.rg);
                OracleResult o = find_rooted_minor(inst.rg, p, budget);
                record(inst.rg, d.has_w4, o.outcome);
            } else if (pid == PatternId::K24X) {
                StructuralDecision d = decide_k24(inst.rg, &inst.cert, budget);
                OracleResult o = find_rooted_minor(inst.rg, p, budget);
                record(inst.rg, d.outcome, o.outcome);
            } else if (pid == PatternId::K22X) {
                bool s = k22_via_disjoint_paths(inst.rg.graph, inst.rg.roots[0], inst.rg.roots[1],
                                                inst.rg.roots[2], inst.rg.roots[3]);
                OracleResult o = find_rooted_minor(inst.rg, p, budget);
                record(inst.rg, s ? Outcome::Yes : Outcome::No, o.outcome);
            } else if (pid == PatternId::LX) {
                StructuralDecision d = decide_lx(inst.rg, &inst.cert, budget);
                OracleResult o = find_rooted_minor(inst.rg, p, budget);
                record(inst.rg, d.outcome, o.outcome);
            } else {
                OracleResult o = find_rooted_minor(inst.rg, p, budget);
                Instance instq{inst.rg, pid};
                FixpointResult fr = fixpoint_reduce(instq);
                OracleResult r = evaluate(*fr.tree, budget);
                record(inst.rg, r.outcome, o.outcome);
            }
        }
    } else {  // random
        for (int i = 0; i < count; ++i) {
            int k = 4 + static_cast<int>(rng() % std::max(1, n - 3));
            Graph g = random_connected_graph(k, 0.45, rng);
            std::vector<std::vector<int>> subsets = root_subsets(k, p.arity);
            const std::vector<int>& roots = subsets[rng() % subsets.size()];
            RootedGraph rg(g, roots);
            OracleResult o = find_rooted_minor(rg, p, budget);
            Outcome structural;
            if (pid == PatternId::K22X) {
                structural = k22_via_disjoint_paths(g, roots[0], roots[1], roots[2], roots[3])
                                 ? Outcome::Yes
                                 : Outcome::No;
            } else if (pid == PatternId::LpX) {
                LPrimeResult r = find_lprime(g, {roots[0], roots[1], roots[2]}, budget);
                structural = r.outcome;
            } else {
                Instance inst{rg, pid};
                FixpointResult fr = fixpoint_reduce(inst);
                structural = evaluate(*fr.tree, budget).outcome;
            }
            record(rg, structural, o.outcome);
        }
    }

    report_stats(stats);
    return stats.disagree ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rooted-minor decisions (k4x, w4x, k24x, k22x, lx, lprimex)"};
    app.require_subcommand(1);

    std::string graph_path, format = "g6", roots_spec, minor = "k4x", cert_path, emit, model_path,
                trace_path, cls = "D", corpus = "random", out_prefix;
    std::uint64_t budget = default_budget(), seed = 1;
    int size = 10, max_clique = 3, n = 7, count = 100;
    bool json_out = false;

    CLI::App* detect = app.add_subcommand("detect", "decide one rooted minor");
    detect->add_option("--graph", graph_path)->required();
    detect->add_option("--format", format)->check(CLI::IsMember({"g6", "edges"}));
    detect->add_option("--roots", roots_spec)->required();
    detect->add_option("--minor", minor)->required();
    detect->add_option("--certificate", cert_path);
    detect->add_option("--budget", budget);
    detect->add_option("--emit", emit);
    detect->add_flag("--json", json_out);

    CLI::App* reduce = app.add_subcommand("reduce", "apply the separation rewrites to a fixpoint");
    reduce->add_option("--graph", graph_path)->required();
    reduce->add_option("--format", format)->check(CLI::IsMember({"g6", "edges"}));
    reduce->add_option("--roots", roots_spec)->required();
    reduce->add_option("--minor", minor)->required();
    reduce->add_option("--trace", trace_path);
    reduce->add_flag("--json", json_out);

    CLI::App* gen = app.add_subcommand("generate", "emit a certified class instance");
    gen->add_option("--class", cls)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--size", size);
    gen->add_option("--max-clique", max_clique);
    gen->add_option("--out", out_prefix);
    gen->add_flag("--json", json_out);

    CLI::App* verify = app.add_subcommand("verify-model", "check a minor model certificate");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"g6", "edges"}));
    verify->add_option("--roots", roots_spec)->required();
    verify->add_option("--minor", minor)->required();
    verify->add_option("--model", model_path)->required();

    CLI::App* cross = app.add_subcommand("crosscheck", "structural deciders against the oracle");
    cross->add_option("--minor", minor)->required();
    cross->add_option("--corpus", corpus)->check(CLI::IsMember({"web", "all3conn", "random"}));
    cross->add_option("--n", n);
    cross->add_option("--count", count);
    cross->add_option("--seed", seed);
    cross->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect->parsed())
            return run_detect(graph_path, format, roots_spec, minor, cert_path, budget, emit,
                              json_out);
        if (reduce->parsed())
            return run_reduce(graph_path, format, roots_spec, minor, trace_path, json_out);
        if (gen->parsed()) return run_generate(cls, seed, size, max_clique, out_prefix, json_out);
        if (verify->parsed())
            return run_verify_model(graph_path, format, roots_spec, minor, model_path);
        if (cross->parsed()) return run_crosscheck(minor, corpus, n, count, seed, budget);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 3;
}
