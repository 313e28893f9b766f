#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctsp/bench.hpp"

using nlohmann::json;

namespace {

// Exit codes: 0 clean, 1 a bound or audit failed, 2 the input was unusable.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

std::string approx(const ctsp::Rat& q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", q.get_d());
    return buf;
}

json tour_json(const ctsp::Graph& g, const ctsp::Tour& t) {
    json arr = json::array();
    for (ctsp::EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        for (int i = 0; i < t.mult[e]; ++i) arr.push_back({u, v});
    }
    return arr;
}

json edges_json(const ctsp::Graph& g) {
    json arr = json::array();
    for (ctsp::EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        arr.push_back({u, v});
    }
    return arr;
}

std::string tour_text(const ctsp::Graph& g, const ctsp::Tour& t) {
    std::ostringstream out;
    bool first = true;
    for (ctsp::EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        for (int i = 0; i < t.mult[e]; ++i) {
            if (!first) out << ' ';
            out << u << '-' << v;
            first = false;
        }
    }
    return out.str();
}

void emit_or_print(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << doc.dump(2) << '\n';
    }
}

int cmd_solve(const std::string& graph_path, bool audit, bool as_json,
              const std::string& out_path) {
    ctsp::Graph g = ctsp::load_graph(graph_path);
    if (!ctsp::is_two_connected_cubic(g)) {
        std::cerr << "error: solve needs a 2-connected cubic graph\n";
        return kBadInput;
    }
    ctsp::SolveReport sr = ctsp::solve_two_connected(g);
    int len = sr.tour.length();
    ctsp::Rat bound = ctsp::two_connected_bound(g.num_vertices());
    bool bound_ok = ctsp::rat(len) <= bound;

    std::vector<std::string> violations;
    if (audit && !sr.exact) {
        ctsp::CoverFamily fam = ctsp::build_cover_family(sr.trace.reduced);
        ctsp::ContributionReport rep = ctsp::audit_contributions(sr.trace.reduced, fam);
        violations = rep.violations;
    }
    bool audit_ok = violations.empty();

    std::vector<int> kind_count(4, 0);
    for (const auto& step : sr.trace.steps) kind_count[(int)step.kind]++;

    if (as_json) {
        json doc{{"n", g.num_vertices()},
                 {"m", g.num_edges()},
                 {"length", len},
                 {"bound", ctsp::rat_str(bound)},
                 {"bound_ok", bound_ok},
                 {"reductions", sr.trace.steps.size()},
                 {"exact_core", sr.exact},
                 {"audited", audit},
                 {"audit_ok", audit_ok},
                 {"violations", violations},
                 {"tour", tour_json(g, sr.tour)}};
        json kinds = json::object();
        for (int k = 0; k < 4; ++k)
            if (kind_count[k])
                kinds[ctsp::reduction_kind_name((ctsp::ReductionKind)k)] = kind_count[k];
        doc["reduction_kinds"] = kinds;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << '\n';
        std::cout << "reductions: " << sr.trace.steps.size();
        for (int k = 0; k < 4; ++k)
            if (kind_count[k])
                std::cout << "  " << ctsp::reduction_kind_name((ctsp::ReductionKind)k) << " x"
                          << kind_count[k];
        std::cout << '\n';
        std::cout << "core: " << (sr.exact ? "exhaustive" : "cover search") << " on "
                  << sr.trace.reduced.num_vertices() << " vertices\n";
        std::cout << "tour length " << len << ", guarantee " << ctsp::rat_str(bound) << " (~"
                  << approx(bound) << "): " << (bound_ok ? "ok" : "VIOLATED") << '\n';
        if (audit) {
            if (audit_ok) {
                std::cout << "audit: clean\n";
            } else {
                std::cout << "audit: " << violations.size() << " violation(s)\n";
                for (const auto& v : violations) std::cout << "  " << v << '\n';
            }
        }
        if (out_path.empty()) std::cout << "tour: " << tour_text(g, sr.tour) << '\n';
    }
    if (!out_path.empty()) ctsp::save_tour(g, sr.tour, out_path);
    return bound_ok && audit_ok ? kOk : kViolation;
}

int cmd_barnette(const std::string& graph_path, const std::string& rot_path, bool audit,
                 bool as_json, const std::string& out_path) {
    ctsp::Graph g = ctsp::load_graph(graph_path);
    ctsp::RotationSystem rot = ctsp::load_rotation(rot_path, g);
    ctsp::BarnetteRun run = ctsp::barnette_tour(g, rot);
    int len = run.tour.length();
    ctsp::Rat bound = ctsp::rat(23 * g.num_vertices() - 22, 18);
    bool bound_ok = ctsp::rat(len) <= bound;

    std::vector<std::string> violations;
    if (audit) violations = ctsp::audit_barnette_bounds(g, run).violations;
    bool audit_ok = violations.empty();

    if (as_json) {
        json runs = json::array();
        for (const auto& cr : run.runs)
            runs.push_back({{"color", cr.color},
                            {"seed_faces", cr.seed},
                            {"initial_cycles", cr.initial_cycles},
                            {"alternations", cr.alternations},
                            {"final_cycles", cr.size()}});
        json doc{{"n", g.num_vertices()},
                 {"m", g.num_edges()},
                 {"runs", runs},
                 {"best_color", run.runs[run.best].color},
                 {"cycles", run.runs[run.best].size()},
                 {"length", len},
                 {"bound", ctsp::rat_str(bound)},
                 {"bound_ok", bound_ok},
                 {"audited", audit},
                 {"audit_ok", audit_ok},
                 {"violations", violations},
                 {"tour", tour_json(g, run.tour)}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "vertices " << g.num_vertices() << ", faces " << run.faces.size() << '\n';
        for (const auto& cr : run.runs)
            std::cout << "cover E(" << cr.color << "): seeded from F(" << cr.seed << "), "
                      << cr.initial_cycles << " -> " << cr.size() << " cycles after "
                      << cr.alternations << " alternations\n";
        std::cout << "best: E(" << run.runs[run.best].color << ") with "
                  << run.runs[run.best].size() << " cycles\n";
        std::cout << "tour length " << len << ", guarantee " << ctsp::rat_str(bound) << " (~"
                  << approx(bound) << "): " << (bound_ok ? "ok" : "VIOLATED") << '\n';
        if (audit) {
            if (audit_ok) {
                std::cout << "audit: clean\n";
            } else {
                std::cout << "audit: " << violations.size() << " violation(s)\n";
                for (const auto& v : violations) std::cout << "  " << v << '\n';
            }
        }
        if (out_path.empty()) std::cout << "tour: " << tour_text(g, run.tour) << '\n';
    }
    if (!out_path.empty()) ctsp::save_tour(g, run.tour, out_path);
    return bound_ok && audit_ok ? kOk : kViolation;
}

int cmd_reduce(const std::string& graph_path, const std::string& trace_path,
               const std::string& out_path) {
    ctsp::Graph g = ctsp::load_graph(graph_path);
    if (!ctsp::is_two_connected_cubic(g)) {
        std::cerr << "error: reduce needs a 2-connected cubic graph\n";
        return kBadInput;
    }
    ctsp::ReductionTrace trace = ctsp::reduce_fully(g);

    std::cout << "vertices " << g.num_vertices() << " -> " << trace.reduced.num_vertices()
              << " in " << trace.steps.size() << " step(s)\n";
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        std::cout << "  " << i << ": " << ctsp::reduction_kind_name(step.kind) << " removing";
        for (auto v : step.u_verts) std::cout << ' ' << v;
        std::cout << '\n';
    }
    std::cout << "chord-free: " << (ctsp::is_reduced(trace.reduced) ? "yes" : "no") << '\n';

    if (!trace_path.empty()) {
        json steps = json::array();
        for (const auto& step : trace.steps) {
            json boundary = json::array();
            for (const auto& link : step.boundary) {
                auto [pu, pv] = step.pre.edge(link.pre_edge);
                auto [qu, qv] = step.post.edge(link.post_edge);
                boundary.push_back({{"pre_edge", {pu, pv}},
                                    {"pre_inner", link.pre_inner},
                                    {"post_edge", {qu, qv}},
                                    {"post_inner", link.post_inner}});
            }
            json rec{{"kind", ctsp::reduction_kind_name(step.kind)},
                     {"removed", step.u_verts},
                     {"gadget", step.gadget_verts},
                     {"boundary", boundary}};
            if (step.pairing[0][0] >= 0)
                rec["pairing"] = {{step.pairing[0][0], step.pairing[0][1]},
                                  {step.pairing[1][0], step.pairing[1][1]}};
            steps.push_back(rec);
        }
        json doc{{"input_vertices", g.num_vertices()},
                 {"steps", steps},
                 {"reduced", {{"n", trace.reduced.num_vertices()},
                              {"edges", edges_json(trace.reduced)}}}};
        emit_or_print(doc, trace_path);
        std::cout << "trace written to " << trace_path << '\n';
    }
    if (!out_path.empty()) {
        ctsp::save_graph(trace.reduced, out_path);
        std::cout << "reduced graph written to " << out_path << '\n';
    }
    return kOk;
}

int cmd_decompose(const std::string& graph_path, const std::string& out_path) {
    ctsp::Graph g = ctsp::load_graph(graph_path);
    if (!ctsp::is_two_connected_cubic(g)) {
        std::cerr << "error: decompose needs a 2-connected cubic graph\n";
        return kBadInput;
    }
    ctsp::MatchingDistribution d = ctsp::decompose_three_cut_matchings(g);
    std::string why;
    bool valid = ctsp::distribution_is_valid(g, d, &why);

    json matchings = json::array();
    for (int i = 0; i < d.size(); ++i) {
        json edges = json::array();
        for (ctsp::EdgeId e : d.matchings[i]) {
            auto [u, v] = g.edge(e);
            edges.push_back({u, v});
        }
        matchings.push_back({{"edges", edges}, {"lambda", ctsp::rat_str(d.lambda[i])}});
    }
    json doc{{"n", g.num_vertices()}, {"matchings", matchings}, {"valid", valid}};
    if (!valid) doc["why"] = why;
    emit_or_print(doc, out_path);
    if (!out_path.empty())
        std::cout << d.size() << " matchings, " << (valid ? "valid" : ("INVALID: " + why))
                  << ", written to " << out_path << '\n';
    return valid ? kOk : kViolation;
}

int cmd_verify(const std::string& graph_path, const std::string& tour_path) {
    ctsp::Graph g = ctsp::load_graph(graph_path);
    ctsp::Tour t = ctsp::load_tour(tour_path, g);
    std::string why;
    if (ctsp::oracle::verify_tour(g, t, &why)) {
        std::cout << "valid tour, length " << t.length() << '\n';
        return kOk;
    }
    std::cout << "invalid tour: " << why << '\n';
    return kViolation;
}

int cmd_oracle(const std::string& graph_path) {
    ctsp::Graph g = ctsp::load_graph(graph_path);
    if (g.num_vertices() > 18) {
        std::cerr << "error: exhaustive optimum is capped at 18 vertices\n";
        return kBadInput;
    }
    std::cout << "optimum " << ctsp::oracle::held_karp_opt(g) << '\n';
    return kOk;
}

int cmd_gen(const std::string& kind, int n, int k, int bridges, int seed,
            const std::string& out_path, const std::string& rot_path) {
    ctsp::Generated gen = ctsp::generate_named(kind, n, k, bridges, seed);
    ctsp::save_graph(gen.graph, out_path);
    std::cout << kind << ": " << gen.graph.num_vertices() << " vertices, "
              << gen.graph.num_edges() << " edges -> " << out_path << '\n';
    if (!rot_path.empty()) {
        if (!gen.rotation) {
            std::cerr << "error: " << kind << " carries no embedding\n";
            return kBadInput;
        }
        ctsp::save_rotation(*gen.rotation, rot_path);
        std::cout << "rotation -> " << rot_path << '\n';
    }
    return kOk;
}

// Launch `cmd` with the piece's edge list on stdin and parse the tour it
// prints.  Any protocol slip becomes an exception, which algorithm_a turns
// into a hard error rather than a silent fallback.
ctsp::TourPlugin shell_plugin(const std::string& cmd) {
    return [cmd](const ctsp::Graph& piece) -> ctsp::Tour {
        static int counter = 0;
        std::string tmp = "/tmp/ctsp-piece-" + std::to_string(::getpid()) + "-" +
                          std::to_string(counter++) + ".graph";
        ctsp::save_graph(piece, tmp);
        std::string full = cmd + " < " + tmp;
        FILE* pipe = ::popen(full.c_str(), "r");
        if (!pipe) {
            std::remove(tmp.c_str());
            throw std::runtime_error("plugin failed to start: " + cmd);
        }
        std::string output;
        char buf[4096];
        size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
        int rc = ::pclose(pipe);
        std::remove(tmp.c_str());
        if (rc != 0) throw std::runtime_error("plugin exited with status " + std::to_string(rc));
        std::istringstream in(output);
        return ctsp::read_tour(in, piece);
    };
}

int cmd_solve_general(const std::string& graph_path, const std::string& plugin_cmd,
                      bool as_json, const std::string& out_path) {
    ctsp::Graph g = ctsp::load_graph(graph_path);
    if (!ctsp::is_cubic(g) || !ctsp::is_connected(g)) {
        std::cerr << "error: solve-general needs a connected cubic graph\n";
        return kBadInput;
    }
    ctsp::TourPlugin plugin = plugin_cmd.empty() ? ctsp::TourPlugin() : shell_plugin(plugin_cmd);
    ctsp::GlueReport gr = ctsp::solve_connected(g, plugin);
    int len = gr.tour.length();
    int b = (int)gr.decomp.bridges.size();
    ctsp::Rat bound = b == 0 ? ctsp::two_connected_bound(g.num_vertices())
                             : ctsp::bridged_bound(g.num_vertices(), b,
                                                   (int)gr.decomp.singletons.size());
    bool bound_ok = ctsp::rat(len) <= bound;

    if (as_json) {
        json pieces = json::array();
        for (const auto& p : gr.pieces) {
            json row{{"vertices", p.verts},
                     {"singleton", p.singleton},
                     {"degree2", p.degree2},
                     {"length_b", p.length_b},
                     {"chosen", p.chosen}};
            if (p.length_a) row["length_a"] = *p.length_a;
            pieces.push_back(row);
        }
        json doc{{"n", g.num_vertices()},
                 {"m", g.num_edges()},
                 {"bridges", b},
                 {"singletons", gr.decomp.singletons.size()},
                 {"pieces", pieces},
                 {"lower_bound", gr.lower_bound},
                 {"length", len},
                 {"bound", ctsp::rat_str(bound)},
                 {"bound_ok", bound_ok},
                 {"tour", tour_json(g, gr.tour)}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "vertices " << g.num_vertices() << ", bridges " << b << ", pieces "
                  << gr.pieces.size() << " (" << gr.decomp.singletons.size() << " singleton)\n";
        for (const auto& p : gr.pieces) {
            if (p.singleton) continue;
            std::cout << "  piece of " << p.verts.size() << ": B " << p.length_b;
            if (p.length_a) std::cout << ", A " << *p.length_a;
            std::cout << ", glued " << p.chosen << '\n';
        }
        std::cout << "tour length " << len << " (lower bound " << gr.lower_bound
                  << "), guarantee " << ctsp::rat_str(bound) << " (~" << approx(bound)
                  << "): " << (bound_ok ? "ok" : "VIOLATED") << '\n';
        if (out_path.empty()) std::cout << "tour: " << tour_text(g, gr.tour) << '\n';
    }
    if (!out_path.empty()) ctsp::save_tour(g, gr.tour, out_path);
    return bound_ok ? kOk : kViolation;
}

int cmd_bench(const std::string& manifest_path, const std::string& out_path) {
    std::ifstream f(manifest_path);
    if (!f) {
        std::cerr << "error: cannot read " << manifest_path << '\n';
        return kBadInput;
    }
    json manifest = json::parse(f);
    std::vector<ctsp::RunReport> rows = ctsp::run_manifest(manifest);
    if (out_path.empty()) {
        ctsp::write_csv(rows, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kBadInput;
        }
        ctsp::write_csv(rows, out);
    }
    int bad = 0;
    for (const auto& r : rows)
        if (!r.bound_ok || !r.audit_ok) ++bad;
    if (!out_path.empty())
        std::cout << rows.size() << " instance(s), "
                  << (bad ? std::to_string(bad) + " failure(s)" : "all within bounds") << ", -> "
                  << out_path << '\n';
    return bad == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tours within 4/3 of optimal on cubic graphs"};
    app.require_subcommand(1);

    std::string graph_path, rot_path, tour_path, out_path, trace_path, manifest_path;
    std::string kind, plugin_cmd;
    int n = 0, k = 0, bridges = 0, seed = 0;
    bool audit = false, as_json = false;

    auto* solve = app.add_subcommand("solve", "tour on a 2-connected cubic graph");
    solve->add_option("--graph", graph_path, "edge-list file")->required();
    solve->add_flag("--audit", audit, "check the cover-family accounting");
    solve->add_flag("--json", as_json, "machine-readable output");
    solve->add_option("--out", out_path, "write the tour here");

    auto* general = app.add_subcommand("solve-general", "tour on any connected cubic graph");
    general->add_option("--graph", graph_path, "edge-list file")->required();
    general->add_option("--plugin-a", plugin_cmd,
                        "command run per 2-connected piece: edge list on stdin, tour on stdout");
    general->add_flag("--json", as_json, "machine-readable output");
    general->add_option("--out", out_path, "write the tour here");

    auto* barnette = app.add_subcommand("barnette", "tour on a Barnette graph via face coloring");
    barnette->add_option("--graph", graph_path, "edge-list file")->required();
    barnette->add_option("--rotation", rot_path, "rotation-system file")->required();
    barnette->add_flag("--audit", audit, "check the cover-size accounting");
    barnette->add_flag("--json", as_json, "machine-readable output");
    barnette->add_option("--out", out_path, "write the tour here");

    auto* reduce = app.add_subcommand("reduce", "strip chorded 6-cycles");
    reduce->add_option("--graph", graph_path, "edge-list file")->required();
    reduce->add_option("--emit-trace", trace_path, "write the step records as JSON");
    reduce->add_option("--out", out_path, "write the reduced graph here");

    auto* decompose = app.add_subcommand("decompose",
                                         "convex combination of 3-cut perfect matchings");
    decompose->add_option("--graph", graph_path, "edge-list file")->required();
    decompose->add_option("--out", out_path, "write the distribution as JSON");

    auto* verify = app.add_subcommand("verify", "check a tour file against its graph");
    verify->add_option("--graph", graph_path, "edge-list file")->required();
    verify->add_option("--tour", tour_path, "tour file")->required();

    auto* oracle = app.add_subcommand("oracle", "exact optimum by dynamic programming");
    oracle->add_option("--graph", graph_path, "edge-list file")->required();

    auto* gen = app.add_subcommand("gen", "write a named test graph");
    gen->add_option("--kind", kind,
                    "k4, k33, petersen, cube, even_prism, truncated_octahedron, "
                    "random_cubic, random_cubic_bridged")
        ->required();
    gen->add_option("--n", n, "vertex count for random kinds");
    gen->add_option("--k", k, "half the cycle length for even_prism");
    gen->add_option("--bridges", bridges, "bridge count for random_cubic_bridged");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "edge-list destination")->required();
    gen->add_option("--rot", rot_path, "rotation destination for embedded kinds");

    auto* bench = app.add_subcommand("bench", "run a manifest of instances, emit CSV");
    bench->add_option("--manifest", manifest_path, "JSON manifest")->required();
    bench->add_option("--out", out_path, "CSV destination (stdout if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (solve->parsed()) return cmd_solve(graph_path, audit, as_json, out_path);
        if (general->parsed()) return cmd_solve_general(graph_path, plugin_cmd, as_json, out_path);
        if (barnette->parsed()) return cmd_barnette(graph_path, rot_path, audit, as_json, out_path);
        if (reduce->parsed()) return cmd_reduce(graph_path, trace_path, out_path);
        if (decompose->parsed()) return cmd_decompose(graph_path, out_path);
        if (verify->parsed()) return cmd_verify(graph_path, tour_path);
        if (oracle->parsed()) return cmd_oracle(graph_path);
        if (gen->parsed()) return cmd_gen(kind, n, k, bridges, seed, out_path, rot_path);
        if (bench->parsed()) return cmd_bench(manifest_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
