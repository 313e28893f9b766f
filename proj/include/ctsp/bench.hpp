#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ctsp/barnette.hpp"
#include "ctsp/contributions.hpp"
#include "ctsp/generate.hpp"
#include "ctsp/glue.hpp"
#include "ctsp/io.hpp"
#include "ctsp/oracle.hpp"
#include "ctsp/rational.hpp"
#include "ctsp/solve.hpp"

// Batch harness: run the solver over a manifest of instances and emit one CSV
// row per instance.  Everything in a row is exact (integers or p/q strings),
// so repeated runs are byte-identical.

namespace ctsp {

struct RunReport {
    std::string id;
    int n = 0;
    int m = 0;
    int b = 0;       // bridge count
    int tour = 0;    // length of the tour we return
    Rat bound = 0;   // tightest guarantee that applies to this instance
    bool bound_ok = false;
    std::optional<int> opt;  // exact optimum when small enough to afford
    long lower = 0;          // subtour-style lower bound used for the ratio
    Rat ratio = 0;           // tour / max(lower, 1)
    bool audit_ok = true;
    std::string audit_note;  // first violation, empty when clean
    std::string phases;      // compact per-phase counters, k=v joined by ';'
};

// Guarantee for a bridgeless instance on n vertices.  The shaved constant
// only clears the Hamiltonian length from n = 8 up; n = 6 still satisfies
// the unshaved 4n/3 - 2, and K4 only the plain 4n/3.
inline Rat two_connected_bound(int n) {
    if (n >= 8) return rat(81647 * (long)n - 122472, 61236);
    if (n >= 6) return rat(4 * n - 6, 3);
    return rat(4 * n, 3);
}

// Guarantee for a bridged instance: doubled bridges plus the per-piece
// guarantee on the non-singleton vertices.
inline Rat bridged_bound(int n, int b, int singletons) {
    return rat(4 * b, 1) + rat(81647, 61236) * (n - singletons);
}

namespace detail {

inline void append_phase(std::string& s, const std::string& key, long value) {
    if (!s.empty()) s += ';';
    s += key + '=' + std::to_string(value);
}

}  // namespace detail

inline RunReport run_instance(const std::string& id, const Graph& g,
                              const std::optional<RotationSystem>& rot) {
    RunReport r;
    r.id = id;
    r.n = g.num_vertices();
    r.m = g.num_edges();

    auto decomp = bridges_and_blocks(g);
    r.b = (int)decomp.bridges.size();

    if (r.b == 0) {
        // Run the reduction/cover pipeline by hand so we can audit the cover
        // family instead of rebuilding it after the fact.
        ReductionTrace trace = reduce_fully(g);
        const Graph& core = trace.reduced;
        Tour reduced_tour;
        detail::append_phase(r.phases, "reductions", (long)trace.steps.size());
        if (core.num_vertices() < 10) {
            auto ham = oracle::hamiltonian_cycle(core);
            if (!ham) throw std::logic_error("small reduced graph has no Hamiltonian cycle");
            reduced_tour = *ham;
            detail::append_phase(r.phases, "exact_core", 1);
        } else {
            CoverFamily fam = build_cover_family(core);
            reduced_tour = fam.best_tour();
            detail::append_phase(r.phases, "matchings", (long)fam.dist.size());
            detail::append_phase(r.phases, "best_components", (long)fam.finals[fam.best].size());
            ContributionReport audit = audit_contributions(core, fam);
            if (!audit.ok()) {
                r.audit_ok = false;
                r.audit_note = audit.violations.front();
            }
        }
        Tour t = lift_through(trace, reduced_tour);
        r.tour = t.length();
        r.bound = two_connected_bound(r.n);
        r.lower = r.n;  // every tour visits every vertex

        if (rot) {
            BarnetteRun br = barnette_tour(g, *rot);
            detail::append_phase(r.phases, "barnette_cycles", br.runs[br.best].size());
            BarnetteAudit ba = audit_barnette_bounds(g, br);
            if (!ba.ok() && r.audit_ok) {
                r.audit_ok = false;
                r.audit_note = ba.violations.front();
            }
            if (br.tour.length() < r.tour) r.tour = br.tour.length();
            // Both tours are feasible, so the returned minimum satisfies the
            // planar guarantee as well as the general one.
            r.bound = std::min(r.bound, rat(23 * r.n - 22, 18));
        }
    } else {
        GlueReport gr = solve_connected(g);
        r.tour = gr.tour.length();
        r.lower = gr.lower_bound;
        r.bound = bridged_bound(r.n, r.b, (int)gr.decomp.singletons.size());
        detail::append_phase(r.phases, "pieces", (long)gr.pieces.size());
        detail::append_phase(r.phases, "singletons", (long)gr.decomp.singletons.size());
    }

    r.lower = std::max(r.lower, (long)r.n);
    r.bound_ok = rat(r.tour, 1) <= r.bound;
    if (r.n <= 16) {
        r.opt = oracle::held_karp_opt(g);
        r.lower = std::max(r.lower, (long)*r.opt);
    }
    r.ratio = rat(r.tour, std::max(r.lower, 1L));
    return r;
}

// Manifest: {"instances": [{"id": ..., "file": path} | {"id": ..., "kind": ...,
// "n": ..., "k": ..., "bridges": ..., "seed": ..., "rotation": path}]}.
// Generated kinds carry their own rotation when the family is embedded.
inline std::vector<RunReport> run_manifest(const nlohmann::json& manifest) {
    if (!manifest.contains("instances") || !manifest["instances"].is_array())
        throw std::runtime_error("manifest needs an \"instances\" array");
    std::vector<RunReport> rows;
    for (const auto& item : manifest["instances"]) {
        std::string id = item.value("id", std::string());
        Graph g(0, {});
        std::optional<RotationSystem> rot;
        if (item.contains("file")) {
            g = load_graph(item["file"].get<std::string>());
        } else if (item.contains("kind")) {
            Generated gen = generate_named(item["kind"].get<std::string>(),
                                           item.value("n", 0), item.value("k", 0),
                                           item.value("bridges", 0), item.value("seed", 0));
            g = gen.graph;
            rot = gen.rotation;
        } else {
            throw std::runtime_error("instance needs \"file\" or \"kind\": " + id);
        }
        if (item.contains("rotation"))
            rot = load_rotation(item["rotation"].get<std::string>(), g);
        if (id.empty()) id = "instance-" + std::to_string(rows.size());
        rows.push_back(run_instance(id, g, rot));
    }
    return rows;
}

inline void write_csv(const std::vector<RunReport>& rows, std::ostream& out) {
    out << "id,n,m,b,tour,bound,bound_ok,opt,ratio,lower,audit_ok,phases\n";
    for (const auto& r : rows) {
        out << r.id << ',' << r.n << ',' << r.m << ',' << r.b << ',' << r.tour << ','
            << rat_str(r.bound) << ',' << (r.bound_ok ? 1 : 0) << ',';
        if (r.opt) out << *r.opt;
        out << ',' << rat_str(r.ratio) << ',' << r.lower << ',' << (r.audit_ok ? 1 : 0) << ','
            << '"' << r.phases << '"' << '\n';
    }
}

inline bool all_ok(const std::vector<RunReport>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const RunReport& r) { return r.bound_ok && r.audit_ok; });
}

}  // namespace ctsp
