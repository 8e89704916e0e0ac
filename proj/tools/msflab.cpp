#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msf/acceptance.hpp"
#include "msf/analysis.hpp"
#include "msf/exact.hpp"
#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/invasion.hpp"
#include "msf/io.hpp"
#include "msf/labeling.hpp"
#include "msf/planar.hpp"

namespace {

using namespace msf;

constexpr const char* kToolVersion = "msflab 1.0";

// Every emitting command funnels its bytes through here so the manifest can
// record a digest of exactly what was written.
struct Output {
    std::string path;  // empty = stdout
    std::ostringstream buffer;

    void flush_and_record(RunManifest& manifest) {
        if (path.empty()) {
            std::cout << buffer.str();
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write output: " + path);
        out << buffer.str();
        out.close();
        manifest.outputs.emplace_back(path, file_digest(path));
    }
};

void write_manifest(const RunManifest& manifest, const std::string& out_path,
                    const std::string& explicit_path) {
    std::string path = explicit_path;
    if (path.empty() && !out_path.empty()) path = out_path + ".manifest.json";
    if (!path.empty()) manifest.write(path);
}

GraphFile load_graph(const std::string& path) { return read_graph(path); }

// z_wired is undefined for edges the wired quotient drops; report Bottom.
ZValue z_wired_or_dropped(const MultiGraph& g,
                          const std::vector<VertexId>& boundary,
                          const Labeling& u, EdgeId e) {
    WiredQuotient q = wired_quotient(g, boundary);
    if (q.edge_map[e] < 0) return ZValue::bottom();
    return z_wired(g, boundary, u, e);
}

Labeling labels_for(const GraphFile& gf, std::optional<std::uint64_t> seed) {
    if (seed) return sample_labels(gf.graph, *seed);
    if (gf.labels) return *gf.labels;
    throw std::runtime_error("graph file carries no labels; pass --seed");
}

std::string z_column(const ZValue& z, const Labeling& u) {
    switch (z.kind) {
        case ZValue::Kind::Finite:
            return format_label(z.value(u));
        case ZValue::Kind::Infinite:
            return "inf";
        case ZValue::Kind::One:
            return "1";
        case ZValue::Kind::Bottom:
            return "bottom";
    }
    return "bottom";
}

int cmd_generate(const std::string& kind, int dim, int side,
                 const std::string& topology, int width, int height,
                 const std::vector<int>& slits,
                 std::optional<std::uint64_t> seed, const std::string& out,
                 const std::string& manifest_path,
                 const std::vector<std::string>& argv) {
    MultiGraph g;
    if (kind == "grid") {
        Topology topo =
            topology == "torus" ? Topology::Torus : Topology::Free;
        g = grid_box(dim, side, topo);
    } else if (kind == "strip") {
        g = half_plane_strip(width, height, slits);
    } else if (kind == "section5") {
        g = build_section5_graph().graph;
    } else {
        throw std::runtime_error("unknown generator: " + kind);
    }
    std::optional<Labeling> u;
    if (seed) u = sample_labels(g, *seed);

    RunManifest manifest;
    manifest.command = "generate";
    manifest.args = argv;
    if (seed) manifest.seeds.push_back(*seed);

    if (out.empty()) {
        std::cout << format_graph(g, u ? &*u : nullptr);
    } else {
        write_graph(g, out, u ? &*u : nullptr);
        manifest.outputs.emplace_back(out, file_digest(out));
    }
    write_manifest(manifest, out, manifest_path);
    return 0;
}

int cmd_forest(const std::string& graph_path, std::optional<std::uint64_t> seed,
               const std::string& format, const std::string& out,
               const std::string& manifest_path,
               const std::vector<std::string>& argv) {
    GraphFile gf = load_graph(graph_path);
    const MultiGraph& g = gf.graph;
    Labeling u = labels_for(gf, seed);

    std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
    bool have_boundary = !boundary.empty();

    ForestMask free_t = kruskal_mst(g, u);
    ForestMask wired_t =
        have_boundary ? wired_mst(g, boundary, u) : free_t;

    Output sink;
    sink.path = out;
    if (format == "json") {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["schema"] = "forest.v1";
        j["vertices"] = g.vertex_count;
        j["wired_boundary"] = have_boundary;
        nlohmann::json rows = nlohmann::json::array();
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            ZValue zf = z_free(g, u, e);
            nlohmann::json row;
            row["edge_id"] = e;
            row["u"] = g.endpoints[e].first;
            row["v"] = g.endpoints[e].second;
            row["label"] = u.value(e);
            row["in_free"] = free_t.test(e);
            row["in_wired"] = wired_t.test(e);
            row["z_free"] = z_column(zf, u);
            row["z_wired"] = z_column(
                have_boundary ? z_wired_or_dropped(g, boundary, u, e) : zf, u);
            rows.push_back(row);
        }
        j["edges"] = rows;
        sink.buffer << j.dump(2) << "\n";
    } else {
        sink.buffer << "# schema: forest.v1\n";
        sink.buffer << "edge_id,u,v,label,in_free,in_wired,z_free,z_wired\n";
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            ZValue zf = z_free(g, u, e);
            ZValue zw =
                have_boundary ? z_wired_or_dropped(g, boundary, u, e) : zf;
            sink.buffer << e << "," << g.endpoints[e].first << ","
                        << g.endpoints[e].second << ","
                        << format_label(u.value(e)) << "," << free_t.test(e)
                        << "," << wired_t.test(e) << "," << z_column(zf, u)
                        << "," << z_column(zw, u) << "\n";
        }
    }

    RunManifest manifest;
    manifest.command = "forest";
    manifest.args = argv;
    if (u.has_seed) manifest.seeds.push_back(u.seed);
    sink.flush_and_record(manifest);
    write_manifest(manifest, out, manifest_path);
    return 0;
}

int cmd_invade(const std::string& graph_path,
               std::optional<std::uint64_t> seed, VertexId source, bool basin,
               long long steps, const std::string& out,
               const std::string& manifest_path,
               const std::vector<std::string>& argv) {
    GraphFile gf = load_graph(graph_path);
    Labeling u = labels_for(gf, seed);
    long long cap = steps > 0 ? steps : gf.graph.edge_count() + 1;
    InvasionTrace trace = basin
                              ? invasion_basin(gf.graph, u, source, cap)
                              : invasion_tree(gf.graph, u, source, cap);

    Output sink;
    sink.path = out;
    sink.buffer << "# schema: invade.v1\n";
    sink.buffer << "step,edge_id,u,v,label,frontier_max\n";
    for (std::size_t i = 0; i < trace.edges_in_order.size(); ++i) {
        EdgeId e = trace.edges_in_order[i];
        sink.buffer << i << "," << e << "," << gf.graph.endpoints[e].first
                    << "," << gf.graph.endpoints[e].second << ","
                    << format_label(u.value(e)) << ","
                    << format_label(trace.frontier_maxima[i]) << "\n";
    }

    RunManifest manifest;
    manifest.command = "invade";
    manifest.args = argv;
    if (u.has_seed) manifest.seeds.push_back(u.seed);
    sink.flush_and_record(manifest);
    write_manifest(manifest, out, manifest_path);
    return 0;
}

int cmd_exact(const std::string& graph_path, bool section5,
              std::vector<int> pair, const std::string& out,
              const std::string& manifest_path,
              const std::vector<std::string>& argv) {
    MultiGraph g;
    if (section5) {
        g = build_section5_graph().graph;
    } else {
        g = load_graph(graph_path).graph;
    }
    TreeCatalog cat = formula_catalog(g);

    nlohmann::json j;
    j["schema_version"] = 1;
    j["schema"] = "exact.v1";
    nlohmann::json trees = nlohmann::json::array();
    for (std::size_t i = 0; i < cat.trees.size(); ++i) {
        nlohmann::json row;
        row["edges"] = cat.trees[i];
        row["probability"] = cat.probabilities[i].get_str();
        trees.push_back(row);
    }
    j["trees"] = trees;
    j["tree_count"] = cat.trees.size();

    if (pair.size() == 2) {
        EdgeId a = pair[0], b = pair[1];
        BigRational marginal = edge_event_probability(g, {a}, {});
        BigRational joint = edge_event_probability(g, {a, b}, {});
        BigRational ratio = 0;
        if (marginal != 0) ratio = joint / (marginal * marginal);
        j["pair"] = {a, b};
        j["marginal"] = marginal.get_str();
        j["joint"] = joint.get_str();
        j["correlation_ratio"] = ratio.get_str();
    }

    Output sink;
    sink.path = out;
    sink.buffer << j.dump(2) << "\n";

    RunManifest manifest;
    manifest.command = "exact";
    manifest.args = argv;
    sink.flush_and_record(manifest);
    write_manifest(manifest, out, manifest_path);
    return 0;
}

int cmd_dual(int side, std::uint64_t seed, long long trials,
             const std::string& out, const std::string& manifest_path,
             const std::vector<std::string>& argv) {
    DualPair pair = dual_graph(embed_grid(side));
    long long failures = 0;
    for (long long t = 0; t < trials; ++t) {
        Labeling u = sample_labels(pair.primal.graph,
                                   mix64(seed) + static_cast<std::uint64_t>(t));
        if (!verify_tree_duality(pair, u)) ++failures;
    }
    nlohmann::json j;
    j["schema_version"] = 1;
    j["schema"] = "dual.v1";
    j["side"] = side;
    j["edges"] = pair.primal.graph.edge_count();
    j["faces"] = pair.primal.face_count();
    j["trials"] = trials;
    j["failures"] = failures;
    j["duality_holds"] = failures == 0;

    Output sink;
    sink.path = out;
    sink.buffer << j.dump(2) << "\n";

    RunManifest manifest;
    manifest.command = "dual";
    manifest.args = argv;
    manifest.seeds.push_back(seed);
    sink.flush_and_record(manifest);
    write_manifest(manifest, out, manifest_path);
    return failures == 0 ? 0 : 1;
}

int cmd_stats(const std::string& mode, int side, std::uint64_t seed,
              long long trials, std::vector<double> p_grid,
              const std::string& format, const std::string& out,
              const std::string& manifest_path,
              const std::vector<std::string>& argv) {
    Output sink;
    sink.path = out;

    if (mode == "scan") {
        if (p_grid.empty())
            for (int i = 1; i <= 9; ++i) p_grid.push_back(0.1 * i);
        std::vector<ScanPoint> points =
            ae_uniqueness_scan(side, p_grid, trials, seed);
        if (format == "json") {
            nlohmann::json j;
            j["schema_version"] = 1;
            j["schema"] = "scan.v1";
            nlohmann::json rows = nlohmann::json::array();
            for (const ScanPoint& pt : points)
                rows.push_back({{"p", pt.p},
                                {"mean_macroscopic", pt.mean_macroscopic},
                                {"stderr", pt.stderr_macroscopic},
                                {"gap_frequency", pt.gap_frequency}});
            j["points"] = rows;
            sink.buffer << j.dump(2) << "\n";
        } else {
            sink.buffer << "# schema: scan.v1\n";
            sink.buffer << "p,mean_macroscopic,stderr,gap_frequency\n";
            for (const ScanPoint& pt : points)
                sink.buffer << format_label(pt.p) << ","
                            << format_label(pt.mean_macroscopic) << ","
                            << format_label(pt.stderr_macroscopic) << ","
                            << format_label(pt.gap_frequency) << "\n";
        }
    } else if (mode == "probe") {
        if (p_grid.empty()) p_grid = {0.6, 0.7, 0.8, 0.9};
        MultiGraph g = grid_box(2, side, Topology::Free);
        std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
        std::vector<ProbePoint> points =
            pc_forest_probe(g, boundary, p_grid, trials, seed);
        if (format == "json") {
            nlohmann::json j;
            j["schema_version"] = 1;
            j["schema"] = "probe.v1";
            nlohmann::json rows = nlohmann::json::array();
            for (const ProbePoint& pt : points)
                rows.push_back(
                    {{"p", pt.p},
                     {"mean_normalized_largest", pt.mean_normalized_largest}});
            j["points"] = rows;
            sink.buffer << j.dump(2) << "\n";
        } else {
            sink.buffer << "# schema: probe.v1\n";
            sink.buffer << "p,mean_normalized_largest\n";
            for (const ProbePoint& pt : points)
                sink.buffer << format_label(pt.p) << ","
                            << format_label(pt.mean_normalized_largest)
                            << "\n";
        }
    } else if (mode == "residuals") {
        MultiGraph g = grid_box(2, side, Topology::Free);
        std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
        std::vector<double> pool_free, pool_wired;
        for (long long t = 0; t < trials; ++t) {
            Labeling u = sample_labels(
                g, mix64(seed) + static_cast<std::uint64_t>(t));
            ResidualSample rf = coupling_residuals_free(g, u);
            pool_free.insert(pool_free.end(), rf.values.begin(),
                             rf.values.end());
            ResidualSample rw = coupling_residuals_wired(g, boundary, u);
            pool_wired.insert(pool_wired.end(), rw.values.begin(),
                              rw.values.end());
        }
        KsResult kf = ks_statistic(pool_free, 0.005);
        KsResult kw = ks_statistic(pool_wired, 0.005);
        nlohmann::json j;
        j["schema_version"] = 1;
        j["schema"] = "residuals.v1";
        j["seeds"] = trials;
        j["free"] = {{"ks", kf.statistic},
                     {"critical", kf.critical},
                     {"n", kf.n},
                     {"pass", kf.pass}};
        j["wired"] = {{"ks", kw.statistic},
                      {"critical", kw.critical},
                      {"n", kw.n},
                      {"pass", kw.pass}};
        sink.buffer << j.dump(2) << "\n";
    } else if (mode == "degrees") {
        MultiGraph g = grid_box(2, side, Topology::Free);
        std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
        std::map<int, long long> hist_free, hist_wired;
        for (long long t = 0; t < trials; ++t) {
            Labeling u = sample_labels(
                g, mix64(seed) + static_cast<std::uint64_t>(t));
            DegreeStats f = degree_stats(g, kruskal_mst(g, u));
            DegreeStats w = degree_stats(g, wired_mst(g, boundary, u));
            for (auto [d, c] : f.histogram) hist_free[d] += c;
            for (auto [d, c] : w.histogram) hist_wired[d] += c;
        }
        sink.buffer << "# schema: degrees.v1\n";
        sink.buffer << "degree,count_free,count_wired\n";
        std::map<int, std::pair<long long, long long>> merged;
        for (auto [d, c] : hist_free) merged[d].first = c;
        for (auto [d, c] : hist_wired) merged[d].second = c;
        for (auto [d, counts] : merged)
            sink.buffer << d << "," << counts.first << "," << counts.second
                        << "\n";
    } else {
        throw std::runtime_error("unknown stats mode: " + mode);
    }

    RunManifest manifest;
    manifest.command = "stats";
    manifest.args = argv;
    manifest.seeds.push_back(seed);
    sink.flush_and_record(manifest);
    write_manifest(manifest, out, manifest_path);
    return 0;
}

int cmd_suite(const std::string& level, std::uint64_t seed,
              const std::string& out, const std::string& manifest_path,
              const std::vector<std::string>& argv) {
    AcceptanceOptions opt;
    opt.quick = level == "quick";
    opt.seed = seed;
    std::vector<CriterionResult> results = run_acceptance(opt);
    for (const CriterionResult& r : results)
        std::cout << format_result_line(r) << "\n";
    bool ok = all_pass(results);
    std::cout << (ok ? "SUITE PASS" : "SUITE FAIL") << " (" << level
              << " level, seed " << seed << ")\n";

    RunManifest manifest;
    manifest.command = "suite";
    manifest.args = argv;
    manifest.seeds.push_back(seed);
    if (!out.empty()) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["schema"] = "suite.v1";
        j["level"] = level;
        j["seed"] = seed;
        j["pass"] = ok;
        nlohmann::json rows = nlohmann::json::array();
        for (const CriterionResult& r : results)
            rows.push_back({{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
        j["criteria"] = rows;
        Output sink;
        sink.path = out;
        sink.buffer << j.dump(2) << "\n";
        sink.flush_and_record(manifest);
    }
    write_manifest(manifest, out, manifest_path);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolVersion) +
                 " — minimal spanning forest laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::vector<std::string> raw_args(argv + 1, argv + argc);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a graph file");
    std::string gen_kind;
    int gen_dim = 2, gen_side = 8, gen_width = 8, gen_height = 4;
    std::string gen_topology = "free";
    std::vector<int> gen_slits;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_out, gen_manifest;
    std::vector<int> gen_grid_vals;
    gen->add_option("--grid", gen_grid_vals, "grid: DIM SIDE")->expected(2);
    gen->add_option("--topology", gen_topology, "free|torus")
        ->check(CLI::IsMember({"free", "torus"}));
    std::vector<int> gen_strip_vals;
    gen->add_option("--strip", gen_strip_vals, "strip: WIDTH HEIGHT")
        ->expected(2);
    gen->add_option("--slits", gen_slits, "slit columns for --strip");
    bool gen_section5 = false;
    gen->add_flag("--section5", gen_section5,
                  "the modified-K4 reference graph");
    std::uint64_t gen_seed_val = 0;
    auto* gen_seed_opt =
        gen->add_option("--seed", gen_seed_val, "attach sampled labels");
    gen->add_option("--out", gen_out, "output graph file (default stdout)");
    gen->add_option("--manifest", gen_manifest, "manifest path override");

    // forest
    auto* forest = app.add_subcommand("forest", "free and wired trees + Z");
    std::string forest_graph, forest_format = "csv", forest_out,
                forest_manifest;
    std::uint64_t forest_seed_val = 0;
    forest->add_option("--graph", forest_graph, "graph file")->required();
    auto* forest_seed_opt =
        forest->add_option("--seed", forest_seed_val, "label seed");
    forest->add_option("--format", forest_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    forest->add_option("--out", forest_out, "output file (default stdout)");
    forest->add_option("--manifest", forest_manifest, "manifest path");

    // invade
    auto* invade = app.add_subcommand("invade", "invasion tree or basin");
    std::string invade_graph, invade_out, invade_manifest;
    std::uint64_t invade_seed_val = 0;
    int invade_source = 0;
    long long invade_steps = 0;
    bool invade_basin_flag = false;
    invade->add_option("--graph", invade_graph, "graph file")->required();
    auto* invade_seed_opt =
        invade->add_option("--seed", invade_seed_val, "label seed");
    invade->add_option("--source", invade_source, "start vertex");
    invade->add_option("--steps", invade_steps,
                       "max accepted edges (0 = run to saturation)");
    invade->add_flag("--basin", invade_basin_flag,
                     "accept cycle-closing edges too");
    invade->add_option("--out", invade_out, "output file (default stdout)");
    invade->add_option("--manifest", invade_manifest, "manifest path");

    // exact
    auto* exact = app.add_subcommand("exact", "exact tree probabilities");
    std::string exact_graph, exact_out, exact_manifest;
    bool exact_all = false, exact_section5 = false;
    std::vector<int> exact_pair = {0, 1};
    exact->add_option("--graph", exact_graph, "graph file");
    exact->add_flag("--section5", exact_section5,
                    "use the modified-K4 reference graph");
    exact->add_flag("--all", exact_all, "emit the full tree catalog");
    exact->add_option("--pair", exact_pair,
                      "two edge ids for marginal/joint/ratio")
        ->expected(2);
    exact->add_option("--out", exact_out, "output file (default stdout)");
    exact->add_option("--manifest", exact_manifest, "manifest path");

    // dual
    auto* dual = app.add_subcommand("dual", "planar duality verdict");
    int dual_side = 4;
    std::uint64_t dual_seed = 1;
    long long dual_trials = 10;
    std::string dual_out, dual_manifest;
    dual->add_option("--side", dual_side, "grid side")->check(CLI::Range(2, 64));
    dual->add_option("--seed", dual_seed, "label seed");
    dual->add_option("--trials", dual_trials, "labelings to verify");
    dual->add_option("--out", dual_out, "output file (default stdout)");
    dual->add_option("--manifest", dual_manifest, "manifest path");

    // stats
    auto* stats = app.add_subcommand("stats", "sampled statistics");
    std::string stats_mode = "scan", stats_format = "csv", stats_out,
                stats_manifest;
    int stats_side = 8;
    std::uint64_t stats_seed = 1;
    long long stats_trials = 100;
    std::vector<double> stats_p;
    stats->add_option("--mode", stats_mode,
                      "scan|probe|residuals|degrees")
        ->check(CLI::IsMember({"scan", "probe", "residuals", "degrees"}));
    stats->add_option("--side", stats_side, "box side");
    stats->add_option("--seed", stats_seed, "base seed");
    stats->add_option("--trials", stats_trials, "trials per point");
    stats->add_option("--p", stats_p, "p values");
    stats->add_option("--format", stats_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    stats->add_option("--out", stats_out, "output file (default stdout)");
    stats->add_option("--manifest", stats_manifest, "manifest path");

    // suite
    auto* suite = app.add_subcommand("suite", "acceptance battery");
    std::string suite_level = "full", suite_out, suite_manifest;
    std::uint64_t suite_seed = 1729;
    suite->add_option("--level", suite_level, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    suite->add_option("--seed", suite_seed, "battery seed");
    suite->add_option("--out", suite_out, "JSON verdict file");
    suite->add_option("--manifest", suite_manifest, "manifest path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (gen_grid_vals.size() == 2) {
                gen_kind = "grid";
                gen_dim = gen_grid_vals[0];
                gen_side = gen_grid_vals[1];
            } else if (gen_strip_vals.size() == 2) {
                gen_kind = "strip";
                gen_width = gen_strip_vals[0];
                gen_height = gen_strip_vals[1];
            } else if (gen_section5) {
                gen_kind = "section5";
            } else {
                std::cerr << "generate: pass --grid, --strip or --section5\n";
                return 2;
            }
            if (gen_seed_opt->count() > 0) gen_seed = gen_seed_val;
            return cmd_generate(gen_kind, gen_dim, gen_side, gen_topology,
                                gen_width, gen_height, gen_slits, gen_seed,
                                gen_out, gen_manifest, raw_args);
        }
        if (forest->parsed()) {
            std::optional<std::uint64_t> seed;
            if (forest_seed_opt->count() > 0) seed = forest_seed_val;
            return cmd_forest(forest_graph, seed, forest_format, forest_out,
                              forest_manifest, raw_args);
        }
        if (invade->parsed()) {
            std::optional<std::uint64_t> seed;
            if (invade_seed_opt->count() > 0) seed = invade_seed_val;
            return cmd_invade(invade_graph, seed, invade_source,
                              invade_basin_flag, invade_steps, invade_out,
                              invade_manifest, raw_args);
        }
        if (exact->parsed()) {
            if (!exact_section5 && exact_graph.empty()) {
                std::cerr << "exact: pass --graph or --section5\n";
                return 2;
            }
            return cmd_exact(exact_graph, exact_section5, exact_pair,
                             exact_out, exact_manifest, raw_args);
        }
        if (dual->parsed())
            return cmd_dual(dual_side, dual_seed, dual_trials, dual_out,
                            dual_manifest, raw_args);
        if (stats->parsed())
            return cmd_stats(stats_mode, stats_side, stats_seed, stats_trials,
                             stats_p, stats_format, stats_out, stats_manifest,
                             raw_args);
        if (suite->parsed())
            return cmd_suite(suite_level, suite_seed, suite_out,
                             suite_manifest, raw_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
