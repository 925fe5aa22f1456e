#include "krc/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "krc/bench.hpp"
#include "krc/cliques.hpp"
#include "krc/generators.hpp"
#include "krc/graph_io.hpp"
#include "krc/oracle.hpp"
#include "krc/solver.hpp"
#include "krc/treewidth.hpp"

namespace krc {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

ordered_json vertex_set_json(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (Vertex v : s) arr.push_back(v);
    return arr;
}

ordered_json stats_json(const SolveStats& stats) {
    ordered_json out;
    out["epsilon"] = stats.epsilon.str();
    out["delta"] = stats.delta.str();
    out["p"] = stats.p;
    out["lambda"] = stats.lambda;
    out["schedule_feasible"] = stats.schedule_feasible;
    out["oracle_fallback"] = stats.oracle_fallback;
    out["contexts_y"] = stats.contexts_y;
    out["contexts_z"] = stats.contexts_z;
    out["max_mprime"] = stats.max_mprime;
    out["max_kernel_width"] = stats.max_kernel_width;
    out["dp_fallbacks"] = stats.dp_fallbacks;
    out["greedy_cover_size"] = stats.greedy_cover_size;
    out["zeta_root"] = stats.zeta_root;
    out["branch_nodes"] = stats.branch.nodes;
    out["branch_dead"] = stats.branch.dead;
    if (stats.wall_time_ms) out["wall_time_ms"] = *stats.wall_time_ms;
    else out["wall_time_ms"] = nullptr;
    return out;
}

struct SolveArgs {
    std::string graph_file;
    int r = 3;
    int k = 0;
    std::string profile = "generic";
    bool audit = false;
    bool min_search = false;
    bool timing = false;
    bool force_pipeline = false;
    std::string trace_file;
};

int do_solve(const SolveArgs& args, std::ostream& out) {
    Graph graph = read_graph_file(args.graph_file).graph;
    auto profile = profile_by_name(args.profile);
    if (!profile) throw CLI::ValidationError("unknown profile '" + args.profile + "'");

    std::ofstream trace_stream;
    SolveOptions opts;
    opts.audit = args.audit;
    opts.timing = args.timing;
    opts.force_pipeline = args.force_pipeline;
    if (!args.trace_file.empty()) {
        trace_stream.open(args.trace_file);
        if (!trace_stream) throw ParseError("cannot write '" + args.trace_file + "'");
        opts.trace = &trace_stream;
    }

    ordered_json result;
    result["command"] = "solve";
    result["instance"] = args.graph_file;
    result["r"] = args.r;
    result["profile"] = args.profile;

    if (args.min_search) {
        // decision is monotone in k; binary search over [0, n] finds the
        // smallest positive budget
        int lo = 0;
        int hi = graph.vertex_count();
        SolveReport best;
        bool have_best = false;
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            SolveReport report = solve(graph, mid, args.r, *profile, opts);
            if (report.decision) {
                best = report;
                have_best = true;
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if (!have_best) best = solve(graph, lo, args.r, *profile, opts);
        result["k"] = args.k;
        result["optimum"] = lo;
        result["decision"] = lo <= args.k;
        result["certificate"] =
            best.solution ? vertex_set_json(*best.solution) : ordered_json(nullptr);
        result["stats"] = stats_json(best.stats);
    } else {
        SolveReport report = solve(graph, args.k, args.r, *profile, opts);
        result["k"] = args.k;
        result["decision"] = report.decision;
        result["certificate"] =
            report.solution ? vertex_set_json(*report.solution) : ordered_json(nullptr);
        result["stats"] = stats_json(report.stats);
    }
    out << result.dump() << "\n";
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact solver workbench for small-clique deletion", "krc"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
    solve_cmd->add_option("graph", solve_args.graph_file, "instance file")->required();
    solve_cmd->add_option("-r", solve_args.r, "forbidden clique order")->required();
    solve_cmd->add_option("-k", solve_args.k, "deletion budget");
    solve_cmd->add_option("--profile", solve_args.profile, "graph class profile");
    solve_cmd->add_flag("--audit", solve_args.audit, "enumerate every branch");
    solve_cmd->add_flag("--min", solve_args.min_search, "report the optimum");
    solve_cmd->add_flag("--timing", solve_args.timing, "report wall time");
    solve_cmd->add_flag("--force-pipeline", solve_args.force_pipeline,
                        "disable the small-instance shortcut");
    solve_cmd->add_option("--trace", solve_args.trace_file, "branch trace file");

    std::string oracle_file;
    int oracle_r = 3, oracle_k = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    oracle_cmd->add_option("graph", oracle_file, "instance file")->required();
    oracle_cmd->add_option("-r", oracle_r, "forbidden clique order")->required();
    oracle_cmd->add_option("-k", oracle_k, "deletion budget");

    std::string verify_file, verify_solution;
    int verify_r = 3, verify_k = -1;
    auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
    verify_cmd->add_option("graph", verify_file, "instance file")->required();
    verify_cmd->add_option("-r", verify_r, "forbidden clique order")->required();
    verify_cmd->add_option("--solution", verify_solution, "solution file")->required();
    verify_cmd->add_option("-k", verify_k, "budget, defaults to the solution size");

    std::string cliques_file;
    int cliques_order = 3;
    bool cliques_count_only = false;
    auto* cliques_cmd = app.add_subcommand("cliques", "enumerate fixed-order cliques");
    cliques_cmd->add_option("graph", cliques_file, "instance file")->required();
    cliques_cmd->add_option("-i", cliques_order, "clique order")->required();
    cliques_cmd->add_flag("--count", cliques_count_only, "print the count only");

    std::string gen_spec, gen_out;
    std::optional<std::uint64_t> gen_seed;
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("spec", gen_spec, "family spec, family:key=value,...")->required();
    gen_cmd->add_option("-o,--output", gen_out, "output file")->required();
    gen_cmd->add_option("--seed", gen_seed, "seed override");

    std::string bench_manifest, bench_out;
    int bench_threads = 0;
    auto* bench_cmd = app.add_subcommand("bench", "run a manifest");
    bench_cmd->add_option("manifest", bench_manifest, "manifest json")->required();
    bench_cmd->add_option("-o,--output", bench_out, "jsonl output file")->required();
    bench_cmd->add_option("--threads", bench_threads, "worker count");

    std::string decompose_file, decompose_out;
    auto* decompose_cmd = app.add_subcommand("decompose", "write a tree decomposition");
    decompose_cmd->add_option("graph", decompose_file, "instance file")->required();
    decompose_cmd->add_option("-o,--output", decompose_out, "output file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return do_solve(solve_args, out);

        if (oracle_cmd->parsed()) {
            ParsedGraph parsed = read_graph_file(oracle_file);
            AnnotatedInstance inst(parsed.graph, Hypergraph(parsed.annotations),
                                   oracle_k, oracle_r);
            OracleResult res = oracle_solve(
                inst, OracleLimits{std::max(40, parsed.graph.vertex_count()),
                                   std::max(12, oracle_k)});
            ordered_json result;
            result["command"] = "oracle";
            result["instance"] = oracle_file;
            result["r"] = oracle_r;
            result["k"] = oracle_k;
            result["decision"] = res.decision;
            result["min_size"] =
                res.min_size ? ordered_json(*res.min_size) : ordered_json(nullptr);
            result["solution"] =
                res.solution ? vertex_set_json(*res.solution) : ordered_json(nullptr);
            out << result.dump() << "\n";
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            Graph graph = read_graph_file(verify_file).graph;
            VertexSet solution = read_solution_file(verify_solution);
            int budget = verify_k >= 0 ? verify_k : solution.size();
            bool ok = verify(graph, verify_r, solution, budget);
            ordered_json result;
            result["command"] = "verify";
            result["instance"] = verify_file;
            result["r"] = verify_r;
            result["k"] = budget;
            result["valid"] = ok;
            out << result.dump() << "\n";
            return kExitOk;
        }

        if (cliques_cmd->parsed()) {
            Graph graph = read_graph_file(cliques_file).graph;
            CliqueList found = enumerate_cliques(graph, cliques_order);
            ordered_json result;
            result["command"] = "cliques";
            result["instance"] = cliques_file;
            result["order"] = cliques_order;
            result["count"] = found.size();
            if (!cliques_count_only) {
                ordered_json arr = ordered_json::array();
                for (const auto& c : found.cliques) arr.push_back(vertex_set_json(c));
                result["cliques"] = arr;
            }
            out << result.dump() << "\n";
            return kExitOk;
        }

        if (gen_cmd->parsed()) {
            GenSpec spec = GenSpec::parse(gen_spec);
            if (gen_seed) spec.params["seed"] = std::to_string(*gen_seed);
            GeneratedInstance inst = generate(spec);
            write_graph_file(gen_out, inst.graph);
            ordered_json result;
            result["command"] = "gen";
            result["spec"] = spec.str();
            result["file"] = gen_out;
            result["n"] = inst.graph.vertex_count();
            result["m"] = inst.graph.edge_count();
            if (inst.planted_cover) {
                write_solution_file(gen_out + ".cover", *inst.planted_cover);
                result["cover_file"] = gen_out + ".cover";
                result["cover"] = vertex_set_json(*inst.planted_cover);
            }
            out << result.dump() << "\n";
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            std::ifstream in(bench_manifest);
            if (!in) throw ParseError("cannot open '" + bench_manifest + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            BenchResult res = run_bench_manifest(buf.str(), bench_threads);
            std::ofstream sink(bench_out);
            if (!sink) throw ParseError("cannot write '" + bench_out + "'");
            for (const auto& line : res.lines) sink << line << "\n";
            ordered_json result;
            result["command"] = "bench";
            result["manifest"] = bench_manifest;
            result["output"] = bench_out;
            result["records"] = res.lines.size();
            result["mismatches"] = res.mismatches;
            out << result.dump() << "\n";
            return res.mismatches == 0 ? kExitOk : 1;
        }

        if (decompose_cmd->parsed()) {
            Graph graph = read_graph_file(decompose_file).graph;
            TreeDecomposition td = decompose(graph);
            std::ofstream sink(decompose_out);
            if (!sink) throw ParseError("cannot write '" + decompose_out + "'");
            sink << write_td_text(graph, td);
            ordered_json result;
            result["command"] = "decompose";
            result["instance"] = decompose_file;
            result["output"] = decompose_out;
            result["bags"] = td.bags.size();
            result["width"] = td.width();
            result["valid"] = validate_decomposition(graph, td);
            out << result.dump() << "\n";
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitInput;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace krc
