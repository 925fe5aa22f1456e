#include "krc/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "krc/generators.hpp"
#include "krc/graph_io.hpp"
#include "krc/oracle.hpp"
#include "krc/solver.hpp"

namespace krc {

namespace {

using nlohmann::ordered_json;

int resolve_threads(int requested, int jobs) {
    int threads = requested;
    if (threads <= 0)
        if (const char* env = std::getenv("KRC_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    return std::min(threads, std::max(jobs, 1));
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

std::string run_instance(const ordered_json& item, int* mismatch_flag) {
    ordered_json record;
    record["id"] = item.value("id", std::string{});

    Graph graph;
    if (item.contains("spec")) {
        auto spec = GenSpec::parse(item["spec"].get<std::string>());
        graph = generate(spec).graph;
        record["spec"] = spec.str();
    } else if (item.contains("file")) {
        graph = read_graph_file(item["file"].get<std::string>()).graph;
        record["file"] = item["file"];
    } else {
        throw std::invalid_argument("bench: instance needs 'spec' or 'file'");
    }

    int r = item.at("r").get<int>();
    int k = item.at("k").get<int>();
    std::string profile_name = item.value("profile", std::string("generic"));
    auto profile = profile_by_name(profile_name);
    if (!profile)
        throw std::invalid_argument("bench: unknown profile '" + profile_name + "'");

    SolveOptions opts;
    opts.audit = item.value("audit", false);
    SolveReport report = solve(graph, k, r, *profile, opts);

    record["profile"] = profile_name;
    record["r"] = r;
    record["k"] = k;
    record["decision"] = report.decision;
    record["stats"] = stats_json(report.stats);

    if (item.value("oracle", false)) {
        OracleResult oracle = oracle_solve(
            AnnotatedInstance(graph, Hypergraph{}, k, r),
            OracleLimits{std::max(40, graph.vertex_count()), std::max(12, k)});
        record["oracle_decision"] = oracle.decision;
        bool mismatch = oracle.decision != report.decision;
        record["mismatch"] = mismatch;
        if (mismatch) *mismatch_flag = 1;
    }
    return record.dump();
}

BenchResult run_instances(const ordered_json& items, int threads) {
    BenchResult result;
    const int jobs = static_cast<int>(items.size());
    result.lines.assign(static_cast<std::size_t>(jobs), {});
    std::vector<int> mismatch_flags(static_cast<std::size_t>(jobs), 0);
    std::vector<std::string> errors(static_cast<std::size_t>(jobs));

    std::atomic<int> cursor{0};
    auto worker = [&]() {
        for (;;) {
            int idx = cursor.fetch_add(1);
            if (idx >= jobs) return;
            try {
                result.lines[static_cast<std::size_t>(idx)] = run_instance(
                    items[static_cast<std::size_t>(idx)],
                    &mismatch_flags[static_cast<std::size_t>(idx)]);
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(idx)] = e.what();
            }
        }
    };

    int n_threads = resolve_threads(threads, jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (int i = 0; i < jobs; ++i) {
        if (!errors[static_cast<std::size_t>(i)].empty())
            throw std::runtime_error("bench: instance " + std::to_string(i) + ": " +
                                     errors[static_cast<std::size_t>(i)]);
        result.mismatches += mismatch_flags[static_cast<std::size_t>(i)];
    }
    return result;
}

BenchResult run_scaling(const ordered_json& scaling) {
    BenchResult result;
    std::string family = scaling.value("family", std::string{});
    if (family.empty()) return result;

    int r = scaling.at("r").get<int>();
    int k_min = scaling.at("k_min").get<int>();
    int k_max = scaling.at("k_max").get<int>();
    std::uint64_t seed = scaling.value("seed", 1ULL);
    std::string profile_name = scaling.value("profile", std::string("generic"));
    auto profile = profile_by_name(profile_name);
    if (!profile)
        throw std::invalid_argument("bench: unknown profile '" + profile_name + "'");

    Rational phi = profile->phi_from_r ? Rational(r - 2) : profile->phi;
    Rational eps_exact = derive_schedule(*profile, std::max(k_min, 1), r).epsilon;
    double eps = static_cast<double>(eps_exact.num()) / static_cast<double>(eps_exact.den());
    Rational width_exp_exact =
        (Rational(1) + eps_exact * (phi + Rational(1))) * profile->alpha;
    double width_exp = static_cast<double>(width_exp_exact.num()) /
                       static_cast<double>(width_exp_exact.den());

    double sxy_leaf = 0, sxx_leaf = 0, sxy_width = 0, sxx_width = 0;
    int points = 0;
    for (int k = k_min; k <= k_max; ++k) {
        auto spec = GenSpec::parse(family);
        spec.params["s"] = std::to_string(k);
        spec.params["r"] = std::to_string(r);
        spec.params["seed"] = std::to_string(seed + static_cast<std::uint64_t>(k));
        GeneratedInstance inst = generate(spec);

        SolveOptions opts;
        opts.audit = true;
        SolveReport report = solve(inst.graph, k, r, *profile, opts);

        double leaves = static_cast<double>(std::max<std::int64_t>(report.stats.contexts_z, 1));
        double x_leaf = std::pow(k, eps) * std::log2(std::max(k, 2));
        double y_leaf = std::log2(leaves);
        double x_width = std::pow(k, width_exp);
        double y_width = static_cast<double>(std::max(report.stats.max_kernel_width, 0));
        sxy_leaf += x_leaf * y_leaf;
        sxx_leaf += x_leaf * x_leaf;
        sxy_width += x_width * y_width;
        sxx_width += x_width * x_width;
        ++points;

        ordered_json row;
        row["k"] = k;
        row["spec"] = spec.str();
        row["decision"] = report.decision;
        row["leaves"] = report.stats.contexts_z;
        row["contexts_y"] = report.stats.contexts_y;
        row["contexts_z"] = report.stats.contexts_z;
        row["max_kernel_width"] = report.stats.max_kernel_width;
        row["x_leaf"] = x_leaf;
        row["x_width"] = x_width;
        result.lines.push_back(row.dump());
    }

    ordered_json fit;
    fit["fit"] = {
        {"epsilon", eps_exact.str()},
        {"width_exponent", width_exp_exact.str()},
        {"leaf_slope", sxx_leaf > 0 ? sxy_leaf / sxx_leaf : 0.0},
        {"width_slope", sxx_width > 0 ? sxy_width / sxx_width : 0.0},
        {"points", points},
        {"degenerate", points < 2},
    };
    result.lines.push_back(fit.dump());
    return result;
}

}  // namespace

BenchResult run_bench_manifest(const std::string& manifest_json, int threads) {
    ordered_json manifest = ordered_json::parse(manifest_json);
    if (manifest.contains("instances"))
        return run_instances(manifest["instances"], threads);
    if (manifest.contains("scaling")) return run_scaling(manifest["scaling"]);
    throw std::invalid_argument("bench: manifest needs 'instances' or 'scaling'");
}

}  // namespace krc
