#include "krc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "krc/oracle.hpp"
#include "krc/treewidth.hpp"

namespace krc {

namespace {

// Kernels wider than this fall back to the oracle instead of allocating
// 2^width subset tables.
constexpr int kDpWidthCap = 26;

Rational effective_phi(const ClassProfile& profile, int r) {
    return profile.phi_from_r ? Rational(r - 2) : profile.phi;
}

}  // namespace

const std::vector<ClassProfile>& builtin_profiles() {
    static const std::vector<ClassProfile> profiles = {
        {"pseudo-disk", true, Rational(0), Rational(1, 2), Rational(1, 2), false},
        {"map", true, Rational(0), Rational(1, 2), Rational(1, 2), false},
        {"string-ktt-free", false, Rational(0), Rational(0), Rational(1, 2), true},
        {"minor-free", false, Rational(0), Rational(0), Rational(1, 2), true},
        {"generic", false, Rational(0), Rational(0), Rational(1, 2), false},
    };
    return profiles;
}

std::optional<ClassProfile> profile_by_name(const std::string& name) {
    for (const auto& p : builtin_profiles())
        if (p.name == name) return p;
    return std::nullopt;
}

int ceil_pow(int k, const Rational& exponent) {
    if (k < 1) throw std::invalid_argument("ceil_pow: base must be positive");
    if (exponent < Rational(0) || Rational(1) < exponent)
        throw std::invalid_argument("ceil_pow: exponent outside [0,1]");
    const std::int64_t a = exponent.num();
    const std::int64_t b = exponent.den();

    auto pow_at_least = [](std::int64_t base, std::int64_t exp, __int128 limit) {
        // true iff base^exp >= limit, saturating instead of overflowing
        __int128 acc = 1;
        for (std::int64_t i = 0; i < exp; ++i) {
            acc *= base;
            if (acc >= limit) return true;
        }
        return acc >= limit;
    };

    __int128 ka = 1;
    for (std::int64_t i = 0; i < a; ++i) ka *= k;

    int lo = 1, hi = k;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid, b, ka)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

Rational closed_form_exponent(const ClassProfile& profile, int r) {
    Rational phi = effective_phi(profile, r);
    const Rational& gamma = profile.gamma;
    const Rational& alpha = profile.alpha;
    return (gamma + alpha * (phi + Rational(2))) /
           (gamma + alpha * (phi + Rational(1)) + Rational(1));
}

Schedule derive_schedule(const ClassProfile& profile, int k, int r) {
    if (k < 1) throw std::invalid_argument("derive_schedule: budget must be positive");
    if (r < 2) throw std::invalid_argument("derive_schedule: r must be at least 2");

    Rational phi = effective_phi(profile, r);
    const Rational& gamma = profile.gamma;
    const Rational& alpha = profile.alpha;

    Schedule s;
    s.delta = (Rational(1) - alpha) / (gamma + alpha * (phi + Rational(1)) + Rational(1));
    s.epsilon = (Rational(1) - alpha - s.delta) / (gamma + alpha + alpha * phi);
    s.feasible = Rational(0) < s.epsilon && s.epsilon < Rational(1) &&
                 Rational(0) < s.delta && s.delta < Rational(1);
    if (!s.feasible) return s;

    if (closed_form_exponent(profile, r) != Rational(1) - s.epsilon)
        throw std::logic_error("derive_schedule: exponent identity broke");

    int base = ceil_pow(k, s.epsilon);
    s.p = std::max(r + 1, base);
    s.lambda = std::clamp(base, 1, k);
    return s;
}

bool verify(const Graph& g, int r, const VertexSet& s, int k) {
    if (k < 0 || s.size() > k) return false;
    return is_kr_cover(g, s, r);
}

namespace {

struct PipelineRun {
    const Graph& g;
    int k, r;
    SolveOptions opts;
    SolveStats& stats;
    bool decided = false;
    std::optional<VertexSet> certificate;

    // Handles one r-stripped leaf: kernelize, decompose, DP (or oracle when
    // too wide), lift any witness to root ids. Returns true to stop the walk.
    bool leaf(const CliqueBranchItem& item, const BranchNode& node) {
        ++stats.contexts_z;
        stats.max_mprime = std::max(stats.max_mprime, node.context.m.size());

        AnnotatedInstance kernel = kernelize(node.context);
        TreeDecomposition td = decompose(kernel.g);
        stats.max_kernel_width = std::max(stats.max_kernel_width, td.width());

        bool positive;
        std::optional<VertexSet> kernel_solution;
        if (td.width() > kDpWidthCap) {
            ++stats.dp_fallbacks;
            OracleResult fallback = oracle_solve(
                kernel, OracleLimits{kernel.g.vertex_count(), kernel.k});
            positive = fallback.decision;
            kernel_solution = fallback.solution;
        } else {
            DpResult dp = solve_annotated_dp(kernel, td);
            positive = dp.decision;
            kernel_solution = dp.solution;
        }
        if (!positive) return false;

        VertexSet lifted = kernel.g.to_root(*kernel_solution);
        VertexSet full = item.deleted.set_union(lifted);
        if (!verify(g, r, full, k))
            throw std::logic_error("solve: assembled certificate fails verification");
        if (!decided) {
            decided = true;
            certificate = full;
        }
        return !opts.audit;
    }
};

}  // namespace

SolveReport solve(const Graph& g, int k, int r, const ClassProfile& profile,
                  SolveOptions opts) {
    if (k < 0) throw std::invalid_argument("solve: negative budget");
    if (r < 2) throw std::invalid_argument("solve: r must be at least 2");

    auto started = std::chrono::steady_clock::now();
    SolveReport report;
    SolveStats& stats = report.stats;

    auto finish = [&]() -> SolveReport& {
        if (opts.timing) {
            auto ended = std::chrono::steady_clock::now();
            stats.wall_time_ms =
                std::chrono::duration<double, std::milli>(ended - started).count();
        }
        return report;
    };

    VertexSet cover = greedy_kr_cover(g, r);
    stats.greedy_cover_size = cover.size();
    if (cover.size() > k * r) {
        report.decision = false;
        return finish();
    }
    stats.zeta_root = count_small_cliques(induced_subgraph(g, cover), r);

    if (!opts.audit && !opts.force_pipeline &&
        (k <= 3 || g.vertex_count() <= 12)) {
        stats.oracle_fallback = true;
        OracleResult oracle = oracle_solve(
            AnnotatedInstance(g, Hypergraph{}, k, r),
            OracleLimits{std::max(40, g.vertex_count()), std::max(12, k)});
        report.decision = oracle.decision;
        report.solution = oracle.solution;
        return finish();
    }

    int p = r + 1;
    int lambda = 1;
    if (k >= 1) {
        Schedule schedule = derive_schedule(profile, k, r);
        stats.epsilon = schedule.epsilon;
        stats.delta = schedule.delta;
        stats.schedule_feasible = schedule.feasible;
        if (!schedule.feasible) {
            stats.oracle_fallback = true;
            OracleResult oracle = oracle_solve(
                AnnotatedInstance(g, Hypergraph{}, k, r),
                OracleLimits{std::max(40, g.vertex_count()), std::max(12, k)});
            report.decision = oracle.decision;
            report.solution = oracle.solution;
            return finish();
        }
        p = schedule.p;
        lambda = schedule.lambda;
    }
    stats.p = p;
    stats.lambda = lambda;

    PipelineRun run{g, k, r, opts, stats, false, std::nullopt};
    BranchOptions branch_opts;
    branch_opts.trace = opts.trace;

    auto run_item = [&](const CliqueBranchItem& item) {
        ++stats.contexts_y;
        Context context(AnnotatedInstance(item.graph, Hypergraph{}, item.k, r),
                        item.cover);
        BranchStats strip_stats;
        bool stopped = strip_walk(
            r, lambda, context,
            [&](const BranchNode& node) { return run.leaf(item, node); },
            &strip_stats, branch_opts);
        stats.branch.merge(strip_stats);
        return stopped;
    };

    if (profile.skip_clique_branching) {
        run_item(CliqueBranchItem{g, k, VertexSet{}, cover});
    } else {
        BranchStats clique_stats;
        clique_branch_walk(g, k, cover, p, r, run_item, &clique_stats, opts.trace);
        stats.branch.merge(clique_stats);
    }

    report.decision = run.decided;
    report.solution = run.certificate;
    return finish();
}

}  // namespace krc
