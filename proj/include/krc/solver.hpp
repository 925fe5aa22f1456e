#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "krc/annotated.hpp"
#include "krc/branching.hpp"
#include "krc/graph.hpp"
#include "krc/rational.hpp"

namespace krc {

// Graph-class parameters steering the schedule. The class assertion is never
// verified; a wrong profile costs time, not correctness. phi_from_r defers
// phi to r-2 at solve time for families parameterized by the clique order.
struct ClassProfile {
    std::string name;
    bool phi_from_r = false;
    Rational phi{0};
    Rational gamma{0};
    Rational alpha{1, 2};
    bool skip_clique_branching = false;
};

const std::vector<ClassProfile>& builtin_profiles();
std::optional<ClassProfile> profile_by_name(const std::string& name);

struct Schedule {
    Rational epsilon;
    Rational delta;
    int p = 0;       // clique-branching threshold, >= r+1
    int lambda = 1;  // petal absorption cutoff, in [1, k]
    bool feasible = true;
};

// delta = (1-alpha)/(gamma + alpha(phi+1) + 1),
// epsilon = (1-alpha-delta)/(gamma + alpha + alpha*phi),
// p = max(r+1, ceil(k^epsilon)), lambda = clamp(ceil(k^epsilon), 1, k).
// Requires k >= 1.
Schedule derive_schedule(const ClassProfile& profile, int k, int r);

// The leaf-count exponent (gamma + alpha(phi+2))/(gamma + alpha(phi+1) + 1);
// always equals 1 - epsilon.
Rational closed_form_exponent(const ClassProfile& profile, int r);

// ceil(k^(num/den)) for k >= 1 and 0 <= num/den <= 1, by integer root
// bounding: the smallest x with x^den >= k^num.
int ceil_pow(int k, const Rational& exponent);

struct SolveStats {
    Rational epsilon;
    Rational delta;
    int p = 0;
    int lambda = 0;
    bool schedule_feasible = true;
    bool oracle_fallback = false;
    std::int64_t contexts_y = 0;      // clique-branching leaves
    std::int64_t contexts_z = 0;      // stripped contexts across all leaves
    int max_mprime = 0;
    int max_kernel_width = -1;
    std::int64_t dp_fallbacks = 0;    // kernels too wide for the subset DP
    int greedy_cover_size = 0;
    std::int64_t zeta_root = 0;       // cliques of order < r in G[M] at the root
    BranchStats branch;
    std::optional<double> wall_time_ms;
};

struct SolveReport {
    bool decision = false;
    std::optional<VertexSet> solution;
    SolveStats stats;
};

struct SolveOptions {
    bool audit = false;          // enumerate every branch, no shortcuts or fallbacks
    bool timing = false;         // fill wall_time_ms
    bool force_pipeline = false; // skip the small-instance oracle shortcut
    std::ostream* trace = nullptr;
};

// Full pipeline: greedy cover, schedule, large-clique branching, petal
// stripping to level r, kernelization, tree-decomposition DP, disjunction.
// Correct on every graph; the profile only changes the work split.
SolveReport solve(const Graph& g, int k, int r, const ClassProfile& profile,
                  SolveOptions opts = {});

// True iff s is a K_r-cover of g with |s| <= k.
bool verify(const Graph& g, int r, const VertexSet& s, int k);

}  // namespace krc
