#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "krc/annotated.hpp"
#include "krc/graph.hpp"
#include "krc/hypergraph.hpp"

namespace krc {

enum class BranchStep { absorb, annotate, commit, cliquedel };
const char* branch_step_name(BranchStep step);

struct BranchDecision {
    int level = 0;        // stripping level, 0 for clique deletion steps
    BranchStep step = BranchStep::absorb;
    VertexSet clique;     // the clique X (or deleted set, root ids)
};

// Live node of the petal-picking recursion. pstar is the committed matching:
// a subcollection of the annotation sets whose petals were paid for, used
// only for budget accounting.
struct BranchNode {
    Context context;
    Hypergraph pstar;
    std::vector<BranchDecision> trace;
};

struct BranchStats {
    std::int64_t nodes = 0;      // recursion nodes expanded
    std::int64_t dead = 0;       // branches cut by budget or admissibility
    std::int64_t leaves = 0;     // emitted outputs
    int max_depth = 0;
    int max_m = 0;               // largest output cover size
    std::int64_t zeta = 0;       // clique count the growth bound was checked against
    std::vector<std::int64_t> zeta_by_level;  // max per-call count, indexed by level

    void merge(const BranchStats& o);
};

struct BranchOptions {
    bool verify_stripped = false;  // re-check strippedness preconditions
    std::ostream* trace = nullptr; // node-per-line replay log
};

// One member of the large-clique branching collection. graph carries labels
// back to the root input; deleted is cumulative in root ids; cover is the
// surviving part of the input cover in graph-local ids.
struct CliqueBranchItem {
    Graph graph;
    int k = 0;
    VertexSet deleted;
    VertexSet cover;
};

struct CliqueBranchOutput {
    std::vector<CliqueBranchItem> items;
    BranchStats stats;
};

// Repeatedly finds a p-clique K and branches on every way to delete
// X = K minus C for complements C of size < r (largest deletions last in
// the sense of smallest complements first), keeping only |X| <= budget.
// Graphs without a p-clique are emitted. The input decides positively at k
// iff some output decides positively at its residual budget. The walk form
// stops early when visit returns true; the collecting form returns all
// items. m must be a K_r-cover of g; p > r.
bool clique_branch_walk(const Graph& g, int k, const VertexSet& m, int p, int r,
                        const std::function<bool(const CliqueBranchItem&)>& visit,
                        BranchStats* stats = nullptr, std::ostream* trace = nullptr);
CliqueBranchOutput clique_branch(const Graph& g, int k, const VertexSet& m,
                                 int p, int r, BranchOptions opts = {});

struct PetalOutput {
    std::vector<BranchNode> items;
    BranchStats stats;
};

// Level-i petal picking: turns an i-stripped node into a collection of
// (i+1)-stripped nodes whose disjunction decides the input. Each output
// keeps k and satisfies M subseteq M', |M'| <= |M| + r(lambda*zeta + k)
// with zeta the number of i-cliques of G[M] at entry; violations of the
// growth bound or of the processed-clique claims throw logic_error.
bool petal_pick_walk(int i, int lambda, const BranchNode& node,
                     const std::function<bool(const BranchNode&)>& visit,
                     BranchStats* stats = nullptr, BranchOptions opts = {});
PetalOutput petal_pick(int i, int lambda, const BranchNode& node,
                       BranchOptions opts = {});

// Composes petal_pick over levels 1..level-1 starting from a fresh node
// (empty committed matching per level). Outputs are level-stripped; each
// satisfies |M'| <= |M| + level*r*(lambda*zeta + k) with zeta the number of
// cliques of order < r in G[M] of the input context.
bool strip_walk(int level, int lambda, const Context& c,
                const std::function<bool(const BranchNode&)>& visit,
                BranchStats* stats = nullptr, BranchOptions opts = {});
PetalOutput strip_to_level(int level, int lambda, const Context& c,
                           BranchOptions opts = {});

}  // namespace krc
