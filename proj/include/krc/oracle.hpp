#pragma once

#include <optional>

#include "krc/annotated.hpp"
#include "krc/graph.hpp"

namespace krc {

// Ground-truth solvers. These deliberately avoid the library's clique
// enumeration and branching machinery: cliques come from plain subset
// combinations, covers from bounded branching or exhaustive subsets, so a
// bug in the main pipeline cannot hide behind a shared code path.

struct OracleResult {
    bool decision = false;
    std::optional<int> min_size;      // true optimum when <= k
    std::optional<VertexSet> solution;  // witness of size min_size
};

struct OracleLimits {
    int max_n = 40;
    int max_k = 12;
};

// Bounded branching: pick the lexicographically first uncovered annotation
// set, else the lexicographically first remaining r-clique, and branch on
// deleting each of its vertices in ascending order.
OracleResult oracle_solve(const AnnotatedInstance& inst, OracleLimits limits = {});

// Every i-subset of the vertices, filtered by is_clique. n <= 20.
CliqueList oracle_all_cliques(const Graph& g, int i);

// Exhaustive search over all vertex subsets by increasing size; returns the
// smallest solution of the instance, ignoring inst.k. n <= 16.
std::optional<VertexSet> oracle_min_subset(const AnnotatedInstance& inst);

}  // namespace krc
