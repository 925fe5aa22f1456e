#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "krc/graph.hpp"
#include "krc/hypergraph.hpp"

namespace krc {

struct CliqueList {
    int order = 0;
    std::vector<VertexSet> cliques;  // lexicographically sorted, duplicate-free

    int size() const { return static_cast<int>(cliques.size()); }
};

// Visits every i-clique of g exactly once (degeneracy order, extension within
// forward neighborhoods). Visit order is deterministic but not lexicographic.
// The visitor returns true to stop; the function returns true iff stopped.
bool for_each_clique(const Graph& g, int i,
                     const std::function<bool(const VertexSet&)>& visit);

// All i-cliques, lexicographically sorted.
CliqueList enumerate_cliques(const Graph& g, int i);

bool has_clique(const Graph& g, int i);

// Number of cliques of order 1..r-1 (vertices count as 1-cliques).
std::int64_t count_small_cliques(const Graph& g, int r);

// Union of a greedily packed maximal collection of pairwise-disjoint
// r-cliques (lexicographic first-fit). The deletion of the result is
// K_r-free and the size is at most r times the optimum cover size.
VertexSet greedy_kr_cover(const Graph& g, int r);

struct NotACoverError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finds a p-clique of g, or returns nothing only when none exists. Requires
// p >= r and that m is a K_r-cover of g (else NotACoverError). Any p-clique
// has at least p-r+1 vertices in m, so the search seeds on (p-r+1)-cliques
// of g[m] and extends each by an (r-1)-clique in its common neighborhood.
std::optional<VertexSet> find_p_clique(const Graph& g, const VertexSet& m,
                                       int p, int r);

// True iff s hits every r-clique of g.
bool is_kr_cover(const Graph& g, const VertexSet& s, int r);

}  // namespace krc
