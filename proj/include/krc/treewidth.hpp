#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krc/annotated.hpp"
#include "krc/graph.hpp"

namespace krc {

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;  // over bag indices

    int width() const;
};

// Min-fill elimination ordering (ties: minimum degree, then lowest id).
// Always valid; width is heuristic, not optimal.
TreeDecomposition decompose(const Graph& g);

// Checks vertex coverage, edge coverage, connected occupancy subtrees, and
// that the bag graph is a tree.
bool validate_decomposition(const Graph& g, const TreeDecomposition& t);

// Header `s td <#bags> <width+1> <n>`, `b <id> <v...>` lines with 1-based
// bag ids and 0-based vertex ids, then 1-based tree edges.
std::string write_td_text(const Graph& g, const TreeDecomposition& t);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    VertexSet bag;
    int child = -1;
    int child2 = -1;     // join only
    Vertex pivot = -1;   // introduced or forgotten vertex
};

// Children precede parents in `nodes`; the root has an empty bag. bag_summit
// maps each original bag index to the node whose bag reproduces it exactly.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;
    std::vector<int> bag_summit;
};

// Roots the decomposition at bag 0 and expands it into leaf, introduce,
// forget, and join nodes.
NiceDecomposition make_nice(const TreeDecomposition& t);

bool validate_nice(const NiceDecomposition& nd);

struct DpResult {
    bool decision = false;
    int optimum = 0;                  // minimum deletions meeting all constraints
    std::optional<VertexSet> solution;  // present iff decision
};

// Exact dynamic program over deleted-subset states per bag. Bag r-cliques
// must lose a vertex; each annotation set is enforced at one canonical bag
// (the first bag containing it in root-directed preorder). The optimum is
// always reached (deleting everything is feasible); decision is
// optimum <= inst.k and the witness passes is_solution.
DpResult solve_annotated_dp(const AnnotatedInstance& inst,
                            const TreeDecomposition& t);

}  // namespace krc
