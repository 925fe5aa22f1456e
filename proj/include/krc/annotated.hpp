#pragma once

#include <optional>
#include <string>

#include "krc/cliques.hpp"
#include "krc/graph.hpp"
#include "krc/hypergraph.hpp"

namespace krc {

// Annotated instance (G, D, k) for a fixed r: delete at most k vertices so
// that no r-clique remains and every annotation set in D loses a vertex.
// Every annotation set must be a clique of order < r.
struct AnnotatedInstance {
    Graph g;
    Hypergraph d;
    int k = 0;
    int r = 0;

    AnnotatedInstance() = default;
    AnnotatedInstance(Graph g, Hypergraph d, int k, int r);
};

// An instance together with a known cover M: G-M is r-clique-free and every
// annotation set lies inside M.
struct Context {
    AnnotatedInstance instance;
    VertexSet m;

    Context() = default;
    Context(AnnotatedInstance instance, VertexSet m);
};

// Checks every Context invariant from scratch. On failure, stores the first
// violated invariant in *why when why is non-null.
bool validate_context(const Context& c, std::string* why = nullptr);

// A lush i-clique: an i-clique X of G[M] not containing any annotation set,
// with an r-petal avoiding M, i.e. an (r-i)-clique in the common
// neighborhood of X restricted to V(G)-M. Returns the lexicographically
// smallest lush i-clique, or nothing, which certifies the context is
// (i+1)-stripped.
std::optional<VertexSet> find_lush_clique(const Context& c, int i);

// True iff no lush i'-clique exists for any i' < level.
bool is_stripped_to(const Context& c, int level);

// For an r-stripped context, (G, D, k) and (G[M], D, k) decide the same.
// The kernel graph keeps label maps, so kernel solutions name original
// vertices after Graph::to_root. With verify_stripped, the r-strippedness
// precondition is re-checked and violations throw.
AnnotatedInstance kernelize(const Context& c, bool verify_stripped = false);

// True iff |s| <= k, G-s has no r-clique, and s intersects every
// annotation set.
bool is_solution(const AnnotatedInstance& inst, const VertexSet& s);

}  // namespace krc
