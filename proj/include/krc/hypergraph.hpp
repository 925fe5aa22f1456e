#pragma once

#include <vector>

#include "krc/graph.hpp"

namespace krc {

// A collection of vertex sets. Used for annotation sets, petal collections,
// and matchings. Construction sorts and deduplicates; edges stay in
// lexicographic order afterwards.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(std::vector<VertexSet> edges);

    const std::vector<VertexSet>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const VertexSet& operator[](int i) const { return edges_[static_cast<std::size_t>(i)]; }

    bool contains(const VertexSet& e) const;

    // All vertices appearing in some edge.
    VertexSet vertex_support() const;

    // True iff s intersects every edge.
    bool hit_by(const VertexSet& s) const;

    // True iff the edges are pairwise disjoint.
    bool is_matching() const;

    // Inserts e unless a subset of e is already present (hitting the subset
    // hits e). Never removes existing edges: callers keep references to
    // members, so membership must be stable.
    Hypergraph with_edge_subsumed(const VertexSet& e) const;

    // Plain insertion, duplicate-free.
    Hypergraph with_edge(const VertexSet& e) const;

    // Remaps every vertex through `label`, where label[v] is the image of v.
    Hypergraph relabel(const std::vector<Vertex>& label) const;

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    bool operator==(const Hypergraph&) const = default;

private:
    std::vector<VertexSet> edges_;
};

// First-fit over edges in lexicographic order: accept each edge disjoint
// from everything accepted so far. Output is a maximal matching.
Hypergraph maximal_hyperedge_matching(const Hypergraph& h);

}  // namespace krc
