#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace krc {

using Vertex = int;

// Sorted, duplicate-free set of vertex ids. Comparison is lexicographic on
// the member list, which is the clique/hyperedge order used everywhere.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    const std::vector<Vertex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    Vertex operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

    bool contains(Vertex v) const;
    bool contains_all(const VertexSet& other) const;  // other subseteq this
    bool intersects(const VertexSet& other) const;

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;
    VertexSet with(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet& other) const { return members_ <=> other.members_; }

private:
    std::vector<Vertex> members_;
};

// Simple undirected graph over dense ids 0..n-1, adjacency kept sorted.
// A subgraph carries `labels` mapping its ids back to the ids of the graph
// at the root of the subgraph chain, so branching results can always be
// reported in the coordinates of the original input.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
          std::vector<Vertex> labels);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    VertexSet vertices() const;

    bool has_labels() const { return !labels_.empty(); }
    Vertex label(Vertex v) const;           // root id of v (identity without labels)
    VertexSet to_root(const VertexSet& s) const;
    const std::vector<Vertex>& labels() const { return labels_; }

    std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Vertex> labels_;  // empty == identity
};

// G[s]; new ids 0..|s|-1 in the sorted order of s, labels composed to root.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// G - x; equals induced_subgraph(g, V(g) \ x).
Graph delete_vertices(const Graph& g, const VertexSet& x);

// True iff every pair of s is adjacent; vacuously true for |s| <= 1.
bool is_clique(const Graph& g, const VertexSet& s);

// Vertices adjacent to every member of s, excluding s itself. s must be nonempty.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

// Maps ids of induced_subgraph(g, base) back to ids of g: local id i names
// the i-th smallest member of base.
VertexSet lift_from_induced(const VertexSet& local, const VertexSet& base);

// Inverse direction: maps members of s that lie in base to their positions
// within base. Members outside base are dropped.
VertexSet project_to_induced(const VertexSet& s, const VertexSet& base);

struct DegeneracyOrdering {
    std::vector<Vertex> ordering;  // repeated minimum-degree removal
    int degeneracy = 0;            // max degree at removal time
};

DegeneracyOrdering degeneracy_ordering(const Graph& g);

}  // namespace krc
