#include "krc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace krc {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::contains_all(const VertexSet& other) const {
    return std::includes(members_.begin(), members_.end(),
                         other.members_.begin(), other.members_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto it = members_.begin();
    auto jt = other.members_.begin();
    while (it != members_.end() && jt != other.members_.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else return true;
    }
    return false;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    std::vector<Vertex> out;
    out.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(),
                   other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(members_.begin(), members_.end(),
                          other.members_.begin(), other.members_.end(),
                          std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

VertexSet VertexSet::with(Vertex v) const {
    return set_union(VertexSet{v});
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : Graph(n, edges, {}) {}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::vector<Vertex> labels)
    : n_(n), adj_(static_cast<std::size_t>(n)), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("graph: label count does not match vertex count");
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("graph: duplicate edge");
        m_ += static_cast<std::int64_t>(nbrs.size());
    }
    m_ /= 2;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

VertexSet Graph::vertices() const {
    std::vector<Vertex> all(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(all));
}

Vertex Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? v : labels_[static_cast<std::size_t>(v)];
}

VertexSet Graph::to_root(const VertexSet& s) const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (Vertex v : s) out.push_back(label(v));
    return VertexSet(std::move(out));
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> old_to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < s.size(); ++i) {
        Vertex v = s[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("induced_subgraph: vertex out of range");
        old_to_new[static_cast<std::size_t>(v)] = i;
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> labels;
    labels.reserve(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) {
        Vertex v = s[i];
        labels.push_back(g.label(v));
        for (Vertex w : g.neighbors(v)) {
            Vertex j = (w >= 0 && w < g.vertex_count())
                           ? old_to_new[static_cast<std::size_t>(w)]
                           : -1;
            if (j > i) edges.emplace_back(i, j);
        }
    }
    return Graph(s.size(), edges, std::move(labels));
}

Graph delete_vertices(const Graph& g, const VertexSet& x) {
    return induced_subgraph(g, g.vertices().set_difference(x));
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("common_neighborhood: empty set");
    VertexSet acc(g.neighbors(s[0]));
    for (int i = 1; i < s.size() && !acc.empty(); ++i)
        acc = acc.set_intersection(VertexSet(g.neighbors(s[i])));
    return acc.set_difference(s);
}

VertexSet lift_from_induced(const VertexSet& local, const VertexSet& base) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(local.size()));
    for (Vertex v : local) {
        if (v < 0 || v >= base.size())
            throw std::out_of_range("lift_from_induced: local id out of range");
        out.push_back(base[v]);
    }
    return VertexSet(std::move(out));
}

VertexSet project_to_induced(const VertexSet& s, const VertexSet& base) {
    std::vector<Vertex> out;
    for (int i = 0; i < base.size(); ++i)
        if (s.contains(base[i])) out.push_back(i);
    return VertexSet(std::move(out));
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    DegeneracyOrdering result;
    result.ordering.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)])
                best = v;
        }
        result.degeneracy = std::max(result.degeneracy, deg[static_cast<std::size_t>(best)]);
        result.ordering.push_back(best);
        removed[static_cast<std::size_t>(best)] = true;
        for (Vertex w : g.neighbors(best))
            if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
    return result;
}

}  // namespace krc
