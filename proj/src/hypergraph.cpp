#include "krc/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace krc {

Hypergraph::Hypergraph(std::vector<VertexSet> edges) : edges_(std::move(edges)) {
    for (const auto& e : edges_)
        if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::contains(const VertexSet& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

VertexSet Hypergraph::vertex_support() const {
    std::vector<Vertex> all;
    for (const auto& e : edges_)
        all.insert(all.end(), e.begin(), e.end());
    return VertexSet(std::move(all));
}

bool Hypergraph::hit_by(const VertexSet& s) const {
    for (const auto& e : edges_)
        if (!e.intersects(s)) return false;
    return true;
}

bool Hypergraph::is_matching() const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = i + 1; j < edges_.size(); ++j)
            if (edges_[i].intersects(edges_[j])) return false;
    return true;
}

Hypergraph Hypergraph::with_edge_subsumed(const VertexSet& e) const {
    for (const auto& d : edges_)
        if (e.contains_all(d)) return *this;
    return with_edge(e);
}

Hypergraph Hypergraph::with_edge(const VertexSet& e) const {
    if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
    if (contains(e)) return *this;
    Hypergraph out = *this;
    out.edges_.insert(std::upper_bound(out.edges_.begin(), out.edges_.end(), e), e);
    return out;
}

Hypergraph Hypergraph::relabel(const std::vector<Vertex>& label) const {
    std::vector<VertexSet> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        std::vector<Vertex> mapped;
        mapped.reserve(static_cast<std::size_t>(e.size()));
        for (Vertex v : e) {
            if (v < 0 || v >= static_cast<int>(label.size()))
                throw std::out_of_range("hypergraph: relabel vertex out of range");
            mapped.push_back(label[static_cast<std::size_t>(v)]);
        }
        VertexSet image(mapped);
        if (image.size() != e.size())
            throw std::invalid_argument("hypergraph: relabel collapses an edge");
        out.push_back(std::move(image));
    }
    return Hypergraph(std::move(out));
}

Hypergraph maximal_hyperedge_matching(const Hypergraph& h) {
    std::vector<VertexSet> picked;
    for (const auto& e : h) {
        bool clash = false;
        for (const auto& p : picked)
            if (p.intersects(e)) { clash = true; break; }
        if (!clash) picked.push_back(e);
    }
    return Hypergraph(std::move(picked));
}

}  // namespace krc
