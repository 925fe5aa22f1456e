#include "krc/cliques.hpp"

#include <algorithm>

namespace krc {

namespace {

// Forward neighborhoods under the degeneracy ordering: each clique is grown
// by appending vertices of strictly larger position, so it appears exactly
// once.
struct CliqueWalker {
    const std::vector<std::vector<Vertex>>& forward;
    int target = 0;
    const std::function<bool(const VertexSet&)>& visit;
    std::vector<Vertex> current;

    bool extend(const std::vector<Vertex>& candidates) {
        if (static_cast<int>(current.size()) == target) {
            std::vector<Vertex> sorted = current;
            std::sort(sorted.begin(), sorted.end());
            return visit(VertexSet(std::move(sorted)));
        }
        int missing = target - static_cast<int>(current.size());
        if (static_cast<int>(candidates.size()) < missing) return false;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            Vertex u = candidates[idx];
            std::vector<Vertex> next;
            const auto& fu = forward[static_cast<std::size_t>(u)];
            for (std::size_t j = idx + 1; j < candidates.size(); ++j)
                if (std::binary_search(fu.begin(), fu.end(), candidates[j]))
                    next.push_back(candidates[j]);
            current.push_back(u);
            if (extend(next)) return true;
            current.pop_back();
        }
        return false;
    }
};

}  // namespace

bool for_each_clique(const Graph& g, int i,
                     const std::function<bool(const VertexSet&)>& visit) {
    if (i < 1) throw std::invalid_argument("for_each_clique: order must be positive");
    const int n = g.vertex_count();

    auto deg_order = degeneracy_ordering(g);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int idx = 0; idx < n; ++idx)
        pos[static_cast<std::size_t>(deg_order.ordering[static_cast<std::size_t>(idx)])] = idx;

    // forward[v]: neighbors later in the ordering, sorted by position.
    std::vector<std::vector<Vertex>> forward(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)])
                forward[static_cast<std::size_t>(v)].push_back(w);
        auto& fv = forward[static_cast<std::size_t>(v)];
        std::sort(fv.begin(), fv.end(), [&](Vertex a, Vertex b) {
            return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
        });
    }
    // binary_search inside the walker needs plain vertex order; positions and
    // ids sort identically only per-list after this second pass.
    std::vector<std::vector<Vertex>> forward_sorted = forward;
    for (auto& fv : forward_sorted) std::sort(fv.begin(), fv.end());

    CliqueWalker walker{forward_sorted, i, visit, {}};
    for (int idx = 0; idx < n; ++idx) {
        Vertex v = deg_order.ordering[static_cast<std::size_t>(idx)];
        walker.current = {v};
        if (walker.extend(forward[static_cast<std::size_t>(v)])) return true;
    }
    return false;
}

CliqueList enumerate_cliques(const Graph& g, int i) {
    CliqueList out;
    out.order = i;
    for_each_clique(g, i, [&](const VertexSet& c) {
        out.cliques.push_back(c);
        return false;
    });
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

bool has_clique(const Graph& g, int i) {
    return for_each_clique(g, i, [](const VertexSet&) { return true; });
}

std::int64_t count_small_cliques(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("count_small_cliques: r must be at least 2");
    std::int64_t total = 0;
    for (int i = 1; i < r; ++i)
        for_each_clique(g, i, [&](const VertexSet&) {
            ++total;
            return false;
        });
    return total;
}

VertexSet greedy_kr_cover(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("greedy_kr_cover: r must be at least 2");
    VertexSet packed;
    for (const auto& c : enumerate_cliques(g, r).cliques)
        if (!c.intersects(packed)) packed = packed.set_union(c);
    return packed;
}

bool is_kr_cover(const Graph& g, const VertexSet& s, int r) {
    return !has_clique(delete_vertices(g, s), r);
}

std::optional<VertexSet> find_p_clique(const Graph& g, const VertexSet& m,
                                       int p, int r) {
    if (r < 2) throw std::invalid_argument("find_p_clique: r must be at least 2");
    if (p < r) throw std::invalid_argument("find_p_clique: p must be at least r");
    if (!is_kr_cover(g, m, r))
        throw NotACoverError("find_p_clique: m is not a K_r-cover");

    const int seed_size = p - r + 1;
    Graph gm = induced_subgraph(g, m);
    for (const auto& seed_local : enumerate_cliques(gm, seed_size).cliques) {
        VertexSet seed = lift_from_induced(seed_local, m);
        VertexSet cn = common_neighborhood(g, seed);
        if (cn.size() < r - 1) continue;
        Graph gcn = induced_subgraph(g, cn);
        std::optional<VertexSet> extension;
        for_each_clique(gcn, r - 1, [&](const VertexSet& c) {
            extension = lift_from_induced(c, cn);
            return true;
        });
        if (extension) return seed.set_union(*extension);
    }
    return std::nullopt;
}

}  // namespace krc
