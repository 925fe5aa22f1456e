#include "krc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace krc {

namespace {

// Plain combination walk in ascending id order, pruned by pairwise
// adjacency. Yields cliques in lexicographic order.
void subset_cliques(const Graph& g, int i, std::vector<Vertex>& current,
                    Vertex next, std::vector<VertexSet>& out) {
    if (static_cast<int>(current.size()) == i) {
        out.push_back(VertexSet(current));
        return;
    }
    for (Vertex v = next; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (Vertex u : current)
            if (!g.adjacent(u, v)) { ok = false; break; }
        if (!ok) continue;
        current.push_back(v);
        subset_cliques(g, i, current, v + 1, out);
        current.pop_back();
    }
}

std::vector<VertexSet> cliques_by_combinations(const Graph& g, int i) {
    std::vector<VertexSet> out;
    std::vector<Vertex> current;
    subset_cliques(g, i, current, 0, out);
    return out;
}

struct BnB {
    const std::vector<VertexSet>& targets;  // annotation sets first, then r-cliques, lex per block
    int n = 0;
    int budget = 0;
    std::vector<bool> deleted;
    std::vector<Vertex> chosen;
    int best = 0;  // budget + 1 when nothing found yet
    std::vector<Vertex> best_set;

    const VertexSet* first_uncovered() const {
        for (const auto& t : targets) {
            bool hit = false;
            for (Vertex v : t)
                if (deleted[static_cast<std::size_t>(v)]) { hit = true; break; }
            if (!hit) return &t;
        }
        return nullptr;
    }

    void run(int used) {
        if (used >= best) return;
        const VertexSet* t = first_uncovered();
        if (!t) {
            best = used;
            best_set = chosen;
            return;
        }
        if (used + 1 > budget) return;
        for (Vertex v : *t) {
            deleted[static_cast<std::size_t>(v)] = true;
            chosen.push_back(v);
            run(used + 1);
            chosen.pop_back();
            deleted[static_cast<std::size_t>(v)] = false;
        }
    }
};

}  // namespace

OracleResult oracle_solve(const AnnotatedInstance& inst, OracleLimits limits) {
    if (inst.g.vertex_count() > limits.max_n)
        throw std::invalid_argument("oracle_solve: instance exceeds vertex cap");
    if (inst.k > limits.max_k)
        throw std::invalid_argument("oracle_solve: budget exceeds cap");

    std::vector<VertexSet> targets(inst.d.edges().begin(), inst.d.edges().end());
    auto cliques = cliques_by_combinations(inst.g, inst.r);
    targets.insert(targets.end(), cliques.begin(), cliques.end());

    BnB search{targets, inst.g.vertex_count(), inst.k,
               std::vector<bool>(static_cast<std::size_t>(inst.g.vertex_count()), false),
               {}, inst.k + 1, {}};
    search.run(0);

    OracleResult result;
    result.decision = search.best <= inst.k;
    if (result.decision) {
        result.min_size = search.best;
        result.solution = VertexSet(search.best_set);
    }
    return result;
}

CliqueList oracle_all_cliques(const Graph& g, int i) {
    if (g.vertex_count() > 20)
        throw std::invalid_argument("oracle_all_cliques: vertex cap is 20");
    if (i < 1) throw std::invalid_argument("oracle_all_cliques: order must be positive");
    CliqueList out;
    out.order = i;
    out.cliques = cliques_by_combinations(g, i);
    return out;
}

std::optional<VertexSet> oracle_min_subset(const AnnotatedInstance& inst) {
    const int n = inst.g.vertex_count();
    if (n > 16) throw std::invalid_argument("oracle_min_subset: vertex cap is 16");

    std::vector<std::uint32_t> target_masks;
    for (const auto& d : inst.d.edges()) {
        std::uint32_t mask = 0;
        for (Vertex v : d) mask |= 1u << v;
        target_masks.push_back(mask);
    }
    for (const auto& c : cliques_by_combinations(inst.g, inst.r)) {
        std::uint32_t mask = 0;
        for (Vertex v : c) mask |= 1u << v;
        target_masks.push_back(mask);
    }

    for (int size = 0; size <= n; ++size) {
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            if (std::popcount(s) != size) continue;
            bool covers = true;
            for (std::uint32_t t : target_masks)
                if ((t & s) == 0) { covers = false; break; }
            if (!covers) continue;
            std::vector<Vertex> members;
            for (Vertex v = 0; v < n; ++v)
                if (s & (1u << v)) members.push_back(v);
            return VertexSet(members);
        }
    }
    return std::nullopt;  // unreachable: deleting everything always covers
}

}  // namespace krc
