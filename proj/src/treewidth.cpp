#include "krc/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krc {

int TreeDecomposition::width() const {
    int largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return largest - 1;
}

TreeDecomposition decompose(const Graph& g) {
    const int n = g.vertex_count();
    TreeDecomposition t;
    if (n == 0) {
        t.bags.push_back(VertexSet{});
        return t;
    }

    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] =
            std::set<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());

    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> bags;
    bags.reserve(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long best_fill = -1;
        int best_deg = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            const auto& nb = adj[static_cast<std::size_t>(v)];
            long fill = 0;
            for (auto it = nb.begin(); it != nb.end(); ++it)
                for (auto jt = std::next(it); jt != nb.end(); ++jt)
                    if (!adj[static_cast<std::size_t>(*it)].count(*jt)) ++fill;
            int deg = static_cast<int>(nb.size());
            if (best < 0 || fill < best_fill ||
                (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }

        auto& nb = adj[static_cast<std::size_t>(best)];
        std::vector<Vertex> members(nb.begin(), nb.end());
        members.push_back(best);
        bags.push_back(VertexSet(std::move(members)));
        position[static_cast<std::size_t>(best)] = step;

        for (auto it = nb.begin(); it != nb.end(); ++it)
            for (auto jt = std::next(it); jt != nb.end(); ++jt) {
                adj[static_cast<std::size_t>(*it)].insert(*jt);
                adj[static_cast<std::size_t>(*jt)].insert(*it);
            }
        for (Vertex w : nb) adj[static_cast<std::size_t>(w)].erase(best);
        nb.clear();
        gone[static_cast<std::size_t>(best)] = true;
    }

    t.bags = std::move(bags);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = v;
    for (int j = 0; j + 1 < n; ++j) {
        Vertex vj = order[static_cast<std::size_t>(j)];
        // Parent: the bag of the earliest-eliminated later neighbor; isolated
        // remainders chain to the next bag so disconnected graphs stay a tree.
        int parent = j + 1;
        int best_pos = std::numeric_limits<int>::max();
        for (Vertex w : t.bags[static_cast<std::size_t>(j)]) {
            if (w == vj) continue;
            int pw = position[static_cast<std::size_t>(w)];
            if (pw < best_pos) { best_pos = pw; parent = pw; }
        }
        t.tree_edges.emplace_back(j, parent);
    }
    return t;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& t) {
    const int b = static_cast<int>(t.bags.size());
    if (b == 0) return g.vertex_count() == 0;

    std::vector<std::vector<int>> bag_adj(static_cast<std::size_t>(b));
    if (static_cast<int>(t.tree_edges.size()) != b - 1) return false;
    for (auto [x, y] : t.tree_edges) {
        if (x < 0 || x >= b || y < 0 || y >= b || x == y) return false;
        bag_adj[static_cast<std::size_t>(x)].push_back(y);
        bag_adj[static_cast<std::size_t>(y)].push_back(x);
    }
    std::vector<bool> seen(static_cast<std::size_t>(b), false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    int reached = 0;
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop();
        ++reached;
        for (int y : bag_adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                todo.push(y);
            }
    }
    if (reached != b) return false;  // with b-1 edges, connectivity implies a tree

    for (const auto& bag : t.bags)
        for (Vertex v : bag)
            if (v < 0 || v >= g.vertex_count()) return false;

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> holders;
        for (int i = 0; i < b; ++i)
            if (t.bags[static_cast<std::size_t>(i)].contains(v)) holders.push_back(i);
        if (holders.empty()) return false;
        std::vector<bool> in_sub(static_cast<std::size_t>(b), false);
        for (int i : holders) in_sub[static_cast<std::size_t>(i)] = true;
        std::queue<int> q;
        q.push(holders[0]);
        std::vector<bool> vis(static_cast<std::size_t>(b), false);
        vis[static_cast<std::size_t>(holders[0])] = true;
        int cnt = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++cnt;
            for (int y : bag_adj[static_cast<std::size_t>(x)])
                if (in_sub[static_cast<std::size_t>(y)] && !vis[static_cast<std::size_t>(y)]) {
                    vis[static_cast<std::size_t>(y)] = true;
                    q.push(y);
                }
        }
        if (cnt != static_cast<int>(holders.size())) return false;
    }

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : t.bags)
            if (bag.contains(u) && bag.contains(v)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

std::string write_td_text(const Graph& g, const TreeDecomposition& t) {
    std::ostringstream out;
    out << "s td " << t.bags.size() << " " << t.width() + 1 << " "
        << g.vertex_count() << "\n";
    for (std::size_t i = 0; i < t.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : t.bags[i]) out << " " << v;
        out << "\n";
    }
    for (auto [x, y] : t.tree_edges) out << x + 1 << " " << y + 1 << "\n";
    return out.str();
}

namespace {

struct NiceBuilder {
    const TreeDecomposition& t;
    NiceDecomposition nd;
    std::vector<std::vector<int>> bag_adj;

    int add(NiceNode node) {
        nd.nodes.push_back(std::move(node));
        return static_cast<int>(nd.nodes.size()) - 1;
    }

    // Chain from `from` up to node whose bag is target: forget surplus, then
    // introduce the missing vertices, ascending ids throughout.
    int lift(int from, const VertexSet& target) {
        VertexSet current = nd.nodes[static_cast<std::size_t>(from)].bag;
        int node = from;
        for (Vertex v : current.set_difference(target))
            node = add({NiceKind::forget, current = current.set_difference({v}), node, -1, v});
        for (Vertex v : target.set_difference(current))
            node = add({NiceKind::introduce, current = current.set_union({v}), node, -1, v});
        return node;
    }

    int build(int bag_idx, int parent) {
        const VertexSet& bag = t.bags[static_cast<std::size_t>(bag_idx)];
        std::vector<int> tops;
        for (int nb : bag_adj[static_cast<std::size_t>(bag_idx)])
            if (nb != parent)
                tops.push_back(lift(build(nb, bag_idx), bag));
        int node;
        if (tops.empty()) {
            node = lift(add({NiceKind::leaf, VertexSet{}, -1, -1, -1}), bag);
        } else {
            node = tops[0];
            for (std::size_t j = 1; j < tops.size(); ++j)
                node = add({NiceKind::join, bag, node, tops[j], -1});
        }
        nd.bag_summit[static_cast<std::size_t>(bag_idx)] = node;
        return node;
    }
};

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& t) {
    NiceBuilder builder{t, {}, {}};
    builder.nd.bag_summit.assign(t.bags.size(), -1);
    builder.bag_adj.assign(t.bags.size(), {});
    for (auto [x, y] : t.tree_edges) {
        builder.bag_adj[static_cast<std::size_t>(x)].push_back(y);
        builder.bag_adj[static_cast<std::size_t>(y)].push_back(x);
    }
    for (auto& a : builder.bag_adj) std::sort(a.begin(), a.end());

    int top = builder.build(0, -1);
    builder.nd.root = builder.lift(top, VertexSet{});
    return std::move(builder.nd);
}

bool validate_nice(const NiceDecomposition& nd) {
    if (nd.nodes.empty() || nd.root != static_cast<int>(nd.nodes.size()) - 1)
        return false;
    if (!nd.nodes[static_cast<std::size_t>(nd.root)].bag.empty()) return false;
    for (int i = 0; i < static_cast<int>(nd.nodes.size()); ++i) {
        const auto& node = nd.nodes[static_cast<std::size_t>(i)];
        auto child_ok = [&](int c) { return c >= 0 && c < i; };
        switch (node.kind) {
            case NiceKind::leaf:
                if (!node.bag.empty() || node.child != -1 || node.child2 != -1)
                    return false;
                break;
            case NiceKind::introduce: {
                if (!child_ok(node.child) || node.child2 != -1) return false;
                const auto& cb = nd.nodes[static_cast<std::size_t>(node.child)].bag;
                if (!node.bag.contains(node.pivot) || cb.contains(node.pivot))
                    return false;
                if (node.bag != cb.set_union({node.pivot})) return false;
                break;
            }
            case NiceKind::forget: {
                if (!child_ok(node.child) || node.child2 != -1) return false;
                const auto& cb = nd.nodes[static_cast<std::size_t>(node.child)].bag;
                if (node.bag.contains(node.pivot) || !cb.contains(node.pivot))
                    return false;
                if (cb != node.bag.set_union({node.pivot})) return false;
                break;
            }
            case NiceKind::join: {
                if (!child_ok(node.child) || !child_ok(node.child2)) return false;
                if (nd.nodes[static_cast<std::size_t>(node.child)].bag != node.bag ||
                    nd.nodes[static_cast<std::size_t>(node.child2)].bag != node.bag)
                    return false;
                break;
            }
        }
    }
    return true;
}

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

int bag_mask_of(const VertexSet& subset, const VertexSet& bag) {
    int mask = 0;
    for (int j = 0; j < bag.size(); ++j)
        if (subset.contains(bag[j])) mask |= 1 << j;
    return mask;
}

}  // namespace

DpResult solve_annotated_dp(const AnnotatedInstance& inst, const TreeDecomposition& t) {
    if (!validate_decomposition(inst.g, t))
        throw std::invalid_argument("solve_annotated_dp: invalid decomposition");
    if (t.width() + 1 > 28)
        throw std::invalid_argument("solve_annotated_dp: width too large for subset tables");

    // Canonical bag per annotation set: first containing bag in root-directed
    // preorder (root = bag 0, children ascending).
    const int b = static_cast<int>(t.bags.size());
    std::vector<std::vector<int>> bag_adj(static_cast<std::size_t>(b));
    for (auto [x, y] : t.tree_edges) {
        bag_adj[static_cast<std::size_t>(x)].push_back(y);
        bag_adj[static_cast<std::size_t>(y)].push_back(x);
    }
    for (auto& a : bag_adj) std::sort(a.begin(), a.end());
    std::vector<int> preorder;
    {
        std::vector<int> stack{0};
        std::vector<bool> seen(static_cast<std::size_t>(b), false);
        seen[0] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            preorder.push_back(x);
            auto kids = bag_adj[static_cast<std::size_t>(x)];
            for (auto it = kids.rbegin(); it != kids.rend(); ++it)
                if (!seen[static_cast<std::size_t>(*it)]) {
                    seen[static_cast<std::size_t>(*it)] = true;
                    stack.push_back(*it);
                }
        }
    }
    std::vector<std::vector<VertexSet>> bag_constraints(static_cast<std::size_t>(b));
    for (const auto& d : inst.d.edges()) {
        int home = -1;
        for (int idx : preorder)
            if (t.bags[static_cast<std::size_t>(idx)].contains_all(d)) { home = idx; break; }
        if (home < 0)
            throw std::invalid_argument("solve_annotated_dp: annotation set in no bag");
        bag_constraints[static_cast<std::size_t>(home)].push_back(d);
    }

    NiceDecomposition nd = make_nice(t);
    // Several bags can share a summit node when adjacent bags are equal.
    std::vector<std::vector<int>> bags_at_node(nd.nodes.size());
    for (int bag_idx = 0; bag_idx < b; ++bag_idx)
        bags_at_node[static_cast<std::size_t>(nd.bag_summit[static_cast<std::size_t>(bag_idx)])]
            .push_back(bag_idx);

    const int node_count = static_cast<int>(nd.nodes.size());
    std::vector<std::vector<int>> dp(static_cast<std::size_t>(node_count));

    for (int idx = 0; idx < node_count; ++idx) {
        const NiceNode& node = nd.nodes[static_cast<std::size_t>(idx)];
        const int w = node.bag.size();
        std::vector<int>& table = dp[static_cast<std::size_t>(idx)];
        table.assign(static_cast<std::size_t>(1) << w, kInfeasible);

        switch (node.kind) {
            case NiceKind::leaf:
                table[0] = 0;
                break;
            case NiceKind::introduce: {
                const auto& child = dp[static_cast<std::size_t>(node.child)];
                int vpos = 0;
                while (node.bag[vpos] != node.pivot) ++vpos;

                // r-cliques inside the bag through the introduced vertex; the
                // last-introduced member of any clique triggers its check, so
                // every r-clique of the graph is enforced somewhere.
                std::vector<int> clique_masks;
                {
                    VertexSet others = node.bag.set_difference({node.pivot});
                    std::vector<Vertex> cand;
                    for (Vertex u : others)
                        if (inst.g.adjacent(u, node.pivot)) cand.push_back(u);
                    std::vector<Vertex> pick;
                    std::function<void(std::size_t)> grow = [&](std::size_t s) {
                        if (static_cast<int>(pick.size()) == inst.r - 1) {
                            VertexSet clique(pick);
                            clique_masks.push_back(bag_mask_of(clique.set_union({node.pivot}), node.bag));
                            return;
                        }
                        for (std::size_t j = s; j < cand.size(); ++j) {
                            bool ok = true;
                            for (Vertex u : pick)
                                if (!inst.g.adjacent(u, cand[j])) { ok = false; break; }
                            if (!ok) continue;
                            pick.push_back(cand[j]);
                            grow(j + 1);
                            pick.pop_back();
                        }
                    };
                    grow(0);
                }

                for (int mask = 0; mask < (1 << w); ++mask) {
                    int cmask = 0;
                    for (int j = 0, cj = 0; j < w; ++j) {
                        if (j == vpos) continue;
                        if (mask & (1 << j)) cmask |= 1 << cj;
                        ++cj;
                    }
                    int base = child[static_cast<std::size_t>(cmask)];
                    if (base >= kInfeasible) continue;
                    if (mask & (1 << vpos)) {
                        table[static_cast<std::size_t>(mask)] = base + 1;
                    } else {
                        bool bad = false;
                        for (int cm : clique_masks)
                            if ((cm & mask) == 0) { bad = true; break; }
                        if (!bad) table[static_cast<std::size_t>(mask)] = base;
                    }
                }
                break;
            }
            case NiceKind::forget: {
                const auto& child = dp[static_cast<std::size_t>(node.child)];
                const auto& cbag = nd.nodes[static_cast<std::size_t>(node.child)].bag;
                int vpos = 0;
                while (cbag[vpos] != node.pivot) ++vpos;
                for (int cmask = 0; cmask < (1 << (w + 1)); ++cmask) {
                    int mask = 0;
                    for (int j = 0, pj = 0; j < w + 1; ++j) {
                        if (j == vpos) continue;
                        if (cmask & (1 << j)) mask |= 1 << pj;
                        ++pj;
                    }
                    auto& slot = table[static_cast<std::size_t>(mask)];
                    slot = std::min(slot, child[static_cast<std::size_t>(cmask)]);
                }
                break;
            }
            case NiceKind::join: {
                const auto& left = dp[static_cast<std::size_t>(node.child)];
                const auto& right = dp[static_cast<std::size_t>(node.child2)];
                for (int mask = 0; mask < (1 << w); ++mask) {
                    int a = left[static_cast<std::size_t>(mask)];
                    int bb = right[static_cast<std::size_t>(mask)];
                    if (a >= kInfeasible || bb >= kInfeasible) continue;
                    table[static_cast<std::size_t>(mask)] =
                        a + bb - std::popcount(static_cast<unsigned>(mask));
                }
                break;
            }
        }

        for (int bag_idx : bags_at_node[static_cast<std::size_t>(idx)]) {
            for (const auto& d : bag_constraints[static_cast<std::size_t>(bag_idx)]) {
                int dmask = bag_mask_of(d, node.bag);
                for (int mask = 0; mask < (1 << w); ++mask)
                    if ((mask & dmask) == 0)
                        table[static_cast<std::size_t>(mask)] = kInfeasible;
            }
        }
    }

    DpResult result;
    result.optimum = dp[static_cast<std::size_t>(nd.root)][0];
    if (result.optimum >= kInfeasible)
        throw std::logic_error("solve_annotated_dp: no feasible state at the root");
    result.decision = result.optimum <= inst.k;

    if (result.decision) {
        // Walk back down re-deriving each node's choice; forgotten vertices
        // carry the deletion record.
        std::vector<Vertex> chosen;
        std::function<void(int, int)> walk = [&](int idx, int mask) {
            const NiceNode& node = nd.nodes[static_cast<std::size_t>(idx)];
            switch (node.kind) {
                case NiceKind::leaf:
                    return;
                case NiceKind::introduce: {
                    int vpos = 0;
                    while (node.bag[vpos] != node.pivot) ++vpos;
                    int cmask = 0;
                    for (int j = 0, cj = 0; j < node.bag.size(); ++j) {
                        if (j == vpos) continue;
                        if (mask & (1 << j)) cmask |= 1 << cj;
                        ++cj;
                    }
                    walk(node.child, cmask);
                    return;
                }
                case NiceKind::forget: {
                    const auto& cbag = nd.nodes[static_cast<std::size_t>(node.child)].bag;
                    const auto& child = dp[static_cast<std::size_t>(node.child)];
                    int vpos = 0;
                    while (cbag[vpos] != node.pivot) ++vpos;
                    int kept = 0;
                    for (int j = 0, pj = 0; j < cbag.size(); ++j) {
                        if (j == vpos) continue;
                        if (mask & (1 << pj)) kept |= 1 << j;
                        ++pj;
                    }
                    int deleted = kept | (1 << vpos);
                    int here = dp[static_cast<std::size_t>(idx)][static_cast<std::size_t>(mask)];
                    if (child[static_cast<std::size_t>(kept)] == here) {
                        walk(node.child, kept);
                    } else {
                        chosen.push_back(node.pivot);
                        if (child[static_cast<std::size_t>(deleted)] != here)
                            throw std::logic_error("solve_annotated_dp: broken reconstruction");
                        walk(node.child, deleted);
                    }
                    return;
                }
                case NiceKind::join:
                    walk(node.child, mask);
                    walk(node.child2, mask);
                    return;
            }
        };
        walk(nd.root, 0);
        VertexSet solution(chosen);
        if (!is_solution(inst, solution))
            throw std::logic_error("solve_annotated_dp: reconstructed witness fails verification");
        result.solution = std::move(solution);
    }
    return result;
}

}  // namespace krc
