#include "krc/branching.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace krc {

const char* branch_step_name(BranchStep step) {
    switch (step) {
        case BranchStep::absorb: return "absorb";
        case BranchStep::annotate: return "annotate";
        case BranchStep::commit: return "commit";
        case BranchStep::cliquedel: return "cliquedel";
    }
    return "?";
}

void BranchStats::merge(const BranchStats& o) {
    nodes += o.nodes;
    dead += o.dead;
    leaves += o.leaves;
    max_depth = std::max(max_depth, o.max_depth);
    max_m = std::max(max_m, o.max_m);
    zeta = std::max(zeta, o.zeta);
    if (zeta_by_level.size() < o.zeta_by_level.size())
        zeta_by_level.resize(o.zeta_by_level.size(), 0);
    for (std::size_t i = 0; i < o.zeta_by_level.size(); ++i)
        zeta_by_level[i] = std::max(zeta_by_level[i], o.zeta_by_level[i]);
}

namespace {

void trace_node(std::ostream* out, std::int64_t id, std::int64_t parent,
                BranchStep step, int level, const VertexSet& clique) {
    if (!out) return;
    *out << "node " << id << " parent " << parent << " step "
         << branch_step_name(step) << " level " << level << " clique";
    for (Vertex v : clique) *out << " " << v;
    *out << "\n";
}

// Subsets of base of the given size, lexicographic, passed to fn; fn returns
// true to stop.
bool for_each_subset(const VertexSet& base, int size,
                     const std::function<bool(const VertexSet&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            std::vector<Vertex> members;
            members.reserve(static_cast<std::size_t>(size));
            for (int j : idx) members.push_back(base[j]);
            return fn(VertexSet(std::move(members)));
        }
        for (int j = start; j < base.size(); ++j) {
            idx[static_cast<std::size_t>(depth)] = j;
            if (rec(j + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

struct CliqueWalk {
    int p, r;
    const std::function<bool(const CliqueBranchItem&)>& visit;
    BranchStats& stats;
    std::ostream* trace;
    std::int64_t next_id = 1;

    bool rec(const Graph& g, int k, const VertexSet& m,
             const VertexSet& deleted, int depth, std::int64_t my_id) {
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, depth);

        auto found = find_p_clique(g, m, p, r);
        if (!found) {
            ++stats.leaves;
            stats.max_m = std::max(stats.max_m, m.size());
            return visit(CliqueBranchItem{g, k, deleted, m});
        }

        const VertexSet& big = *found;
        bool branched = false;
        for (int c_size = 0; c_size <= r - 1 && c_size < big.size(); ++c_size) {
            bool stopped = for_each_subset(big, c_size, [&](const VertexSet& c) {
                VertexSet x = big.set_difference(c);
                if (x.size() > k) return false;
                branched = true;
                std::int64_t child = next_id++;
                trace_node(trace, child, my_id, BranchStep::cliquedel, 0, g.to_root(x));
                VertexSet survivors = g.vertices().set_difference(x);
                return rec(delete_vertices(g, x), k - x.size(),
                           project_to_induced(m, survivors),
                           deleted.set_union(g.to_root(x)), depth + 1, child);
            });
            if (stopped) return true;
        }
        if (!branched) ++stats.dead;
        return false;
    }
};

}  // namespace

bool clique_branch_walk(const Graph& g, int k, const VertexSet& m, int p, int r,
                        const std::function<bool(const CliqueBranchItem&)>& visit,
                        BranchStats* stats, std::ostream* trace) {
    if (k < 0) throw std::invalid_argument("clique_branch: negative budget");
    BranchStats local;
    CliqueWalk walk{p, r, visit, stats ? *stats : local, trace};
    return walk.rec(g, k, m, {}, 0, 0);
}

CliqueBranchOutput clique_branch(const Graph& g, int k, const VertexSet& m,
                                 int p, int r, BranchOptions opts) {
    CliqueBranchOutput out;
    clique_branch_walk(
        g, k, m, p, r,
        [&](const CliqueBranchItem& item) {
            out.items.push_back(item);
            return false;
        },
        &out.stats, opts.trace);
    return out;
}

namespace {

struct PetalWalk {
    int i, lambda;
    const std::function<bool(const BranchNode&)>& visit;
    BranchStats& stats;
    BranchOptions opts;
    VertexSet m_entry;
    int growth_cap = 0;  // |M| + r(lambda*zeta + k) at entry
    std::int64_t next_id = 1;

    bool rec(const BranchNode& node, int depth, std::int64_t my_id,
             std::vector<VertexSet>& processed) {
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, depth);
        const auto& inst = node.context.instance;

        if (inst.k < node.pstar.size()) {
            ++stats.dead;
            return false;
        }

        auto lush = find_lush_clique(node.context, i);
        if (!lush) {
            if (node.context.m.size() > growth_cap)
                throw std::logic_error("petal_pick: cover outgrew the stated bound");
            ++stats.leaves;
            stats.max_m = std::max(stats.max_m, node.context.m.size());
            return visit(node);
        }

        const VertexSet& x = *lush;
        if (!m_entry.contains_all(x))
            throw std::logic_error("petal_pick: processed clique escapes the entry cover");
        if (std::find(processed.begin(), processed.end(), x) != processed.end())
            throw std::logic_error("petal_pick: lush clique repeated on a path");
        processed.push_back(x);

        VertexSet outside = inst.g.vertices().set_difference(node.context.m);
        VertexSet ground = common_neighborhood(inst.g, x).set_intersection(outside);
        Graph petal_graph = induced_subgraph(inst.g, ground);
        std::vector<VertexSet> petal_sets;
        for (const auto& c : enumerate_cliques(petal_graph, inst.r - i).cliques)
            petal_sets.push_back(lift_from_induced(c, ground));
        Hypergraph petals(std::move(petal_sets));
        Hypergraph matching = maximal_hyperedge_matching(petals);
        if (matching.empty())
            throw std::logic_error("petal_pick: lush clique without petals");

        bool stopped;
        if (matching.size() <= lambda) {
            BranchNode child = node;
            child.context.m = node.context.m.set_union(matching.vertex_support());
            child.trace.push_back({i, BranchStep::absorb, x});
            std::int64_t cid = next_id++;
            trace_node(opts.trace, cid, my_id, BranchStep::absorb, i, x);
            stopped = rec(child, depth + 1, cid, processed);
        } else {
            BranchNode annotate = node;
            annotate.context.instance.d = inst.d.with_edge_subsumed(x);
            annotate.trace.push_back({i, BranchStep::annotate, x});
            std::int64_t aid = next_id++;
            trace_node(opts.trace, aid, my_id, BranchStep::annotate, i, x);
            stopped = rec(annotate, depth + 1, aid, processed);

            if (!stopped) {
                if (inst.k >= node.pstar.size() + matching.size()) {
                    BranchNode commit = node;
                    Hypergraph d2 = inst.d;
                    Hypergraph p2 = node.pstar;
                    for (const auto& b : matching) {
                        d2 = d2.with_edge_subsumed(b);
                        p2 = p2.with_edge(b);
                    }
                    commit.context.instance.d = std::move(d2);
                    commit.context.m = node.context.m.set_union(matching.vertex_support());
                    commit.pstar = std::move(p2);
                    commit.trace.push_back({i, BranchStep::commit, x});
                    std::int64_t cid = next_id++;
                    trace_node(opts.trace, cid, my_id, BranchStep::commit, i, x);
                    stopped = rec(commit, depth + 1, cid, processed);
                } else {
                    ++stats.dead;
                }
            }
        }
        processed.pop_back();
        return stopped;
    }
};

}  // namespace

bool petal_pick_walk(int i, int lambda, const BranchNode& node,
                     const std::function<bool(const BranchNode&)>& visit,
                     BranchStats* stats, BranchOptions opts) {
    const auto& inst = node.context.instance;
    if (i < 1 || i >= inst.r)
        throw std::invalid_argument("petal_pick: level out of range");
    if (lambda < 1) throw std::invalid_argument("petal_pick: lambda must be positive");
    if (opts.verify_stripped && !is_stripped_to(node.context, i))
        throw std::logic_error("petal_pick: context is not stripped to the level");

    BranchStats local;
    BranchStats& st = stats ? *stats : local;
    PetalWalk walk{i, lambda, visit, st, opts, node.context.m, 0, 1};
    std::int64_t zeta =
        enumerate_cliques(induced_subgraph(inst.g, node.context.m), i).size();
    st.zeta = std::max(st.zeta, zeta);
    if (static_cast<int>(st.zeta_by_level.size()) <= i) st.zeta_by_level.resize(i + 1, 0);
    st.zeta_by_level[static_cast<std::size_t>(i)] =
        std::max(st.zeta_by_level[static_cast<std::size_t>(i)], zeta);
    walk.growth_cap = node.context.m.size() +
                      inst.r * static_cast<int>(lambda * zeta + inst.k);
    std::vector<VertexSet> processed;
    return walk.rec(node, 0, 0, processed);
}

PetalOutput petal_pick(int i, int lambda, const BranchNode& node, BranchOptions opts) {
    PetalOutput out;
    petal_pick_walk(
        i, lambda, node,
        [&](const BranchNode& leaf) {
            out.items.push_back(leaf);
            return false;
        },
        &out.stats, opts);
    return out;
}

namespace {

struct StripWalk {
    int level, lambda;
    const std::function<bool(const BranchNode&)>& visit;
    BranchStats& stats;
    BranchOptions opts;
    int growth_cap = 0;  // |M| + level*r*(lambda*zeta + k) for the root context
    std::int64_t outputs = 0;

    bool rec(int i, const BranchNode& node) {
        if (i == level) {
            if (node.context.m.size() > growth_cap)
                throw std::logic_error("strip_to_level: cover outgrew the stated bound");
            ++outputs;
            stats.max_m = std::max(stats.max_m, node.context.m.size());
            return visit(node);
        }
        BranchNode fresh{node.context, Hypergraph{}, node.trace};
        return petal_pick_walk(
            i, lambda, fresh,
            [&](const BranchNode& out) { return rec(i + 1, out); },
            &stats, opts);
    }
};

}  // namespace

bool strip_walk(int level, int lambda, const Context& c,
                const std::function<bool(const BranchNode&)>& visit,
                BranchStats* stats, BranchOptions opts) {
    if (level < 1 || level > c.instance.r)
        throw std::invalid_argument("strip_to_level: level out of range");
    if (lambda < 1) throw std::invalid_argument("strip_to_level: lambda must be positive");

    BranchStats local;
    BranchStats& st = stats ? *stats : local;
    std::int64_t prev_zeta = st.zeta;
    std::int64_t prev_leaves = st.leaves;
    std::int64_t zeta = count_small_cliques(induced_subgraph(c.instance.g, c.m),
                                            c.instance.r);
    StripWalk walk{level, lambda, visit, st, opts, 0, 0};
    walk.growth_cap =
        c.m.size() + level * c.instance.r * static_cast<int>(lambda * zeta + c.instance.k);
    BranchNode root{c, Hypergraph{}, {}};
    bool stopped = walk.rec(1, root);
    // Inner petal calls counted intermediate-level outputs as leaves and took
    // per-level clique counts; report final outputs and the bound's figure.
    st.leaves = prev_leaves + walk.outputs;
    st.zeta = std::max(prev_zeta, zeta);
    return stopped;
}

PetalOutput strip_to_level(int level, int lambda, const Context& c, BranchOptions opts) {
    PetalOutput out;
    strip_walk(
        level, lambda, c,
        [&](const BranchNode& leaf) {
            out.items.push_back(leaf);
            return false;
        },
        &out.stats, opts);
    return out;
}

}  // namespace krc
