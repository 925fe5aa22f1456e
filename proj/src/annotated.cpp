#include "krc/annotated.hpp"

#include <algorithm>
#include <stdexcept>

namespace krc {

AnnotatedInstance::AnnotatedInstance(Graph g_, Hypergraph d_, int k_, int r_)
    : g(std::move(g_)), d(std::move(d_)), k(k_), r(r_) {
    if (r < 2) throw std::invalid_argument("annotated instance: r must be at least 2");
    if (k < 0) throw std::invalid_argument("annotated instance: negative budget");
    for (const auto& e : d.edges()) {
        if (e.size() >= r)
            throw std::invalid_argument("annotated instance: annotation set of order >= r");
        if (e[e.size() - 1] >= g.vertex_count() || e[0] < 0)
            throw std::invalid_argument("annotated instance: annotation vertex out of range");
        if (!is_clique(g, e))
            throw std::invalid_argument("annotated instance: annotation set is not a clique");
    }
}

Context::Context(AnnotatedInstance instance_, VertexSet m_)
    : instance(std::move(instance_)), m(std::move(m_)) {
    std::string why;
    if (!validate_context(*this, &why))
        throw std::invalid_argument("context: " + why);
}

bool validate_context(const Context& c, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const auto& inst = c.instance;
    if (inst.r < 2) return fail("r must be at least 2");
    if (inst.k < 0) return fail("negative budget");
    for (Vertex v : c.m)
        if (v < 0 || v >= inst.g.vertex_count()) return fail("cover vertex out of range");
    if (!inst.d.vertex_support().empty() && !c.m.contains_all(inst.d.vertex_support()))
        return fail("annotation vertex outside the cover");
    for (const auto& e : inst.d.edges()) {
        if (e.size() >= inst.r) return fail("annotation set of order >= r");
        if (!is_clique(inst.g, e)) return fail("annotation set is not a clique");
    }
    if (!is_kr_cover(inst.g, c.m, inst.r))
        return fail("deleting the cover leaves an r-clique");
    if (why) why->clear();
    return true;
}

std::optional<VertexSet> find_lush_clique(const Context& c, int i) {
    const auto& inst = c.instance;
    if (i < 1 || i >= inst.r)
        throw std::invalid_argument("find_lush_clique: level out of range");

    VertexSet outside = inst.g.vertices().set_difference(c.m);
    Graph gm = induced_subgraph(inst.g, c.m);
    for (const auto& x_local : enumerate_cliques(gm, i).cliques) {
        VertexSet x = lift_from_induced(x_local, c.m);
        bool excluded = false;
        for (const auto& d : inst.d.edges())
            if (x.contains_all(d)) { excluded = true; break; }
        if (excluded) continue;
        VertexSet petal_ground = common_neighborhood(inst.g, x).set_intersection(outside);
        if (petal_ground.size() < inst.r - i) continue;
        if (has_clique(induced_subgraph(inst.g, petal_ground), inst.r - i))
            return x;
    }
    return std::nullopt;
}

bool is_stripped_to(const Context& c, int level) {
    for (int i = 1; i < level; ++i)
        if (find_lush_clique(c, i)) return false;
    return true;
}

AnnotatedInstance kernelize(const Context& c, bool verify_stripped) {
    const auto& inst = c.instance;
    if (verify_stripped && !is_stripped_to(c, inst.r))
        throw std::logic_error("kernelize: context is not fully stripped");

    Graph kernel_graph = induced_subgraph(inst.g, c.m);
    // Annotation ids translate to positions within the sorted cover.
    std::vector<Vertex> to_local(static_cast<std::size_t>(inst.g.vertex_count()), -1);
    for (int i = 0; i < c.m.size(); ++i)
        to_local[static_cast<std::size_t>(c.m[i])] = i;
    Hypergraph kernel_d = inst.d.relabel(to_local);
    return AnnotatedInstance(std::move(kernel_graph), std::move(kernel_d), inst.k, inst.r);
}

bool is_solution(const AnnotatedInstance& inst, const VertexSet& s) {
    for (Vertex v : s)
        if (v < 0 || v >= inst.g.vertex_count())
            throw std::out_of_range("is_solution: vertex out of range");
    if (s.size() > inst.k) return false;
    if (!inst.d.hit_by(s)) return false;
    return !has_clique(delete_vertices(inst.g, s), inst.r);
}

}  // namespace krc
