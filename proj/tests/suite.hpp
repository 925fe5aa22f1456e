#pragma once

#include <string>
#include <vector>

#include "krc/generators.hpp"
#include "krc/graph.hpp"

namespace krc::testing {

inline Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Graph triangle() { return gen_complete(3); }

inline Graph path(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

inline Graph cycle(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph(n, edges);
}

// Friendship graph F_t: t triangles sharing vertex 0.
inline Graph friendship(int t) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int j = 0; j < t; ++j) {
        int b = 1 + 2 * j, c = 2 + 2 * j;
        edges.push_back({0, b});
        edges.push_back({0, c});
        edges.push_back({b, c});
    }
    return Graph(1 + 2 * t, edges);
}

struct SuiteInstance {
    std::string id;
    Graph g;
    int r = 3;
};

// 60 deterministic base graphs with n <= 12, r alternating between 3 and 4,
// drawn from four generator families. Paired with budgets 0..4 this yields
// the 300-instance suite the equivalence tests run on.
inline std::vector<SuiteInstance> small_suite() {
    std::vector<SuiteInstance> out;
    for (int s = 0; s < 60; ++s) {
        int r = (s % 2 == 0) ? 3 : 4;
        SuiteInstance inst;
        inst.r = r;
        switch (s % 4) {
            case 0: {
                int n = 6 + (s % 7);
                double p = 0.3 + 0.05 * (s % 7);
                inst.id = "gnp-" + std::to_string(s);
                inst.g = gen_gnp(n, p, static_cast<std::uint64_t>(1000 + s));
                break;
            }
            case 1: {
                int rows = 2 + (s % 2), cols = 2 + (s % 3);
                inst.id = "grid-" + std::to_string(s);
                inst.g = gen_grid(rows, cols);
                break;
            }
            case 2: {
                int count = 2 + (s % 2), size = 3 + ((s / 2) % 2);
                inst.id = "cliques-" + std::to_string(s);
                inst.g = gen_disjoint_cliques(count, size);
                break;
            }
            default: {
                int n = 8 + (s % 5), plant = 1 + (s % 3);
                inst.id = "planted-" + std::to_string(s);
                inst.g = gen_planted(n, plant, r, static_cast<std::uint64_t>(2000 + s),
                                     "bipartite", 0.0)
                             .graph;
                break;
            }
        }
        out.push_back(inst);
    }
    return out;
}

}  // namespace krc::testing
