#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "krc/graph.hpp"

namespace krc {

// Parsed `family:key=value,key=value` description. Identical specs always
// produce identical graphs.
struct GenSpec {
    std::string family;
    std::map<std::string, std::string> params;

    static GenSpec parse(const std::string& text);
    std::string str() const;

    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::string get_str(const std::string& key, const std::string& fallback) const;
    std::uint64_t seed() const;  // required for randomized families
};

struct GeneratedInstance {
    Graph graph;
    std::optional<VertexSet> planted_cover;  // planted family only
};

// Families:
//   gnp:              n, p, seed
//   grid:             rows, cols
//   complete:         n
//   disjoint-cliques: count, size
//   geometric-disk:   n, radius, seed
//   planted:          n, s, r, seed, base=bipartite|geometric [, radius]
// planted builds a K_r-free base on n-s vertices (random bipartite, or a
// geometric graph with edges removed until K_r-free), then adds s planted
// vertices with random edges; the planted set is a K_r-cover by
// construction and is returned as the certificate.
GeneratedInstance generate(const GenSpec& spec);

Graph gen_gnp(int n, double p, std::uint64_t seed);
Graph gen_grid(int rows, int cols);
Graph gen_complete(int n);
Graph gen_disjoint_cliques(int count, int size);
Graph gen_geometric_disk(int n, double radius, std::uint64_t seed);
GeneratedInstance gen_planted(int n, int s, int r, std::uint64_t seed,
                              const std::string& base, double radius);

}  // namespace krc
