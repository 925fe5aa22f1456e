#include "krc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "krc/cliques.hpp"
#include "krc/rng.hpp"

namespace krc {

GenSpec GenSpec::parse(const std::string& text) {
    GenSpec spec;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (spec.family.empty())
        throw std::invalid_argument("generator spec: missing family");
    if (colon == std::string::npos) return spec;

    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string pair = rest.substr(pos, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - pos);
        auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("generator spec: expected key=value, got '" + pair + "'");
        spec.params[pair.substr(0, eq)] = pair.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return spec;
}

std::string GenSpec::str() const {
    std::string out = family;
    char sep = ':';
    for (const auto& [key, value] : params) {
        out += sep;
        out += key + "=" + value;
        sep = ',';
    }
    return out;
}

int GenSpec::get_int(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("generator spec: missing parameter '" + key + "'");
    return std::stoi(it->second);
}

int GenSpec::get_int(const std::string& key, int fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stoi(it->second);
}

double GenSpec::get_double(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("generator spec: missing parameter '" + key + "'");
    return std::stod(it->second);
}

double GenSpec::get_double(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stod(it->second);
}

std::string GenSpec::get_str(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::uint64_t GenSpec::seed() const {
    auto it = params.find("seed");
    if (it == params.end())
        throw std::invalid_argument("generator spec: randomized family needs seed=");
    return std::stoull(it->second);
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("gnp: bad parameters");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: bad dimensions");
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, edges);
}

Graph gen_complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: bad size");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_disjoint_cliques(int count, int size) {
    if (count < 0 || size < 1)
        throw std::invalid_argument("disjoint-cliques: bad parameters");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int c = 0; c < count; ++c)
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                edges.emplace_back(c * size + i, c * size + j);
    return Graph(count * size, edges);
}

namespace {

std::vector<std::pair<double, double>> sample_points(int n, Rng& rng) {
    std::vector<std::pair<double, double>> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = rng.uniform();
        double y = rng.uniform();
        points.emplace_back(x, y);
    }
    return points;
}

std::vector<std::pair<Vertex, Vertex>> disk_edges(
    const std::vector<std::pair<double, double>>& points, double radius) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    const double limit = radius * radius;
    for (std::size_t u = 0; u < points.size(); ++u)
        for (std::size_t v = u + 1; v < points.size(); ++v) {
            double dx = points[u].first - points[v].first;
            double dy = points[u].second - points[v].second;
            if (dx * dx + dy * dy <= limit)
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    return edges;
}

}  // namespace

Graph gen_geometric_disk(int n, double radius, std::uint64_t seed) {
    if (n < 0 || radius < 0.0)
        throw std::invalid_argument("geometric-disk: bad parameters");
    Rng rng(seed);
    auto points = sample_points(n, rng);
    return Graph(n, disk_edges(points, radius));
}

GeneratedInstance gen_planted(int n, int s, int r, std::uint64_t seed,
                              const std::string& base, double radius) {
    if (s < 0 || s > n) throw std::invalid_argument("planted: bad planted size");
    if (r < 2) throw std::invalid_argument("planted: r must be at least 2");
    const int base_n = n - s;
    Rng rng(seed);

    std::vector<std::pair<Vertex, Vertex>> edges;
    if (base == "bipartite") {
        if (r == 2) {
            // K_2-free means edgeless
        } else {
            // random bipartite base: triangle-free, hence K_r-free for r >= 3
            for (Vertex u = 0; u < base_n; ++u)
                for (Vertex v = u + 1; v < base_n; ++v)
                    if ((u % 2) != (v % 2) && rng.uniform() < 0.35)
                        edges.emplace_back(u, v);
        }
    } else if (base == "geometric") {
        auto points = sample_points(base_n, rng);
        edges = disk_edges(points, radius);
        // remove the lexicographically first edge of each remaining r-clique
        for (;;) {
            Graph current(base_n, edges);
            auto cliques = enumerate_cliques(current, r);
            if (cliques.cliques.empty()) break;
            const VertexSet& hit = cliques.cliques.front();
            std::pair<Vertex, Vertex> drop{hit[0], hit[1]};
            edges.erase(std::remove_if(edges.begin(), edges.end(),
                                       [&](const std::pair<Vertex, Vertex>& e) {
                                           return (e.first == drop.first && e.second == drop.second) ||
                                                  (e.first == drop.second && e.second == drop.first);
                                       }),
                        edges.end());
        }
    } else {
        throw std::invalid_argument("planted: unknown base '" + base + "'");
    }

    // Planted vertices go on top with random attachments everywhere.
    std::vector<Vertex> planted;
    for (int j = 0; j < s; ++j) {
        Vertex v = base_n + j;
        planted.push_back(v);
        for (Vertex u = 0; u < v; ++u)
            if (rng.uniform() < 0.5) edges.emplace_back(u, v);
    }

    GeneratedInstance out{Graph(n, edges), VertexSet(planted)};
    return out;
}

GeneratedInstance generate(const GenSpec& spec) {
    if (spec.family == "gnp")
        return {gen_gnp(spec.get_int("n"), spec.get_double("p"), spec.seed()), {}};
    if (spec.family == "grid")
        return {gen_grid(spec.get_int("rows"), spec.get_int("cols")), {}};
    if (spec.family == "complete")
        return {gen_complete(spec.get_int("n")), {}};
    if (spec.family == "disjoint-cliques")
        return {gen_disjoint_cliques(spec.get_int("count"), spec.get_int("size")), {}};
    if (spec.family == "geometric-disk")
        return {gen_geometric_disk(spec.get_int("n"), spec.get_double("radius"),
                                   spec.seed()),
                {}};
    if (spec.family == "planted")
        return gen_planted(spec.get_int("n"), spec.get_int("s"), spec.get_int("r"),
                           spec.seed(), spec.get_str("base", "bipartite"),
                           spec.get_double("radius", 0.3));
    throw std::invalid_argument("generator spec: unknown family '" + spec.family + "'");
}

}  // namespace krc
