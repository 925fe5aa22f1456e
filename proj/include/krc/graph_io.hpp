#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "krc/graph.hpp"

namespace krc {

// Text format: optional `c` comment lines, one `p <n> <m>` header, exactly m
// `e <u> <v>` lines (0-based endpoints), then optional `d <v1> <v2> ...`
// annotation lines. The writer emits a canonical form (edges with u < v,
// sorted; annotations sorted) so parse-then-write is a fixed point.
struct ParsedGraph {
    Graph graph;
    std::vector<VertexSet> annotations;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ParsedGraph parse_graph_text(const std::string& text);
std::string write_graph_text(const Graph& g,
                             const std::vector<VertexSet>& annotations = {});

ParsedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<VertexSet>& annotations = {});

// Solution files: `c` comment lines plus `s <v1> <v2> ...` lines; the union
// of all `s` lines is the vertex set.
VertexSet parse_solution_text(const std::string& text);
std::string write_solution_text(const VertexSet& s);
VertexSet read_solution_file(const std::string& path);
void write_solution_file(const std::string& path, const VertexSet& s);

}  // namespace krc
