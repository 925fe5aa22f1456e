#include "krc/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace krc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad " + what + ": '" + tok + "'");
    return value;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    bool have_header = false;
    int n = 0, m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<VertexSet> annotations;

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
            if (tokens.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": header needs 'p <n> <m>'");
            n = parse_int(tokens[1], "vertex count");
            m = parse_int(tokens[2], "edge count");
            if (n < 0 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": negative header counts");
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": edge before header");
            if (tokens.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": edge needs 'e <u> <v>'");
            Vertex u = parse_int(tokens[1], "endpoint");
            Vertex v = parse_int(tokens[2], "endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
            edges.emplace_back(u, v);
        } else if (kind == "d") {
            if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": annotation before header");
            if (tokens.size() < 2) throw ParseError("line " + std::to_string(line_no) + ": empty annotation");
            std::vector<Vertex> vs;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                Vertex v = parse_int(tokens[i], "annotation vertex");
                if (v < 0 || v >= n)
                    throw ParseError("line " + std::to_string(line_no) + ": annotation vertex out of range");
                vs.push_back(v);
            }
            VertexSet d(vs);
            if (d.size() != static_cast<int>(tokens.size()) - 1)
                throw ParseError("line " + std::to_string(line_no) + ": repeated vertex in annotation");
            annotations.push_back(std::move(d));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown line kind '" + kind + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p <n> <m>' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header says " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));

    ParsedGraph result;
    try {
        result.graph = Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    std::sort(annotations.begin(), annotations.end());
    annotations.erase(std::unique(annotations.begin(), annotations.end()), annotations.end());
    result.annotations = std::move(annotations);
    return result;
}

std::string write_graph_text(const Graph& g, const std::vector<VertexSet>& annotations) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    std::vector<VertexSet> sorted = annotations;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& d : sorted) {
        out << "d";
        for (Vertex v : d) out << " " << v;
        out << "\n";
    }
    return out.str();
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

}  // namespace

ParsedGraph read_graph_file(const std::string& path) {
    return parse_graph_text(slurp(path));
}

void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<VertexSet>& annotations) {
    spill(path, write_graph_text(g, annotations));
}

VertexSet parse_solution_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<Vertex> vs;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;
        if (tokens[0] != "s")
            throw ParseError("line " + std::to_string(line_no) + ": unknown line kind '" + tokens[0] + "'");
        for (std::size_t i = 1; i < tokens.size(); ++i)
            vs.push_back(parse_int(tokens[i], "solution vertex"));
    }
    return VertexSet(vs);
}

std::string write_solution_text(const VertexSet& s) {
    std::ostringstream out;
    out << "s";
    for (Vertex v : s) out << " " << v;
    out << "\n";
    return out.str();
}

VertexSet read_solution_file(const std::string& path) {
    return parse_solution_text(slurp(path));
}

void write_solution_file(const std::string& path, const VertexSet& s) {
    spill(path, write_solution_text(s));
}

}  // namespace krc
