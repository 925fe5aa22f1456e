#include <algorithm>
#include <stdexcept>

#include <doctest.h>

#include "krc/generators.hpp"
#include "krc/graph.hpp"
#include "krc/graph_io.hpp"
#include "krc/rational.hpp"
#include "suite.hpp"

using namespace krc;
using namespace krc::testing;

TEST_CASE("vertex set algebra") {
    VertexSet a{3, 1, 2, 3};
    CHECK(a.members() == std::vector<Vertex>{1, 2, 3});
    VertexSet b{2, 4};
    CHECK(a.set_union(b).members() == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(a.set_difference(b).members() == std::vector<Vertex>{1, 3});
    CHECK(a.set_intersection(b).members() == std::vector<Vertex>{2});
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(4));
    CHECK(a.contains_all(VertexSet{1, 3}));
    CHECK_FALSE(a.contains_all(b));
    CHECK(a.intersects(b));
    CHECK_FALSE(VertexSet{1}.intersects(VertexSet{2}));
    CHECK(a.with(0).members() == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(VertexSet{1, 2} < VertexSet{1, 3});
    CHECK(VertexSet{1, 2} < VertexSet{1, 2, 3});
}

TEST_CASE("rational arithmetic stays normalized") {
    Rational half(1, 2), third(1, 3);
    CHECK((half + third) == Rational(5, 6));
    CHECK((half - third) == Rational(1, 6));
    CHECK((half * third) == Rational(1, 6));
    CHECK((half / third) == Rational(3, 2));
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(-1, -2) == half);
    CHECK(Rational(1, -2) == -half);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(half < Rational(2, 3));
    CHECK(Rational(5, 6).str() == "5/6");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

TEST_CASE("graph construction rejects malformed edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
    Graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
}

TEST_CASE("induced subgraph of K_4 is K_3") {
    Graph k4 = gen_complete(4);
    Graph sub = induced_subgraph(k4, VertexSet{0, 2, 3});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 3);
    CHECK(sub.label(0) == 0);
    CHECK(sub.label(1) == 2);
    CHECK(sub.label(2) == 3);
}

TEST_CASE("induced subgraph on empty set is the empty graph") {
    Graph sub = induced_subgraph(petersen(), VertexSet{});
    CHECK(sub.vertex_count() == 0);
    CHECK(sub.edge_count() == 0);
}

TEST_CASE("induced five cycle of the petersen graph") {
    Graph sub = induced_subgraph(petersen(), VertexSet{0, 1, 2, 3, 4});
    CHECK(sub.vertex_count() == 5);
    CHECK(sub.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(sub.degree(v) == 2);
    CHECK(sub.adjacent(0, 1));
    CHECK(sub.adjacent(4, 0));
    CHECK_FALSE(sub.adjacent(0, 2));
}

TEST_CASE("delete_vertices equals the complementary induced subgraph") {
    Graph k5 = gen_complete(5);
    Graph g = delete_vertices(k5, VertexSet{1, 3});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);

    Graph tri = triangle();
    Graph edge = delete_vertices(tri, VertexSet{0});
    CHECK(edge.vertex_count() == 2);
    CHECK(edge.edge_count() == 1);
    CHECK(edge.label(0) == 1);
    CHECK(edge.label(1) == 2);

    Graph same = delete_vertices(tri, VertexSet{});
    CHECK(same.vertex_count() == 3);
    CHECK(same.edge_count() == 3);
    CHECK(same.label(2) == 2);
}

TEST_CASE("deletion removes every incident edge on suite graphs") {
    for (const auto& inst : small_suite()) {
        if (inst.g.vertex_count() < 2) continue;
        VertexSet x{0, inst.g.vertex_count() - 1};
        Graph h = delete_vertices(inst.g, x);
        for (auto [u, v] : h.edges()) {
            CHECK_FALSE(x.contains(h.label(u)));
            CHECK_FALSE(x.contains(h.label(v)));
            CHECK(inst.g.adjacent(h.label(u), h.label(v)));
        }
    }
}

TEST_CASE("is_clique matches the binomial edge count") {
    Graph k4 = gen_complete(4);
    CHECK(is_clique(k4, VertexSet{0, 1, 2}));
    CHECK(is_clique(k4, VertexSet{}));
    CHECK(is_clique(k4, VertexSet{2}));
    Graph c5 = cycle(5);
    CHECK_FALSE(is_clique(c5, VertexSet{0, 2}));
    CHECK(is_clique(c5, VertexSet{0, 1}));

    for (const auto& inst : small_suite()) {
        int n = inst.g.vertex_count();
        if (n < 3) continue;
        VertexSet s{0, 1, 2};
        Graph sub = induced_subgraph(inst.g, s);
        CHECK(is_clique(inst.g, s) == (sub.edge_count() == 3));
    }
}

TEST_CASE("common neighborhood examples") {
    Graph k5 = gen_complete(5);
    CHECK(common_neighborhood(k5, VertexSet{0, 1}) == VertexSet{2, 3, 4});
    Graph c5 = cycle(5);
    CHECK(common_neighborhood(c5, VertexSet{0}) == VertexSet{1, 4});
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(common_neighborhood(star, VertexSet{1, 2}) == VertexSet{0});
}

TEST_CASE("label maps compose through nested subgraphs") {
    Graph k5 = gen_complete(5);
    Graph a = induced_subgraph(k5, VertexSet{1, 2, 3, 4});
    Graph b = induced_subgraph(a, VertexSet{1, 2, 3});
    CHECK(b.label(0) == 2);
    CHECK(b.label(2) == 4);
    CHECK(b.to_root(VertexSet{0, 2}) == VertexSet{2, 4});
}

TEST_CASE("lift and project between a graph and an induced base") {
    VertexSet base{2, 5, 7, 9};
    CHECK(lift_from_induced(VertexSet{0, 3}, base) == VertexSet{2, 9});
    CHECK(project_to_induced(VertexSet{2, 9}, base) == VertexSet{0, 3});
    CHECK(project_to_induced(VertexSet{2, 4, 9}, base) == VertexSet{0, 3});
    CHECK(project_to_induced(VertexSet{}, base).empty());
}

TEST_CASE("degeneracy of standard graphs") {
    CHECK(degeneracy_ordering(gen_complete(5)).degeneracy == 4);
    CHECK(degeneracy_ordering(path(8)).degeneracy == 1);
    CHECK(degeneracy_ordering(petersen()).degeneracy == 3);
    CHECK(degeneracy_ordering(Graph(4, {})).degeneracy == 0);
    auto ordering = degeneracy_ordering(petersen()).ordering;
    CHECK(ordering.size() == 10);
    std::vector<Vertex> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < 10; ++v) CHECK(sorted[static_cast<std::size_t>(v)] == v);
}

TEST_CASE("graph text round trip is a fixed point") {
    Graph g = gen_gnp(9, 0.4, 77);
    std::string once = write_graph_text(g);
    ParsedGraph parsed = parse_graph_text(once);
    CHECK(parsed.graph.vertex_count() == g.vertex_count());
    CHECK(parsed.graph.edges() == g.edges());
    CHECK(write_graph_text(parsed.graph) == once);

    std::vector<VertexSet> ann{VertexSet{1, 2}, VertexSet{0}};
    std::string with_ann = write_graph_text(g, ann);
    ParsedGraph parsed2 = parse_graph_text(with_ann);
    REQUIRE(parsed2.annotations.size() == 2);
    CHECK(parsed2.annotations[0] == VertexSet{0});
    CHECK(parsed2.annotations[1] == VertexSet{1, 2});
    CHECK(write_graph_text(parsed2.graph, parsed2.annotations) == with_ann);
}

TEST_CASE("graph parser rejects malformed input") {
    CHECK_THROWS_AS(parse_graph_text("e 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p 3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p 3 1\ne 0 1\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p 3 1\ne 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p 3 2\ne 0 1\ne 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p 3 1\ne 0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p 3 0\nq 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p 3 0\nd 5\n"), ParseError);
    CHECK_NOTHROW(parse_graph_text("c hi\np 2 1\ne 0 1\nd 0 1\n"));
}

TEST_CASE("solution text round trip") {
    VertexSet s{4, 1, 9};
    std::string text = write_solution_text(s);
    CHECK(parse_solution_text(text) == s);
    CHECK(parse_solution_text("c note\ns 1 4\ns 9\n") == s);
    CHECK(parse_solution_text("").empty());
}
