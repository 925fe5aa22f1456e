#include <stdexcept>

#include <doctest.h>

#include "krc/cliques.hpp"
#include "krc/generators.hpp"
#include "krc/graph_io.hpp"
#include "krc/oracle.hpp"
#include "suite.hpp"

using namespace krc;
using namespace krc::testing;

TEST_CASE("gen spec parsing and printing") {
    GenSpec spec = GenSpec::parse("gnp:n=10,p=0.4,seed=7");
    CHECK(spec.family == "gnp");
    CHECK(spec.get_int("n") == 10);
    CHECK(spec.get_double("p") == doctest::Approx(0.4));
    CHECK(spec.seed() == 7);
    CHECK(spec.str() == "gnp:n=10,p=0.4,seed=7");

    CHECK_THROWS_AS(GenSpec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(GenSpec::parse("gnp:n"), std::invalid_argument);
    CHECK_THROWS_AS(GenSpec::parse("gnp:n=10").seed(), std::invalid_argument);
    CHECK_THROWS_AS(GenSpec::parse("gnp:n=10").get_int("missing"),
                    std::invalid_argument);
    CHECK(GenSpec::parse("grid:rows=2,cols=3").get_int("seed", 5) == 5);
}

TEST_CASE("grid arithmetic") {
    Graph g = gen_grid(5, 5);
    CHECK(g.vertex_count() == 25);
    CHECK(g.edge_count() == 40);
    CHECK_FALSE(has_clique(g, 3));

    Graph row = gen_grid(1, 4);
    CHECK(row.vertex_count() == 4);
    CHECK(row.edge_count() == 3);
}

TEST_CASE("disjoint clique blocks") {
    Graph g = gen_disjoint_cliques(3, 4);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 18);
    auto best = oracle_min_subset(AnnotatedInstance(g, Hypergraph{}, 12, 3));
    REQUIRE(best.has_value());
    CHECK(best->size() == 6);
}

TEST_CASE("complete graphs and gnp extremes") {
    CHECK(gen_complete(6).edge_count() == 15);
    CHECK(gen_gnp(10, 0.0, 1).edge_count() == 0);
    CHECK(gen_gnp(10, 1.0, 1).edge_count() == 45);
}

TEST_CASE("geometric disk density grows with the radius") {
    Graph sparse = gen_geometric_disk(40, 0.05, 11);
    Graph dense = gen_geometric_disk(40, 0.5, 11);
    CHECK(sparse.edge_count() < dense.edge_count());
    CHECK(dense.vertex_count() == 40);
}

TEST_CASE("planted instances carry a valid cover") {
    GeneratedInstance inst = gen_planted(40, 4, 3, 7, "bipartite", 0.0);
    REQUIRE(inst.planted_cover.has_value());
    CHECK(inst.planted_cover->size() == 4);
    CHECK(inst.graph.vertex_count() == 40);
    CHECK_FALSE(has_clique(delete_vertices(inst.graph, *inst.planted_cover), 3));

    GeneratedInstance geo = gen_planted(30, 3, 3, 13, "geometric", 0.3);
    REQUIRE(geo.planted_cover.has_value());
    CHECK(geo.planted_cover->size() == 3);
    CHECK_FALSE(has_clique(delete_vertices(geo.graph, *geo.planted_cover), 3));

    GeneratedInstance four = gen_planted(25, 3, 4, 19, "geometric", 0.35);
    CHECK_FALSE(has_clique(delete_vertices(four.graph, *four.planted_cover), 4));
}

TEST_CASE("generation is deterministic byte for byte") {
    GenSpec spec = GenSpec::parse("gnp:n=16,p=0.35,seed=99");
    std::string a = write_graph_text(generate(spec).graph);
    std::string b = write_graph_text(generate(spec).graph);
    CHECK(a == b);

    GenSpec other = GenSpec::parse("gnp:n=16,p=0.35,seed=100");
    CHECK(write_graph_text(generate(other).graph) != a);

    GenSpec planted = GenSpec::parse("planted:n=20,s=2,r=3,seed=5,base=geometric");
    GeneratedInstance first = generate(planted);
    GeneratedInstance second = generate(planted);
    CHECK(write_graph_text(first.graph) == write_graph_text(second.graph));
    CHECK(*first.planted_cover == *second.planted_cover);
}

TEST_CASE("the dispatcher covers every family") {
    CHECK(generate(GenSpec::parse("grid:rows=3,cols=4")).graph.vertex_count() == 12);
    CHECK(generate(GenSpec::parse("complete:n=5")).graph.edge_count() == 10);
    CHECK(generate(GenSpec::parse("disjoint-cliques:count=2,size=3")).graph.vertex_count() ==
          6);
    CHECK(generate(GenSpec::parse("gnp:n=8,p=0.5,seed=3")).graph.vertex_count() == 8);
    CHECK(generate(GenSpec::parse("geometric-disk:n=12,radius=0.3,seed=4"))
              .graph.vertex_count() == 12);
    CHECK(generate(GenSpec::parse("planted:n=15,s=2,r=3,seed=6,base=bipartite"))
              .graph.vertex_count() == 15);
    CHECK_THROWS_AS(generate(GenSpec::parse("mystery:n=3")), std::invalid_argument);
}
