#include <algorithm>

#include <doctest.h>

#include "krc/cliques.hpp"
#include "krc/generators.hpp"
#include "krc/hypergraph.hpp"
#include "krc/oracle.hpp"
#include "suite.hpp"

using namespace krc;
using namespace krc::testing;

TEST_CASE("clique counts on fixed graphs") {
    CHECK(enumerate_cliques(gen_complete(5), 3).size() == 10);
    CHECK(enumerate_cliques(petersen(), 3).size() == 0);
    CHECK(enumerate_cliques(gen_complete(6), 1).size() == 6);
    CHECK(enumerate_cliques(cycle(6), 2).size() == 6);
    CHECK(enumerate_cliques(gen_complete(4), 5).size() == 0);
}

TEST_CASE("enumeration is lexicographic and duplicate free") {
    CliqueList list = enumerate_cliques(gen_gnp(11, 0.5, 4), 3);
    CHECK(std::is_sorted(list.cliques.begin(), list.cliques.end()));
    CHECK(std::adjacent_find(list.cliques.begin(), list.cliques.end()) ==
          list.cliques.end());
}

TEST_CASE("enumeration matches the subset oracle") {
    Graph g12 = gen_gnp(12, 0.5, 99);
    CHECK(enumerate_cliques(g12, 4).cliques == oracle_all_cliques(g12, 4).cliques);
    for (const auto& inst : small_suite()) {
        for (int i = 2; i <= inst.r; ++i) {
            CAPTURE(inst.id);
            CHECK(enumerate_cliques(inst.g, i).cliques ==
                  oracle_all_cliques(inst.g, i).cliques);
        }
    }
}

TEST_CASE("for_each_clique early exit stops the walk") {
    int seen = 0;
    bool stopped = for_each_clique(gen_complete(6), 3, [&](const VertexSet&) {
        ++seen;
        return seen == 3;
    });
    CHECK(stopped);
    CHECK(seen == 3);
    stopped = for_each_clique(gen_complete(4), 3, [&](const VertexSet&) { return false; });
    CHECK_FALSE(stopped);
}

TEST_CASE("count_small_cliques sums orders below r") {
    CHECK(count_small_cliques(gen_complete(4), 4) == 14);
    CHECK(count_small_cliques(Graph(7, {}), 3) == 7);
    CHECK(count_small_cliques(Graph(7, {}), 5) == 7);

    Graph g = gen_gnp(15, 0.3, 5);
    std::int64_t expected = 0;
    for (int i = 1; i < 4; ++i) expected += oracle_all_cliques(g, i).size();
    CHECK(count_small_cliques(g, 4) == expected);
}

TEST_CASE("greedy cover packs disjoint cliques and covers everything") {
    Graph two = gen_disjoint_cliques(2, 3);
    CHECK(greedy_kr_cover(two, 3) == two.vertices());

    CHECK(greedy_kr_cover(petersen(), 3).empty());

    VertexSet m = greedy_kr_cover(gen_complete(4), 3);
    CHECK(m.size() == 3);
    CHECK_FALSE(has_clique(delete_vertices(gen_complete(4), m), 3));

    for (const auto& inst : small_suite()) {
        VertexSet cover = greedy_kr_cover(inst.g, inst.r);
        CAPTURE(inst.id);
        CHECK(cover.size() % inst.r == 0);
        CHECK(is_kr_cover(inst.g, cover, inst.r));
    }
}

TEST_CASE("greedy cover is within factor r of the optimum") {
    for (const auto& inst : small_suite()) {
        if (inst.g.vertex_count() > 16) continue;
        VertexSet cover = greedy_kr_cover(inst.g, inst.r);
        auto best = oracle_min_subset(
            AnnotatedInstance(inst.g, Hypergraph{}, inst.g.vertex_count(), inst.r));
        REQUIRE(best.has_value());
        CAPTURE(inst.id);
        CHECK(cover.size() <= inst.r * best->size());
    }
}

TEST_CASE("find_p_clique on fixed graphs") {
    Graph k5 = gen_complete(5);
    VertexSet m = greedy_kr_cover(k5, 3);
    auto found = find_p_clique(k5, m, 4, 3);
    REQUIRE(found.has_value());
    CHECK(found->size() == 4);
    CHECK(is_clique(k5, *found));

    CHECK_FALSE(find_p_clique(cycle(5), VertexSet{}, 3, 3).has_value());

    Graph g = gen_gnp(20, 0.6, 31);
    VertexSet cover = greedy_kr_cover(g, 3);
    bool brute = oracle_all_cliques(g, 5).size() > 0;
    auto mine = find_p_clique(g, cover, 5, 3);
    CHECK(mine.has_value() == brute);
    if (mine) {
        CHECK(mine->size() == 5);
        CHECK(is_clique(g, *mine));
    }
}

TEST_CASE("find_p_clique decision matches brute force on the suite") {
    for (const auto& inst : small_suite()) {
        VertexSet cover = greedy_kr_cover(inst.g, inst.r);
        for (int p = inst.r; p <= inst.r + 2; ++p) {
            auto mine = find_p_clique(inst.g, cover, p, inst.r);
            bool brute = oracle_all_cliques(inst.g, p).size() > 0;
            CAPTURE(inst.id);
            CAPTURE(p);
            CHECK(mine.has_value() == brute);
            if (mine) CHECK(is_clique(inst.g, *mine));
        }
    }
}

TEST_CASE("find_p_clique rejects a non-cover") {
    CHECK_THROWS_AS(find_p_clique(gen_complete(4), VertexSet{}, 4, 3), NotACoverError);
}

TEST_CASE("maximal matching is first fit over lexicographic order") {
    Hypergraph h({VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{4, 5}});
    Hypergraph picked = maximal_hyperedge_matching(h);
    REQUIRE(picked.size() == 2);
    CHECK(picked[0] == VertexSet{1, 2});
    CHECK(picked[1] == VertexSet{4, 5});

    CHECK(maximal_hyperedge_matching(Hypergraph{}).empty());

    Hypergraph disjoint({VertexSet{0, 1}, VertexSet{2}, VertexSet{3, 4}});
    CHECK(maximal_hyperedge_matching(disjoint) == disjoint);
}

TEST_CASE("maximal matching output is disjoint and maximal") {
    Hypergraph h({VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3},
                  VertexSet{3, 4}, VertexSet{0, 4}, VertexSet{5}});
    Hypergraph picked = maximal_hyperedge_matching(h);
    CHECK(picked.is_matching());
    VertexSet support = picked.vertex_support();
    for (const auto& e : h) CHECK(e.intersects(support));
}

TEST_CASE("hypergraph editing keeps members stable") {
    Hypergraph d({VertexSet{1, 2}});
    Hypergraph d2 = d.with_edge_subsumed(VertexSet{1, 2, 3});
    CHECK(d2 == d);
    Hypergraph d3 = d.with_edge_subsumed(VertexSet{1});
    CHECK(d3.size() == 2);
    CHECK(d3.contains(VertexSet{1, 2}));
    CHECK(d3.contains(VertexSet{1}));
    Hypergraph d4 = d.with_edge(VertexSet{1, 2});
    CHECK(d4 == d);

    CHECK(d.hit_by(VertexSet{2}));
    CHECK_FALSE(d.hit_by(VertexSet{3}));
    CHECK(Hypergraph{}.hit_by(VertexSet{}));
}
