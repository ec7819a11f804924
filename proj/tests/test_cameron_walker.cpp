#include <doctest.h>

#include <random>

#include "cameron_walker.hpp"
#include "families.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace misx;

TEST_CASE("definitional Cameron-Walker verdicts") {
    for (int32_t m = 0; m <= 4; ++m) CHECK(is_cw_definitional(make_star(m)).is_cw);

    auto p4 = is_cw_definitional(make_path(4));
    CHECK(p4.nu == 2);
    CHECK(p4.nu0 == 1);
    CHECK_FALSE(p4.is_cw);

    CHECK(is_cw_definitional(fixtures::example8()).is_cw);
    CHECK(is_cw_definitional(Graph(0)).is_cw);
    CHECK(is_cw_definitional(make_star_triangle(3)).is_cw);
}

TEST_CASE("structural classification of named graphs") {
    auto st3 = classify_structure(make_star_triangle(3));
    REQUIRE(st3.components.size() == 1);
    const auto* st = std::get_if<StarTriangleShape>(&st3.components[0].shape);
    REQUIRE(st != nullptr);
    CHECK(st->center == 0);
    CHECK(st->triangles.size() == 3);

    auto c4 = classify_structure(make_cycle(4));
    REQUIRE(c4.components.size() == 1);
    const auto* not_cw = std::get_if<NotCWShape>(&c4.components[0].shape);
    REQUIRE(not_cw != nullptr);
    CHECK(not_cw->matching.edges.size() == 2);
    CHECK(not_cw->induced_matching.edges.size() == 1);
    CHECK_FALSE(c4.all_cw);

    // single vertices are stars K_{1,0}
    auto k1 = classify_structure(Graph(1));
    REQUIRE(k1.components.size() == 1);
    CHECK(std::holds_alternative<StarShape>(k1.components[0].shape));

    // K2 is the star K_{1,1}, centered at the smaller label
    auto k2 = classify_structure(make_complete(2));
    const auto* k2_star = std::get_if<StarShape>(&k2.components[0].shape);
    REQUIRE(k2_star != nullptr);
    CHECK(k2_star->center == 0);

    // K3 resolves as a one-triangle star triangle
    auto k3 = classify_structure(make_complete(3));
    CHECK(std::holds_alternative<StarTriangleShape>(k3.components[0].shape));

    auto p3 = classify_structure(make_path(3));
    const auto* p3_star = std::get_if<StarShape>(&p3.components[0].shape);
    REQUIRE(p3_star != nullptr);
    CHECK(p3_star->center == 1);
}

TEST_CASE("fixture classifies as the expected leaf bipartite shape") {
    auto cert = classify_structure(fixtures::example8());
    REQUIRE(cert.components.size() == 1);
    const auto* lb = std::get_if<LeafBipartiteShape>(&cert.components[0].shape);
    REQUIRE(lb != nullptr);
    CHECK(lb->a == std::vector<int32_t>{2, 3});
    CHECK(lb->b == std::vector<int32_t>{0, 1});
    CHECK(lb->leaves.at(2) == std::vector<int32_t>{6, 7});
    CHECK(lb->leaves.at(3) == std::vector<int32_t>{4, 5});
    CHECK(lb->pendant_triangles.empty());
    CHECK(cert.all_cw);
    CHECK(validate_certificate(fixtures::example8(), cert));
}

TEST_CASE("pendant triangles are recognized") {
    // path a-b with a pendant triangle on b and a leaf on a
    Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    // vertices: 0 leaf, 1 = A, 2 = B with triangle {2,3,4}
    auto cert = classify_structure(g);
    REQUIRE(cert.components.size() == 1);
    const auto* lb = std::get_if<LeafBipartiteShape>(&cert.components[0].shape);
    REQUIRE(lb != nullptr);
    CHECK(lb->a == std::vector<int32_t>{1});
    CHECK(lb->b == std::vector<int32_t>{2});
    CHECK(lb->leaves.at(1) == std::vector<int32_t>{0});
    REQUIRE(lb->pendant_triangles.count(2) == 1);
    CHECK(lb->pendant_triangles.at(2) == std::vector<Edge>{{3, 4}});
    CHECK(cert.all_cw);

    // a vertex carrying both a pendant leaf and a pendant triangle would have
    // to sit on both sides at once: not Cameron-Walker
    Graph bad = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    auto bad_def = is_cw_definitional(bad);
    CHECK(bad_def.nu == 2);
    CHECK(bad_def.nu0 == 1);
    auto bad_cert = classify_structure(bad);
    CHECK_FALSE(bad_cert.all_cw);
    CHECK(validate_certificate(bad, bad_cert));
}

TEST_CASE("disconnected graphs classify per component") {
    Graph u = make_disjoint_union({make_complete(3), make_star(2), Graph(1)});
    auto cert = classify_structure(u);
    REQUIRE(cert.components.size() == 3);
    CHECK(std::holds_alternative<StarTriangleShape>(cert.components[0].shape));
    CHECK(std::holds_alternative<StarShape>(cert.components[1].shape));
    CHECK(std::holds_alternative<StarShape>(cert.components[2].shape));
    CHECK(cert.all_cw);
    CHECK(is_cw_definitional(u).is_cw);

    Graph mixed = make_disjoint_union({make_complete(3), make_cycle(4)});
    CHECK_FALSE(classify_structure(mixed).all_cw);
    CHECK_FALSE(is_cw_definitional(mixed).is_cw);
}

TEST_CASE("structural and definitional routes agree exhaustively to n=5") {
    for (int32_t n = 0; n <= 5; ++n)
        for_each_labeled_graph(n, 6, [&](uint64_t, const Graph& g) {
            auto cert = classify_structure(g);
            auto def = is_cw_definitional(g);
            CHECK(cert.all_cw == def.is_cw);
            CHECK(validate_certificate(g, cert));
        });
}

TEST_CASE("routes agree on random graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 400; ++trial) {
        double p = 0.15 + 0.2 * (trial % 4);
        Graph g = oracle::random_graph(6 + int32_t(trial % 3), p, rng);
        CHECK(classify_structure(g).all_cw == is_cw_definitional(g).is_cw);
    }
}

TEST_CASE("cw bipartite verdict") {
    CHECK(is_cw_bipartite(Graph(4)).value);  // totally disconnected
    CHECK(is_cw_bipartite(Graph(0)).value);
    CHECK_FALSE(is_cw_bipartite(make_star_triangle(2)).value);
    CHECK(is_cw_bipartite(fixtures::example8()).value);
    CHECK_FALSE(is_cw_bipartite(make_path(4)).value);
    CHECK(is_cw_bipartite(make_star(5)).value);

    // both routes agree everywhere we can afford to look
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(7, 0.3, rng);
        CHECK_NOTHROW(is_cw_bipartite(g));
    }
}
