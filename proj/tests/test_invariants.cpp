#include <doctest.h>

#include <random>

#include "families.hpp"
#include "fixtures.hpp"
#include "invariants.hpp"
#include "oracles.hpp"

using namespace misx;

TEST_CASE("matching number on named graphs") {
    CHECK(matching_number(make_complete(3)).size == 1);
    CHECK(matching_number(make_cycle(4)).size == 2);
    CHECK(matching_number(fixtures::example8()).size == 2);
    CHECK(matching_number(make_path(4)).size == 2);
    CHECK(matching_number(Graph(0)).size == 0);
    CHECK(matching_number(Graph(5)).size == 0);

    // odd cycles exercise blossom contraction
    CHECK(matching_number(make_cycle(5)).size == 2);
    CHECK(matching_number(make_cycle(7)).size == 3);
    CHECK(matching_number(make_cycle(9)).size == 4);
    CHECK(matching_number(make_complete(7)).size == 3);
}

TEST_CASE("matching equals the oracle, certificates validate") {
    for (int32_t n = 0; n <= 5; ++n)
        for_each_labeled_graph(n, 6, [&](uint64_t, const Graph& g) {
            auto result = matching_number(g);
            CHECK(result.size == oracle::matching_number(g));
            CHECK(is_matching(g, result.witness));
            CHECK(int32_t(result.witness.edges.size()) == result.size);
        });

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(6 + int32_t(trial % 5), 0.2 + 0.2 * (trial % 4), rng);
        auto result = matching_number(g);
        CHECK(result.size == oracle::matching_number(g));
        CHECK(is_matching(g, result.witness));
    }
}

TEST_CASE("induced matching number") {
    CHECK(induced_matching_number(make_path(4)).size == 1);
    CHECK(induced_matching_number(make_disjoint_union({make_complete(2), make_complete(2)})).size ==
          2);
    CHECK(induced_matching_number(fixtures::example8()).size == 2);
    CHECK(induced_matching_number(make_cycle(4)).size == 1);
    CHECK(induced_matching_number(Graph(0)).size == 0);

    for (int32_t n = 0; n <= 5; ++n)
        for_each_labeled_graph(n, 6, [&](uint64_t, const Graph& g) {
            auto result = induced_matching_number(g);
            CHECK(result.size == oracle::induced_matching_number(g));
            CHECK(is_induced_matching(g, result.witness));
        });

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(7, 0.35, rng);
        if (g.edge_count() > 25) continue;
        auto result = induced_matching_number(g);
        CHECK(result.size == oracle::induced_matching_number(g));
        CHECK(is_induced_matching(g, result.witness));
    }
}

TEST_CASE("covering number via the Gallai complement") {
    CHECK(covering_number(make_complete(3)).size == 2);
    CHECK(covering_number(make_star(6)).size == 1);
    CHECK(covering_number(make_star(6)).cover.to_vector() == std::vector<int32_t>{0});
    CHECK(covering_number(make_cycle(5)).size == 3);
    CHECK(covering_number(Graph(0)).size == 0);

    for (int32_t n = 0; n <= 5; ++n)
        for_each_labeled_graph(n, 6, [&](uint64_t, const Graph& g) {
            auto result = covering_number(g);
            CHECK(result.size == oracle::covering_number(g));
            CHECK(is_vertex_cover(g, result.cover));
            CHECK(result.size + oracle::alpha(g) == n);  // Gallai
        });
}

TEST_CASE("Koenig-Egervary verdicts") {
    auto k3 = is_koenig_egervary(make_complete(3));
    CHECK(k3.beta == 2);
    CHECK(k3.nu == 1);
    CHECK_FALSE(k3.equal);

    auto c4 = is_koenig_egervary(make_cycle(4));
    CHECK(c4.beta == 2);
    CHECK(c4.nu == 2);
    CHECK(c4.equal);

    // Koenig: every bipartite graph is KE
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(7, 0.3, rng);
        if (!is_bipartite(g).is_bipartite()) continue;
        CHECK(is_koenig_egervary(g).equal);
    }
}

TEST_CASE("full bundle consistency") {
    auto k1 = full_bundle(Graph(1));
    CHECK(k1.n == 1);
    CHECK(k1.m == 1);
    CHECK(k1.alpha == 1);
    CHECK(k1.beta == 0);
    CHECK(k1.nu == 0);
    CHECK(k1.nu0 == 0);

    auto k3 = full_bundle(make_complete(3));
    CHECK(k3.m == 3);
    CHECK(k3.alpha == 1);
    CHECK(k3.beta == 2);
    CHECK(k3.nu == 1);
    CHECK(k3.nu0 == 1);

    auto fix = full_bundle(fixtures::example8());
    CHECK(fix.n == 8);
    CHECK(fix.m == 4);
    CHECK(fix.alpha == 6);
    CHECK(fix.beta == 2);
    CHECK(fix.nu == 2);
    CHECK(fix.nu0 == 2);
    CHECK(fix.cover_certificate.to_vector() == std::vector<int32_t>{2, 3});

    auto null = full_bundle(Graph(0));
    CHECK(null.m == 1);
    CHECK(null.beta == 0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(7, 0.4, rng);
        auto bundle = full_bundle(g);
        CHECK(bundle.nu0 <= bundle.nu);
        CHECK(bundle.nu <= bundle.beta);
        CHECK(bundle.alpha + bundle.beta == bundle.n);
        CHECK(int32_t(bundle.matching_certificate.edges.size()) == bundle.nu);
        CHECK(int32_t(bundle.induced_matching_certificate.edges.size()) == bundle.nu0);
        CHECK(bundle.cover_certificate.count() == bundle.beta);
    }
}

TEST_CASE("cover lemmas on sampled instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = oracle::random_graph(6, 0.4, rng);
        auto [beta, cover] = covering_number(g);

        // induced subgraphs never need a bigger cover
        Bitset keep(6);
        for (int32_t v = 0; v < 6; ++v)
            if (rng() & 1) keep.set(v);
        CHECK(covering_number(induced_subgraph(g, keep).graph).size <= beta);

        // removing U inside a minimum cover drops beta by at least |U|
        std::vector<int32_t> cover_list = cover.to_vector();
        for (uint32_t sub = 0; sub < (1u << cover_list.size()); ++sub) {
            Bitset u_set(6);
            for (size_t i = 0; i < cover_list.size(); ++i)
                if ((sub >> i) & 1) u_set.set(cover_list[i]);
            int32_t removed_beta = covering_number(remove_vertices(g, u_set).graph).size;
            CHECK(removed_beta <= beta - u_set.count());
        }
    }
}
