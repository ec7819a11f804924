#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "errors.hpp"
#include "families.hpp"
#include "fixtures.hpp"
#include "mis.hpp"
#include "oracles.hpp"

using namespace misx;

namespace {

std::set<std::vector<int32_t>> as_set(const std::vector<Bitset>& sets) {
    std::set<std::vector<int32_t>> out;
    for (const Bitset& s : sets) out.insert(s.to_vector());
    return out;
}

std::set<std::vector<int32_t>> as_set(const std::vector<std::vector<int32_t>>& sets) {
    return {sets.begin(), sets.end()};
}

bool is_maximal_independent(const Graph& g, const Bitset& s) {
    for (int32_t u = s.first(); u >= 0; u = s.next(u))
        if ((g.neighbors(u) & s).any()) return false;
    for (int32_t v = 0; v < g.vertex_count(); ++v)
        if (!s.test(v) && !(g.neighbors(v) & s).any()) return false;
    return true;
}

}  // namespace

TEST_CASE("enumerate_mis on small graphs") {
    auto k3 = enumerate_mis(make_complete(3));
    REQUIRE(k3.size() == 3);
    std::vector<std::vector<int32_t>> singletons{{0}, {1}, {2}};
    CHECK(as_set(k3) == as_set(singletons));
    CHECK(as_set(k3) == as_set(oracle::enumerate_mis(make_complete(3))));

    auto lonely = enumerate_mis(Graph(4));
    REQUIRE(lonely.size() == 1);
    CHECK(lonely[0].count() == 4);

    // null graph: the empty set is the single maximal independent set
    auto null = enumerate_mis(Graph(0));
    REQUIRE(null.size() == 1);
    CHECK(null[0].none());
}

TEST_CASE("fixture has exactly the four listed maximal independent sets") {
    Graph g = fixtures::example8();
    auto sets = enumerate_mis(g);
    CHECK(as_set(sets) == as_set(fixtures::example8_mis()));
    CHECK(as_set(sets) == as_set(oracle::enumerate_mis(g)));
    CHECK(count_mis(g).count == 4);
}

TEST_CASE("every enumerated set is maximal independent, no duplicates") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = oracle::random_graph(2 + int32_t(trial % 8), 0.4, rng);
        auto sets = enumerate_mis(g);
        std::set<std::vector<int32_t>> seen;
        for (const Bitset& s : sets) {
            CHECK(is_maximal_independent(g, s));
            CHECK(seen.insert(s.to_vector()).second);
        }
    }
}

TEST_CASE("count_mis on named families") {
    CHECK(count_mis(make_triangles_plus_isolated(2, 1)).count == 9);
    CHECK(count_mis(make_triangles_plus_isolated(0, 3)).count == 1);
    for (int32_t m = 1; m <= 5; ++m) CHECK(count_mis(make_star(m)).count == 2);
    CHECK(count_mis(make_path(4)).count == 3);
    CHECK(count_mis(make_cycle(5)).count == 5);
    CHECK(count_mis(make_star_triangle(2)).count == 5);
    CHECK(count_mis(Graph(0)).count == 1);

    CHECK(oracle::count_mis(make_path(4)) == 3);
    CHECK(oracle::count_mis(make_cycle(5)) == 5);
    CHECK(oracle::count_mis(make_star_triangle(2)) == 5);
}

TEST_CASE("count_mis equals enumeration and the oracle exhaustively to n=5") {
    for (int32_t n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, 6, [&](uint64_t, const Graph& g) {
            Count counted = count_mis(g).count;
            CHECK(counted == Count(enumerate_mis(g).size()));
            CHECK(counted == Count(oracle::count_mis(g)));
        });
    }
}

TEST_CASE("count_mis equals the oracle on random graphs") {
    std::mt19937_64 rng(23);
    for (double p : {0.2, 0.5, 0.8})
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = oracle::random_graph(1 + int32_t(trial % 9), p, rng);
            CHECK(count_mis(g).count == Count(oracle::count_mis(g)));
        }
}

TEST_CASE("reduction trace records fired rules") {
    auto star_report = count_mis(make_star(3));
    CHECK(std::any_of(star_report.trace.begin(), star_report.trace.end(),
                      [](const std::string& s) { return s.find("leaf") == 0; }));

    auto tri_report = count_mis(make_triangles_plus_isolated(2, 1));
    CHECK(std::any_of(tri_report.trace.begin(), tri_report.trace.end(),
                      [](const std::string& s) { return s.find("components") == 0; }));
    CHECK(std::any_of(tri_report.trace.begin(), tri_report.trace.end(),
                      [](const std::string& s) { return s.find("isolated") == 0; }));

    auto k3_report = count_mis(make_complete(3));
    CHECK(std::any_of(k3_report.trace.begin(), k3_report.trace.end(),
                      [](const std::string& s) { return s.find("enumerate") == 0; }));

    auto with_sets = count_mis_with_sets(make_complete(3));
    REQUIRE(with_sets.sets.has_value());
    CHECK(Count(with_sets.sets->size()) == with_sets.count);
}

TEST_CASE("monotonicity under induced subgraphs") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(7, 0.4, rng);
        Count whole = count_mis(g).count;
        Bitset keep(7);
        for (int32_t v = 0; v < 7; ++v)
            if (rng() & 1) keep.set(v);
        Count part = count_mis(induced_subgraph(g, keep).graph).count;
        CHECK(part <= whole);
    }
}

TEST_CASE("component product rule") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(5, 0.5, rng);
        Graph h = oracle::random_graph(4, 0.5, rng);
        Graph u = make_disjoint_union({g, h});
        CHECK(count_mis(u).count == count_mis(g).count * count_mis(h).count);
    }
}

TEST_CASE("leaf equality over graphs with leaves") {
    std::mt19937_64 rng(37);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
        Graph g = oracle::random_graph(7, 0.25, rng);
        for (int32_t x = 0; x < g.vertex_count(); ++x) {
            if (g.degree(x) != 1) continue;
            int32_t y = g.neighbors(x).first();
            Bitset sx(7), sy(7);
            sx.set(x);
            sy.set(y);
            Count whole = count_mis(g).count;
            Count split = count_mis(localization(g, sx).graph).count +
                          count_mis(localization(g, sy).graph).count;
            CHECK(whole == split);
            ++checked;
        }
    }
    CHECK(checked >= 60);
}

TEST_CASE("alpha and the lexicographically smallest maximum independent set") {
    CHECK(alpha(make_complete(5)) == 1);
    CHECK(alpha(Graph(6)) == 6);
    CHECK(alpha(make_cycle(5)) == 2);
    CHECK(alpha(Graph(0)) == 0);

    CHECK(max_independent_set(make_path(3)).to_vector() == std::vector<int32_t>{0, 2});
    Graph fork = Graph::from_edge_list(3, {{0, 1}, {0, 2}});
    CHECK(max_independent_set(fork).to_vector() == std::vector<int32_t>{1, 2});

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = oracle::random_graph(1 + int32_t(trial % 9), 0.4, rng);
        CHECK(alpha(g) == oracle::alpha(g));
        CHECK(max_independent_set(g).to_vector() == oracle::lex_min_max_independent_set(g));
    }
}

TEST_CASE("branch inequality") {
    auto k3 = check_branch_inequality(make_complete(3), 0);
    CHECK(k3.whole == 3);
    CHECK(k3.localized == 1);
    CHECK(k3.removed == 2);
    CHECK(k3.holds);

    auto p4 = check_branch_inequality(make_path(4), 0);
    CHECK(p4.whole == 3);
    CHECK(p4.localized == 2);  // m on {2,3} = m(K2)
    CHECK(p4.removed == 2);    // m(P3)
    CHECK(p4.holds);

    // isolated vertex: m(G) = m(G_x), inequality trivial
    Graph iso = make_disjoint_union({Graph(1), make_complete(3)});
    auto v = check_branch_inequality(iso, 0);
    CHECK(v.whole == v.localized);
    CHECK(v.holds);

    CHECK_THROWS_AS(check_branch_inequality(make_complete(3), 5), InputError);
}

TEST_CASE("enumeration budget") {
    MisOptions tight;
    tight.budget = 3;
    CHECK_THROWS_AS(enumerate_mis(make_cycle(5), tight), BudgetError);
    CHECK_NOTHROW(enumerate_mis(make_complete(3), tight));

    MisOptions tighter;
    tighter.budget = 2;
    CHECK_THROWS_AS(count_mis(make_complete(3), tighter), BudgetError);

    // streaming delivers exactly budget sets before failing
    int delivered = 0;
    CHECK_THROWS_AS(for_each_mis(
                        make_cycle(5), [&](const Bitset&) { ++delivered; }, tight),
                    BudgetError);
    CHECK(delivered == 3);
}
