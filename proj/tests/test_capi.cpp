// Exercises the shared-library surface only: misx/misx.h, no core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "misx/misx.h"

namespace {

struct Collected {
    std::vector<std::vector<int32_t>> sets;
};

void collect(const int32_t* vertices, int32_t count, void* user) {
    auto* out = static_cast<Collected*>(user);
    out->sets.emplace_back(vertices, vertices + count);
}

struct Str {
    char* value = nullptr;
    ~Str() { misx_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

struct GraphPtr {
    misx_graph* g = nullptr;
    ~GraphPtr() { misx_graph_free(g); }
};

constexpr const char* kFixtureEdgeList =
    "8\n0 2\n1 2\n0 3\n1 3\n3 4\n3 5\n2 6\n2 7\n";

}  // namespace

TEST_CASE("version and error strings") {
    CHECK(std::strlen(misx_version()) > 0);
    misx_graph* g = nullptr;
    CHECK(misx_graph_from_graph6("!!!", &g) == MISX_ERROR_INPUT);
    CHECK(std::strlen(misx_last_error()) > 0);
    CHECK(misx_graph_from_graph6(nullptr, &g) == MISX_ERROR_INPUT);
}

TEST_CASE("graph construction and round trip") {
    GraphPtr k3;
    REQUIRE(misx_graph_from_graph6("Bw", &k3.g) == MISX_OK);
    CHECK(misx_graph_vertex_count(k3.g) == 3);
    CHECK(misx_graph_edge_count(k3.g) == 3);

    Str record;
    REQUIRE(misx_graph_to_graph6(k3.g, &record.value) == MISX_OK);
    CHECK(record.str() == "Bw");

    GraphPtr from_edges;
    REQUIRE(misx_graph_from_edge_list("0 1\n1 2\n", &from_edges.g) == MISX_OK);
    CHECK(misx_graph_vertex_count(from_edges.g) == 3);
    CHECK(misx_graph_edge_count(from_edges.g) == 2);

    GraphPtr autodetect;
    REQUIRE(misx_graph_from_text("Bw", "auto", &autodetect.g) == MISX_OK);
    CHECK(misx_graph_edge_count(autodetect.g) == 3);
    GraphPtr bad;
    CHECK(misx_graph_from_text("Bw", "sideways", &bad.g) == MISX_ERROR_INPUT);

    GraphPtr family;
    REQUIRE(misx_graph_from_family("star:m=4", &family.g) == MISX_OK);
    CHECK(misx_graph_vertex_count(family.g) == 5);
    GraphPtr nope;
    CHECK(misx_graph_from_family("wat:x=1", &nope.g) == MISX_ERROR_INPUT);
}

TEST_CASE("counting and enumeration") {
    GraphPtr k3;
    REQUIRE(misx_graph_from_graph6("Bw", &k3.g) == MISX_OK);

    Str count;
    REQUIRE(misx_count_mis(k3.g, 0, &count.value) == MISX_OK);
    CHECK(count.str() == "3");

    Collected sets;
    REQUIRE(misx_enumerate_mis(k3.g, 0, collect, &sets) == MISX_OK);
    REQUIRE(sets.sets.size() == 3);
    CHECK(sets.sets[0] == std::vector<int32_t>{0});

    Collected limited;
    CHECK(misx_enumerate_mis(k3.g, 2, collect, &limited) == MISX_ERROR_BUDGET);
    CHECK(limited.sets.size() == 2);

    // tight budget on counting
    GraphPtr k5;
    REQUIRE(misx_graph_from_family("complete:n=5", &k5.g) == MISX_OK);
    Str blocked;
    CHECK(misx_count_mis(k5.g, 2, &blocked.value) == MISX_ERROR_BUDGET);
}

TEST_CASE("invariants and recognizers") {
    GraphPtr k3;
    REQUIRE(misx_graph_from_graph6("Bw", &k3.g) == MISX_OK);
    int32_t a = -1, b = -1, nu = -1, nu0 = -1;
    REQUIRE(misx_invariants(k3.g, &a, &b, &nu, &nu0) == MISX_OK);
    CHECK(a == 1);
    CHECK(b == 2);
    CHECK(nu == 1);
    CHECK(nu0 == 1);

    GraphPtr fixture;
    REQUIRE(misx_graph_from_edge_list(kFixtureEdgeList, &fixture.g) == MISX_OK);
    int32_t cw = -1;
    REQUIRE(misx_is_cw_bipartite(fixture.g, &cw) == MISX_OK);
    CHECK(cw == 1);

    int32_t not_cw = -1;
    REQUIRE(misx_is_cw_bipartite(k3.g, &not_cw) == MISX_OK);
    CHECK(not_cw == 0);
}

TEST_CASE("analyze JSON") {
    GraphPtr fixture;
    REQUIRE(misx_graph_from_edge_list(kFixtureEdgeList, &fixture.g) == MISX_OK);
    Str payload;
    REQUIRE(misx_analyze_json(fixture.g, 0, &payload.value) == MISX_OK);

    auto report = nlohmann::json::parse(payload.str());
    CHECK(report["schema"] == 1);
    CHECK(report["invariants"]["m"] == "4");
    CHECK(report["invariants"]["nu"] == 2);
    CHECK(report["cameron_walker"]["is_cw_bipartite"] == true);
    bool cover_extremal = false;
    for (const auto& v : report["verdicts"])
        if (v["tag"] == "COVER_BOUND") cover_extremal = v["extremal"].get<bool>();
    CHECK(cover_extremal);
}

TEST_CASE("generation") {
    Str star;
    REQUIRE(misx_generate_graph6("star:m=4", &star.value) == MISX_OK);
    CHECK(star.str().find('\n') == star.str().size() - 1);  // single line

    Str k3;
    REQUIRE(misx_generate_graph6("triangles:s=1,t=0", &k3.value) == MISX_OK);
    CHECK(k3.str() == "Bw\n");

    Str ranged;
    REQUIRE(misx_generate_graph6("triangles:s=1..3,t=0", &ranged.value) == MISX_OK);
    CHECK(std::count(ranged.str().begin(), ranged.str().end(), '\n') == 3);

    Str seeded_a, seeded_b;
    REQUIRE(misx_generate_graph6("cw-bipartite:a=2,b=2,leaves=2,seed=1", &seeded_a.value) ==
            MISX_OK);
    REQUIRE(misx_generate_graph6("cw-bipartite:a=2,b=2,leaves=2,seed=1", &seeded_b.value) ==
            MISX_OK);
    CHECK(seeded_a.str() == seeded_b.str());

    Str bad;
    CHECK(misx_generate_graph6("cycle:n=1", &bad.value) == MISX_ERROR_INPUT);
}

TEST_CASE("sweeps through the C API") {
    Str labeled;
    REQUIRE(misx_sweep_all_labeled(3, nullptr, &labeled.value) == MISX_OK);
    auto report = nlohmann::json::parse(labeled.str());
    CHECK(report["schema"] == 1);
    CHECK(report["graphs_processed"] == 8);
    CHECK(report["counterexamples"].empty());

    Str with_bad_line;
    REQUIRE(misx_sweep_graph6_text("Bw\nnot a record\nC~\n", "inline", nullptr,
                                   &with_bad_line.value) == MISX_OK);
    auto skipped = nlohmann::json::parse(with_bad_line.str());
    CHECK(skipped["graphs_processed"] == 2);
    REQUIRE(skipped["skipped"].size() == 1);
    CHECK(skipped["skipped"][0]["line"] == 2);

    misx_sweep_options options{};
    options.theorems = "MATCHING_BOUND";
    options.jobs = 2;
    Str family;
    REQUIRE(misx_sweep_family("triangles:s=2,t=1", &options, &family.value) == MISX_OK);
    auto fam = nlohmann::json::parse(family.str());
    CHECK(fam["tallies"]["MATCHING_BOUND"]["extremal"] == 1);

    Str refused;
    CHECK(misx_sweep_all_labeled(9, nullptr, &refused.value) == MISX_ERROR_INPUT);

    misx_sweep_options bad_tags{};
    bad_tags.theorems = "NOT_A_THEOREM";
    Str nope;
    CHECK(misx_sweep_all_labeled(3, &bad_tags, &nope.value) == MISX_ERROR_INPUT);
}
