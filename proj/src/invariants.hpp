#pragma once

#include <cstdint>
#include <vector>

#include "count.hpp"
#include "graph.hpp"
#include "mis.hpp"

namespace misx {

// Normalized edge set: each pair u < v, list sorted ascending.
struct EdgeSet {
    std::vector<Edge> edges;

    void normalize();
    bool operator==(const EdgeSet&) const = default;
};

struct MatchingResult {
    int32_t size = 0;
    EdgeSet witness;
};

// Exact maximum matching on general graphs (Edmonds blossom contraction).
MatchingResult matching_number(const Graph& g);

// Exact maximum induced matching: branch and bound over edges ordered by
// degree sum, pruned when the remaining edges cannot beat the incumbent.
MatchingResult induced_matching_number(const Graph& g);

struct CoverResult {
    int32_t size = 0;
    Bitset cover;
};

// Minimum vertex cover as the complement of a maximum independent set.
CoverResult covering_number(const Graph& g);

struct KEVerdict {
    int32_t beta = 0;
    int32_t nu = 0;
    bool equal = false;
};

KEVerdict is_koenig_egervary(const Graph& g);

struct InvariantBundle {
    int32_t n = 0;
    Count m = 0;
    int32_t alpha = 0;
    int32_t beta = 0;
    int32_t nu = 0;
    int32_t nu0 = 0;
    Bitset cover_certificate;
    EdgeSet matching_certificate;
    EdgeSet induced_matching_certificate;
};

// All invariants at once, cross-checked against the bundle's internal
// consistency rules (nu0 <= nu <= beta, alpha + beta = n, certificate sizes).
InvariantBundle full_bundle(const Graph& g, const MisOptions& opts = {});

// Certificate checkers, used both internally and by the test suites.
bool is_matching(const Graph& g, const EdgeSet& edges);
bool is_induced_matching(const Graph& g, const EdgeSet& edges);
bool is_vertex_cover(const Graph& g, const Bitset& cover);

}  // namespace misx
