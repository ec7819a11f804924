#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace misx {

// Parsed "name:key=val,key=val" family spec. Values may be single integers,
// reals (density), or integer ranges "lo..hi"; ranges expand to one graph per
// combination in row-major key order.
struct FamilySpec {
    std::string name;
    // Preserves the written key order for deterministic range expansion.
    std::vector<std::pair<std::string, std::string>> params;
    // Sub-specs of a union:... spec, '|'-separated in the grammar.
    std::vector<FamilySpec> members;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

// Builders for the named families. All deterministic; cw_bipartite draws its
// optional random core edges from the given seed only.
Graph make_complete(int32_t n);
Graph make_complete_bipartite(int32_t a, int32_t b);
Graph make_star(int32_t m);            // K_{1,m}, m >= 0
Graph make_star_triangle(int32_t k);   // k >= 1 triangles on a shared vertex
Graph make_path(int32_t n);
Graph make_cycle(int32_t n);           // n >= 3
Graph make_triangles_plus_isolated(int32_t s, int32_t t);  // sK3 + tK1
Graph make_disjoint_union(const std::vector<Graph>& parts);

struct CwBipartiteSpec {
    int32_t a = 1;
    int32_t b = 1;
    int32_t leaves_per_a = 1;  // >= 1
    double density = 1.0;      // extra A-B edges beyond the connecting tree
    uint64_t seed = 0;
};
// Connected bipartite core on (A, B) with >= 1 pendant leaf per A-vertex and
// no pendant triangles.
Graph make_cw_bipartite(const CwBipartiteSpec& spec);

// Single graph from a spec with no ranges.
Graph generate_family(const FamilySpec& spec);
Graph generate_family(std::string_view spec_text);

// Expands ranges into the full list of (description, graph) pairs.
std::vector<std::pair<std::string, Graph>> expand_family(const FamilySpec& spec);
std::vector<std::pair<std::string, Graph>> expand_family(std::string_view spec_text);

// All 2^(n(n-1)/2) labeled simple graphs on n vertices in lexicographic
// edge-mask order, edge bit order (0,1),(0,2),(1,2),(0,3),... Refuses
// n > soft_limit to keep runs desk-sized.
uint64_t labeled_graph_count(int32_t n);
Graph labeled_graph(int32_t n, uint64_t mask);
void for_each_labeled_graph(int32_t n, int32_t soft_limit,
                            const std::function<void(uint64_t, const Graph&)>& fn);

}  // namespace misx
