#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace misx {

using Edge = std::pair<int32_t, int32_t>;

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bitset
// row per vertex. Immutable after construction; the null graph (n = 0) is
// valid everywhere.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(int32_t n);

    // Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
    static Graph from_edge_list(int32_t n, std::span<const Edge> edges);
    static Graph from_edge_list(int32_t n, std::initializer_list<Edge> edges);

    int32_t vertex_count() const { return n_; }
    int64_t edge_count() const;

    bool has_edge(int32_t u, int32_t v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int32_t v) const { return adj_[v]; }
    Bitset closed_neighbors(int32_t v) const {
        Bitset b = adj_[v];
        b.set(v);
        return b;
    }
    int32_t degree(int32_t v) const { return adj_[v].count(); }

    Bitset all_vertices() const { return Bitset::full(n_); }

    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int32_t n_ = 0;
    std::vector<Bitset> adj_;
};

// Result of any vertex-dropping operation. Maps are bijections between the
// kept vertices and 0..k-1; old_to_new[v] == -1 for dropped vertices.
struct InducedSubgraph {
    Graph graph;
    std::vector<int32_t> old_to_new;
    std::vector<int32_t> new_to_old;
};

// G[S]: keep exactly the vertices in `keep`.
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep);

// G_S = G \ N[S]: drop S and all its neighbors.
InducedSubgraph localization(const Graph& g, const Bitset& s);

// G \ U.
InducedSubgraph remove_vertices(const Graph& g, const Bitset& drop);

// Maximal connected pieces, ordered by smallest original vertex. The null
// graph has no components.
std::vector<InducedSubgraph> connected_components(const Graph& g);

// Vertex sets of the components, same order, without building subgraphs.
std::vector<Bitset> component_masks(const Graph& g);

struct Bipartition {
    Bitset a;
    Bitset b;
};

struct BipartiteResult {
    std::optional<Bipartition> parts;
    // When not bipartite: an odd cycle v0, v1, ..., v0-adjacent-to-last.
    std::vector<int32_t> odd_cycle;
    bool is_bipartite() const { return parts.has_value(); }
};

// Two-coloring by traversal; isolated vertices land in side `a`.
BipartiteResult is_bipartite(const Graph& g);

}  // namespace misx
