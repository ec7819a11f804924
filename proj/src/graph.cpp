#include "graph.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace misx {

Graph::Graph(int32_t n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
}

Graph Graph::from_edge_list(int32_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw InputError("self-loop rejected at vertex " + std::to_string(u));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

Graph Graph::from_edge_list(int32_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int64_t Graph::edge_count() const {
    int64_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int32_t u = 0; u < n_; ++u)
        adj_[u].for_each([&](int32_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep) {
    const int32_t n = g.vertex_count();
    if (keep.capacity() != n) throw InputError("vertex set does not match graph size");

    InducedSubgraph out;
    out.old_to_new.assign(n, -1);
    keep.for_each([&](int32_t v) {
        out.old_to_new[v] = int32_t(out.new_to_old.size());
        out.new_to_old.push_back(v);
    });

    std::vector<Edge> edges;
    keep.for_each([&](int32_t u) {
        Bitset both = g.neighbors(u) & keep;
        both.for_each([&](int32_t v) {
            if (u < v) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
        });
    });
    out.graph = Graph::from_edge_list(int32_t(out.new_to_old.size()), edges);
    return out;
}

InducedSubgraph localization(const Graph& g, const Bitset& s) {
    if (s.capacity() != g.vertex_count()) throw InputError("vertex set does not match graph size");
    Bitset closed = s;
    s.for_each([&](int32_t v) { closed |= g.neighbors(v); });
    Bitset keep = g.all_vertices();
    keep.subtract(closed);
    return induced_subgraph(g, keep);
}

InducedSubgraph remove_vertices(const Graph& g, const Bitset& drop) {
    if (drop.capacity() != g.vertex_count()) throw InputError("vertex set does not match graph size");
    Bitset keep = g.all_vertices();
    keep.subtract(drop);
    return induced_subgraph(g, keep);
}

std::vector<Bitset> component_masks(const Graph& g) {
    const int32_t n = g.vertex_count();
    std::vector<Bitset> out;
    Bitset seen(n);
    for (int32_t root = 0; root < n; ++root) {
        if (seen.test(root)) continue;
        Bitset comp(n);
        comp.set(root);
        Bitset frontier(n);
        frontier.set(root);
        while (frontier.any()) {
            Bitset next(n);
            frontier.for_each([&](int32_t v) { next |= g.neighbors(v); });
            next.subtract(comp);
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<InducedSubgraph> connected_components(const Graph& g) {
    std::vector<InducedSubgraph> out;
    for (const Bitset& mask : component_masks(g)) out.push_back(induced_subgraph(g, mask));
    return out;
}

BipartiteResult is_bipartite(const Graph& g) {
    const int32_t n = g.vertex_count();
    std::vector<int8_t> color(n, -1);
    std::vector<int32_t> parent(n, -1), depth(n, 0);

    BipartiteResult res;
    Bitset a(n), b(n);

    for (int32_t root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int32_t> queue{root};
        for (size_t head = 0; head < queue.size(); ++head) {
            int32_t u = queue[head];
            bool odd = false;
            int32_t bad = -1;
            g.neighbors(u).for_each([&](int32_t v) {
                if (odd) return;
                if (color[v] < 0) {
                    color[v] = int8_t(1 - color[u]);
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    odd = true;
                    bad = v;
                }
            });
            if (odd) {
                // Walk both endpoints up to their common ancestor; the two
                // tree paths plus edge (u,bad) form an odd closed walk.
                std::vector<int32_t> up_u, up_v;
                int32_t x = u, y = bad;
                while (depth[x] > depth[y]) up_u.push_back(x), x = parent[x];
                while (depth[y] > depth[x]) up_v.push_back(y), y = parent[y];
                while (x != y) {
                    up_u.push_back(x);
                    up_v.push_back(y);
                    x = parent[x];
                    y = parent[y];
                }
                up_u.push_back(x);
                res.odd_cycle = up_u;
                std::reverse(up_v.begin(), up_v.end());
                res.odd_cycle.insert(res.odd_cycle.end(), up_v.begin(), up_v.end());
                return res;
            }
        }
    }
    for (int32_t v = 0; v < n; ++v) (color[v] == 0 ? a : b).set(v);
    res.parts = Bipartition{std::move(a), std::move(b)};
    return res;
}

}  // namespace misx
