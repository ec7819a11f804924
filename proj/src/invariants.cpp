#include "invariants.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace misx {

void EdgeSet::normalize() {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool is_matching(const Graph& g, const EdgeSet& set) {
    Bitset touched(g.vertex_count());
    for (auto [u, v] : set.edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) return false;
        if (!g.has_edge(u, v)) return false;
        if (touched.test(u) || touched.test(v)) return false;
        touched.set(u);
        touched.set(v);
    }
    return true;
}

bool is_induced_matching(const Graph& g, const EdgeSet& set) {
    if (!is_matching(g, set)) return false;
    for (size_t i = 0; i < set.edges.size(); ++i)
        for (size_t j = i + 1; j < set.edges.size(); ++j) {
            auto [a, b] = set.edges[i];
            auto [c, d] = set.edges[j];
            if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d))
                return false;
        }
    return true;
}

bool is_vertex_cover(const Graph& g, const Bitset& cover) {
    for (int32_t u = 0; u < g.vertex_count(); ++u) {
        if (cover.test(u)) continue;
        Bitset uncovered = g.neighbors(u);
        uncovered.subtract(cover);
        if (uncovered.any()) return false;
    }
    return true;
}

namespace {

// Edmonds' blossom-contraction search. Roots are tried in ascending order
// and adjacency is scanned ascending, so the matching is deterministic.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          mate_(size_t(n_), -1),
          parent_(size_t(n_), -1),
          base_(size_t(n_)),
          queued_(size_t(n_)),
          in_blossom_(size_t(n_)) {}

    std::vector<int32_t> run() {
        for (int32_t root = 0; root < n_; ++root) {
            if (mate_[root] != -1) continue;
            int32_t leaf = find_augmenting_path(root);
            if (leaf != -1) augment(leaf);
        }
        return mate_;
    }

private:
    int32_t lowest_common_base(int32_t a, int32_t b) {
        std::vector<bool> seen(size_t(n_), false);
        while (true) {
            a = base_[a];
            seen[size_t(a)] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[size_t(b)]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_blossom_path(int32_t v, int32_t stop, int32_t child) {
        while (base_[v] != stop) {
            in_blossom_[size_t(base_[v])] = true;
            in_blossom_[size_t(base_[mate_[v]])] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void contract(int32_t v, int32_t u, std::vector<int32_t>& queue) {
        int32_t stop = lowest_common_base(v, u);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_blossom_path(v, stop, u);
        mark_blossom_path(u, stop, v);
        for (int32_t i = 0; i < n_; ++i) {
            if (!in_blossom_[size_t(base_[i])]) continue;
            base_[i] = stop;
            if (!queued_[size_t(i)]) {
                queued_[size_t(i)] = true;
                queue.push_back(i);
            }
        }
    }

    int32_t find_augmenting_path(int32_t root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(queued_.begin(), queued_.end(), false);
        std::iota(base_.begin(), base_.end(), 0);

        std::vector<int32_t> queue{root};
        queued_[size_t(root)] = true;

        for (size_t head = 0; head < queue.size(); ++head) {
            int32_t v = queue[head];
            int32_t found = -1;
            g_.neighbors(v).for_each([&](int32_t u) {
                if (found != -1) return;
                if (base_[v] == base_[u] || mate_[v] == u) return;
                if (u == root || (mate_[u] != -1 && parent_[mate_[u]] != -1)) {
                    contract(v, u, queue);
                } else if (parent_[u] == -1) {
                    parent_[u] = v;
                    if (mate_[u] == -1) {
                        found = u;
                    } else if (!queued_[size_t(mate_[u])]) {
                        queued_[size_t(mate_[u])] = true;
                        queue.push_back(mate_[u]);
                    }
                }
            });
            if (found != -1) return found;
        }
        return -1;
    }

    void augment(int32_t leaf) {
        int32_t v = leaf;
        while (v != -1) {
            int32_t pv = parent_[v];
            int32_t next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int32_t n_;
    std::vector<int32_t> mate_, parent_, base_;
    std::vector<bool> queued_;
    std::vector<bool> in_blossom_;
};

}  // namespace

MatchingResult matching_number(const Graph& g) {
    auto mate = BlossomMatcher(g).run();
    MatchingResult result;
    for (int32_t v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) result.witness.edges.emplace_back(v, mate[v]);
    result.witness.normalize();
    result.size = int32_t(result.witness.edges.size());
    if (!is_matching(g, result.witness))
        throw InternalError("matching certificate failed validation");
    return result;
}

MatchingResult induced_matching_number(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        int32_t da = g.degree(a.first) + g.degree(a.second);
        int32_t db = g.degree(b.first) + g.degree(b.second);
        return std::tie(da, a) < std::tie(db, b);
    });

    const int32_t m = int32_t(edges.size());
    // conflicts[e] includes e itself and every edge with an endpoint in
    // N[u] or N[v]; picking e wipes exactly that set from the candidates.
    std::vector<Bitset> conflicts(static_cast<size_t>(m), Bitset(m));
    for (int32_t e = 0; e < m; ++e) {
        Bitset zone = g.closed_neighbors(edges[size_t(e)].first) |
                      g.closed_neighbors(edges[size_t(e)].second);
        for (int32_t f = 0; f < m; ++f)
            if (zone.test(edges[size_t(f)].first) || zone.test(edges[size_t(f)].second))
                conflicts[size_t(e)].set(f);
    }

    std::vector<int32_t> best, chosen;
    auto search = [&](auto&& self, const Bitset& candidates) -> void {
        if (int32_t(chosen.size()) + candidates.count() <= int32_t(best.size())) return;
        int32_t e = candidates.first();
        if (e < 0) {
            if (chosen.size() > best.size()) best = chosen;
            return;
        }
        chosen.push_back(e);
        Bitset rest = candidates;
        rest.subtract(conflicts[size_t(e)]);
        self(self, rest);
        chosen.pop_back();
        Bitset skipped = candidates;
        skipped.reset(e);
        self(self, skipped);
    };
    search(search, m == 0 ? Bitset(0) : Bitset::full(m));

    MatchingResult result;
    for (int32_t e : best) result.witness.edges.push_back(edges[size_t(e)]);
    result.witness.normalize();
    result.size = int32_t(result.witness.edges.size());
    if (!is_induced_matching(g, result.witness))
        throw InternalError("induced matching certificate failed validation");
    return result;
}

CoverResult covering_number(const Graph& g) {
    Bitset independent = max_independent_set(g);
    CoverResult result;
    result.cover = g.all_vertices();
    result.cover.subtract(independent);
    result.size = result.cover.count();
    if (!is_vertex_cover(g, result.cover))
        throw InternalError("vertex cover certificate failed validation");
    return result;
}

KEVerdict is_koenig_egervary(const Graph& g) {
    KEVerdict verdict;
    verdict.beta = covering_number(g).size;
    verdict.nu = matching_number(g).size;
    verdict.equal = verdict.beta == verdict.nu;
    return verdict;
}

InvariantBundle full_bundle(const Graph& g, const MisOptions& opts) {
    InvariantBundle bundle;
    bundle.n = g.vertex_count();
    bundle.m = count_mis(g, opts).count;

    Bitset independent = max_independent_set(g);
    bundle.alpha = independent.count();
    bundle.cover_certificate = g.all_vertices();
    bundle.cover_certificate.subtract(independent);
    bundle.beta = bundle.cover_certificate.count();

    auto matching = matching_number(g);
    bundle.nu = matching.size;
    bundle.matching_certificate = std::move(matching.witness);

    auto induced = induced_matching_number(g);
    bundle.nu0 = induced.size;
    bundle.induced_matching_certificate = std::move(induced.witness);

    if (!is_vertex_cover(g, bundle.cover_certificate))
        throw InternalError("vertex cover certificate failed validation");
    if (bundle.alpha + bundle.beta != bundle.n)
        throw InternalError("alpha + beta != n");
    if (!(bundle.nu0 <= bundle.nu && bundle.nu <= bundle.beta))
        throw InternalError("invariant chain nu0 <= nu <= beta violated");
    return bundle;
}

}  // namespace misx
