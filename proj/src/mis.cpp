#include "mis.hpp"

#include <unordered_map>

#include "errors.hpp"

namespace misx {

namespace {

std::vector<Bitset> closed_rows(const Graph& g) {
    std::vector<Bitset> rows;
    rows.reserve(size_t(g.vertex_count()));
    for (int32_t v = 0; v < g.vertex_count(); ++v) rows.push_back(g.closed_neighbors(v));
    return rows;
}

// Pivoted Bron-Kerbosch on the complement adjacency: maximal cliques of the
// complement are exactly the maximal independent sets of g. All candidate
// masks are expressed through N_G[.] so the complement is never materialized.
struct MisEnumerator {
    const std::vector<Bitset>& closed;
    const std::function<void(const Bitset&)>& emit;
    uint64_t budget;
    uint64_t emitted = 0;

    void expand(const Bitset& chosen, Bitset candidates, Bitset excluded) {
        if (candidates.none() && excluded.none()) {
            if (++emitted > budget)
                throw BudgetError("enumeration budget of " + std::to_string(budget) +
                                  " maximal independent sets exceeded");
            emit(chosen);
            return;
        }
        int32_t pivot = -1;
        int32_t best = -1;
        (candidates | excluded).for_each([&](int32_t u) {
            Bitset reach = candidates;
            reach.subtract(closed[u]);
            int32_t c = reach.count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        // Only vertices inside N[pivot] can start a set the pivot branch
        // does not already cover.
        Bitset branch = candidates & closed[pivot];
        branch.for_each([&](int32_t v) {
            Bitset next_chosen = chosen;
            next_chosen.set(v);
            Bitset next_cand = candidates;
            next_cand.subtract(closed[v]);
            Bitset next_excl = excluded;
            next_excl.subtract(closed[v]);
            expand(next_chosen, std::move(next_cand), std::move(next_excl));
            candidates.reset(v);
            excluded.set(v);
        });
    }
};

}  // namespace

void for_each_mis(const Graph& g, const std::function<void(const Bitset&)>& emit,
                  const MisOptions& opts) {
    const int32_t n = g.vertex_count();
    auto closed = closed_rows(g);
    MisEnumerator walker{closed, emit, opts.budget};
    walker.expand(Bitset(n), Bitset::full(n), Bitset(n));
}

std::vector<Bitset> enumerate_mis(const Graph& g, const MisOptions& opts) {
    std::vector<Bitset> out;
    for_each_mis(
        g, [&](const Bitset& s) { out.push_back(s); }, opts);
    return out;
}

namespace {

constexpr size_t kTraceCap = 64;

struct CountContext {
    const Graph& g;
    std::vector<Bitset> closed;
    uint64_t budget;
    uint64_t visited = 0;
    std::unordered_map<Bitset, Count, BitsetHash> memo;
    std::vector<std::string> trace;

    explicit CountContext(const Graph& graph, uint64_t b)
        : g(graph), closed(closed_rows(graph)), budget(b) {}

    void log(std::string label) {
        if (trace.size() < kTraceCap)
            trace.push_back(std::move(label));
        else if (trace.size() == kTraceCap)
            trace.push_back("...");
    }

    std::vector<Bitset> masked_components(const Bitset& mask) const {
        std::vector<Bitset> comps;
        Bitset seen(mask.capacity());
        mask.for_each([&](int32_t root) {
            if (seen.test(root)) return;
            Bitset comp(mask.capacity());
            comp.set(root);
            Bitset frontier = comp;
            while (frontier.any()) {
                Bitset next(mask.capacity());
                frontier.for_each([&](int32_t v) { next |= g.neighbors(v); });
                next &= mask;
                next.subtract(comp);
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comps.push_back(std::move(comp));
        });
        return comps;
    }

    Count count_enumerated(const Bitset& mask) {
        // Counting-only Bron-Kerbosch over the induced vertex set.
        Count total = 0;
        struct Walker {
            CountContext& ctx;
            Count& total;
            void expand(Bitset candidates, Bitset excluded) {
                if (candidates.none() && excluded.none()) {
                    if (++ctx.visited > ctx.budget)
                        throw BudgetError("enumeration budget of " + std::to_string(ctx.budget) +
                                          " maximal independent sets exceeded");
                    ++total;
                    return;
                }
                int32_t pivot = -1, best = -1;
                (candidates | excluded).for_each([&](int32_t u) {
                    Bitset reach = candidates;
                    reach.subtract(ctx.closed[u]);
                    int32_t c = reach.count();
                    if (c > best) {
                        best = c;
                        pivot = u;
                    }
                });
                Bitset branch = candidates & ctx.closed[pivot];
                branch.for_each([&](int32_t v) {
                    Bitset next_cand = candidates;
                    next_cand.subtract(ctx.closed[v]);
                    Bitset next_excl = excluded;
                    next_excl.subtract(ctx.closed[v]);
                    expand(std::move(next_cand), std::move(next_excl));
                    candidates.reset(v);
                    excluded.set(v);
                });
            }
        };
        Walker{*this, total}.expand(mask, Bitset(mask.capacity()));
        return total;
    }

    Count count(const Bitset& mask) {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        Count result = reduce(mask);
        memo.emplace(mask, result);
        return result;
    }

    Count reduce(Bitset mask) {
        // Isolated vertices join every maximal independent set.
        Bitset live = mask;
        bool dropped = false;
        mask.for_each([&](int32_t v) {
            if (!g.neighbors(v).intersects(mask)) {
                live.reset(v);
                dropped = true;
            }
        });
        if (dropped) log("isolated");
        if (live.none()) return 1;

        auto comps = masked_components(live);
        if (comps.size() > 1) {
            log("components(" + std::to_string(comps.size()) + ")");
            Count result = 1;
            for (const Bitset& comp : comps) result *= count(comp);
            return result;
        }

        // Leaf rule: m(G) = m(G_x) + m(G_y) for a leaf x adjacent to y.
        int32_t leaf = -1, support = -1;
        for (int32_t v = live.first(); v >= 0; v = live.next(v)) {
            Bitset nb = g.neighbors(v) & live;
            if (nb.count() == 1) {
                leaf = v;
                support = nb.first();
                break;
            }
        }
        if (leaf >= 0) {
            log("leaf(x=" + std::to_string(leaf) + ",y=" + std::to_string(support) + ")");
            Bitset without_leaf_nbhd = live;
            without_leaf_nbhd.subtract(closed[leaf]);
            Bitset without_support_nbhd = live;
            without_support_nbhd.subtract(closed[support]);
            return count(without_leaf_nbhd) + count(without_support_nbhd);
        }

        log("enumerate(n=" + std::to_string(live.count()) + ")");
        return count_enumerated(live);
    }
};

}  // namespace

MISReport count_mis(const Graph& g, const MisOptions& opts) {
    CountContext ctx(g, opts.budget);
    MISReport report;
    report.count = ctx.count(g.all_vertices());
    report.trace = std::move(ctx.trace);
    return report;
}

MISReport count_mis_with_sets(const Graph& g, const MisOptions& opts) {
    MISReport report;
    report.sets = enumerate_mis(g, opts);
    report.count = Count(report.sets->size());
    report.trace = {"enumerate(n=" + std::to_string(g.vertex_count()) + ")"};
    return report;
}

namespace {

struct AlphaSolver {
    std::vector<Bitset> closed;
    Bitset best;
    int32_t best_size = -1;

    void search(const Bitset& chosen, Bitset candidates, int32_t size) {
        if (size + candidates.count() <= best_size) return;
        int32_t v = candidates.first();
        if (v < 0) {
            if (size > best_size) {
                best_size = size;
                best = chosen;
            }
            return;
        }
        Bitset with_v = chosen;
        with_v.set(v);
        Bitset rest = candidates;
        rest.subtract(closed[v]);
        search(with_v, std::move(rest), size + 1);
        // If v has no neighbor left among the candidates, every maximum set
        // here contains it; the exclude branch cannot win.
        Bitset nbrs_in_cand = candidates & closed[v];
        nbrs_in_cand.reset(v);
        if (nbrs_in_cand.none()) return;
        candidates.reset(v);
        search(chosen, std::move(candidates), size);
    }
};

}  // namespace

Bitset max_independent_set(const Graph& g) {
    AlphaSolver solver{closed_rows(g), Bitset(g.vertex_count()), -1};
    solver.search(Bitset(g.vertex_count()), g.all_vertices(), 0);
    return solver.best;
}

int32_t alpha(const Graph& g) { return max_independent_set(g).count(); }

BranchCheck check_branch_inequality(const Graph& g, int32_t x, const MisOptions& opts) {
    if (x < 0 || x >= g.vertex_count())
        throw InputError("branch inequality: vertex " + std::to_string(x) + " out of range");
    Bitset single(g.vertex_count());
    single.set(x);
    BranchCheck check;
    check.vertex = x;
    check.whole = count_mis(g, opts).count;
    check.localized = count_mis(localization(g, single).graph, opts).count;
    check.removed = count_mis(remove_vertices(g, single).graph, opts).count;
    check.holds = check.whole <= check.localized + check.removed;
    return check;
}

}  // namespace misx
