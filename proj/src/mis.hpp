#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "count.hpp"
#include "graph.hpp"

namespace misx {

struct MisOptions {
    // Maximum number of maximal independent sets an enumeration (or a
    // counting fallback) may visit before aborting with BudgetError.
    uint64_t budget = 10'000'000;
};

// Streams every maximal independent set exactly once, in the deterministic
// pivoted branch order (pivot = vertex leaving the most candidates excluded,
// smallest index on ties; branch vertices ascending). Throws BudgetError when
// a set beyond `budget` would be emitted.
void for_each_mis(const Graph& g, const std::function<void(const Bitset&)>& emit,
                  const MisOptions& opts = {});

std::vector<Bitset> enumerate_mis(const Graph& g, const MisOptions& opts = {});

struct MISReport {
    Count count = 0;
    std::optional<std::vector<Bitset>> sets;
    // Reduction labels in firing order: "isolated", "components", "leaf",
    // "enumerate". Capped; "..." marks truncation.
    std::vector<std::string> trace;
};

// Exact m(G) through the reduction pipeline: strip isolated vertices, split
// into connected components (count multiplies), remove leaves via
// m(G) = m(G_x) + m(G_y), and enumerate whatever irreducible cores remain.
// Memoizes on the induced vertex set within one call.
MISReport count_mis(const Graph& g, const MisOptions& opts = {});

// Like count_mis but also collects the sets themselves (enumeration path).
MISReport count_mis_with_sets(const Graph& g, const MisOptions& opts = {});

// Maximum independent set size; witness is the lexicographically smallest
// maximum independent set.
int32_t alpha(const Graph& g);
Bitset max_independent_set(const Graph& g);

struct BranchCheck {
    int32_t vertex;
    Count whole;      // m(G)
    Count localized;  // m(G_x)
    Count removed;    // m(G \ x)
    bool holds;       // whole <= localized + removed
};

// m(G) <= m(G_x) + m(G \ x); always true for simple graphs, recomputed from
// scratch as a verdict.
BranchCheck check_branch_inequality(const Graph& g, int32_t x, const MisOptions& opts = {});

}  // namespace misx
