#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cameron_walker.hpp"
#include "count.hpp"
#include "graph.hpp"
#include "invariants.hpp"
#include "mis.hpp"

namespace misx {

enum class TheoremTag {
    CoverBound,        // m(G) <= 2^beta, extremal iff Cameron-Walker bipartite
    MatchingBound,     // m(G) <= 3^nu, extremal iff sK3 + tK1
    InducedLower,      // m(G) >= 2^nu0, no extremal characterization
    KeCorollary,       // Koenig-Egervary graphs only: m(G) <= 2^nu
    BranchRecurrence,  // per-vertex / per-leaf / per-component count identities
};

const char* tag_name(TheoremTag tag);
std::optional<TheoremTag> tag_from_name(std::string_view name);
std::vector<TheoremTag> all_tags();
// "all" or a comma-separated list of tag names.
std::vector<TheoremTag> parse_tag_list(std::string_view csv);

struct BoundVerdict {
    TheoremTag tag = TheoremTag::CoverBound;
    bool applicable = true;  // false only for the KE corollary on non-KE graphs
    int32_t n = 0;
    Count m = 0;
    std::optional<int32_t> beta, nu, nu0;
    Count bound = 0;
    bool holds = true;
    bool extremal = false;
    // Output of the matching extremal-shape recognizer; absent where the
    // bound has no characterization (InducedLower).
    std::optional<bool> characterization;
    bool consistent = true;  // extremal == characterization when present
};

// Every component is K3 or K1 (the extremal shape of the 3^nu bound).
bool is_triangles_plus_isolated(const Graph& g);

BoundVerdict check_cover_bound(const Graph& g, const MisOptions& opts = {});
BoundVerdict check_matching_bound(const Graph& g, const MisOptions& opts = {});
BoundVerdict check_induced_lower(const Graph& g, const MisOptions& opts = {});
// absent when g is not Koenig-Egervary.
std::optional<BoundVerdict> check_ke_corollary(const Graph& g, const MisOptions& opts = {});

struct RecurrenceReport {
    struct BranchItem {
        int32_t vertex;
        Count whole, localized, removed;
        bool holds;  // whole <= localized + removed
    };
    struct LeafItem {
        int32_t leaf, support;
        Count whole, sum;
        bool holds;  // whole == m(G_leaf) + m(G_support)
    };
    std::vector<BranchItem> branch;
    std::vector<LeafItem> leaf;
    Count whole = 0;
    Count component_product = 0;
    bool product_holds = true;
    bool all_hold = true;
};

RecurrenceReport check_recurrences(const Graph& g, const MisOptions& opts = {});

// Everything the reports need about one graph, computed once.
struct GraphEvaluation {
    InvariantBundle bundle;
    DefinitionalVerdict definitional;
    CWCertificate certificate;
    CWBipartiteVerdict cw_bipartite;
    bool triangles_shape = false;
    std::vector<BoundVerdict> verdicts;  // one per requested bound tag
    std::optional<RecurrenceReport> recurrences;
};

GraphEvaluation evaluate_graph(const Graph& g, const std::vector<TheoremTag>& tags,
                               const MisOptions& opts = {});

struct SweepSource {
    enum class Kind { AllLabeled, Graph6Lines, Family };
    Kind kind = Kind::AllLabeled;
    int32_t n = 0;                   // AllLabeled
    std::vector<std::string> lines;  // Graph6Lines
    std::string description;         // file name / label for reports
    std::string family_spec;         // Family

    static SweepSource all_labeled(int32_t n);
    static SweepSource graph6_lines(std::vector<std::string> lines, std::string description);
    static SweepSource family(std::string spec);
};

struct SweepOptions {
    std::vector<TheoremTag> theorems = all_tags();
    int32_t jobs = 1;
    int32_t census_cap = 64;
    int32_t counterexample_cap = 16;
    int32_t max_enumeration_n = 6;  // AllLabeled refusal threshold
    MisOptions mis;
};

struct TagTally {
    uint64_t checked = 0;
    uint64_t applicable = 0;
    uint64_t holds = 0;
    uint64_t extremal = 0;
    uint64_t consistent = 0;
};

struct Counterexample {
    uint64_t index = 0;
    std::string graph6;
    std::string tag;
    std::string detail;
};

struct SweepReport {
    std::string source_kind;
    std::string source_detail;
    std::vector<TheoremTag> theorems;
    uint64_t graphs_processed = 0;
    std::vector<std::pair<uint64_t, std::string>> skipped;  // (line number, error)
    std::map<TheoremTag, TagTally> tallies;
    struct Census {
        uint64_t count = 0;
        std::vector<std::string> graph6;  // first census_cap extremal graphs
    };
    std::map<TheoremTag, Census> extremal_census;
    std::vector<Counterexample> counterexamples;
    bool aborted = false;
    // Wall time never enters the canonical JSON: reports must be
    // byte-identical across worker counts.
    double wall_ms = 0.0;
};

// Checks every catalog graph against every requested theorem. Results are
// byte-identical for any jobs count: workers aggregate locally and merge in
// catalog order.
SweepReport sweep(const SweepSource& source, const SweepOptions& opts = {});

}  // namespace misx
