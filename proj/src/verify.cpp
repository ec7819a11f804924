#include "verify.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "errors.hpp"
#include "families.hpp"
#include "formats.hpp"

namespace misx {

const char* tag_name(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::CoverBound: return "COVER_BOUND";
        case TheoremTag::MatchingBound: return "MATCHING_BOUND";
        case TheoremTag::InducedLower: return "INDUCED_LOWER";
        case TheoremTag::KeCorollary: return "KE_COROLLARY";
        case TheoremTag::BranchRecurrence: return "BRANCH_RECURRENCE";
    }
    return "?";
}

std::optional<TheoremTag> tag_from_name(std::string_view name) {
    std::string upper(name);
    for (char& c : upper) c = char(std::toupper(static_cast<unsigned char>(c)));
    for (TheoremTag tag : all_tags())
        if (upper == tag_name(tag)) return tag;
    return std::nullopt;
}

std::vector<TheoremTag> all_tags() {
    return {TheoremTag::CoverBound, TheoremTag::MatchingBound, TheoremTag::InducedLower,
            TheoremTag::KeCorollary, TheoremTag::BranchRecurrence};
}

std::vector<TheoremTag> parse_tag_list(std::string_view csv) {
    if (csv.empty() || csv == "all") return all_tags();
    std::vector<TheoremTag> tags;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string_view item =
            csv.substr(start, comma == std::string_view::npos ? comma : comma - start);
        if (!item.empty()) {
            auto tag = tag_from_name(item);
            if (!tag) throw InputError("unknown theorem tag '" + std::string(item) + "'");
            if (std::find(tags.begin(), tags.end(), *tag) == tags.end()) tags.push_back(*tag);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (tags.empty()) throw InputError("empty theorem tag list");
    return tags;
}

bool is_triangles_plus_isolated(const Graph& g) {
    for (const Bitset& comp : component_masks(g)) {
        int32_t size = comp.count();
        if (size == 1) continue;
        if (size != 3) return false;
        for (int32_t v = comp.first(); v >= 0; v = comp.next(v))
            if (g.degree(v) != 2) return false;
    }
    return true;
}

namespace {

BoundVerdict cover_bound_from(const InvariantBundle& bundle, bool cw_bipartite) {
    BoundVerdict v;
    v.tag = TheoremTag::CoverBound;
    v.n = bundle.n;
    v.m = bundle.m;
    v.beta = bundle.beta;
    v.bound = pow_count(2, uint32_t(bundle.beta));
    v.holds = v.m <= v.bound;
    v.extremal = v.m == v.bound;
    v.characterization = cw_bipartite;
    v.consistent = v.extremal == cw_bipartite;
    return v;
}

BoundVerdict matching_bound_from(const InvariantBundle& bundle, bool triangles_shape) {
    BoundVerdict v;
    v.tag = TheoremTag::MatchingBound;
    v.n = bundle.n;
    v.m = bundle.m;
    v.nu = bundle.nu;
    v.bound = pow_count(3, uint32_t(bundle.nu));
    v.holds = v.m <= v.bound;
    v.extremal = v.m == v.bound;
    v.characterization = triangles_shape;
    v.consistent = v.extremal == triangles_shape;
    return v;
}

BoundVerdict induced_lower_from(const InvariantBundle& bundle) {
    BoundVerdict v;
    v.tag = TheoremTag::InducedLower;
    v.n = bundle.n;
    v.m = bundle.m;
    v.nu0 = bundle.nu0;
    v.bound = pow_count(2, uint32_t(bundle.nu0));
    v.holds = v.m >= v.bound;
    v.extremal = v.m == v.bound;
    v.characterization = std::nullopt;  // none proved for this bound
    v.consistent = true;
    return v;
}

std::optional<BoundVerdict> ke_corollary_from(const InvariantBundle& bundle, bool cw_bipartite) {
    if (bundle.beta != bundle.nu) return std::nullopt;
    BoundVerdict v;
    v.tag = TheoremTag::KeCorollary;
    v.n = bundle.n;
    v.m = bundle.m;
    v.beta = bundle.beta;
    v.nu = bundle.nu;
    v.bound = pow_count(2, uint32_t(bundle.nu));
    v.holds = v.m <= v.bound;
    v.extremal = v.m == v.bound;
    v.characterization = cw_bipartite;
    v.consistent = v.extremal == cw_bipartite;
    return v;
}

}  // namespace

BoundVerdict check_cover_bound(const Graph& g, const MisOptions& opts) {
    return cover_bound_from(full_bundle(g, opts), is_cw_bipartite(g).value);
}

BoundVerdict check_matching_bound(const Graph& g, const MisOptions& opts) {
    return matching_bound_from(full_bundle(g, opts), is_triangles_plus_isolated(g));
}

BoundVerdict check_induced_lower(const Graph& g, const MisOptions& opts) {
    return induced_lower_from(full_bundle(g, opts));
}

std::optional<BoundVerdict> check_ke_corollary(const Graph& g, const MisOptions& opts) {
    return ke_corollary_from(full_bundle(g, opts), is_cw_bipartite(g).value);
}

RecurrenceReport check_recurrences(const Graph& g, const MisOptions& opts) {
    RecurrenceReport report;
    report.whole = count_mis(g, opts).count;

    const int32_t n = g.vertex_count();
    for (int32_t x = 0; x < n; ++x) {
        Bitset single(n);
        single.set(x);
        Count localized = count_mis(localization(g, single).graph, opts).count;
        Count removed = count_mis(remove_vertices(g, single).graph, opts).count;
        bool holds = report.whole <= localized + removed;
        report.branch.push_back({x, report.whole, localized, removed, holds});
        report.all_hold = report.all_hold && holds;
    }

    for (int32_t x = 0; x < n; ++x) {
        if (g.degree(x) != 1) continue;
        int32_t y = g.neighbors(x).first();
        Bitset sx(n), sy(n);
        sx.set(x);
        sy.set(y);
        Count at_leaf = count_mis(localization(g, sx).graph, opts).count;
        Count at_support = count_mis(localization(g, sy).graph, opts).count;
        Count sum = at_leaf + at_support;
        bool holds = report.whole == sum;
        report.leaf.push_back({x, y, report.whole, sum, holds});
        report.all_hold = report.all_hold && holds;
    }

    report.component_product = 1;
    for (const Bitset& comp : component_masks(g))
        report.component_product *= count_mis(induced_subgraph(g, comp).graph, opts).count;
    report.product_holds = report.whole == report.component_product;
    report.all_hold = report.all_hold && report.product_holds;
    return report;
}

GraphEvaluation evaluate_graph(const Graph& g, const std::vector<TheoremTag>& tags,
                               const MisOptions& opts) {
    GraphEvaluation eval;
    eval.bundle = full_bundle(g, opts);
    eval.definitional = is_cw_definitional(g);
    eval.certificate = classify_structure(g);
    eval.cw_bipartite = is_cw_bipartite(g);
    eval.triangles_shape = is_triangles_plus_isolated(g);

    for (TheoremTag tag : tags) {
        switch (tag) {
            case TheoremTag::CoverBound:
                eval.verdicts.push_back(cover_bound_from(eval.bundle, eval.cw_bipartite.value));
                break;
            case TheoremTag::MatchingBound:
                eval.verdicts.push_back(matching_bound_from(eval.bundle, eval.triangles_shape));
                break;
            case TheoremTag::InducedLower:
                eval.verdicts.push_back(induced_lower_from(eval.bundle));
                break;
            case TheoremTag::KeCorollary: {
                auto v = ke_corollary_from(eval.bundle, eval.cw_bipartite.value);
                if (v) {
                    eval.verdicts.push_back(*v);
                } else {
                    BoundVerdict absent;
                    absent.tag = TheoremTag::KeCorollary;
                    absent.applicable = false;
                    absent.n = eval.bundle.n;
                    absent.m = eval.bundle.m;
                    absent.beta = eval.bundle.beta;
                    absent.nu = eval.bundle.nu;
                    eval.verdicts.push_back(absent);
                }
                break;
            }
            case TheoremTag::BranchRecurrence:
                eval.recurrences = check_recurrences(g, opts);
                break;
        }
    }
    return eval;
}

SweepSource SweepSource::all_labeled(int32_t n) {
    SweepSource s;
    s.kind = Kind::AllLabeled;
    s.n = n;
    s.description = "all labeled graphs on " + std::to_string(n) + " vertices";
    return s;
}

SweepSource SweepSource::graph6_lines(std::vector<std::string> lines, std::string description) {
    SweepSource s;
    s.kind = Kind::Graph6Lines;
    s.lines = std::move(lines);
    s.description = std::move(description);
    return s;
}

SweepSource SweepSource::family(std::string spec) {
    SweepSource s;
    s.kind = Kind::Family;
    s.family_spec = std::move(spec);
    s.description = s.family_spec;
    return s;
}

namespace {

struct Catalog {
    // Materialized graphs; AllLabeled leaves graphs empty and builds by mask.
    bool by_mask = false;
    int32_t mask_n = 0;
    uint64_t count = 0;
    std::vector<Graph> graphs;
    std::vector<std::string> graph6_strings;

    Graph get(uint64_t index) const {
        return by_mask ? labeled_graph(mask_n, index) : graphs[size_t(index)];
    }
    std::string graph6(uint64_t index) const {
        return by_mask ? to_graph6(labeled_graph(mask_n, index)) : graph6_strings[size_t(index)];
    }
};

struct WorkerResult {
    std::map<TheoremTag, TagTally> tallies;
    std::map<TheoremTag, std::vector<std::pair<uint64_t, std::string>>> extremal;  // capped
    std::map<TheoremTag, uint64_t> extremal_total;
    std::vector<Counterexample> counterexamples;
    uint64_t processed = 0;
    std::exception_ptr error;
};

void tally_verdict(const BoundVerdict& v, const Catalog& catalog, uint64_t index,
                   const SweepOptions& opts, WorkerResult& out) {
    TagTally& tally = out.tallies[v.tag];
    ++tally.checked;
    if (!v.applicable) return;
    ++tally.applicable;
    if (v.holds) ++tally.holds;
    if (v.consistent) ++tally.consistent;
    if (v.extremal) {
        ++tally.extremal;
        ++out.extremal_total[v.tag];
        auto& list = out.extremal[v.tag];
        if (int32_t(list.size()) < opts.census_cap)
            list.emplace_back(index, catalog.graph6(index));
    }
    if (!v.holds || !v.consistent) {
        std::ostringstream detail;
        detail << "m=" << v.m.str() << " bound=" << v.bound.str() << " holds=" << v.holds
               << " extremal=" << v.extremal;
        if (v.characterization) detail << " characterization=" << *v.characterization;
        out.counterexamples.push_back(
            Counterexample{index, catalog.graph6(index), tag_name(v.tag), detail.str()});
    }
}

void process_one(const Catalog& catalog, uint64_t index, const SweepOptions& opts,
                 WorkerResult& out) {
    Graph g = catalog.get(index);
    GraphEvaluation eval = evaluate_graph(g, opts.theorems, opts.mis);
    for (const BoundVerdict& v : eval.verdicts) tally_verdict(v, catalog, index, opts, out);
    if (eval.recurrences) {
        TagTally& tally = out.tallies[TheoremTag::BranchRecurrence];
        ++tally.checked;
        ++tally.applicable;
        ++tally.consistent;
        if (eval.recurrences->all_hold) {
            ++tally.holds;
        } else {
            out.counterexamples.push_back(Counterexample{index, catalog.graph6(index),
                                                         tag_name(TheoremTag::BranchRecurrence),
                                                         "a count recurrence failed"});
        }
    }
    ++out.processed;
}

}  // namespace

SweepReport sweep(const SweepSource& source, const SweepOptions& opts) {
    auto start_time = std::chrono::steady_clock::now();

    SweepReport report;
    report.theorems = opts.theorems;
    report.source_detail = source.description;

    Catalog catalog;
    switch (source.kind) {
        case SweepSource::Kind::AllLabeled: {
            report.source_kind = "all_labeled";
            if (source.n > opts.max_enumeration_n)
                throw InputError("labeled catalog: refusing n=" + std::to_string(source.n) +
                                 " above the configured limit " +
                                 std::to_string(opts.max_enumeration_n));
            catalog.by_mask = true;
            catalog.mask_n = source.n;
            catalog.count = labeled_graph_count(source.n);
            break;
        }
        case SweepSource::Kind::Graph6Lines: {
            report.source_kind = "graph6";
            for (size_t i = 0; i < source.lines.size(); ++i) {
                const std::string& line = source.lines[i];
                if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
                try {
                    Graph g = parse_graph6(line);
                    catalog.graphs.push_back(std::move(g));
                    catalog.graph6_strings.push_back(to_graph6(catalog.graphs.back()));
                } catch (const std::exception& err) {
                    report.skipped.emplace_back(i + 1, err.what());
                }
            }
            catalog.count = catalog.graphs.size();
            break;
        }
        case SweepSource::Kind::Family: {
            report.source_kind = "family";
            for (auto& [desc, g] : expand_family(source.family_spec)) {
                catalog.graph6_strings.push_back(to_graph6(g));
                catalog.graphs.push_back(std::move(g));
            }
            catalog.count = catalog.graphs.size();
            break;
        }
    }

    const int32_t jobs = std::max<int32_t>(1, opts.jobs);
    constexpr uint64_t kChunk = 64;
    std::atomic<uint64_t> next{0};
    std::atomic<int64_t> counterexamples_seen{0};

    auto work = [&](WorkerResult& result) {
        try {
            while (true) {
                if (counterexamples_seen.load(std::memory_order_relaxed) >=
                    opts.counterexample_cap)
                    return;
                uint64_t begin = next.fetch_add(kChunk);
                if (begin >= catalog.count) return;
                uint64_t end = std::min(catalog.count, begin + kChunk);
                for (uint64_t index = begin; index < end; ++index) {
                    size_t before = result.counterexamples.size();
                    process_one(catalog, index, opts, result);
                    if (result.counterexamples.size() > before)
                        counterexamples_seen.fetch_add(
                            int64_t(result.counterexamples.size() - before));
                }
            }
        } catch (...) {
            result.error = std::current_exception();
        }
    };

    std::vector<WorkerResult> results(static_cast<size_t>(jobs));
    if (jobs == 1) {
        work(results[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(size_t(jobs));
        for (int32_t i = 0; i < jobs; ++i) threads.emplace_back(work, std::ref(results[size_t(i)]));
        for (auto& t : threads) t.join();
    }
    for (const WorkerResult& r : results)
        if (r.error) std::rethrow_exception(r.error);

    // Deterministic merge: sums first, then capped lists in catalog order.
    for (TheoremTag tag : opts.theorems) {
        report.tallies[tag] = TagTally{};
        if (tag != TheoremTag::BranchRecurrence) report.extremal_census[tag] = {};
    }
    std::map<TheoremTag, std::vector<std::pair<uint64_t, std::string>>> extremal_merge;
    for (const WorkerResult& r : results) {
        report.graphs_processed += r.processed;
        for (const auto& [tag, tally] : r.tallies) {
            TagTally& total = report.tallies[tag];
            total.checked += tally.checked;
            total.applicable += tally.applicable;
            total.holds += tally.holds;
            total.extremal += tally.extremal;
            total.consistent += tally.consistent;
        }
        for (const auto& [tag, total] : r.extremal_total)
            report.extremal_census[tag].count += total;
        for (const auto& [tag, list] : r.extremal) {
            auto& merged = extremal_merge[tag];
            merged.insert(merged.end(), list.begin(), list.end());
        }
        report.counterexamples.insert(report.counterexamples.end(), r.counterexamples.begin(),
                                      r.counterexamples.end());
    }
    for (auto& [tag, merged] : extremal_merge) {
        std::sort(merged.begin(), merged.end());
        if (int32_t(merged.size()) > opts.census_cap) merged.resize(size_t(opts.census_cap));
        for (auto& [index, g6] : merged)
            report.extremal_census[tag].graph6.push_back(std::move(g6));
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::tie(a.index, a.tag) < std::tie(b.index, b.tag);
              });
    if (int32_t(report.counterexamples.size()) > opts.counterexample_cap) {
        report.counterexamples.resize(size_t(opts.counterexample_cap));
        report.aborted = true;
    }
    if (counterexamples_seen.load() >= opts.counterexample_cap) report.aborted = true;

    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start_time)
                         .count();
    return report;
}

}  // namespace misx
