#include "report.hpp"

#include <chrono>

#include "formats.hpp"

namespace misx {

using nlohmann::json;

namespace {

json edges_to_json(const EdgeSet& set) {
    json arr = json::array();
    for (auto [u, v] : set.edges) arr.push_back(json::array({u, v}));
    return arr;
}

json edge_pairs_to_json(const std::vector<Edge>& pairs) {
    json arr = json::array();
    for (auto [u, v] : pairs) arr.push_back(json::array({u, v}));
    return arr;
}

}  // namespace

json bundle_to_json(const InvariantBundle& bundle) {
    return json{{"n", bundle.n},
                {"m", bundle.m.str()},
                {"alpha", bundle.alpha},
                {"beta", bundle.beta},
                {"nu", bundle.nu},
                {"nu0", bundle.nu0},
                {"min_vertex_cover", bundle.cover_certificate.to_vector()},
                {"max_matching", edges_to_json(bundle.matching_certificate)},
                {"max_induced_matching", edges_to_json(bundle.induced_matching_certificate)}};
}

json certificate_to_json(const CWCertificate& cert) {
    json components = json::array();
    for (size_t idx = 0; idx < cert.components.size(); ++idx) {
        const ComponentVerdict& comp = cert.components[idx];
        json entry{{"component", idx},
                   {"vertices", comp.vertices},
                   {"shape", shape_name(comp.shape)}};
        if (const auto* star = std::get_if<StarShape>(&comp.shape)) {
            entry["center"] = star->center;
            entry["leaves"] = star->leaves;
        } else if (const auto* st = std::get_if<StarTriangleShape>(&comp.shape)) {
            entry["center"] = st->center;
            entry["triangles"] = edge_pairs_to_json(st->triangles);
        } else if (const auto* lb = std::get_if<LeafBipartiteShape>(&comp.shape)) {
            entry["a"] = lb->a;
            entry["b"] = lb->b;
            json leaves = json::object();
            for (const auto& [v, list] : lb->leaves) leaves[std::to_string(v)] = list;
            entry["leaves"] = leaves;
            json triangles = json::object();
            for (const auto& [v, list] : lb->pendant_triangles)
                triangles[std::to_string(v)] = edge_pairs_to_json(list);
            entry["pendant_triangles"] = triangles;
        } else if (const auto* not_cw = std::get_if<NotCWShape>(&comp.shape)) {
            entry["reason"] = not_cw->reason;
            entry["witness_matching"] = edges_to_json(not_cw->matching);
            entry["witness_induced_matching"] = edges_to_json(not_cw->induced_matching);
        }
        components.push_back(std::move(entry));
    }
    return json{{"all_cw", cert.all_cw}, {"components", components}};
}

json verdict_to_json(const BoundVerdict& v) {
    json out{{"tag", tag_name(v.tag)}, {"applicable", v.applicable}};
    if (!v.applicable) {
        out["n"] = v.n;
        out["m"] = v.m.str();
        if (v.beta) out["beta"] = *v.beta;
        if (v.nu) out["nu"] = *v.nu;
        return out;
    }
    out["n"] = v.n;
    out["m"] = v.m.str();
    if (v.beta) out["beta"] = *v.beta;
    if (v.nu) out["nu"] = *v.nu;
    if (v.nu0) out["nu0"] = *v.nu0;
    out["bound"] = v.bound.str();
    out["holds"] = v.holds;
    out["extremal"] = v.extremal;
    out["characterization"] = v.characterization ? json(*v.characterization) : json(nullptr);
    out["consistent"] = v.consistent;
    return out;
}

json recurrences_to_json(const RecurrenceReport& report) {
    json branch = json::array();
    for (const auto& item : report.branch)
        branch.push_back(json{{"vertex", item.vertex},
                              {"m", item.whole.str()},
                              {"m_localized", item.localized.str()},
                              {"m_removed", item.removed.str()},
                              {"holds", item.holds}});
    json leaf = json::array();
    for (const auto& item : report.leaf)
        leaf.push_back(json{{"leaf", item.leaf},
                            {"support", item.support},
                            {"m", item.whole.str()},
                            {"sum", item.sum.str()},
                            {"holds", item.holds}});
    return json{{"branch", branch},
                {"leaf", leaf},
                {"product",
                 json{{"m", report.whole.str()},
                      {"component_product", report.component_product.str()},
                      {"holds", report.product_holds}}},
                {"all_hold", report.all_hold}};
}

json sweep_report_to_json(const SweepReport& report) {
    json theorems = json::array();
    for (TheoremTag tag : report.theorems) theorems.push_back(tag_name(tag));

    json tallies = json::object();
    for (const auto& [tag, tally] : report.tallies) {
        json entry{{"checked", tally.checked},
                   {"applicable", tally.applicable},
                   {"holds", tally.holds},
                   {"consistent", tally.consistent}};
        if (tag != TheoremTag::BranchRecurrence) entry["extremal"] = tally.extremal;
        tallies[tag_name(tag)] = std::move(entry);
    }

    json census = json::object();
    for (const auto& [tag, entry] : report.extremal_census)
        census[tag_name(tag)] = json{{"count", entry.count}, {"graph6", entry.graph6}};

    json skipped = json::array();
    for (const auto& [line, error] : report.skipped)
        skipped.push_back(json{{"line", line}, {"error", error}});

    json counterexamples = json::array();
    for (const Counterexample& ce : report.counterexamples)
        counterexamples.push_back(json{{"index", ce.index},
                                       {"graph6", ce.graph6},
                                       {"tag", ce.tag},
                                       {"detail", ce.detail}});

    return json{{"schema", 1},
                {"source", json{{"kind", report.source_kind}, {"detail", report.source_detail}}},
                {"theorems", theorems},
                {"graphs_processed", report.graphs_processed},
                {"skipped", skipped},
                {"tallies", tallies},
                {"extremal_census", census},
                {"counterexamples", counterexamples},
                {"aborted", report.aborted}};
}

json analysis_report(const Graph& g, const MisOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    GraphEvaluation eval = evaluate_graph(g, all_tags(), opts);

    json verdicts = json::array();
    for (const BoundVerdict& v : eval.verdicts) verdicts.push_back(verdict_to_json(v));
    if (eval.recurrences) {
        const RecurrenceReport& rec = *eval.recurrences;
        verdicts.push_back(json{{"tag", tag_name(TheoremTag::BranchRecurrence)},
                                {"applicable", true},
                                {"holds", rec.all_hold},
                                {"consistent", true},
                                {"branch_checks", rec.branch.size()},
                                {"leaf_checks", rec.leaf.size()},
                                {"product_checks", 1}});
    }

    json out{{"schema", 1},
             {"input",
              json{{"graph6", to_graph6(g)},
                   {"n", g.vertex_count()},
                   {"edges", g.edge_count()}}},
             {"invariants", bundle_to_json(eval.bundle)},
             {"cameron_walker",
              json{{"definitional",
                    json{{"nu", eval.definitional.nu},
                         {"nu0", eval.definitional.nu0},
                         {"is_cw", eval.definitional.is_cw}}},
                   {"is_cw_bipartite", eval.cw_bipartite.value},
                   {"reason", eval.cw_bipartite.reason},
                   {"certificate", certificate_to_json(eval.certificate)}}},
             {"verdicts", verdicts}};
    if (eval.recurrences) out["recurrences"] = recurrences_to_json(*eval.recurrences);
    out["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

}  // namespace misx
