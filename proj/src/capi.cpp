#include "misx/misx.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "cameron_walker.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "formats.hpp"
#include "graph.hpp"
#include "invariants.hpp"
#include "mis.hpp"
#include "report.hpp"
#include "verify.hpp"

struct misx_graph {
    misx::Graph graph;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

template <typename Fn>
misx_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const misx::InputError& e) {
        set_error(e.what());
        return MISX_ERROR_INPUT;
    } catch (const misx::BudgetError& e) {
        set_error(e.what());
        return MISX_ERROR_BUDGET;
    } catch (const misx::UnsupportedError& e) {
        set_error(e.what());
        return MISX_ERROR_UNSUPPORTED;
    } catch (const misx::InternalError& e) {
        set_error(e.what());
        return MISX_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return MISX_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown exception");
        return MISX_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

misx_status require(bool ok, const char* message) {
    if (ok) return MISX_OK;
    set_error(message);
    return MISX_ERROR_INPUT;
}

misx::MisOptions mis_options(uint64_t budget) {
    misx::MisOptions opts;
    if (budget > 0) opts.budget = budget;
    return opts;
}

misx::SweepOptions sweep_options(const misx_sweep_options* raw) {
    misx::SweepOptions opts;
    if (!raw) return opts;
    if (raw->theorems) opts.theorems = misx::parse_tag_list(raw->theorems);
    if (raw->jobs > 1) opts.jobs = raw->jobs;
    if (raw->census_cap > 0) opts.census_cap = raw->census_cap;
    if (raw->counterexample_cap > 0) opts.counterexample_cap = raw->counterexample_cap;
    if (raw->max_enumeration_n > 0) opts.max_enumeration_n = raw->max_enumeration_n;
    if (raw->budget > 0) opts.mis.budget = raw->budget;
    return opts;
}

misx_status finish_sweep(const misx::SweepReport& report, char** json_out) {
    *json_out = dup_string(misx::sweep_report_to_json(report).dump(2) + "\n");
    if (!report.counterexamples.empty()) {
        g_last_error = "sweep found " + std::to_string(report.counterexamples.size()) +
                       " counterexample(s)";
        return MISX_COUNTEREXAMPLE_FOUND;
    }
    return MISX_OK;
}

}  // namespace

extern "C" {

const char* misx_version(void) { return "1.0.0"; }

const char* misx_last_error(void) { return g_last_error.c_str(); }

misx_status misx_graph_from_graph6(const char* record, misx_graph** out) {
    if (auto bad = require(record && out, "null argument")) return bad;
    return guarded([&] {
        *out = new misx_graph{misx::parse_graph6(record)};
        return MISX_OK;
    });
}

misx_status misx_graph_from_edge_list(const char* text, misx_graph** out) {
    if (auto bad = require(text && out, "null argument")) return bad;
    return guarded([&] {
        *out = new misx_graph{misx::parse_edge_list(text)};
        return MISX_OK;
    });
}

misx_status misx_graph_from_text(const char* text, const char* format, misx_graph** out) {
    if (auto bad = require(text && out, "null argument")) return bad;
    return guarded([&]() -> misx_status {
        std::string_view fmt = format ? format : "auto";
        misx::InputFormat resolved;
        if (fmt == "auto")
            resolved = misx::InputFormat::Auto;
        else if (fmt == "graph6")
            resolved = misx::InputFormat::Graph6;
        else if (fmt == "edgelist")
            resolved = misx::InputFormat::EdgeList;
        else {
            set_error("unknown format (expected auto, graph6 or edgelist)");
            return MISX_ERROR_INPUT;
        }
        *out = new misx_graph{misx::parse_graph_auto(text, resolved)};
        return MISX_OK;
    });
}

misx_status misx_graph_from_family(const char* spec, misx_graph** out) {
    if (auto bad = require(spec && out, "null argument")) return bad;
    return guarded([&] {
        *out = new misx_graph{misx::generate_family(spec)};
        return MISX_OK;
    });
}

void misx_graph_free(misx_graph* g) { delete g; }

int32_t misx_graph_vertex_count(const misx_graph* g) { return g ? g->graph.vertex_count() : -1; }

int64_t misx_graph_edge_count(const misx_graph* g) { return g ? g->graph.edge_count() : -1; }

misx_status misx_graph_to_graph6(const misx_graph* g, char** record_out) {
    if (auto bad = require(g && record_out, "null argument")) return bad;
    return guarded([&] {
        *record_out = dup_string(misx::to_graph6(g->graph));
        return MISX_OK;
    });
}

void misx_string_free(char* s) { std::free(s); }

misx_status misx_count_mis(const misx_graph* g, uint64_t budget, char** decimal_out) {
    if (auto bad = require(g && decimal_out, "null argument")) return bad;
    return guarded([&] {
        *decimal_out = dup_string(misx::count_mis(g->graph, mis_options(budget)).count.str());
        return MISX_OK;
    });
}

misx_status misx_enumerate_mis(const misx_graph* g, uint64_t limit, misx_set_callback callback,
                               void* user) {
    if (auto bad = require(g && callback, "null argument")) return bad;
    return guarded([&] {
        misx::for_each_mis(
            g->graph,
            [&](const misx::Bitset& set) {
                auto verts = set.to_vector();
                callback(verts.data(), int32_t(verts.size()), user);
            },
            mis_options(limit));
        return MISX_OK;
    });
}

misx_status misx_invariants(const misx_graph* g, int32_t* alpha_out, int32_t* beta_out,
                            int32_t* nu_out, int32_t* nu0_out) {
    if (auto bad = require(g != nullptr, "null argument")) return bad;
    return guarded([&] {
        if (alpha_out) *alpha_out = misx::alpha(g->graph);
        if (beta_out) *beta_out = misx::covering_number(g->graph).size;
        if (nu_out) *nu_out = misx::matching_number(g->graph).size;
        if (nu0_out) *nu0_out = misx::induced_matching_number(g->graph).size;
        return MISX_OK;
    });
}

misx_status misx_is_cw_bipartite(const misx_graph* g, int32_t* result_out) {
    if (auto bad = require(g && result_out, "null argument")) return bad;
    return guarded([&] {
        *result_out = misx::is_cw_bipartite(g->graph).value ? 1 : 0;
        return MISX_OK;
    });
}

misx_status misx_analyze_json(const misx_graph* g, uint64_t budget, char** json_out) {
    if (auto bad = require(g && json_out, "null argument")) return bad;
    return guarded([&] {
        *json_out =
            dup_string(misx::analysis_report(g->graph, mis_options(budget)).dump(2) + "\n");
        return MISX_OK;
    });
}

misx_status misx_generate_graph6(const char* family_spec, char** lines_out) {
    if (auto bad = require(family_spec && lines_out, "null argument")) return bad;
    return guarded([&] {
        std::ostringstream lines;
        for (const auto& [desc, graph] : misx::expand_family(family_spec))
            lines << misx::to_graph6(graph) << '\n';
        *lines_out = dup_string(lines.str());
        return MISX_OK;
    });
}

misx_status misx_sweep_all_labeled(int32_t n, const misx_sweep_options* options, char** json_out) {
    if (auto bad = require(json_out != nullptr, "null argument")) return bad;
    return guarded([&] {
        auto report = misx::sweep(misx::SweepSource::all_labeled(n), sweep_options(options));
        return finish_sweep(report, json_out);
    });
}

misx_status misx_sweep_graph6_text(const char* text, const char* description,
                                   const misx_sweep_options* options, char** json_out) {
    if (auto bad = require(text && json_out, "null argument")) return bad;
    return guarded([&] {
        std::vector<std::string> lines;
        std::istringstream stream{std::string(text)};
        std::string line;
        while (std::getline(stream, line)) lines.push_back(line);
        auto source = misx::SweepSource::graph6_lines(std::move(lines),
                                                      description ? description : "graph6 input");
        auto report = misx::sweep(source, sweep_options(options));
        return finish_sweep(report, json_out);
    });
}

misx_status misx_sweep_family(const char* family_spec, const misx_sweep_options* options,
                              char** json_out) {
    if (auto bad = require(family_spec && json_out, "null argument")) return bad;
    return guarded([&] {
        auto report = misx::sweep(misx::SweepSource::family(family_spec), sweep_options(options));
        return finish_sweep(report, json_out);
    });
}

}  // extern "C"
