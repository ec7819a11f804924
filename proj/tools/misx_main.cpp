// misx command-line front end. Talks to the core exclusively through the
// C API in misx/misx.h; human-readable rendering happens here, on top of
// the library's JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "misx/misx.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCounterexample = 4;

int exit_code(misx_status status) {
    switch (status) {
        case MISX_OK: return kExitOk;
        case MISX_ERROR_INPUT: return kExitInput;
        case MISX_ERROR_BUDGET: return kExitBudget;
        case MISX_COUNTEREXAMPLE_FOUND: return kExitCounterexample;
        case MISX_ERROR_UNSUPPORTED: return kExitInput;
        case MISX_ERROR_INTERNAL: return 70;  // EX_SOFTWARE
    }
    return 70;
}

int fail(misx_status status) {
    std::cerr << "misx: error: " << misx_last_error() << "\n";
    return exit_code(status);
}

// A managed string from the C API.
struct ApiString {
    char* value = nullptr;
    ~ApiString() { misx_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

struct GraphHandle {
    misx_graph* value = nullptr;
    ~GraphHandle() { misx_graph_free(value); }
};

// INPUT is "-" (stdin), an existing file path, or an inline graph6 record.
std::string load_input(const std::string& input) {
    if (input == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        std::ifstream file(input, std::ios::binary);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return input;
}

uint64_t resolve_budget(uint64_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MISX_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "misx: warning: ignoring unparsable MISX_BUDGET='" << env << "'\n";
        }
    }
    return 0;  // library default
}

bool write_json_output(const std::string& payload, const std::string& path) {
    if (path == "-") {
        std::cout << payload;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "misx: error: cannot write " << path << "\n";
        return false;
    }
    file << payload;
    return true;
}

std::string join_ints(const json& arr) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < arr.size(); ++i) out << (i ? "," : "") << arr[i].get<int64_t>();
    out << "}";
    return out.str();
}

std::string join_edges(const json& arr) {
    std::ostringstream out;
    for (size_t i = 0; i < arr.size(); ++i)
        out << (i ? " " : "") << "(" << arr[i][0].get<int64_t>() << ","
            << arr[i][1].get<int64_t>() << ")";
    return arr.empty() ? "-" : out.str();
}

void render_analysis(const json& report, std::ostream& out) {
    const json& input = report["input"];
    const json& inv = report["invariants"];
    out << "graph " << input["graph6"].get<std::string>() << "  n=" << input["n"]
        << " edges=" << input["edges"] << "\n";
    out << "  m(G) = " << inv["m"].get<std::string>() << "\n";
    out << "  alpha=" << inv["alpha"] << " beta=" << inv["beta"] << " nu=" << inv["nu"]
        << " nu0=" << inv["nu0"] << "\n";
    out << "  min vertex cover     " << join_ints(inv["min_vertex_cover"]) << "\n";
    out << "  max matching         " << join_edges(inv["max_matching"]) << "\n";
    out << "  max induced matching " << join_edges(inv["max_induced_matching"]) << "\n";

    const json& cw = report["cameron_walker"];
    out << "  cameron-walker: " << (cw["definitional"]["is_cw"].get<bool>() ? "yes" : "no")
        << " (nu=" << cw["definitional"]["nu"] << ", nu0=" << cw["definitional"]["nu0"] << ")"
        << "; cw-bipartite: " << (cw["is_cw_bipartite"].get<bool>() ? "yes" : "no") << " ("
        << cw["reason"].get<std::string>() << ")\n";
    for (const json& comp : cw["certificate"]["components"]) {
        out << "    component " << comp["component"] << " [" << comp["shape"].get<std::string>()
            << "]";
        if (comp.contains("center")) out << " center=" << comp["center"];
        if (comp.contains("a")) out << " a=" << join_ints(comp["a"]) << " b=" << join_ints(comp["b"]);
        if (comp.contains("reason")) out << " " << comp["reason"].get<std::string>();
        out << "\n";
    }

    out << "  verdicts:\n";
    for (const json& v : report["verdicts"]) {
        out << "    " << v["tag"].get<std::string>();
        if (!v["applicable"].get<bool>()) {
            out << ": not applicable (beta=" << v["beta"] << " != nu=" << v["nu"] << ")\n";
            continue;
        }
        if (v.contains("bound")) {
            out << ": m=" << v["m"].get<std::string>() << " vs bound "
                << v["bound"].get<std::string>();
            out << (v["holds"].get<bool>() ? " holds" : " VIOLATED");
            if (v["extremal"].get<bool>()) out << " extremal";
            if (!v["characterization"].is_null())
                out << " characterization=" << (v["characterization"].get<bool>() ? "yes" : "no");
            out << (v["consistent"].get<bool>() ? " consistent" : " INCONSISTENT") << "\n";
        } else {
            out << ": " << v["branch_checks"] << " branch, " << v["leaf_checks"] << " leaf, "
                << v["product_checks"] << " product checks "
                << (v["holds"].get<bool>() ? "hold" : "VIOLATED") << "\n";
        }
    }
    out << "  timing: " << report["timing_ms"].get<double>() << " ms\n";
}

void render_sweep(const json& report, double wall_ms, std::ostream& out) {
    out << "sweep " << report["source"]["kind"].get<std::string>() << " ("
        << report["source"]["detail"].get<std::string>() << "): "
        << report["graphs_processed"] << " graphs\n";
    for (auto& [tag, tally] : report["tallies"].items()) {
        out << "  " << tag << ": checked=" << tally["checked"]
            << " applicable=" << tally["applicable"] << " holds=" << tally["holds"];
        if (tally.contains("extremal")) out << " extremal=" << tally["extremal"];
        out << " consistent=" << tally["consistent"] << "\n";
    }
    for (auto& [tag, census] : report["extremal_census"].items())
        out << "  extremal census " << tag << ": " << census["count"] << "\n";
    if (!report["skipped"].empty()) {
        for (const json& skip : report["skipped"])
            out << "  skipped line " << skip["line"] << ": " << skip["error"].get<std::string>()
                << "\n";
    }
    if (report["counterexamples"].empty()) {
        out << "  counterexamples: none\n";
    } else {
        for (const json& ce : report["counterexamples"])
            out << "  COUNTEREXAMPLE index=" << ce["index"] << " graph6="
                << ce["graph6"].get<std::string>() << " tag=" << ce["tag"].get<std::string>()
                << " " << ce["detail"].get<std::string>() << "\n";
    }
    out << "  wall: " << wall_ms << " ms\n";
}

int cmd_analyze(const std::string& input, const std::string& format, const std::string& json_path,
                uint64_t budget, int32_t warn_n) {
    GraphHandle graph;
    misx_status status =
        misx_graph_from_text(load_input(input).c_str(), format.c_str(), &graph.value);
    if (status != MISX_OK) return fail(status);

    if (misx_graph_vertex_count(graph.value) > warn_n)
        std::cerr << "misx: warning: n=" << misx_graph_vertex_count(graph.value)
                  << " exceeds the desk-scale budget (" << warn_n
                  << "); counts can reach 3^(n/3)\n";

    ApiString payload;
    status = misx_analyze_json(graph.value, budget, &payload.value);
    if (status != MISX_OK) return fail(status);

    json report = json::parse(payload.str());
    if (json_path == "-") {
        std::cout << payload.str();
        render_analysis(report, std::cerr);
        return kExitOk;
    }
    if (!json_path.empty() && !write_json_output(payload.str(), json_path)) return kExitInput;
    render_analysis(report, std::cout);
    return kExitOk;
}

int cmd_enumerate(const std::string& input, const std::string& format, uint64_t limit) {
    GraphHandle graph;
    misx_status status =
        misx_graph_from_text(load_input(input).c_str(), format.c_str(), &graph.value);
    if (status != MISX_OK) return fail(status);

    auto print_set = [](const int32_t* vertices, int32_t count, void*) {
        if (count == 0) {
            std::cout << "()\n";
            return;
        }
        for (int32_t i = 0; i < count; ++i) std::cout << (i ? " " : "") << vertices[i];
        std::cout << "\n";
    };
    status = misx_enumerate_mis(graph.value, limit, print_set, nullptr);
    if (status != MISX_OK) return fail(status);
    return kExitOk;
}

int cmd_generate(std::string spec, const std::string& out_path, std::optional<uint64_t> seed) {
    if (seed) {
        if (spec.rfind("union", 0) == 0) {
            std::cerr << "misx: error: --seed does not apply to union specs; embed seed= in the"
                         " member specs\n";
            return kExitInput;
        }
        if (spec.find("seed=") != std::string::npos) {
            std::cerr << "misx: error: seed given both in the spec and via --seed\n";
            return kExitInput;
        }
        spec += (spec.find(':') == std::string::npos ? ':' : ',');
        spec += "seed=" + std::to_string(*seed);
    }
    ApiString lines;
    misx_status status = misx_generate_graph6(spec.c_str(), &lines.value);
    if (status != MISX_OK) return fail(status);
    if (out_path.empty() || out_path == "-") {
        std::cout << lines.str();
        return kExitOk;
    }
    return write_json_output(lines.str(), out_path) ? kExitOk : kExitInput;
}

int cmd_sweep(std::optional<int32_t> all_labeled, const std::string& graph6_file,
              const std::string& family, const std::string& theorems, int32_t jobs,
              const std::string& json_path, int32_t census_cap, int32_t counterexample_cap,
              int32_t max_enum_n, uint64_t budget) {
    misx_sweep_options options{};
    options.theorems = theorems.empty() ? nullptr : theorems.c_str();
    options.jobs = jobs;
    options.census_cap = census_cap;
    options.counterexample_cap = counterexample_cap;
    options.max_enumeration_n = max_enum_n;
    options.budget = budget;

    auto started = std::chrono::steady_clock::now();
    ApiString payload;
    misx_status status;
    if (all_labeled) {
        status = misx_sweep_all_labeled(*all_labeled, &options, &payload.value);
    } else if (!graph6_file.empty()) {
        std::string text = load_input(graph6_file);
        status = misx_sweep_graph6_text(text.c_str(), graph6_file.c_str(), &options,
                                        &payload.value);
    } else {
        status = misx_sweep_family(family.c_str(), &options, &payload.value);
    }
    double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               started)
                         .count();

    if (status != MISX_OK && status != MISX_COUNTEREXAMPLE_FOUND) return fail(status);

    json report = json::parse(payload.str());
    if (json_path == "-") {
        std::cout << payload.str();
        render_sweep(report, wall_ms, std::cerr);
    } else {
        if (!json_path.empty() && !write_json_output(payload.str(), json_path))
            return kExitInput;
        render_sweep(report, wall_ms, std::cout);
    }
    return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximal-independent-set counts, matching/cover invariants and "
                 "bound verdicts for simple graphs"};
    app.set_version_flag("--version", std::string("misx ") + misx_version());
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full invariant and verdict report");
    std::string an_input, an_format = "auto", an_json;
    uint64_t an_budget = 0;
    int32_t an_warn = 30;
    analyze->add_option("input", an_input, "graph6 record, file path, or - for stdin")
        ->required();
    analyze->add_option("--format", an_format, "auto|graph6|edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    analyze->add_option("--json", an_json, "write JSON report to file (- for stdout)");
    analyze->add_option("--budget", an_budget, "enumeration budget (default 10^7)");
    analyze->add_option("--warn-n", an_warn, "warn when n exceeds this bound");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list maximal independent sets");
    std::string en_input, en_format = "auto";
    uint64_t en_limit = 0;
    enumerate->add_option("input", en_input, "graph6 record, file path, or - for stdin")
        ->required();
    enumerate->add_option("--format", en_format, "auto|graph6|edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    enumerate->add_option("--limit", en_limit, "stop (exit 3) once this many sets were printed");

    // generate
    auto* generate = app.add_subcommand("generate", "emit family graphs as graph6");
    std::string gen_spec, gen_out;
    std::optional<uint64_t> gen_seed;
    generate->add_option("spec", gen_spec,
                         "family spec, e.g. star:m=4 or triangles:s=1..3,t=0")
        ->required();
    generate->add_option("--out", gen_out, "output path (default stdout)");
    generate->add_option("--seed", gen_seed, "seed for random families");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "check theorems over a graph catalog");
    std::optional<int32_t> sw_all;
    std::string sw_file, sw_family, sw_theorems = "all", sw_json;
    int32_t sw_jobs = 1, sw_census = 64, sw_cap = 16, sw_max_n = 6;
    uint64_t sw_budget = 0;
    auto* src_all = sweep->add_option("--all-labeled", sw_all, "all labeled graphs on n vertices");
    auto* src_file = sweep->add_option("--graph6-file", sw_file, "graph6 catalog file (- stdin)");
    auto* src_family = sweep->add_option("--family", sw_family, "family spec, ranges allowed");
    src_all->excludes(src_file)->excludes(src_family);
    src_file->excludes(src_family);
    sweep->add_option("--theorems", sw_theorems, "all or comma-joined theorem tags");
    sweep->add_option("--jobs", sw_jobs, "worker threads");
    sweep->add_option("--json", sw_json, "write JSON report to file (- for stdout)");
    sweep->add_option("--census-cap", sw_census, "extremal graph6 strings kept per theorem");
    sweep->add_option("--counterexample-cap", sw_cap, "abort after this many counterexamples");
    sweep->add_option("--max-enumeration-n", sw_max_n, "refusal limit for --all-labeled");
    sweep->add_option("--budget", sw_budget, "enumeration budget (default 10^7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*analyze)
            return cmd_analyze(an_input, an_format, an_json, resolve_budget(an_budget), an_warn);
        if (*enumerate) return cmd_enumerate(en_input, en_format, resolve_budget(en_limit));
        if (*generate) return cmd_generate(gen_spec, gen_out, gen_seed);
        if (*sweep) {
            if (!sw_all && sw_file.empty() && sw_family.empty()) {
                std::cerr << "misx: error: sweep needs --all-labeled, --graph6-file or"
                             " --family\n";
                return kExitInput;
            }
            return cmd_sweep(sw_all, sw_file, sw_family, sw_theorems, sw_jobs, sw_json, sw_census,
                             sw_cap, sw_max_n, resolve_budget(sw_budget));
        }
    } catch (const std::exception& e) {
        std::cerr << "misx: error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
