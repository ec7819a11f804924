#include "families.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace misx {

namespace {

std::string normalize_name(std::string_view raw) {
    std::string name(raw);
    std::replace(name.begin(), name.end(), '_', '-');
    return name;
}

int64_t parse_int(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InputError("family spec: parameter '" + key + "' is not an integer: '" + value +
                         "'");
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InputError("family spec: parameter '" + key + "' is not a number: '" + value + "'");
    }
}

// Accessor over the flat param list with required/optional variants.
struct Params {
    const FamilySpec& spec;

    std::optional<std::string> find(const std::string& key) const {
        for (const auto& [k, v] : spec.params)
            if (k == key) return v;
        return std::nullopt;
    }
    int64_t req_int(const std::string& key) const {
        auto v = find(key);
        if (!v)
            throw InputError("family spec '" + spec.name + "': missing parameter '" + key + "'");
        return parse_int(key, *v);
    }
    int64_t opt_int(const std::string& key, int64_t fallback) const {
        auto v = find(key);
        return v ? parse_int(key, *v) : fallback;
    }
    std::optional<int64_t> opt_int(const std::string& key) const {
        auto v = find(key);
        if (!v) return std::nullopt;
        return parse_int(key, *v);
    }
    double opt_real(const std::string& key, double fallback) const {
        auto v = find(key);
        return v ? parse_real(key, *v) : fallback;
    }
    void check_keys(std::initializer_list<std::string_view> allowed) const {
        for (const auto& [k, v] : spec.params) {
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                throw InputError("family spec '" + spec.name + "': unknown parameter '" + k + "'");
        }
    }
};

uint64_t nonneg(const FamilySpec& spec, const std::string& key, int64_t v) {
    if (v < 0)
        throw InputError("family spec '" + spec.name + "': parameter '" + key +
                         "' must be nonnegative");
    return uint64_t(v);
}

double unit_uniform(std::mt19937_64& rng) {
    return double(rng() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = normalize_name(text.substr(0, colon));
    if (spec.name.empty()) throw InputError("family spec: empty name");
    if (colon == std::string_view::npos) return spec;

    std::string_view rest = text.substr(colon + 1);
    if (spec.name == "union") {
        if (rest.substr(0, 3) != "of=")
            throw InputError("family spec: union expects of=<spec>|<spec>|...");
        rest.remove_prefix(3);
        size_t start = 0;
        while (start <= rest.size()) {
            size_t bar = rest.find('|', start);
            std::string_view part =
                rest.substr(start, bar == std::string_view::npos ? bar : bar - start);
            if (part.empty()) throw InputError("family spec: empty union member");
            spec.members.push_back(FamilySpec::parse(part));
            if (bar == std::string_view::npos) break;
            start = bar + 1;
        }
        if (spec.members.empty()) throw InputError("family spec: union needs members");
        return spec;
    }

    size_t start = 0;
    while (start < rest.size()) {
        size_t comma = rest.find(',', start);
        std::string_view kv =
            rest.substr(start, comma == std::string_view::npos ? comma : comma - start);
        auto eq = kv.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw InputError("family spec: expected key=value, got '" + std::string(kv) + "'");
        spec.params.emplace_back(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    out << name;
    if (name == "union") {
        out << ":of=";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) out << '|';
            out << members[i].to_string();
        }
        return out.str();
    }
    for (size_t i = 0; i < params.size(); ++i) {
        out << (i == 0 ? ':' : ',') << params[i].first << '=' << params[i].second;
    }
    return out.str();
}

Graph make_complete(int32_t n) {
    std::vector<Edge> edges;
    for (int32_t j = 1; j < n; ++j)
        for (int32_t i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph make_complete_bipartite(int32_t a, int32_t b) {
    std::vector<Edge> edges;
    for (int32_t i = 0; i < a; ++i)
        for (int32_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, edges);
}

Graph make_star(int32_t m) { return make_complete_bipartite(1, m); }

Graph make_star_triangle(int32_t k) {
    if (k < 1) throw InputError("star triangle requires at least one triangle");
    std::vector<Edge> edges;
    for (int32_t i = 0; i < k; ++i) {
        int32_t u = 1 + 2 * i, w = 2 + 2 * i;
        edges.emplace_back(0, u);
        edges.emplace_back(0, w);
        edges.emplace_back(u, w);
    }
    return Graph::from_edge_list(2 * k + 1, edges);
}

Graph make_path(int32_t n) {
    std::vector<Edge> edges;
    for (int32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph make_cycle(int32_t n) {
    if (n < 3) throw InputError("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (int32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

Graph make_triangles_plus_isolated(int32_t s, int32_t t) {
    std::vector<Edge> edges;
    for (int32_t i = 0; i < s; ++i) {
        int32_t base = 3 * i;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
    }
    return Graph::from_edge_list(3 * s + t, edges);
}

Graph make_disjoint_union(const std::vector<Graph>& parts) {
    int32_t n = 0;
    std::vector<Edge> edges;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
        n += g.vertex_count();
    }
    return Graph::from_edge_list(n, edges);
}

Graph make_cw_bipartite(const CwBipartiteSpec& spec) {
    if (spec.a < 1 || spec.b < 1)
        throw InputError("cw-bipartite: both sides must be nonempty");
    if (spec.leaves_per_a < 1)
        throw InputError("cw-bipartite: every A-vertex needs at least one leaf");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw InputError("cw-bipartite: density must lie in [0,1]");

    std::mt19937_64 rng(spec.seed);
    auto a_vertex = [&](int32_t i) { return i; };
    auto b_vertex = [&](int32_t j) { return spec.a + j; };

    std::vector<Edge> edges;
    std::vector<bool> present(size_t(spec.a) * size_t(spec.b), false);
    auto add_core = [&](int32_t i, int32_t j) {
        if (present[size_t(i) * size_t(spec.b) + size_t(j)]) return;
        present[size_t(i) * size_t(spec.b) + size_t(j)] = true;
        edges.emplace_back(a_vertex(i), b_vertex(j));
    };

    // Spanning backbone: place core vertices alternately, each new one hooked
    // to a seeded-random earlier vertex of the opposite side. Keeps the core
    // connected for any (a, b).
    std::vector<int32_t> placed_a{0}, placed_b;
    int32_t next_a = 1, next_b = 0;
    while (next_a < spec.a || next_b < spec.b) {
        if (next_b < spec.b && (placed_b.size() < placed_a.size() || next_a >= spec.a)) {
            int32_t i = placed_a[size_t(rng() % placed_a.size())];
            add_core(i, next_b);
            placed_b.push_back(next_b++);
        } else {
            int32_t j = placed_b[size_t(rng() % placed_b.size())];
            add_core(next_a, j);
            placed_a.push_back(next_a++);
        }
    }

    for (int32_t i = 0; i < spec.a; ++i)
        for (int32_t j = 0; j < spec.b; ++j)
            if (unit_uniform(rng) < spec.density) add_core(i, j);

    int32_t next = spec.a + spec.b;
    for (int32_t i = 0; i < spec.a; ++i)
        for (int32_t l = 0; l < spec.leaves_per_a; ++l) edges.emplace_back(a_vertex(i), next++);

    return Graph::from_edge_list(next, edges);
}

Graph generate_family(const FamilySpec& spec) {
    Params p{spec};
    const std::string& name = spec.name;
    if (name == "complete") {
        p.check_keys({"n"});
        return make_complete(int32_t(nonneg(spec, "n", p.req_int("n"))));
    }
    if (name == "complete-bipartite") {
        p.check_keys({"a", "b"});
        return make_complete_bipartite(int32_t(nonneg(spec, "a", p.req_int("a"))),
                                       int32_t(nonneg(spec, "b", p.req_int("b"))));
    }
    if (name == "star") {
        p.check_keys({"m"});
        return make_star(int32_t(nonneg(spec, "m", p.req_int("m"))));
    }
    if (name == "star-triangle") {
        p.check_keys({"k"});
        return make_star_triangle(int32_t(p.req_int("k")));
    }
    if (name == "path") {
        p.check_keys({"n"});
        return make_path(int32_t(nonneg(spec, "n", p.req_int("n"))));
    }
    if (name == "cycle") {
        p.check_keys({"n"});
        return make_cycle(int32_t(p.req_int("n")));
    }
    if (name == "triangles") {
        p.check_keys({"s", "t"});
        return make_triangles_plus_isolated(int32_t(nonneg(spec, "s", p.req_int("s"))),
                                            int32_t(nonneg(spec, "t", p.opt_int("t", 0))));
    }
    if (name == "cw-bipartite") {
        p.check_keys({"a", "b", "leaves", "density", "seed"});
        CwBipartiteSpec cw;
        cw.a = int32_t(p.req_int("a"));
        cw.b = int32_t(p.req_int("b"));
        cw.leaves_per_a = int32_t(p.opt_int("leaves", 1));
        cw.density = p.opt_real("density", 1.0);
        auto seed = p.opt_int("seed");
        if (!seed && cw.density < 1.0)
            throw InputError("cw-bipartite: seed is required when density < 1");
        cw.seed = uint64_t(seed.value_or(0));
        return make_cw_bipartite(cw);
    }
    if (name == "union") {
        std::vector<Graph> parts;
        parts.reserve(spec.members.size());
        for (const FamilySpec& member : spec.members) parts.push_back(generate_family(member));
        return make_disjoint_union(parts);
    }
    throw InputError("family spec: unknown family '" + name + "'");
}

Graph generate_family(std::string_view spec_text) {
    return generate_family(FamilySpec::parse(spec_text));
}

namespace {

// Splits "lo..hi" range values; single values are one-element ranges.
std::vector<std::string> expand_value(const std::string& key, const std::string& value) {
    auto dots = value.find("..");
    if (dots == std::string::npos) return {value};
    int64_t lo = parse_int(key, value.substr(0, dots));
    int64_t hi = parse_int(key, value.substr(dots + 2));
    if (hi < lo) throw InputError("family spec: empty range '" + value + "'");
    std::vector<std::string> out;
    for (int64_t v = lo; v <= hi; ++v) out.push_back(std::to_string(v));
    return out;
}

}  // namespace

std::vector<std::pair<std::string, Graph>> expand_family(const FamilySpec& spec) {
    std::vector<FamilySpec> pending{spec};
    if (spec.name != "union") {
        for (size_t idx = 0; idx < spec.params.size(); ++idx) {
            std::vector<FamilySpec> next;
            for (const FamilySpec& partial : pending) {
                for (const std::string& v :
                     expand_value(partial.params[idx].first, partial.params[idx].second)) {
                    FamilySpec copy = partial;
                    copy.params[idx].second = v;
                    next.push_back(std::move(copy));
                }
            }
            pending = std::move(next);
        }
    }
    std::vector<std::pair<std::string, Graph>> out;
    out.reserve(pending.size());
    for (const FamilySpec& concrete : pending)
        out.emplace_back(concrete.to_string(), generate_family(concrete));
    return out;
}

std::vector<std::pair<std::string, Graph>> expand_family(std::string_view spec_text) {
    return expand_family(FamilySpec::parse(spec_text));
}

uint64_t labeled_graph_count(int32_t n) {
    if (n < 0) throw InputError("labeled catalog: n must be nonnegative");
    if (n > 11) throw InputError("labeled catalog: n > 11 would overflow the edge mask");
    return 1ULL << uint64_t(int64_t(n) * int64_t(n - 1) / 2);
}

Graph labeled_graph(int32_t n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int32_t j = 1; j < n; ++j)
        for (int32_t i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

void for_each_labeled_graph(int32_t n, int32_t soft_limit,
                            const std::function<void(uint64_t, const Graph&)>& fn) {
    if (n > soft_limit)
        throw InputError("labeled catalog: refusing n=" + std::to_string(n) +
                         " above the configured limit " + std::to_string(soft_limit) +
                         " (2^(n(n-1)/2) graphs)");
    const uint64_t total = labeled_graph_count(n);
    for (uint64_t mask = 0; mask < total; ++mask) fn(mask, labeled_graph(n, mask));
}

}  // namespace misx
