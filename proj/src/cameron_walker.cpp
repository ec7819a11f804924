#include "cameron_walker.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "errors.hpp"

namespace misx {

namespace {

// Component-local helpers all work on masks over the original graph; a
// component never has edges leaving its mask, so g.degree() is already the
// component degree.

std::optional<StarShape> match_star(const Graph& g, const Bitset& comp) {
    const int32_t size = comp.count();
    if (size == 1) return StarShape{comp.first(), {}};
    int32_t center = -1;
    for (int32_t v = comp.first(); v >= 0; v = comp.next(v)) {
        if (g.degree(v) == size - 1) {
            center = v;
            break;
        }
    }
    if (center < 0) return std::nullopt;
    StarShape star{center, {}};
    for (int32_t v = comp.first(); v >= 0; v = comp.next(v)) {
        if (v == center) continue;
        if (g.degree(v) != 1) return std::nullopt;
        star.leaves.push_back(v);
    }
    return star;
}

std::optional<StarTriangleShape> match_star_triangle(const Graph& g, const Bitset& comp) {
    const int32_t size = comp.count();
    if (size < 3 || size % 2 == 0) return std::nullopt;
    int32_t center = -1;
    for (int32_t v = comp.first(); v >= 0; v = comp.next(v)) {
        if (g.degree(v) == size - 1) {
            center = v;
            break;
        }
    }
    if (center < 0) return std::nullopt;
    StarTriangleShape shape{center, {}};
    Bitset paired(g.vertex_count());
    for (int32_t u = comp.first(); u >= 0; u = comp.next(u)) {
        if (u == center || paired.test(u)) continue;
        if (g.degree(u) != 2 || !g.has_edge(u, center)) return std::nullopt;
        Bitset other = g.neighbors(u);
        other.reset(center);
        int32_t w = other.first();
        if (w < 0 || w == u || paired.test(w)) return std::nullopt;
        if (g.degree(w) != 2 || !g.has_edge(w, center)) return std::nullopt;
        paired.set(u);
        paired.set(w);
        shape.triangles.emplace_back(std::min(u, w), std::max(u, w));
    }
    return shape;
}

struct PendantTriangle {
    int32_t attachment;
    Edge outer;  // u < w, both degree 2, adjacent to each other and attachment
};

// Every triangle of the component must be pendant: two degree-2 outer
// vertices plus one attachment. Returns nullopt (with a reason) otherwise.
std::optional<std::vector<PendantTriangle>> collect_pendant_triangles(const Graph& g,
                                                                      const Bitset& comp,
                                                                      std::string& reason) {
    std::vector<PendantTriangle> out;
    for (int32_t u = comp.first(); u >= 0; u = comp.next(u)) {
        Bitset nbrs = g.neighbors(u);
        for (int32_t w = nbrs.next(u); w >= 0; w = nbrs.next(w)) {
            // Each triangle visited once as u < w < z.
            Bitset common = g.neighbors(u) & g.neighbors(w);
            for (int32_t z = common.next(w); z >= 0; z = common.next(z)) {
                int32_t deg_u = g.degree(u), deg_w = g.degree(w), deg_z = g.degree(z);
                int32_t twos = (deg_u == 2) + (deg_w == 2) + (deg_z == 2);
                int32_t attachment, o1, o2;
                if (deg_u > 2 && deg_w == 2 && deg_z == 2) {
                    attachment = u, o1 = w, o2 = z;
                } else if (deg_w > 2 && deg_u == 2 && deg_z == 2) {
                    attachment = w, o1 = u, o2 = z;
                } else if (deg_z > 2 && deg_u == 2 && deg_w == 2) {
                    attachment = z, o1 = u, o2 = w;
                } else {
                    std::ostringstream msg;
                    msg << "triangle {" << u << "," << w << "," << z
                        << "} is not pendant (degree-2 vertices: " << twos << ")";
                    reason = msg.str();
                    return std::nullopt;
                }
                out.push_back(PendantTriangle{attachment, {std::min(o1, o2), std::max(o1, o2)}});
            }
        }
    }
    return out;
}

// Two-coloring restricted to a mask. Returns false when an odd cycle exists.
bool masked_two_color(const Graph& g, const Bitset& mask, Bitset& side_x, Bitset& side_y) {
    side_x = Bitset(g.vertex_count());
    side_y = Bitset(g.vertex_count());
    Bitset seen(g.vertex_count());
    for (int32_t root = mask.first(); root >= 0; root = mask.next(root)) {
        if (seen.test(root)) continue;
        side_x.set(root);
        seen.set(root);
        std::vector<int32_t> queue{root};
        for (size_t head = 0; head < queue.size(); ++head) {
            int32_t v = queue[head];
            bool v_in_x = side_x.test(v);
            Bitset nbrs = g.neighbors(v) & mask;
            for (int32_t u = nbrs.first(); u >= 0; u = nbrs.next(u)) {
                if (!seen.test(u)) {
                    seen.set(u);
                    (v_in_x ? side_y : side_x).set(u);
                    queue.push_back(u);
                } else if (side_x.test(u) == v_in_x) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool masked_connected(const Graph& g, const Bitset& mask) {
    if (mask.none()) return false;
    Bitset reached(g.vertex_count());
    reached.set(mask.first());
    Bitset frontier = reached;
    while (frontier.any()) {
        Bitset next(g.vertex_count());
        frontier.for_each([&](int32_t v) { next |= g.neighbors(v); });
        next &= mask;
        next.subtract(reached);
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

std::optional<LeafBipartiteShape> match_leaf_bipartite(const Graph& g, const Bitset& comp,
                                                       std::string& reason) {
    auto pendants = collect_pendant_triangles(g, comp, reason);
    if (!pendants) return std::nullopt;

    Bitset trimmed = comp;
    for (const PendantTriangle& t : *pendants) {
        trimmed.reset(t.outer.first);
        trimmed.reset(t.outer.second);
    }
    if (trimmed.none()) {
        reason = "no core left after removing pendant triangles";
        return std::nullopt;
    }
    if (!masked_connected(g, trimmed)) {
        reason = "core disconnects after removing pendant triangles";
        return std::nullopt;
    }

    Bitset side_x, side_y;
    if (!masked_two_color(g, trimmed, side_x, side_y)) {
        reason = "core is not bipartite";
        return std::nullopt;
    }

    auto try_orientation = [&](const Bitset& a_side,
                               const Bitset& b_side) -> std::optional<LeafBipartiteShape> {
        if (a_side.none()) return std::nullopt;
        for (const PendantTriangle& t : *pendants)
            if (!b_side.test(t.attachment)) return std::nullopt;

        // Every a-vertex needs at least one pendant leaf; the leaves are
        // exactly the degree-1 vertices on the b side.
        Bitset decorations(g.vertex_count());
        for (int32_t v = b_side.first(); v >= 0; v = b_side.next(v))
            if (g.degree(v) == 1) decorations.set(v);

        LeafBipartiteShape shape;
        for (int32_t v = a_side.first(); v >= 0; v = a_side.next(v)) {
            Bitset mine = g.neighbors(v) & decorations;
            if (mine.none()) return std::nullopt;
            shape.leaves[v] = mine.to_vector();
            shape.a.push_back(v);
        }
        Bitset core_b = b_side;
        core_b.subtract(decorations);
        shape.b = core_b.to_vector();

        Bitset core = a_side | core_b;
        if (!masked_connected(g, core)) return std::nullopt;

        for (const PendantTriangle& t : *pendants)
            shape.pendant_triangles[t.attachment].push_back(t.outer);
        return shape;
    };

    if (auto shape = try_orientation(side_x, side_y)) return shape;
    if (auto shape = try_orientation(side_y, side_x)) return shape;
    if (reason.empty()) reason = "no orientation admits a leaf on every A-side vertex";
    return std::nullopt;
}

ComponentShape classify_component(const Graph& g, const Bitset& comp) {
    if (auto star = match_star(g, comp)) return *star;
    if (auto st = match_star_triangle(g, comp)) return *st;
    std::string reason;
    if (auto lb = match_leaf_bipartite(g, comp, reason)) return *lb;

    NotCWShape not_cw;
    not_cw.reason = reason.empty() ? "matches none of the three shapes" : reason;
    auto piece = induced_subgraph(g, comp);
    auto matching = matching_number(piece.graph);
    auto induced = induced_matching_number(piece.graph);
    for (auto [u, v] : matching.witness.edges)
        not_cw.matching.edges.emplace_back(piece.new_to_old[size_t(u)],
                                           piece.new_to_old[size_t(v)]);
    for (auto [u, v] : induced.witness.edges)
        not_cw.induced_matching.edges.emplace_back(piece.new_to_old[size_t(u)],
                                                   piece.new_to_old[size_t(v)]);
    not_cw.matching.normalize();
    not_cw.induced_matching.normalize();
    return not_cw;
}

}  // namespace

const char* shape_name(const ComponentShape& shape) {
    if (std::holds_alternative<StarShape>(shape)) return "star";
    if (std::holds_alternative<StarTriangleShape>(shape)) return "star_triangle";
    if (std::holds_alternative<LeafBipartiteShape>(shape)) return "leaf_bipartite";
    return "not_cw";
}

CWCertificate classify_structure(const Graph& g) {
    CWCertificate cert;
    for (const Bitset& comp : component_masks(g)) {
        ComponentVerdict verdict;
        verdict.vertices = comp.to_vector();
        verdict.shape = classify_component(g, comp);
        cert.all_cw = cert.all_cw && verdict.is_cw();
        cert.components.push_back(std::move(verdict));
    }
    std::string why;
    if (!validate_certificate(g, cert, &why))
        throw InternalError("certificate failed self-validation: " + why);
    return cert;
}

DefinitionalVerdict is_cw_definitional(const Graph& g) {
    DefinitionalVerdict verdict;
    verdict.nu = matching_number(g).size;
    verdict.nu0 = induced_matching_number(g).size;
    verdict.is_cw = verdict.nu == verdict.nu0;
    return verdict;
}

CWBipartiteVerdict is_cw_bipartite(const Graph& g) {
    auto def = is_cw_definitional(g);
    bool bip = is_bipartite(g).is_bipartite();
    bool definitional = bip && def.is_cw;

    bool structural = true;
    for (const ComponentVerdict& comp : classify_structure(g).components) {
        if (std::holds_alternative<StarShape>(comp.shape)) continue;
        if (const auto* lb = std::get_if<LeafBipartiteShape>(&comp.shape);
            lb && lb->pendant_triangles.empty())
            continue;
        structural = false;
        break;
    }

    if (definitional != structural)
        throw InternalError("Cameron-Walker bipartite routes disagree: definitional=" +
                            std::to_string(definitional) +
                            " structural=" + std::to_string(structural));

    CWBipartiteVerdict verdict;
    verdict.value = definitional;
    if (!bip)
        verdict.reason = "not bipartite";
    else if (!def.is_cw)
        verdict.reason = "nu0=" + std::to_string(def.nu0) + " < nu=" + std::to_string(def.nu);
    else
        verdict.reason = "bipartite with nu0 = nu = " + std::to_string(def.nu);
    return verdict;
}

namespace {

bool fail(std::string* why, const std::string& message) {
    if (why) *why = message;
    return false;
}

}  // namespace

bool validate_certificate(const Graph& g, const CWCertificate& cert, std::string* why) {
    auto comps = component_masks(g);
    if (comps.size() != cert.components.size())
        return fail(why, "component count mismatch");

    bool all = true;
    for (size_t idx = 0; idx < comps.size(); ++idx) {
        const ComponentVerdict& verdict = cert.components[idx];
        Bitset mask(g.vertex_count());
        for (int32_t v : verdict.vertices) {
            if (v < 0 || v >= g.vertex_count()) return fail(why, "vertex out of range");
            mask.set(v);
        }
        if (mask != comps[idx]) return fail(why, "component vertex list mismatch");
        all = all && verdict.is_cw();

        if (const auto* star = std::get_if<StarShape>(&verdict.shape)) {
            Bitset listed(g.vertex_count());
            listed.set(star->center);
            for (int32_t leaf : star->leaves) {
                if (!g.has_edge(star->center, leaf)) return fail(why, "star leaf not adjacent");
                if (g.degree(leaf) != 1) return fail(why, "star leaf has degree != 1");
                listed.set(leaf);
            }
            if (listed != mask) return fail(why, "star does not cover its component");
            if (g.degree(star->center) != int32_t(star->leaves.size()))
                return fail(why, "star center degree mismatch");
        } else if (const auto* st = std::get_if<StarTriangleShape>(&verdict.shape)) {
            if (st->triangles.empty()) return fail(why, "star triangle without triangles");
            Bitset listed(g.vertex_count());
            listed.set(st->center);
            for (auto [u, w] : st->triangles) {
                if (!g.has_edge(u, w) || !g.has_edge(u, st->center) ||
                    !g.has_edge(w, st->center))
                    return fail(why, "star triangle edges missing");
                if (g.degree(u) != 2 || g.degree(w) != 2)
                    return fail(why, "star triangle outer vertex degree != 2");
                listed.set(u);
                listed.set(w);
            }
            if (listed != mask) return fail(why, "star triangle does not cover its component");
            if (g.degree(st->center) != 2 * int32_t(st->triangles.size()))
                return fail(why, "star triangle center degree mismatch");
        } else if (const auto* lb = std::get_if<LeafBipartiteShape>(&verdict.shape)) {
            if (lb->a.empty()) return fail(why, "leaf bipartite with empty A side");
            Bitset a_side(g.vertex_count()), b_side(g.vertex_count()), listed(g.vertex_count());
            for (int32_t v : lb->a) a_side.set(v), listed.set(v);
            for (int32_t v : lb->b) b_side.set(v), listed.set(v);
            // Core edges must run between the sides only.
            Bitset core = a_side | b_side;
            for (int32_t v = core.first(); v >= 0; v = core.next(v)) {
                Bitset same = g.neighbors(v) & (a_side.test(v) ? a_side : b_side);
                if (same.any()) return fail(why, "core edge within one side");
            }
            if (!masked_connected(g, core)) return fail(why, "core not connected");
            for (int32_t v : lb->a) {
                auto it = lb->leaves.find(v);
                if (it == lb->leaves.end() || it->second.empty())
                    return fail(why, "A-side vertex without pendant leaf");
            }
            for (const auto& [av, leaf_list] : lb->leaves) {
                if (!a_side.test(av)) return fail(why, "leaf attached outside A side");
                for (int32_t leaf : leaf_list) {
                    if (g.degree(leaf) != 1 || !g.has_edge(av, leaf))
                        return fail(why, "pendant leaf invalid");
                    listed.set(leaf);
                }
            }
            for (const auto& [bv, outers] : lb->pendant_triangles) {
                if (!b_side.test(bv)) return fail(why, "pendant triangle outside B side");
                for (auto [u, w] : outers) {
                    if (!g.has_edge(u, w) || !g.has_edge(u, bv) || !g.has_edge(w, bv))
                        return fail(why, "pendant triangle edges missing");
                    if (g.degree(u) != 2 || g.degree(w) != 2)
                        return fail(why, "pendant triangle outer degree != 2");
                    listed.set(u);
                    listed.set(w);
                }
            }
            if (listed != mask) return fail(why, "leaf bipartite does not cover its component");
        } else if (const auto* not_cw = std::get_if<NotCWShape>(&verdict.shape)) {
            if (!is_matching(g, not_cw->matching)) return fail(why, "NotCW matching invalid");
            if (!is_induced_matching(g, not_cw->induced_matching))
                return fail(why, "NotCW induced matching invalid");
            if (not_cw->induced_matching.edges.size() >= not_cw->matching.edges.size() &&
                not_cw->reason.empty())
                return fail(why, "NotCW verdict without gap or reason");
        }
    }
    if (all != cert.all_cw) return fail(why, "all_cw flag inconsistent");
    return true;
}

}  // namespace misx
