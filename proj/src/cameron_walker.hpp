#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "invariants.hpp"

namespace misx {

// Structural shapes, always in original vertex labels.

struct StarShape {
    int32_t center = 0;
    std::vector<int32_t> leaves;  // empty for an isolated vertex
};

struct StarTriangleShape {
    int32_t center = 0;
    std::vector<Edge> triangles;  // outer pair per triangle, u < v
};

struct LeafBipartiteShape {
    std::vector<int32_t> a;  // core side carrying the pendant leaves
    std::vector<int32_t> b;  // core side that may carry pendant triangles
    std::map<int32_t, std::vector<int32_t>> leaves;          // a-vertex -> leaves
    std::map<int32_t, std::vector<Edge>> pendant_triangles;  // b-vertex -> outer pairs
};

struct NotCWShape {
    std::string reason;
    // Gap witness: a maximum matching and maximum induced matching of the
    // offending component.
    EdgeSet matching;
    EdgeSet induced_matching;
};

using ComponentShape = std::variant<StarShape, StarTriangleShape, LeafBipartiteShape, NotCWShape>;

struct ComponentVerdict {
    std::vector<int32_t> vertices;
    ComponentShape shape;
    bool is_cw() const { return !std::holds_alternative<NotCWShape>(shape); }
};

struct CWCertificate {
    std::vector<ComponentVerdict> components;
    bool all_cw = true;
};

// Per-component match against the three shapes, tried in order: star, star
// triangle, leaf-decorated bipartite with optional pendant triangles.
CWCertificate classify_structure(const Graph& g);

struct DefinitionalVerdict {
    int32_t nu = 0;
    int32_t nu0 = 0;
    bool is_cw = false;
};

// nu0(G) == nu(G), both reported.
DefinitionalVerdict is_cw_definitional(const Graph& g);

struct CWBipartiteVerdict {
    bool value = false;
    std::string reason;
};

// Bipartite and Cameron-Walker, decided by the definitional and the
// structural route together; disagreement raises InternalError.
CWBipartiteVerdict is_cw_bipartite(const Graph& g);

// Re-checks a certificate against the shape invariants. Used by tests and
// by classify_structure itself before returning.
bool validate_certificate(const Graph& g, const CWCertificate& cert, std::string* why = nullptr);

const char* shape_name(const ComponentShape& shape);

}  // namespace misx
