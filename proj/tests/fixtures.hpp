#pragma once

#include <vector>

#include "graph.hpp"

namespace misx::fixtures {

// 8-vertex worked example: a C4 core {0,1,2,3} where 2 carries pendant
// leaves {6,7} and 3 carries {4,5}. Its four maximal independent sets are
// listed below and re-derived by the brute-force oracle in the tests.
inline Graph example8() {
    return Graph::from_edge_list(
        8, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {3, 4}, {3, 5}, {2, 6}, {2, 7}});
}

inline std::vector<std::vector<int32_t>> example8_mis() {
    return {{0, 1, 4, 5, 6, 7}, {2, 3}, {2, 4, 5}, {3, 6, 7}};
}

inline const char* example8_edge_list_text() {
    return "# 8-vertex leaf-decorated C4\n"
           "8\n"
           "0 2\n1 2\n0 3\n1 3\n3 4\n3 5\n2 6\n2 7\n";
}

}  // namespace misx::fixtures
