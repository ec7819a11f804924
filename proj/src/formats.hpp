#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace misx {

// graph6: 6 bits per byte, each byte offset by 63. Length field N(n) is one
// byte for n <= 62 and byte 126 followed by three 6-bit bytes (18-bit n,
// most significant group first) for 63 <= n <= 258047. Edge bits cover the
// upper triangle in column-major order (0,1),(0,2),(1,2),(0,3),...; groups
// are packed most significant bit first and zero-padded to a multiple of 6.
//
// A leading ">>graph6<<" header and trailing CR/LF are tolerated.
Graph parse_graph6(std::string_view record);
std::string to_graph6(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
// ignored. An optional single-integer first line fixes the vertex count;
// otherwise n = max endpoint + 1 (0 for empty input).
Graph parse_edge_list(std::string_view text);

enum class InputFormat { Auto, Graph6, EdgeList };

// Resolves Auto: digit-only or multi-line or space-separated input reads as
// an edge list, a single token of graph6 bytes as graph6.
Graph parse_graph_auto(std::string_view text, InputFormat format = InputFormat::Auto);

}  // namespace misx
