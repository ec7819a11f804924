#include "formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace misx {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(std::string_view rec, size_t offset) {
    unsigned char c = static_cast<unsigned char>(rec[offset]);
    if (c < 63 || c > 126)
        throw InputError("graph6: byte " + std::to_string(offset) + " has value " +
                         std::to_string(int(c)) + ", outside 63..126");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    if (record.substr(0, kGraph6Header.size()) == kGraph6Header)
        record.remove_prefix(kGraph6Header.size());
    while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
        record.remove_suffix(1);
    if (record.empty()) throw InputError("graph6: empty record");

    int64_t n;
    size_t offset;
    if (sextet(record, 0) == 63) {
        if (record.size() >= 2 && sextet(record, 1) == 63)
            throw UnsupportedError("graph6: records with n > 258047 are not supported");
        if (record.size() < 4) throw InputError("graph6: malformed length field, record too short");
        n = (int64_t(sextet(record, 1)) << 12) | (int64_t(sextet(record, 2)) << 6) |
            int64_t(sextet(record, 3));
        offset = 4;
    } else {
        n = sextet(record, 0);
        offset = 1;
    }

    const int64_t nbits = n * (n - 1) / 2;
    const size_t payload = size_t((nbits + 5) / 6);
    if (record.size() < offset + payload)
        throw InputError("graph6: truncated record, expected " +
                         std::to_string(offset + payload) + " bytes, got " +
                         std::to_string(record.size()));
    if (record.size() > offset + payload)
        throw InputError("graph6: trailing garbage at byte " + std::to_string(offset + payload));

    std::vector<Edge> edges;
    int64_t p = 0;
    int group = 0;
    for (int32_t j = 1; j < n; ++j) {
        for (int32_t i = 0; i < j; ++i, ++p) {
            if (p % 6 == 0) group = sextet(record, offset + size_t(p / 6));
            if ((group >> (5 - p % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (nbits % 6 != 0 && payload > 0) {
        int last = sextet(record, offset + payload - 1);
        if (last & ((1 << (6 - nbits % 6)) - 1))
            throw InputError("graph6: nonzero padding bits at byte " +
                             std::to_string(offset + payload - 1));
    }
    return Graph::from_edge_list(int32_t(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw UnsupportedError("graph6: n = " + std::to_string(n) + " exceeds 258047");
    }

    int group = 0, filled = 0;
    for (int32_t j = 1; j < n; ++j) {
        for (int32_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(char((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int64_t explicit_n = -1;
    int64_t max_seen = -1;
    bool first_content = true;

    std::istringstream lines{std::string(text)};
    std::string line;
    for (int lineno = 1; std::getline(lines, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream toks(line);
        std::vector<int64_t> vals;
        std::string tok;
        while (toks >> tok) {
            try {
                size_t used = 0;
                int64_t v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                vals.push_back(v);
            } catch (const std::exception&) {
                throw InputError("edge list line " + std::to_string(lineno) +
                                 ": expected nonnegative integer, got '" + tok + "'");
            }
        }
        if (vals.empty()) continue;
        if (vals.size() == 1) {
            if (!first_content)
                throw InputError("edge list line " + std::to_string(lineno) +
                                 ": expected 'u v' pair");
            explicit_n = vals[0];
            first_content = false;
            continue;
        }
        if (vals.size() != 2)
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": expected 'u v' pair, got " + std::to_string(vals.size()) +
                             " values");
        if (vals[0] == vals[1])
            throw InputError("edge list line " + std::to_string(lineno) + ": self-loop at vertex " +
                             std::to_string(vals[0]));
        if (explicit_n >= 0 && (vals[0] >= explicit_n || vals[1] >= explicit_n))
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": endpoint out of range for n=" + std::to_string(explicit_n));
        edges.emplace_back(int32_t(vals[0]), int32_t(vals[1]));
        max_seen = std::max({max_seen, vals[0], vals[1]});
        first_content = false;
    }

    int64_t n = explicit_n >= 0 ? explicit_n : max_seen + 1;
    if (n > 258047) throw UnsupportedError("edge list: vertex count exceeds 258047");
    return Graph::from_edge_list(int32_t(n), edges);
}

Graph parse_graph_auto(std::string_view text, InputFormat format) {
    if (format == InputFormat::Graph6) return parse_graph6(text);
    if (format == InputFormat::EdgeList) return parse_edge_list(text);

    std::string_view body = trim(text);
    if (body.empty()) return parse_edge_list(text);
    if (body.substr(0, kGraph6Header.size()) == kGraph6Header) return parse_graph6(body);
    bool multiline = body.find('\n') != std::string_view::npos;
    bool spaced = body.find(' ') != std::string_view::npos ||
                  body.find('\t') != std::string_view::npos;
    if (multiline || spaced) return parse_edge_list(text);
    if (std::all_of(body.begin(), body.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return parse_edge_list(text);
    if (std::all_of(body.begin(), body.end(), [](char c) {
            auto u = static_cast<unsigned char>(c);
            return u >= 63 && u <= 126;
        }))
        return parse_graph6(body);
    return parse_edge_list(text);
}

}  // namespace misx
