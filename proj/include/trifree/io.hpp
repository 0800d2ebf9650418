#pragma once

#include "trifree/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trifree {

/// Raised for malformed graph text.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p tf <n>" followed by one "e <u> <v>" line per edge (u < v, sorted).
auto write_elist(const Graph &g) -> std::string;
/// Whitespace-tolerant, order-insensitive; '#' starts a comment; duplicate
/// edges, loops and out-of-range endpoints are rejected.
auto read_elist(std::string_view text) -> Graph;

/// graph6 encoding without a trailing newline.
auto write_graph6(const Graph &g) -> std::string;
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
auto read_graph6(std::string_view text) -> Graph;

/// elist when the input opens with a comment or a "p " header, otherwise graph6.
auto read_graph(std::string_view text) -> Graph;

/// Undirected DOT; labels[v] (when given) names vertex v.
auto write_dot(const Graph &g, const std::vector<std::string> &labels = {}, std::string_view name = "G") -> std::string;

auto read_file(const std::string &path) -> std::string;

} // namespace trifree
