#pragma once

#include "trifree/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace trifree {

/// Injective map from pattern vertices to host vertices.
struct Embedding {
    /// map[p] is the host vertex playing pattern vertex p.
    std::vector<Vertex> map;

    auto pattern_order() const -> int { return static_cast<int>(map.size()); }
    auto contains(Vertex host_vertex) const -> bool;
    /// Pattern vertex mapped onto host_vertex, or -1.
    auto preimage(Vertex host_vertex) const -> Vertex;

    friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
};

/// True iff e is injective and pattern edges correspond exactly to host edges.
auto is_induced_embedding(const Graph &host, const Graph &pattern, const Embedding &e) -> bool;

/// Calls visit on every induced embedding in deterministic order (pattern
/// vertices placed in a fixed constraint-first order, host candidates in
/// increasing index). Enumeration stops when visit returns false.
void for_each_induced(const Graph &host, const Graph &pattern, const std::function<bool(const Embedding &)> &visit);

auto find_induced(const Graph &host, const Graph &pattern) -> std::optional<Embedding>;

auto all_induced(const Graph &host, const Graph &pattern) -> std::vector<Embedding>;

auto count_induced(const Graph &host, const Graph &pattern) -> std::size_t;

} // namespace trifree
