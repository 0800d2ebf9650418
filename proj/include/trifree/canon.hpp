#pragma once

#include "trifree/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trifree {

/// An isomorphism-invariant relabeled copy of a graph.
struct CanonicalForm {
    /// Equals source.permuted(labeling).
    Graph graph;
    /// labeling(v) is the canonical position of vertex v.
    Permutation labeling;
};

/// Automorphisms discovered by the canonical search.
struct AutomorphismGroup {
    /// Generating set; every member is re-verified against the graph.
    std::vector<Permutation> generators;
    /// Exact group order.
    std::uint64_t order = 1;
    /// orbit[v] is the least vertex in the orbit of v.
    std::vector<Vertex> orbit;
};

/// Canonical form by individualization-refinement search: the least relabeled
/// adjacency matrix over all leaves, with subtrees pruned by discovered
/// automorphisms. Optional vertex colours must be preserved by the labeling
/// and are ordered by value.
auto canonical_form(const Graph &g, std::span<const int> colours = {}) -> CanonicalForm;

/// Canonical form together with the automorphism group of the (coloured) graph.
auto canonical_form_with_group(const Graph &g, std::span<const int> colours, AutomorphismGroup &group) -> CanonicalForm;

/// A bijection p with g.permuted(p) == h, or nullopt.
auto isomorphic(const Graph &g, const Graph &h) -> std::optional<Permutation>;

auto automorphism_group(const Graph &g, std::span<const int> colours = {}) -> AutomorphismGroup;

/// Throws std::overflow_error when the order exceeds 64 bits.
auto automorphism_order(const Graph &g) -> std::uint64_t;

} // namespace trifree
