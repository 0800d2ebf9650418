#pragma once

// Brute-force reference implementations used as test oracles. They only read
// adjacency from Graph and share no algorithmic code with the library.

#include "trifree/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using trifree::Graph;
using trifree::Vertex;

auto triangle_free(const Graph &g) -> bool;
auto maximal_triangle_free(const Graph &g) -> bool;

/// Exact independence number by plain branching on a vertex (in or out).
auto alpha(const Graph &g) -> int;
/// Largest total weight of an independent set, by subset enumeration (n <= 20).
auto max_weight_independent(const Graph &g, const std::vector<int> &w) -> int;

/// Isomorphism by trying permutations with adjacency pruning.
auto isomorphic(const Graph &g, const Graph &h) -> bool;
auto automorphism_count(const Graph &g) -> std::uint64_t;
/// Number of injective maps pattern -> host preserving adjacency and non-adjacency.
auto count_induced(const Graph &host, const Graph &pattern) -> std::uint64_t;

/// Least m in [1, k] at which some multiset of 3m vertices has every vertex
/// adjacent to at most m of its entries; 0 when D(k) holds.
auto d_failing_level(const Graph &g, int k) -> int;
/// Same for Q(k), straight from the sequence definition (index subsets).
auto q_failing_level(const Graph &g, int k) -> int;

/// Twin classes as a class index per vertex (classes numbered by least member).
auto twin_classes(const Graph &g) -> std::vector<int>;

/// All graphs on n labelled vertices, reduced to isomorphism classes by a
/// minimum-over-all-permutations canonical code (n <= 7).
auto triangle_free_class_count(int n) -> int;
auto maximal_triangle_free_class_count(int n) -> int;

auto random_graph(std::mt19937_64 &rng, int n, double p) -> Graph;
auto random_triangle_free(std::mt19937_64 &rng, int n, int attempts) -> Graph;
auto random_permutation(std::mt19937_64 &rng, int n) -> std::vector<Vertex>;
auto relabel(const Graph &g, const std::vector<Vertex> &perm) -> Graph;

} // namespace oracle
