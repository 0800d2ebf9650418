#pragma once

#include "trifree/graph.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace trifree {

using Triangle = std::array<Vertex, 3>;

/// Least triangle in lexicographic order, if any.
auto find_triangle(const Graph &g) -> std::optional<Triangle>;
auto is_triangle_free(const Graph &g) -> bool;

struct MaximalityReport {
    bool holds = false;
    std::optional<Triangle> triangle;
    /// Least non-adjacent pair without a common neighbour.
    std::optional<Edge> open_pair;
};

auto check_maximal_triangle_free(const Graph &g) -> MaximalityReport;
auto is_maximal_triangle_free(const Graph &g) -> bool;

/// Maximum-weight independent subset of `within`; ties resolved towards the
/// set found first when branching on high-degree vertices.
auto max_weight_independent_set(const Graph &g, std::span<const int> weights, const VertexSet &within)
    -> std::vector<Vertex>;

struct IndependenceResult {
    int alpha = 0;
    std::vector<Vertex> witness;
};

/// Exact independence number. Twins are contracted first, so large blow-ups
/// cost no more than their base graph.
auto independence_number(const Graph &g) -> IndependenceResult;

/// A sequence of vertices recorded as multiplicities.
struct WeightVector {
    std::vector<int> w;

    auto total() const -> int;
    auto support() const -> std::vector<Vertex>;
    friend auto operator==(const WeightVector &, const WeightVector &) -> bool = default;
};

struct Coverage {
    Vertex vertex = -1;
    int value = 0;
};

/// Vertex y maximising the weight of N(y) (least such y).
auto max_coverage(const Graph &g, const WeightVector &w) -> Coverage;

/// True iff w has total 3m and no vertex sees more than m of it.
auto is_d_witness(const Graph &g, const WeightVector &w, int m) -> bool;

struct DVerdict {
    bool holds = true;
    /// Failing level, or k when the property holds.
    int level = 0;
    /// Weighting on the input graph (lifted when the search ran on the quotient).
    std::optional<WeightVector> witness;
};

struct SearchOptions {
    /// Search the twin quotient and lift the witness.
    bool use_quotient = true;
};

/// Calls visit on every D(m)-witness of g in search order: vertices in index
/// order, larger weights first. Stops when visit returns false.
void for_each_d_witness(const Graph &g, int m, const std::function<bool(const WeightVector &)> &visit);
auto find_d_witness(const Graph &g, int m) -> std::optional<WeightVector>;
auto check_d(const Graph &g, int k, SearchOptions options = {}) -> DVerdict;

/// Why a weighting does not falsify Q(m): an independent U ⊆ supp(w) from
/// which `index_count` sequence positions can be drawn, with a common
/// neighbour when index_count = m + 1.
struct QCertificate {
    std::vector<Vertex> independent;
    int index_count = 0;
    std::optional<Vertex> common_neighbour;
};

/// A certificate for w at level m, or nullopt when w falsifies Q(m).
auto q_certificate(const Graph &g, const WeightVector &w, int m) -> std::optional<QCertificate>;
auto is_valid_q_certificate(const Graph &g, const WeightVector &w, int m, const QCertificate &c) -> bool;

struct QVerdict {
    bool holds = true;
    int level = 0;
    std::optional<WeightVector> witness;
};

auto find_q_witness(const Graph &g, int m) -> std::optional<WeightVector>;
auto check_q(const Graph &g, int k, SearchOptions options = {}) -> QVerdict;

/// Maximal triangle-free and satisfying D(4).
auto in_class_d4(const Graph &g) -> bool;

struct DegreeProfile {
    std::vector<int> degrees;
    int min = 0;
    int max = 0;
};

auto degree_profile(const Graph &g) -> DegreeProfile;

} // namespace trifree
