#pragma once

#include "trifree/embed.hpp"
#include "trifree/graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace trifree {

/// Raised when an argument contradicts a structural contract (e.g. a stale partition).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Partition of V(G) into classes of vertices with identical neighbourhoods.
struct TwinPartition {
    /// Classes ordered by least member; members ascending.
    std::vector<std::vector<Vertex>> classes;
    /// class_of[v] indexes classes.
    std::vector<int> class_of;

    auto size() const -> int { return static_cast<int>(classes.size()); }
    auto representative(int c) const -> Vertex { return classes[c].front(); }
    auto class_sizes() const -> std::vector<int>;

    friend auto operator==(const TwinPartition &, const TwinPartition &) -> bool = default;
};

/// A base graph with a positive multiplicity per vertex.
struct BlowupSpec {
    Graph base;
    std::vector<int> weights;

    auto expanded_order() const -> int;
};

auto twin_partition(const Graph &g) -> TwinPartition;

auto is_twin_free(const Graph &g) -> bool;

/// Graph on the classes of p; throws ContractViolation unless p is the twin
/// partition of g.
auto quotient(const Graph &g, const TwinPartition &p) -> Graph;

/// Replaces vertex v of the base by an independent block of weights[v]
/// vertices (blocks numbered in base-vertex order) and every edge by a
/// complete bipartite bundle.
auto blowup(const BlowupSpec &spec) -> Graph;

/// First expanded vertex of each block, plus the total as the last entry.
auto blowup_offsets(const BlowupSpec &spec) -> std::vector<int>;

/// All q' with N(q') ∩ V(H) = N(q) ∩ V(H), where H is the image of h and q
/// lies in H (PreconditionError otherwise).
auto h_twins(const Graph &g, const Embedding &h, Vertex q) -> VertexSet;

struct TwinPropertyFailure {
    Embedding copy;
    /// Pattern edge whose image qz was tested.
    Edge pattern_edge;
    Vertex q_twin = -1;
    Vertex z_twin = -1;
};

struct TwinPropertyResult {
    bool holds = true;
    std::optional<TwinPropertyFailure> counterexample;
};

/// (F,e)-twin property over every induced copy of F; with no edge given,
/// every edge of F is tested.
auto has_twin_property(const Graph &g, const Graph &f, std::optional<Edge> e = std::nullopt) -> TwinPropertyResult;

} // namespace trifree
