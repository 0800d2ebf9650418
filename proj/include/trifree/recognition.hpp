#pragma once

#include "trifree/families.hpp"
#include "trifree/graph.hpp"
#include "trifree/properties.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace trifree {

using FamilyId = std::variant<AndrasfaiId, VegaId>;

auto to_string(const FamilyId &id) -> std::string;
auto is_andrasfai(const FamilyId &id) -> bool;
auto template_graph(const FamilyId &id) -> Graph;

/// Twin class c of the input is blown up from template vertex class_map[c]
/// with weights[c] copies; classes follow twin_partition order.
struct RecognitionCertificate {
    FamilyId family;
    std::vector<Vertex> class_map;
    std::vector<int> weights;
};

enum class RefutationKind { NotMaximalTriangleFree, DFourFails, Inconsistent };

auto to_string(RefutationKind kind) -> std::string;

struct Refutation {
    RefutationKind kind = RefutationKind::Inconsistent;
    /// Set for NotMaximalTriangleFree.
    MaximalityReport maximality;
    /// Set for DFourFails: failing level and weighting on the input graph.
    int level = 0;
    std::optional<WeightVector> witness;
    std::string details;
};

struct RecognitionResult {
    std::optional<RecognitionCertificate> certificate;
    std::optional<Refutation> refutation;

    auto recognized() const -> bool { return certificate.has_value(); }
};

/// Template candidates for a twin-free quotient of the given order, Andrasfai first.
auto candidate_families(int quotient_order) -> std::vector<FamilyId>;

/// Decides whether a maximal triangle-free graph is a blow-up of an Andrasfai
/// or Vega graph. Throws PreconditionError for graphs with fewer than two vertices.
auto recognize(const Graph &g) -> RecognitionResult;

/// Rebuilds the template, expands it by the certificate weights and tests
/// isomorphism with g.
auto certify(const Graph &g, const RecognitionCertificate &c) -> bool;

/// Re-validates a refutation against g from scratch.
auto refutation_holds(const Graph &g, const Refutation &r) -> bool;

} // namespace trifree
