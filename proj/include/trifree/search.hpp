#pragma once

#include "trifree/graph.hpp"
#include "trifree/recognition.hpp"
#include "trifree/twins.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifree {

/// Raised when a request exceeds the desk-scale limits without an override.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kEnumerationGuard = 12;

struct EnumerationOptions {
    int jobs = 1;
    /// Permit orders beyond kEnumerationGuard.
    bool allow_large = false;
};

/// Runs fn(0..count-1) on up to `jobs` threads; fn must only touch its own slot.
void parallel_for(int count, int jobs, const std::function<void(int)> &fn);

/// All triangle-free graphs on n vertices up to isomorphism, as canonical
/// forms in increasing order.
auto triangle_free_graphs(int n, EnumerationOptions options = {}) -> std::vector<Graph>;

/// All maximal triangle-free graphs on n vertices up to isomorphism, as
/// canonical forms in increasing order.
auto maximal_triangle_free_graphs(int n, EnumerationOptions options = {}) -> std::vector<Graph>;

struct CensusRow {
    Graph graph;
    int order = 0;
    bool d2 = false;
    bool d3 = false;
    bool d4 = false;
    bool q4 = false;
    std::optional<FamilyId> recognized;
    bool induced_c6 = false;
    bool contains_upsilon = false;
    int min_degree = 0;
};

struct CensusFailure {
    Graph graph;
    std::string invariant;
};

struct CensusResult {
    int n = 0;
    std::vector<CensusRow> rows;
    std::vector<CensusFailure> failures;
    /// Graphs for which recognition reported an Inconsistent outcome.
    std::vector<Graph> inconsistent;
};

auto census_row(const Graph &g) -> CensusRow;
/// Invariants of a census row that failed, in a fixed order.
auto failed_invariants(const CensusRow &row) -> std::vector<std::string>;
auto census(int n, EnumerationOptions options = {}) -> CensusResult;

struct HuntResult {
    int max_n = 0;
    /// Number of maximal triangle-free graphs examined per order, index = order.
    std::vector<std::size_t> examined;
    std::vector<Graph> hits;
};

/// Every maximal triangle-free graph with at most max_n vertices satisfying
/// D(3) but not D(4); each hit is re-validated on the graph itself.
auto hunt_conjecture(int max_n, EnumerationOptions options = {}) -> HuntResult;

struct TemplateBest {
    FamilyId family;
    std::optional<BlowupSpec> witness;
    std::int64_t edges = -1;
};

struct ExtremalResult {
    std::int64_t n = 0;
    std::int64_t s = 0;
    std::int64_t k = 0;
    std::int64_t formula_value = 0;
    std::int64_t best_found = -1;
    std::optional<BlowupSpec> witness;
    std::optional<FamilyId> witness_family;
    /// Every template searched, in search order, with its own optimum.
    std::vector<TemplateBest> templates;
};

inline constexpr int kExtremalGuard = 30;

/// Best blow-up of Γ_{k-1}, Γ_k, Γ_{k+1} and of every Vega graph with at most
/// n vertices, subject to order n and independence number at most s.
auto search_extremal(int n, int s) -> ExtremalResult;

/// Largest edge count of a blow-up of t on n vertices with α ≤ s, with the
/// lexicographically least optimal weights (nullopt when none exists).
auto best_blowup(const Graph &t, int n, int s) -> std::optional<BlowupSpec>;

auto blowup_edge_count(const BlowupSpec &spec) -> std::int64_t;

} // namespace trifree
