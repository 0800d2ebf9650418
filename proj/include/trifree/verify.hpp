#pragma once

#include "trifree/embed.hpp"
#include "trifree/graph.hpp"
#include "trifree/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifree {

class UnknownCheck : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckOptions {
    int jobs = 1;
    /// Treat automorphism-group mismatches against the named maps as failures.
    bool strict_automorphisms = false;
};

struct CheckReport {
    std::string name;
    Json parameters;
    std::uint64_t seed = 0;
    bool passed = false;
    /// Values computed along the way (counts, orders, findings).
    Json details;
    /// First counterexample; always carries the offending graph and the
    /// parameters that reproduce it.
    std::optional<Json> counterexample;
    double elapsed_seconds = 0;
};

/// Common neighbours of a_{i-1}, a_{i+1}, b_i for an embedded copy of the
/// Mycielski-Grotzsch graph (copy.map indexed by UpsilonLabeling).
struct ExtSet {
    Embedding copy;
    int index = 0;
    VertexSet vertices;
};

auto ext_set(const Graph &g, const Embedding &copy, int index) -> ExtSet;

/// True iff t is independent in the Vega graph, meets {x, y} and exactly two
/// inner colour classes.
auto is_small(const LabeledVega &vega, const VertexSet &t) -> bool;

auto check_names() -> std::vector<std::string>;

/// Fixed seed per check name (FNV-1a of the name).
auto default_seed(const std::string &name) -> std::uint64_t;

/// Runs one registered check. Throws UnknownCheck for unregistered names and
/// PreconditionError for malformed parameters.
auto run_check(const std::string &name, const Json &params = Json::object(), const CheckOptions &options = {})
    -> CheckReport;

auto report_json(const CheckReport &r, bool with_timing) -> Json;

} // namespace trifree
