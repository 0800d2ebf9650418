#pragma once

#include "trifree/embed.hpp"
#include "trifree/graph.hpp"
#include "trifree/twins.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifree {

struct AndrasfaiId {
    int k = 1;

    friend auto operator<=>(const AndrasfaiId &, const AndrasfaiId &) = default;
};

struct VegaId {
    int i = 2;
    int mu = 0;
    int nu = 0;

    auto order() const -> int { return 3 * i + 7 - mu - nu; }

    friend auto operator<=>(const VegaId &, const VegaId &) = default;
};

auto to_string(const AndrasfaiId &id) -> std::string;
auto to_string(const VegaId &id) -> std::string;

enum class Colour { Red, Green, Blue };

auto to_string(Colour c) -> std::string;

/// Vertex names of a Vega graph. Numbering: inner vertices first (label
/// 2i-1 skipped when nu = 1), then a, v, c, u, b, w, then x, then y.
struct VegaLabeling {
    VegaId id;
    Vertex a = -1, v = -1, c = -1, u = -1, b = -1, w = -1, x = -1;
    std::optional<Vertex> y;
    /// inner[j] is the vertex carrying inner label j (absent for 2i-1 when nu = 1).
    std::vector<std::optional<Vertex>> inner;

    auto inner_count() const -> int { return 3 * id.i - 1; }
    auto inner_vertex(int label) const -> std::optional<Vertex>;
    /// Inner label of a vertex, or -1 for hexagon/outer vertices.
    auto inner_label(Vertex vertex) const -> int;
    auto colour_of_label(int label) const -> Colour;
    auto colour_class(Colour c) const -> std::vector<Vertex>;
    auto is_inner(Vertex vertex) const -> bool { return inner_label(vertex) >= 0; }
    /// Paper-style name ("a", "x", "7", ...).
    auto name(Vertex vertex) const -> std::string;
    /// Vertex by name; throws PreconditionError when absent.
    auto vertex(const std::string &name) const -> Vertex;
};

/// Mycielski-Grötzsch labelling: a_0..a_4 are 0..4, b_0..b_4 are 5..9, c is 10.
struct UpsilonLabeling {
    static constexpr auto a(int i) -> Vertex { return ((i % 5) + 5) % 5; }
    static constexpr auto b(int i) -> Vertex { return 5 + ((i % 5) + 5) % 5; }
    static constexpr Vertex c = 10;
    static auto name(Vertex v) -> std::string;
};

struct AuxPath {
    /// p[0]-p[1]-p[2]-p[3] is a path in the inner graph; p[0], p[3] share `colour`.
    std::array<Vertex, 4> p{};
    Colour colour = Colour::Red;
    /// j when this is the path j-(j+i)-(j+2i)-(j+1) (in some direction), else -1.
    int pi_index = -1;

    friend auto operator==(const AuxPath &, const AuxPath &) -> bool = default;
};

struct NamedMap {
    std::string name;
    VegaId source;
    VegaId target;
    Permutation perm;
};

/// Raised when a named Vega map does not exist for the requested parameters.
class UnavailableMap : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LabeledVega {
    Graph graph;
    VegaLabeling labels;
};

struct LabeledUpsilon {
    Graph graph;
    UpsilonLabeling labels;
};

/// Circulant on Z/(3k-1) with connection set {k, ..., 2k-1}.
auto andrasfai(AndrasfaiId id) -> Graph;
auto mycielski_grotzsch() -> LabeledUpsilon;
auto vega(VegaId id) -> LabeledVega;
/// K_{4,4} minus a perfect matching: a_1..a_4 are 0..3, b_1..b_4 are 4..7.
auto cube() -> Graph;
/// Vertices a_0..a_2 (0..2), b_0..b_2 (3..5), c_0..c_2 (6..8).
auto graph_n() -> Graph;
/// Circulant on Z/6k with connection set {±k, ..., ±(2k-1)}.
auto cayley_6k(int k) -> Graph;
/// Twelve-vertex 4-regular triangle-free graph: a1..a8 are 0..7, b1..b4 are 8..11.
auto fig41() -> Graph;
/// Mycielski-Grötzsch base with weights c:4, a_i:2, b_i:3.
auto haggkvist_spec() -> BlowupSpec;

auto petersen() -> Graph;
auto cycle(int n) -> Graph;
auto complete_bipartite(int a, int b) -> Graph;
auto empty_graph(int n) -> Graph;

/// All named maps defined for id (sigma, tau0, tau1, rho), each validated.
auto named_maps(VegaId id) -> std::vector<NamedMap>;
/// One named map; throws UnavailableMap when not defined for id.
auto named_map(VegaId id, const std::string &name) -> NamedMap;

/// Every auxiliary path, oriented so that p[1] is green for red paths and red
/// otherwise, sorted by inner labels.
auto aux_paths(VegaId id) -> std::vector<AuxPath>;

/// Induced copy of the Mycielski-Grötzsch graph built from the hexagon, x and
/// the four path vertices; map is indexed by UpsilonLabeling.
auto upsilon_of_path(VegaId id, const AuxPath &path) -> Embedding;

/// Exact value of ½k(k−1)n² − k(3k−4)ns + ½(3k−4)(3k−1)s² with
/// k = ⌈s/(3s−n)⌉, defined for n/3 < s ≤ n/2.
auto extremal_formula(std::int64_t n, std::int64_t s) -> std::int64_t;
auto extremal_k(std::int64_t n, std::int64_t s) -> std::int64_t;

} // namespace trifree
