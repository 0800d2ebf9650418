#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trifree {

using Vertex = int;

inline constexpr int kMaxOrder = 1024;

/// Raised when a graph cannot be built from the supplied data.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Dynamic bitset over the vertex range [0, size).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int size) : size_(size), words_(word_count(size), 0) {}

    static auto word_count(int size) -> int { return (size + 63) / 64; }

    static auto full(int size) -> VertexSet;
    static auto from(int size, std::span<const Vertex> members) -> VertexSet;

    auto size() const -> int { return size_; }
    auto words() const -> std::span<const std::uint64_t> { return words_; }
    auto words() -> std::span<std::uint64_t> { return words_; }

    auto test(Vertex v) const -> bool { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    auto count() const -> int;
    auto empty() const -> bool;
    /// Least member, or -1 when empty.
    auto first() const -> Vertex;
    /// Least member greater than v, or -1.
    auto next(Vertex v) const -> Vertex;
    auto members() const -> std::vector<Vertex>;

    template <typename F>
    void for_each(F &&f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (auto bits = words_[w]; bits != 0; bits &= bits - 1)
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        }
    }

    auto operator&=(const VertexSet &o) -> VertexSet &;
    auto operator|=(const VertexSet &o) -> VertexSet &;
    /// Removes every member of o.
    auto subtract(const VertexSet &o) -> VertexSet &;
    auto is_subset_of(const VertexSet &o) const -> bool;
    auto intersects(const VertexSet &o) const -> bool;

    friend auto operator&(VertexSet a, const VertexSet &b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet &b) -> VertexSet { return a |= b; }
    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

class Permutation;

/// Immutable simple undirected graph stored as dense adjacency bit rows.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list; rejects loops, duplicates and
    /// out-of-range endpoints, naming the offending pair.
    static auto from_edge_list(int n, std::span<const Edge> edges) -> Graph;

    auto order() const -> int { return n_; }
    auto words_per_row() const -> int { return words_; }

    auto adjacent(Vertex u, Vertex v) const -> bool
    {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }

    auto row(Vertex v) const -> std::span<const std::uint64_t>
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    auto neighbors(Vertex v) const -> VertexSet;
    auto degree(Vertex v) const -> int;
    auto edge_count() const -> std::size_t;
    /// Edges (u, v) with u < v in lexicographic order.
    auto edges() const -> std::vector<Edge>;
    auto min_degree() const -> int;
    auto max_degree() const -> int;

    /// Induced subgraph on the listed vertices; vertex i of the result is vs[i].
    auto induced(std::span<const Vertex> vs) const -> Graph;
    /// Graph with the listed vertices removed, remaining vertices renumbered in order.
    auto without(std::span<const Vertex> removed) const -> Graph;
    /// Relabeled copy: vertex v of this graph becomes p(v).
    auto permuted(const Permutation &p) const -> Graph;

    /// Lexicographic comparison of the adjacency rows (order first).
    friend auto operator<=>(const Graph &a, const Graph &b) -> std::strong_ordering;
    friend auto operator==(const Graph &a, const Graph &b) -> bool;

private:
    friend class GraphBuilder;
    Graph(int n, std::vector<std::uint64_t> bits);

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable accumulator producing an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    auto order() const -> int { return n_; }
    auto has_edge(Vertex u, Vertex v) const -> bool;
    /// Adds uv; throws GraphError on loops, duplicates and bad endpoints.
    void add_edge(Vertex u, Vertex v);
    /// Adds uv if absent, ignoring duplicates.
    void ensure_edge(Vertex u, Vertex v);
    auto build() const -> Graph;

private:
    void check_endpoints(Vertex u, Vertex v) const;

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Bijection on 0..n-1; map[v] is the image of v.
class Permutation {
public:
    Permutation() = default;
    /// Throws PreconditionError unless map is a bijection.
    explicit Permutation(std::vector<Vertex> map);

    static auto identity(int n) -> Permutation;

    auto size() const -> int { return static_cast<int>(map_.size()); }
    auto operator()(Vertex v) const -> Vertex { return map_[v]; }
    auto map() const -> const std::vector<Vertex> & { return map_; }

    auto inverse() const -> Permutation;
    /// (a * b)(v) = a(b(v)).
    friend auto operator*(const Permutation &a, const Permutation &b) -> Permutation;
    friend auto operator==(const Permutation &, const Permutation &) -> bool = default;

    auto is_identity() const -> bool;

private:
    std::vector<Vertex> map_;
};

/// True iff p carries the edges of g exactly onto the edges of h.
auto is_isomorphism(const Graph &g, const Graph &h, const Permutation &p) -> bool;

auto to_string(const Edge &e) -> std::string;

} // namespace trifree
