#include "trifree/graph.hpp"

#include <algorithm>
#include <numeric>

namespace trifree {

// VertexSet

auto VertexSet::full(int size) -> VertexSet
{
    VertexSet s(size);
    for (Vertex v = 0; v < size; ++v)
        s.set(v);
    return s;
}

auto VertexSet::from(int size, std::span<const Vertex> members) -> VertexSet
{
    VertexSet s(size);
    for (auto v : members)
        s.set(v);
    return s;
}

auto VertexSet::count() const -> int
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

auto VertexSet::first() const -> Vertex
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

auto VertexSet::next(Vertex v) const -> Vertex
{
    ++v;
    if (v >= size_)
        return -1;
    std::size_t w = v >> 6;
    auto bits = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
        if (bits != 0)
            return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        if (++w == words_.size())
            return -1;
        bits = words_[w];
    }
}

auto VertexSet::members() const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

auto VertexSet::operator&=(const VertexSet &o) -> VertexSet &
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= o.words_[w];
    return *this;
}

auto VertexSet::operator|=(const VertexSet &o) -> VertexSet &
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= o.words_[w];
    return *this;
}

auto VertexSet::subtract(const VertexSet &o) -> VertexSet &
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= ~o.words_[w];
    return *this;
}

auto VertexSet::is_subset_of(const VertexSet &o) const -> bool
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~o.words_[w]) != 0)
            return false;
    return true;
}

auto VertexSet::intersects(const VertexSet &o) const -> bool
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & o.words_[w]) != 0)
            return true;
    return false;
}

// Graph

Graph::Graph(int n, std::vector<std::uint64_t> bits) : n_(n), words_(VertexSet::word_count(n)), bits_(std::move(bits)) {}

auto Graph::from_edge_list(int n, std::span<const Edge> edges) -> Graph
{
    if (n < 1 || n > kMaxOrder)
        throw GraphError("graph order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
    GraphBuilder b(n);
    for (const auto &e : edges)
        b.add_edge(e.u, e.v);
    return b.build();
}

auto Graph::neighbors(Vertex v) const -> VertexSet
{
    VertexSet s(n_);
    auto r = row(v);
    std::copy(r.begin(), r.end(), s.words().begin());
    return s;
}

auto Graph::degree(Vertex v) const -> int
{
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

auto Graph::edge_count() const -> std::size_t
{
    std::size_t twice = 0;
    for (auto w : bits_)
        twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.push_back({u, v});
    return out;
}

auto Graph::min_degree() const -> int
{
    int d = n_;
    for (Vertex v = 0; v < n_; ++v)
        d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

auto Graph::max_degree() const -> int
{
    int d = 0;
    for (Vertex v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

auto Graph::induced(std::span<const Vertex> vs) const -> Graph
{
    GraphBuilder b(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j]))
                b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return b.build();
}

auto Graph::without(std::span<const Vertex> removed) const -> Graph
{
    std::vector<bool> gone(n_, false);
    for (auto v : removed)
        gone.at(v) = true;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n_; ++v)
        if (!gone[v])
            keep.push_back(v);
    return induced(keep);
}

auto Graph::permuted(const Permutation &p) const -> Graph
{
    if (p.size() != n_)
        throw PreconditionError("permutation size does not match graph order");
    GraphBuilder b(n_);
    for (const auto &e : edges())
        b.add_edge(p(e.u), p(e.v));
    return b.build();
}

auto operator<=>(const Graph &a, const Graph &b) -> std::strong_ordering
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    for (std::size_t i = 0; i < a.bits_.size(); ++i)
        if (auto c = a.bits_[i] <=> b.bits_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

auto operator==(const Graph &a, const Graph &b) -> bool
{
    return a.n_ == b.n_ && a.bits_ == b.bits_;
}

// GraphBuilder

GraphBuilder::GraphBuilder(int n) : n_(n), words_(VertexSet::word_count(n))
{
    if (n < 0 || n > kMaxOrder)
        throw GraphError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxOrder) + "]");
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void GraphBuilder::check_endpoints(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw GraphError("edge " + to_string({u, v}) + " has an endpoint outside [0, " + std::to_string(n_) + ")");
    if (u == v)
        throw GraphError("edge " + to_string({u, v}) + " is a loop");
}

auto GraphBuilder::has_edge(Vertex u, Vertex v) const -> bool
{
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_endpoints(u, v);
    if (has_edge(u, v))
        throw GraphError("edge " + to_string({u, v}) + " is listed twice");
    ensure_edge(u, v);
}

void GraphBuilder::ensure_edge(Vertex u, Vertex v)
{
    check_endpoints(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

auto GraphBuilder::build() const -> Graph
{
    return Graph(n_, bits_);
}

// Permutation

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map))
{
    std::vector<bool> hit(map_.size(), false);
    for (auto v : map_) {
        if (v < 0 || v >= static_cast<Vertex>(map_.size()) || hit[v])
            throw PreconditionError("permutation is not a bijection");
        hit[v] = true;
    }
}

auto Permutation::identity(int n) -> Permutation
{
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

auto Permutation::inverse() const -> Permutation
{
    std::vector<Vertex> inv(map_.size());
    for (std::size_t v = 0; v < map_.size(); ++v)
        inv[map_[v]] = static_cast<Vertex>(v);
    Permutation p;
    p.map_ = std::move(inv);
    return p;
}

auto operator*(const Permutation &a, const Permutation &b) -> Permutation
{
    if (a.size() != b.size())
        throw PreconditionError("composing permutations of different sizes");
    Permutation p;
    p.map_.resize(b.map_.size());
    for (std::size_t v = 0; v < b.map_.size(); ++v)
        p.map_[v] = a.map_[b.map_[v]];
    return p;
}

auto Permutation::is_identity() const -> bool
{
    for (std::size_t v = 0; v < map_.size(); ++v)
        if (map_[v] != static_cast<Vertex>(v))
            return false;
    return true;
}

auto is_isomorphism(const Graph &g, const Graph &h, const Permutation &p) -> bool
{
    if (g.order() != h.order() || p.size() != g.order() || g.edge_count() != h.edge_count())
        return false;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != h.adjacent(p(u), p(v)))
                return false;
    return true;
}

auto to_string(const Edge &e) -> std::string
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace trifree
