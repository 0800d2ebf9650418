#include "trifree/twins.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace trifree {

auto TwinPartition::class_sizes() const -> std::vector<int>
{
    std::vector<int> sizes;
    for (const auto &c : classes)
        sizes.push_back(static_cast<int>(c.size()));
    return sizes;
}

auto BlowupSpec::expanded_order() const -> int
{
    return std::accumulate(weights.begin(), weights.end(), 0);
}

auto twin_partition(const Graph &g) -> TwinPartition
{
    TwinPartition p;
    p.class_of.assign(g.order(), -1);
    std::map<std::vector<std::uint64_t>, int> by_row;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto r = g.row(v);
        std::vector<std::uint64_t> key(r.begin(), r.end());
        auto [it, inserted] = by_row.try_emplace(std::move(key), p.size());
        if (inserted)
            p.classes.emplace_back();
        p.classes[it->second].push_back(v);
        p.class_of[v] = it->second;
    }
    return p;
}

auto is_twin_free(const Graph &g) -> bool
{
    return twin_partition(g).size() == g.order();
}

auto quotient(const Graph &g, const TwinPartition &p) -> Graph
{
    if (p != twin_partition(g))
        throw ContractViolation("partition is not the twin partition of the graph");
    GraphBuilder b(p.size());
    for (int c = 0; c < p.size(); ++c)
        for (int d = c + 1; d < p.size(); ++d)
            if (g.adjacent(p.representative(c), p.representative(d)))
                b.add_edge(c, d);
    return b.build();
}

auto blowup_offsets(const BlowupSpec &spec) -> std::vector<int>
{
    if (static_cast<int>(spec.weights.size()) != spec.base.order())
        throw PreconditionError("blow-up needs one weight per base vertex");
    std::vector<int> offsets{0};
    for (auto w : spec.weights) {
        if (w < 1)
            throw PreconditionError("blow-up weights must be at least 1");
        offsets.push_back(offsets.back() + w);
    }
    return offsets;
}

auto blowup(const BlowupSpec &spec) -> Graph
{
    auto offsets = blowup_offsets(spec);
    GraphBuilder b(offsets.back());
    for (const auto &e : spec.base.edges())
        for (int x = offsets[e.u]; x < offsets[e.u + 1]; ++x)
            for (int y = offsets[e.v]; y < offsets[e.v + 1]; ++y)
                b.add_edge(x, y);
    return b.build();
}

auto h_twins(const Graph &g, const Embedding &h, Vertex q) -> VertexSet
{
    if (!h.contains(q))
        throw PreconditionError("vertex " + std::to_string(q) + " is not in the embedded copy");
    auto image = VertexSet::from(g.order(), h.map);
    auto target = g.neighbors(q) & image;
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if ((g.neighbors(v) & image) == target)
            out.set(v);
    return out;
}

auto has_twin_property(const Graph &g, const Graph &f, std::optional<Edge> e) -> TwinPropertyResult
{
    std::vector<Edge> pattern_edges;
    if (e) {
        if (e->u < 0 || e->v < 0 || e->u >= f.order() || e->v >= f.order() || !f.adjacent(e->u, e->v))
            throw PreconditionError("edge " + to_string(*e) + " is not an edge of the pattern");
        pattern_edges.push_back(*e);
    }
    else {
        pattern_edges = f.edges();
    }

    TwinPropertyResult result;
    const int n = g.order();
    const int words = g.words_per_row();
    std::vector<std::uint64_t> image(words), key(words);
    for_each_induced(g, f, [&](const Embedding &copy) {
        std::fill(image.begin(), image.end(), 0);
        for (auto v : copy.map)
            image[v >> 6] |= std::uint64_t{1} << (v & 63);
        // Restricted neighbourhood of every vertex of g, computed once per copy.
        std::vector<std::uint64_t> restricted(static_cast<std::size_t>(n) * words);
        for (Vertex v = 0; v < n; ++v) {
            auto r = g.row(v);
            for (int w = 0; w < words; ++w)
                restricted[static_cast<std::size_t>(v) * words + w] = r[w] & image[w];
        }
        auto twins_of = [&](Vertex q) {
            std::vector<Vertex> out;
            const auto *target = restricted.data() + static_cast<std::size_t>(q) * words;
            for (Vertex v = 0; v < n; ++v)
                if (std::equal(target, target + words, restricted.data() + static_cast<std::size_t>(v) * words))
                    out.push_back(v);
            return out;
        };
        for (const auto &pe : pattern_edges) {
            auto qs = twins_of(copy.map[pe.u]);
            auto zs = twins_of(copy.map[pe.v]);
            for (auto q2 : qs)
                for (auto z2 : zs)
                    if (!g.adjacent(q2, z2)) {
                        result.holds = false;
                        result.counterexample = TwinPropertyFailure{copy, pe, q2, z2};
                        return false;
                    }
        }
        return true;
    });
    return result;
}

} // namespace trifree
