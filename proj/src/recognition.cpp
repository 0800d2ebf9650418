#include "trifree/recognition.hpp"

#include "trifree/canon.hpp"
#include "trifree/embed.hpp"
#include "trifree/twins.hpp"

#include <algorithm>

namespace trifree {

auto to_string(const FamilyId &id) -> std::string
{
    return std::visit([](const auto &x) { return to_string(x); }, id);
}

auto is_andrasfai(const FamilyId &id) -> bool
{
    return std::holds_alternative<AndrasfaiId>(id);
}

auto template_graph(const FamilyId &id) -> Graph
{
    if (const auto *a = std::get_if<AndrasfaiId>(&id))
        return andrasfai(*a);
    return vega(std::get<VegaId>(id)).graph;
}

auto to_string(RefutationKind kind) -> std::string
{
    switch (kind) {
    case RefutationKind::NotMaximalTriangleFree:
        return "not-maximal-triangle-free";
    case RefutationKind::DFourFails:
        return "d4-fails";
    case RefutationKind::Inconsistent:
        return "inconsistent";
    }
    return "?";
}

auto candidate_families(int q) -> std::vector<FamilyId>
{
    std::vector<FamilyId> out;
    if ((q + 1) % 3 == 0 && q >= 2)
        out.emplace_back(AndrasfaiId{(q + 1) / 3});
    for (int mu = 0; mu <= 1; ++mu)
        for (int nu = 0; nu <= 1; ++nu) {
            int rest = q - 7 + mu + nu;
            if (rest >= 6 && rest % 3 == 0)
                out.emplace_back(VegaId{rest / 3, mu, nu});
        }
    return out;
}

auto recognize(const Graph &g) -> RecognitionResult
{
    if (g.order() < 2)
        throw PreconditionError("recognition needs at least two vertices");
    RecognitionResult result;
    auto maximality = check_maximal_triangle_free(g);
    if (!maximality.holds) {
        result.refutation = Refutation{RefutationKind::NotMaximalTriangleFree, maximality, 0, std::nullopt, ""};
        return result;
    }

    auto tp = twin_partition(g);
    auto omega = quotient(g, tp);
    // Andrasfai graphs have no induced hexagon and so no induced Mycielski-Grotzsch
    // graph, while every Vega graph has one.
    bool has_upsilon = find_induced(omega, mycielski_grotzsch().graph).has_value();
    for (const auto &family : candidate_families(omega.order())) {
        if (is_andrasfai(family) == has_upsilon)
            continue;
        auto t = template_graph(family);
        if (auto p = isomorphic(omega, t)) {
            result.certificate = RecognitionCertificate{family, p->map(), tp.class_sizes()};
            return result;
        }
    }

    auto d = check_d(omega, 4, {.use_quotient = false});
    Refutation r;
    if (!d.holds) {
        r.kind = RefutationKind::DFourFails;
        r.level = d.level;
        WeightVector lifted{std::vector<int>(g.order(), 0)};
        for (int c = 0; c < tp.size(); ++c)
            lifted.w[tp.representative(c)] = d.witness->w[c];
        r.witness = lifted;
    }
    else {
        r.kind = RefutationKind::Inconsistent;
        r.details = "twin quotient of order " + std::to_string(omega.order()) +
                    " satisfies D(4) but matches no Andrasfai or Vega template";
    }
    result.refutation = r;
    return result;
}

auto certify(const Graph &g, const RecognitionCertificate &c) -> bool
{
    Graph t;
    try {
        t = template_graph(c.family);
    }
    catch (const PreconditionError &) {
        return false;
    }
    if (static_cast<int>(c.class_map.size()) != t.order() || c.weights.size() != c.class_map.size())
        return false;
    std::vector<int> weights(t.order(), 0);
    for (std::size_t cls = 0; cls < c.class_map.size(); ++cls) {
        auto v = c.class_map[cls];
        if (v < 0 || v >= t.order() || weights[v] != 0 || c.weights[cls] < 1)
            return false;
        weights[v] = c.weights[cls];
    }
    auto expanded = blowup(BlowupSpec{t, weights});
    return expanded.order() == g.order() && isomorphic(g, expanded).has_value();
}

auto refutation_holds(const Graph &g, const Refutation &r) -> bool
{
    switch (r.kind) {
    case RefutationKind::NotMaximalTriangleFree:
        if (const auto &tri = r.maximality.triangle)
            return g.adjacent((*tri)[0], (*tri)[1]) && g.adjacent((*tri)[1], (*tri)[2]) && g.adjacent((*tri)[0], (*tri)[2]);
        if (const auto &pair = r.maximality.open_pair)
            return pair->u != pair->v && !g.adjacent(pair->u, pair->v) &&
                   !g.neighbors(pair->u).intersects(g.neighbors(pair->v));
        return false;
    case RefutationKind::DFourFails:
        return r.witness && r.level >= 1 && r.level <= 4 && is_d_witness(g, *r.witness, r.level);
    case RefutationKind::Inconsistent:
        return is_maximal_triangle_free(g) && check_d(g, 4).holds;
    }
    return false;
}

} // namespace trifree
