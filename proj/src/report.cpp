#include "trifree/report.hpp"

#include "trifree/io.hpp"

namespace trifree {

auto graph_json(const Graph &g) -> Json
{
    Json j;
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["graph6"] = write_graph6(g);
    return j;
}

auto graph_from_json(const Json &j) -> Graph
{
    if (j.is_string())
        return read_graph6(j.get<std::string>());
    if (j.is_object() && j.contains("graph6"))
        return read_graph6(j.at("graph6").get<std::string>());
    throw FormatError("payload carries no graph6 field");
}

auto weights_json(const WeightVector &w) -> Json
{
    Json j;
    j["total"] = w.total();
    j["weights"] = w.w;
    return j;
}

auto family_json(const FamilyId &id) -> Json
{
    Json j;
    if (const auto *a = std::get_if<AndrasfaiId>(&id)) {
        j["family"] = "andrasfai";
        j["k"] = a->k;
    }
    else {
        const auto &v = std::get<VegaId>(id);
        j["family"] = "vega";
        j["i"] = v.i;
        j["mu"] = v.mu;
        j["nu"] = v.nu;
    }
    j["name"] = to_string(id);
    return j;
}

auto blowup_json(const BlowupSpec &spec) -> Json
{
    Json j;
    j["base"] = graph_json(spec.base);
    j["weights"] = spec.weights;
    j["expanded_order"] = spec.expanded_order();
    return j;
}

auto d_verdict_json(const DVerdict &v) -> Json
{
    Json j;
    j["holds"] = v.holds;
    j["level"] = v.level;
    j["witness"] = v.witness ? weights_json(*v.witness) : Json(nullptr);
    return j;
}

auto q_verdict_json(const QVerdict &v) -> Json
{
    Json j;
    j["holds"] = v.holds;
    j["level"] = v.level;
    j["witness"] = v.witness ? weights_json(*v.witness) : Json(nullptr);
    return j;
}

auto recognition_json(const RecognitionResult &r) -> Json
{
    Json j;
    j["recognized"] = r.recognized();
    if (r.certificate) {
        Json c;
        c["family"] = family_json(r.certificate->family);
        c["class_map"] = r.certificate->class_map;
        c["weights"] = r.certificate->weights;
        j["certificate"] = c;
    }
    if (r.refutation) {
        const auto &f = *r.refutation;
        Json c;
        c["reason"] = to_string(f.kind);
        if (f.maximality.triangle)
            c["triangle"] = *f.maximality.triangle;
        if (f.maximality.open_pair)
            c["open_pair"] = {f.maximality.open_pair->u, f.maximality.open_pair->v};
        if (f.witness) {
            c["level"] = f.level;
            c["witness"] = weights_json(*f.witness);
        }
        if (!f.details.empty())
            c["details"] = f.details;
        j["refutation"] = c;
    }
    return j;
}

auto census_row_json(const CensusRow &row) -> Json
{
    Json j;
    j["graph6"] = write_graph6(row.graph);
    j["order"] = row.order;
    j["min_degree"] = row.min_degree;
    j["d2"] = row.d2;
    j["d3"] = row.d3;
    j["d4"] = row.d4;
    j["q4"] = row.q4;
    j["recognized"] = row.recognized ? Json(to_string(*row.recognized)) : Json(nullptr);
    j["induced_c6"] = row.induced_c6;
    j["contains_upsilon"] = row.contains_upsilon;
    return j;
}

auto census_json(const CensusResult &c) -> Json
{
    Json j;
    j["n"] = c.n;
    j["graphs"] = c.rows.size();
    std::size_t recognized = 0;
    for (const auto &r : c.rows)
        recognized += r.recognized.has_value();
    j["recognized"] = recognized;
    j["rows"] = Json::array();
    for (const auto &r : c.rows)
        j["rows"].push_back(census_row_json(r));
    j["failures"] = Json::array();
    for (const auto &f : c.failures)
        j["failures"].push_back({{"graph", graph_json(f.graph)}, {"invariant", f.invariant}});
    j["inconsistent"] = Json::array();
    for (const auto &g : c.inconsistent)
        j["inconsistent"].push_back(graph_json(g));
    return j;
}

auto hunt_json(const HuntResult &h) -> Json
{
    Json j;
    j["max_n"] = h.max_n;
    Json examined = Json::object();
    for (std::size_t n = 2; n < h.examined.size(); ++n)
        examined[std::to_string(n)] = h.examined[n];
    j["examined"] = examined;
    j["hits"] = Json::array();
    for (const auto &g : h.hits)
        j["hits"].push_back(graph_json(g));
    return j;
}

auto extremal_json(const ExtremalResult &r) -> Json
{
    Json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["k"] = r.k;
    j["formula"] = r.formula_value;
    j["best_found"] = r.best_found;
    j["attained"] = r.best_found == r.formula_value;
    j["witness_family"] = r.witness_family ? family_json(*r.witness_family) : Json(nullptr);
    j["witness"] = r.witness ? blowup_json(*r.witness) : Json(nullptr);
    j["templates"] = Json::array();
    for (const auto &t : r.templates) {
        Json e;
        e["family"] = to_string(t.family);
        e["best_edges"] = t.witness ? Json(t.edges) : Json(nullptr);
        e["weights"] = t.witness ? Json(t.witness->weights) : Json(nullptr);
        j["templates"].push_back(e);
    }
    return j;
}

} // namespace trifree
