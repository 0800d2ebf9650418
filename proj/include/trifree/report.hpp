#pragma once

#include "trifree/properties.hpp"
#include "trifree/recognition.hpp"
#include "trifree/search.hpp"

#include <json.hpp>

namespace trifree {

using Json = nlohmann::ordered_json;

auto graph_json(const Graph &g) -> Json;
auto weights_json(const WeightVector &w) -> Json;
auto family_json(const FamilyId &id) -> Json;
auto blowup_json(const BlowupSpec &spec) -> Json;
auto d_verdict_json(const DVerdict &v) -> Json;
auto q_verdict_json(const QVerdict &v) -> Json;
auto recognition_json(const RecognitionResult &r) -> Json;
auto census_row_json(const CensusRow &row) -> Json;
auto census_json(const CensusResult &c) -> Json;
auto hunt_json(const HuntResult &h) -> Json;
auto extremal_json(const ExtremalResult &r) -> Json;

/// Graph from a payload written by graph_json (or a bare graph6 string).
auto graph_from_json(const Json &j) -> Graph;

} // namespace trifree
