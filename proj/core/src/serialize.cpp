#include "hilbtan/serialize.hpp"

namespace hilbtan {

Json to_json(const ExponentVector& m) {
  Json out = Json::array();
  for (auto e : m) out.push_back(e);
  return out;
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"ideal", render(ideal)}, {"generators", std::move(gens)}};
}

Json to_json(const NecessaryReport& report) {
  return Json{{"n", report.n}, {"k", report.k}, {"m1", report.m1}, {"passes", report.passes}};
}

Json to_json(const ConditionResult& result) {
  return Json{{"evaluated", result.evaluated}, {"passed", result.passed}, {"detail", result.detail}};
}

Json to_json(const BoundaryMaximum& maximum) {
  Json witnesses = Json::array();
  for (const auto& w : maximum.witnesses) witnesses.push_back(render(w));
  return Json{{"count", maximum.count},
              {"argmax_count", maximum.argmax_count},
              {"candidates", maximum.candidates},
              {"nodes", maximum.nodes},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const TypeReport& report) {
  Json conditions = Json::object();
  for (const auto& [name, result] : report.conditions) conditions[name] = to_json(result);
  Json swaps = Json::array();
  for (const auto& [i, j] : report.symmetric_swaps) swaps.push_back(Json::array({i, j}));
  Json interior = Json::array();
  for (const auto& g : report.interior_generators) interior.push_back(to_json(g));
  Json maxima = Json::object();
  for (const auto& [key, value] : report.boundary_maxima) maxima[key] = to_json(value);
  return Json{{"type", report.claimed_type},
              {"label", report.subtype},
              {"matches", report.matches},
              {"m", Json::array({report.m[0], report.m[1], report.m[2]})},
              {"permutation", report.permutation},
              {"n", report.n},
              {"k", report.k},
              {"conditions", std::move(conditions)},
              {"symmetric_swaps", std::move(swaps)},
              {"interior_generators", std::move(interior)},
              {"boundary_maxima", std::move(maxima)}};
}

Json to_json(const Hull& hull) {
  Json vertices = Json::array();
  for (auto id : hull.vertices) vertices.push_back(to_json(hull.points[id]));
  Json facets = Json::array();
  for (const auto& f : hull.facets) {
    Json corners = Json::array();
    for (auto id : f.vertex_ids) corners.push_back(to_json(hull.points[id]));
    facets.push_back(Json{{"normal", f.normal},
                          {"offset", f.offset},
                          {"lower", geometry::is_lower(f)},
                          {"upper", geometry::is_upper(f)},
                          {"corners", std::move(corners)}});
  }
  return Json{{"dim", hull.dim}, {"vertices", std::move(vertices)}, {"facets", std::move(facets)}};
}

Json to_json(const SearchResult& result, bool timing) {
  Json argmax = Json::array();
  for (const auto& ideal : result.argmax) argmax.push_back(render(ideal));
  Json out{{"n", result.n},
           {"max_tangent", result.max_tangent},
           {"argmax", std::move(argmax)},
           {"ideals_scanned", result.ideals_scanned},
           {"borel_only", result.borel_only}};
  if (timing) {
    out["cache_hits"] = result.cache_hits;
    out["elapsed_ms"] = result.elapsed_ms;
  }
  return out;
}

Json to_json(const TableFixture& fixture) {
  return Json{{"n", fixture.n},
              {"literal", fixture.literal},
              {"corrected", fixture.corrected},
              {"marker", fixture.marker},
              {"gap", fixture.gap},
              {"note", fixture.note}};
}

Json to_json(const TableRow& row, bool timing) {
  Json argmax = Json::array();
  for (const auto& ideal : row.argmax) argmax.push_back(render(ideal));
  Json out{{"n", row.n},
           {"paper_ideal", row.fixture ? to_json(*row.fixture) : Json(nullptr)},
           {"computed_max", row.computed_max},
           {"computed_argmax", std::move(argmax)},
           {"type_labels", row.type_labels},
           {"match", row.match},
           {"detail", row.detail}};
  if (timing) out["elapsed_ms"] = row.elapsed_ms;
  return out;
}

}  // namespace hilbtan
