#pragma once

#include <nlohmann/json.hpp>

#include "hilbtan/conjecture.hpp"
#include "hilbtan/families.hpp"
#include "hilbtan/hull.hpp"
#include "hilbtan/search.hpp"

namespace hilbtan {

/// Version stamped into every JSON document as "schema".
inline constexpr int kJsonSchema = 1;

/// Field order follows declaration order so that output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const ExponentVector& m);
/// {"ideal": rendered string, "generators": [[...], ...]}.
Json to_json(const MonomialIdeal& ideal);
Json to_json(const NecessaryReport& report);
Json to_json(const ConditionResult& result);
/// Maxima without timing fields; witnesses as rendered ideals.
Json to_json(const BoundaryMaximum& maximum);
Json to_json(const TypeReport& report);
/// Vertices, facets (normal, offset, corner points) and dimension.
Json to_json(const Hull& hull);
/// elapsed_ms only when `timing` is set, so that default output is
/// reproducible.
Json to_json(const SearchResult& result, bool timing = false);
Json to_json(const TableFixture& fixture);
Json to_json(const TableRow& row, bool timing = false);

}  // namespace hilbtan
