#pragma once

// JSON forms of the library's value types. Field elements serialize as
// their integer index; rationals as "n" or "n/d" strings.

#include <vector>

#include "json.hpp"

#include "gqc/chain.hpp"
#include "gqc/lincode.hpp"
#include "gqc/orbifold.hpp"
#include "gqc/quantum.hpp"
#include "gqc/wgeom.hpp"

namespace gqc {

nlohmann::json point_to_json(const WPoint& p, const WeightSystem& ws,
                             HeightConvention hc = HeightConvention::IndexLift);

/// {"field", "weights", "points": [...]} as written by `points --json`.
nlohmann::json points_to_json(const std::vector<WPoint>& pts, const WeightSystem& ws, const Field& field);

struct PointSet {
    Field field;
    WeightSystem ws;
    std::vector<WPoint> points;
    std::vector<Height> heights;
};

PointSet points_from_json(const nlohmann::json& j);

nlohmann::json census_to_json(const OrbifoldData& data);
OrbifoldData census_from_json(const nlohmann::json& j);

nlohmann::json distance_to_json(const Distance& d);
Distance distance_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const LinearCode& c);
LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json css_to_json(const CssCode& q);
CssCode css_from_json(const nlohmann::json& j);

nlohmann::json homology_to_json(const HomologyReport& h);
nlohmann::json filtration_to_json(const Filtration& f);
nlohmann::json bound_report_to_json(const BoundReport& r);

/// Dense matrix of element indices read from rows of integers.
Matrix matrix_from_json(const Field& field, const nlohmann::json& rows, std::size_t cols);

}  // namespace gqc
