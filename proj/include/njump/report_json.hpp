#pragma once

#include "njump/geometry.hpp"
#include "njump/jump.hpp"
#include "njump/types.hpp"

#include <json.hpp>

#include <vector>

namespace njump {

using ordered_json = nlohmann::ordered_json;

// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
// decimal strings. Rationals always serialize as fraction strings.
ordered_json json_int(const Int& v);

ordered_json to_json(const ExponentVector& p, int dimension);
ordered_json to_json(const NewtonDiagram& d);
ordered_json to_json(const GammaMinusMetrics& m);
ordered_json to_json(const JumpReport& r, int dimension);

ordered_json candidates_json(const Support& s, const std::vector<DeformationCandidate>& rows);

} // namespace njump
