#pragma once

#include <json.hpp>

#include "frameposet/enumeration.hpp"
#include "frameposet/inverse.hpp"
#include "frameposet/poset.hpp"
#include "frameposet/projections.hpp"
#include "frameposet/scalability.hpp"

namespace frameposet {

using nlohmann::json;

// Scalar encodings: rational {"num":N,"den":D}, quadratic {"a":..,"b":..,"d":D},
// complex {"re":..,"im":..}, float a plain number. Integers too large for the
// JSON number range are carried as decimal strings.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, bool exact_mode);

json frame_to_json(const Frame& f);
Frame frame_from_json(const json& j);

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json index_set_to_json(IndexSet s);

json polytope_to_json(const ScalingPolytope& poly);
std::vector<Scalar> scaling_from_json(const json& j, const Frame& f);

json census_to_json(const CensusResult& c);
json feasibility_to_json(const FeasibilitySystem& fs);
json projection_report_to_json(const ProjectionReport& rep, Field field);

/// FNV-1a 64-bit hash, hex-encoded; used to stamp reports with their input.
std::string fnv1a_hex(const std::string& bytes);

} // namespace frameposet
