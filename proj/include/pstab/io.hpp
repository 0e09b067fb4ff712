#pragma once

#include <json.hpp>

#include "pstab/classify.hpp"

namespace pstab {

using Json = nlohmann::ordered_json;

// Strict parsing: unknown keys are rejected so schema drift surfaces early.

Scalar parse_scalar_json(const Json& j, Field f, const std::string& where);
Matrix parse_matrix_json(const Json& j, Field f, const std::string& where);
GroupPoint parse_group_point_json(const Json& j, Field f, const std::string& where = "input");
Cochar parse_cochar_json(const Json& j, Field f, size_t n, const std::string& where = "cochar");
RepPresentation parse_presentation_json(const Json& j, const std::string& where = "presentation");

Json matrix_to_json(const Matrix& m);
Json subspace_to_json(const Subspace& s);
Json flag_to_json(const Flag& f);
Json cochar_to_json(const Cochar& c);
Json group_point_to_json(const GroupPoint& x);
Json algebra_to_json(const AlgebraData& a, Group group);
Json witness_to_json(const DestabWitness& w);
Json report_to_json(const ClassificationReport& r);
Json orbit_to_json(const OrbitDecision& d);
Json hm_to_json(const HmReport& r);
Json happrox_to_json(const HApproxReport& r);
Json rep_report_to_json(const RepReport& r);

}  // namespace pstab
