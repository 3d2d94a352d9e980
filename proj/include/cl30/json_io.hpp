#pragma once

/**
 * @file json_io.hpp
 * @brief JSON wire forms.
 *
 *   Cliffor / Rotor   [s, v1, v2, v3, b1, b2, b3, p]
 *   Vec3              [x1, x2, x3]
 *   AxisAngle         {"axis": [3 numbers], "angle": number}
 *   D4 table          8x8 array of labels, rows = left factor
 *   group algebra     {"<label>": coeff, ...}; omitted labels are 0
 *   Matrix2           [[[re, im], [re, im]], [[re, im], [re, im]]]
 *   decomposition     {"fermion": {"e11": [re, im], ...}, "cliffor": [8 numbers]}
 *
 * Readers throw MalformedInput (or UnknownLabel) on schema violations.
 */

#include "cl30/d4.hpp"
#include "cl30/group_algebra.hpp"
#include "cl30/matrix.hpp"

#include <json.hpp>

namespace cl30 {

using json = nlohmann::json;

json to_json(const Vec3& v);
json to_json(const Cliffor& a);
json to_json(const Rotor& r);
json to_json(const AxisAngle& t);
json to_json(const Matrix2& m);
json to_json(const GroupAlgebraElement& a);
json to_json(const MultiplicationTable& t);
json decomposition_to_json(const Matrix2& m);

Vec3 vec3_from_json(const json& j);
Cliffor cliffor_from_json(const json& j);
/// Grades 1 and 3 must vanish and the norm must be 1; the result is canonical.
Rotor rotor_from_json(const json& j);
AxisAngle axis_angle_from_json(const json& j);
Matrix2 matrix2_from_json(const json& j);
GroupAlgebraElement group_algebra_from_json(const json& j);
MultiplicationTable table_from_json(const json& j);

/// Parses text as JSON, mapping syntax errors to MalformedInput.
json parse_json(std::string_view text);

/// Rounds |x| < eps to +0.0; used for display only.
double chop(double x, double eps = 1e-14);
/// Applies chop to every number in a JSON document.
json chop(const json& j, double eps = 1e-14);

}  // namespace cl30
