#include "cl30/json_io.hpp"

#include "cl30/errors.hpp"

#include <cmath>
#include <string>

namespace cl30 {

namespace {

double number(const json& j, const char* what) {
    if (!j.is_number()) throw MalformedInput(std::string{what} + ": expected a number, got " + j.dump());
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw MalformedInput(std::string{what} + ": number must be finite");
    return x;
}

const json& array_of(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) {
        throw MalformedInput(std::string{what} + ": expected an array of " + std::to_string(n) + ", got " + j.dump());
    }
    return j;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {number(j, "matrix entry"), 0.0};
    array_of(j, 2, "complex entry");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

}  // namespace

json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const Cliffor& a) {
    json out = json::array();
    for (double x : a.coefficients()) out.push_back(x);
    return out;
}

json to_json(const Rotor& r) { return to_json(r.cliffor()); }

json to_json(const AxisAngle& t) { return json{{"axis", to_json(t.axis)}, {"angle", t.angle}}; }

json to_json(const Matrix2& m) {
    return json::array({json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                        json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

json to_json(const GroupAlgebraElement& a) {
    json out = json::object();
    for (D4Label g : kD4Labels) {
        if (a[g] != 0.0) out[std::string{to_string(g)}] = a[g];
    }
    return out;
}

json to_json(const MultiplicationTable& t) {
    json out = json::array();
    for (const auto& row : t) {
        json r = json::array();
        for (D4Label g : row) r.push_back(std::string{to_string(g)});
        out.push_back(std::move(r));
    }
    return out;
}

json decomposition_to_json(const Matrix2& m) {
    const auto c = decompose_fermion(m);
    json fermion = json::object();
    for (int mu = 1; mu <= 2; ++mu) {
        for (int nu = 1; nu <= 2; ++nu) {
            fermion["e" + std::to_string(mu) + std::to_string(nu)] = complex_to_json(c[mu - 1][nu - 1]);
        }
    }
    return json{{"fermion", fermion}, {"cliffor", to_json(cliffor_from_matrix(m))}};
}

Vec3 vec3_from_json(const json& j) {
    array_of(j, 3, "vector");
    return {number(j[0], "vector"), number(j[1], "vector"), number(j[2], "vector")};
}

Cliffor cliffor_from_json(const json& j) {
    array_of(j, 8, "cliffor");
    Cliffor::Coefficients c{};
    for (std::size_t k = 0; k < 8; ++k) c[k] = number(j[k], "cliffor");
    return Cliffor{c};
}

Rotor rotor_from_json(const json& j) {
    try {
        return canonicalize(cliffor_from_json(j));
    } catch (const MalformedInput&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw MalformedInput(std::string{"rotor: "} + e.what());
    }
}

AxisAngle axis_angle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("axis") || !j.contains("angle")) {
        throw MalformedInput("axis-angle: expected {\"axis\": [x, y, z], \"angle\": number}");
    }
    const Vec3 axis = vec3_from_json(j.at("axis"));
    const double angle = number(j.at("angle"), "angle");
    if (angle == 0.0) return AxisAngle{Vec3::e3(), 0.0, true};
    if (std::abs(axis.norm() - 1.0) > kDefaultTolerance) throw MalformedInput("axis-angle: axis must be a unit vector");
    return AxisAngle{axis, angle, false};
}

Matrix2 matrix2_from_json(const json& j) {
    array_of(j, 2, "matrix");
    array_of(j[0], 2, "matrix row");
    array_of(j[1], 2, "matrix row");
    return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
            complex_from_json(j[1][1])};
}

GroupAlgebraElement group_algebra_from_json(const json& j) {
    if (!j.is_object()) throw MalformedInput("group algebra element: expected an object of label -> coefficient");
    GroupAlgebraElement::Coefficients c{};
    for (const auto& [key, value] : j.items()) c[index_of(label_from_string(key))] = number(value, "coefficient");
    return GroupAlgebraElement{c};
}

MultiplicationTable table_from_json(const json& j) {
    array_of(j, kD4Order, "table");
    MultiplicationTable t{};
    for (std::size_t r = 0; r < kD4Order; ++r) {
        array_of(j[r], kD4Order, "table row");
        for (std::size_t c = 0; c < kD4Order; ++c) {
            if (!j[r][c].is_string()) throw MalformedInput("table: entries must be labels");
            t[r][c] = label_from_string(j[r][c].get<std::string>());
        }
    }
    return t;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string{"malformed JSON: "} + e.what());
    }
}

double chop(double x, double eps) { return std::abs(x) < eps ? 0.0 : x; }

json chop(const json& j, double eps) {
    if (j.is_number_float()) return chop(j.get<double>(), eps);
    if (j.is_array() || j.is_object()) {
        json out = j;
        for (auto& v : out) v = chop(v, eps);
        return out;
    }
    return j;
}

}  // namespace cl30
