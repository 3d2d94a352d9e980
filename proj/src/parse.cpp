#include "cl30/parse.hpp"

#include "cl30/errors.hpp"
#include "cl30/json_io.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace cl30 {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool try_real(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

double real_or_throw(std::string_view s, const char* what) {
    double x = 0.0;
    if (!try_real(s, x)) throw MalformedInput(std::string{what} + ": cannot parse '" + std::string{s} + "' as a number");
    return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool is_label(std::string_view s) {
    for (D4Label g : kD4Labels) {
        if (to_string(g) == s) return true;
    }
    return false;
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string_view s = trim(text);
    double x = 0.0;
    if (try_real(s, x)) return x;

    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) throw MalformedInput("angle: cannot parse '" + std::string{s} + "'");

    std::string_view coef = trim(s.substr(0, pi_pos));
    std::string_view rest = trim(s.substr(pi_pos + 2));
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));

    double k = 1.0;
    if (coef == "-") {
        k = -1.0;
    } else if (coef == "+" || coef.empty()) {
        k = 1.0;
    } else {
        k = real_or_throw(coef, "angle coefficient");
    }

    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') throw MalformedInput("angle: unexpected '" + std::string{rest} + "' after pi");
        den = real_or_throw(rest.substr(1), "angle denominator");
        if (den == 0.0) throw MalformedInput("angle: zero denominator");
    }
    return k * std::numbers::pi / den;
}

Vec3 parse_axis(std::string_view text) {
    std::string_view s = trim(text);
    double sign = 1.0;
    std::string_view name = s;
    if (!name.empty() && (name.front() == '-' || name.front() == '+') && name.size() > 1 && name[1] == 'e') {
        sign = name.front() == '-' ? -1.0 : 1.0;
        name.remove_prefix(1);
    }
    const double h = 1.0 / std::numbers::sqrt2;
    if (name == "e1") return Vec3::e1() * sign;
    if (name == "e2") return Vec3::e2() * sign;
    if (name == "e3") return Vec3::e3() * sign;
    if (name == "e1+2") return Vec3{h, h, 0.0} * sign;
    if (name == "e1-2") return Vec3{h, -h, 0.0} * sign;

    const auto parts = split(s, ',');
    if (parts.size() != 3) {
        throw MalformedInput("axis: expected e1, e2, e3, e1+2, e1-2 or three comma-separated reals, got '" +
                             std::string{s} + "'");
    }
    const Vec3 v{real_or_throw(parts[0], "axis"), real_or_throw(parts[1], "axis"), real_or_throw(parts[2], "axis")};
    if (v.norm() == 0.0) throw MalformedInput("axis: the zero vector has no direction");
    return v.normalized();
}

AxisAngle parse_axis_angle(std::string_view text) {
    const std::string_view s = trim(text);
    const auto colon = s.rfind(':');
    if (colon == std::string_view::npos) {
        throw MalformedInput("axis-angle: expected <axis>:<angle>, got '" + std::string{s} + "'");
    }
    const Vec3 axis = parse_axis(s.substr(0, colon));
    const double angle = parse_angle(s.substr(colon + 1));
    if (angle == 0.0) return AxisAngle{Vec3::e3(), 0.0, true};
    return AxisAngle{axis, angle, false};
}

Vec3 parse_vec3(std::string_view text) {
    const std::string_view s = trim(text);
    if (!s.empty() && s.front() == '[') return vec3_from_json(parse_json(s));
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw MalformedInput("vector: expected three numbers, got '" + std::string{s} + "'");
    return {real_or_throw(parts[0], "vector"), real_or_throw(parts[1], "vector"), real_or_throw(parts[2], "vector")};
}

Cliffor parse_cliffor(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '[') return cliffor_from_json(parse_json(s));

    double x = 0.0;
    if (try_real(s, x)) return Cliffor::scalar(x);

    double k = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') k = -1.0;
        s.remove_prefix(1);
    }
    if (const auto star = s.find('*'); star != std::string_view::npos) {
        k *= real_or_throw(s.substr(0, star), "cliffor coefficient");
        s = trim(s.substr(star + 1));
    }
    if (s == "1") return Cliffor::scalar(k);
    if (s == "e1") return Cliffor::e1() * k;
    if (s == "e2") return Cliffor::e2() * k;
    if (s == "e3") return Cliffor::e3() * k;
    if (s == "ie1") return Cliffor::bivector(Vec3::e1()) * k;
    if (s == "ie2") return Cliffor::bivector(Vec3::e2()) * k;
    if (s == "ie3") return Cliffor::bivector(Vec3::e3()) * k;
    if (s == "i") return Cliffor::i() * k;
    throw MalformedInput("cliffor: expected an 8-number array or a basis element, got '" + std::string{text} + "'");
}

Matrix2 parse_matrix(std::string_view text) { return matrix2_from_json(parse_json(trim(text))); }

RightActingMatrix parse_real_matrix(std::string_view text) {
    const Matrix2 m = parse_matrix(text);
    RealEntries e{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (m(i, j).imag() != 0.0) throw MalformedInput("matrix: right-acting matrices must be real");
            e[i][j] = m(i, j).real();
        }
    }
    return RightActingMatrix{e};
}

KetStep parse_ket(std::string_view text) {
    const std::string_view s = trim(text);
    if (is_label(s)) {
        const D4Label g = label_from_string(s);
        return KetStep{rotor_of(g), std::string{s}};
    }
    if (s.find(':') == std::string_view::npos) label_from_string(s);  // throws UnknownLabel
    return KetStep{exp_half(parse_axis_angle(s)), std::string{s}};
}

std::vector<ChainStep> parse_chain_steps(std::string_view text) {
    const std::string_view s = trim(text);
    std::vector<ChainStep> steps;
    if (s.empty()) return steps;

    if (s.front() == '[') {
        const json j = parse_json(s);
        if (!j.is_array()) throw MalformedInput("steps: expected a JSON array");
        for (const auto& item : j) {
            if (!item.is_object() || item.size() != 1) {
                throw MalformedInput("steps: each step must be {\"scale\": ...} or {\"ket\": ...}");
            }
            if (item.contains("bra")) throw MixedBraKetChain("steps: bra operators cannot appear in a ket chain");
            if (item.contains("scale")) {
                const json& v = item["scale"];
                steps.emplace_back(ScaleStep{v.is_string() ? parse_cliffor(v.get<std::string>()) : cliffor_from_json(v)});
            } else if (item.contains("ket")) {
                const json& v = item["ket"];
                if (v.is_string()) {
                    steps.emplace_back(parse_ket(v.get<std::string>()));
                } else {
                    steps.emplace_back(KetStep{exp_half(axis_angle_from_json(v)), v.dump()});
                }
            } else {
                throw MalformedInput("steps: unknown step kind " + item.dump());
            }
        }
        return steps;
    }

    for (std::string_view part : split(s, ';')) {
        if (part.empty()) continue;
        const auto colon = part.find(':');
        if (colon == std::string_view::npos) throw MalformedInput("steps: expected kind:value, got '" + std::string{part} + "'");
        const std::string_view kind = trim(part.substr(0, colon));
        const std::string_view value = trim(part.substr(colon + 1));
        if (kind == "bra") throw MixedBraKetChain("steps: bra operators cannot appear in a ket chain");
        if (kind == "scale") {
            steps.emplace_back(ScaleStep{parse_cliffor(value)});
        } else if (kind == "ket") {
            steps.emplace_back(parse_ket(value));
        } else {
            throw MalformedInput("steps: unknown step kind '" + std::string{kind} + "'");
        }
    }
    return steps;
}

Cliffor parse_operand(std::string_view text) {
    const std::string_view s = trim(text);
    if (!s.empty() && s.front() == '[') {
        const json j = parse_json(s);
        if (j.is_array() && j.size() == 3) return Cliffor::vector(vec3_from_json(j));
        return cliffor_from_json(j);
    }
    if (split(s, ',').size() == 3) return Cliffor::vector(parse_vec3(s));
    return parse_cliffor(s);
}

double parse_tolerance(std::string_view text) {
    const double x = real_or_throw(text, "tolerance");
    if (!(x > 0.0)) throw MalformedInput("tolerance must be positive");
    return x;
}

}  // namespace cl30
