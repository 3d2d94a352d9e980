#include "cl30/d4.hpp"

#include "cl30/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cl30 {

namespace {

constexpr std::array<std::string_view, kD4Order> kNames{"Id", "F1", "F2", "F3", "Rccw", "Rcw", "F1p2", "F1m2"};
constexpr std::array<std::string_view, kD4Order> kKets{"|1>",        "|i e1>",       "|i e2>",
                                                       "|i e3>",     "|e_{0+3i}>",   "|e_{0-3i}>",
                                                       "|i e_{1+2}>", "|i e_{1-2}>"};

Vec3 diagonal(double s1, double s2) {
    const double h = 1.0 / std::numbers::sqrt2;
    return {s1 * h, s2 * h, 0.0};
}

std::array<D4Element, kD4Order> build_elements() {
    constexpr double pi = std::numbers::pi;
    const std::array<AxisAngle, kD4Order> gens{
        AxisAngle{Vec3::e3(), 0.0, true},
        AxisAngle{Vec3::e1(), pi, false},
        AxisAngle{Vec3::e2(), pi, false},
        AxisAngle{Vec3::e3(), pi, false},
        AxisAngle{Vec3::e3(), pi / 2, false},
        AxisAngle{-Vec3::e3(), pi / 2, false},
        AxisAngle{diagonal(1, 1), pi, false},
        AxisAngle{diagonal(1, -1), pi, false},
    };
    std::array<D4Element, kD4Order> out{};
    for (std::size_t k = 0; k < kD4Order; ++k) out[k] = D4Element{kD4Labels[k], gens[k], exp_half(gens[k])};
    return out;
}

const std::array<D4Element, kD4Order>& elements() {
    static const auto els = build_elements();
    return els;
}

}  // namespace

std::string_view to_string(D4Label g) { return kNames.at(index_of(g)); }

D4Label label_from_string(std::string_view s) {
    for (std::size_t k = 0; k < kD4Order; ++k) {
        if (kNames[k] == s) return kD4Labels[k];
    }
    throw UnknownLabel("unknown D4 element label '" + std::string{s} +
                       "' (expected Id, F1, F2, F3, Rccw, Rcw, F1p2 or F1m2)");
}

std::string_view ket_notation(D4Label g) { return kKets.at(index_of(g)); }

const D4Element& element(D4Label g) { return elements().at(index_of(g)); }

std::optional<D4Label> element_from_rotor(const Rotor& r, double tol) {
    for (const auto& e : elements()) {
        if (approx_equal(e.rotor.cliffor(), r.cliffor(), tol)) return e.label;
    }
    return std::nullopt;
}

D4Label multiply(D4Label g, D4Label h, double tol) {
    const Rotor product = rotor_of(g) * rotor_of(h);
    if (auto m = element_from_rotor(product, tol)) return *m;
    throw std::logic_error("product of " + std::string{to_string(g)} + " and " + std::string{to_string(h)} +
                           " matches no D4 element");
}

D4Label inverse(D4Label g) {
    for (D4Label h : kD4Labels) {
        if (multiplication_table()[index_of(g)][index_of(h)] == D4Label::Id) return h;
    }
    throw std::logic_error("D4 element without inverse");
}

MultiplicationTable compute_multiplication_table(double tol) {
    MultiplicationTable t{};
    for (D4Label g : kD4Labels) {
        for (D4Label h : kD4Labels) t[index_of(g)][index_of(h)] = multiply(g, h, tol);
    }
    return t;
}

const MultiplicationTable& multiplication_table() {
    static const MultiplicationTable table = compute_multiplication_table(kDefaultTolerance);
    return table;
}

Vec3 action_on_vector(D4Label g, const Vec3& r) { return rotate_vector(rotor_of(g), r); }

const std::array<Vec3, 4>& vertex_set() {
    static const std::array<Vec3, 4> v{diagonal(1, 1), diagonal(-1, 1), diagonal(-1, -1), diagonal(1, -1)};
    return v;
}

const std::array<Vec3, 5>& symmetry_axes() {
    static const std::array<Vec3, 5> s{Vec3::e1(), Vec3::e2(), Vec3::e3(), diagonal(1, 1), diagonal(1, -1)};
    return s;
}

}  // namespace cl30
