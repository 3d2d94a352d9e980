#pragma once

/**
 * @file d4.hpp
 * @brief The dihedral group D4 as eight canonical rotors.
 *
 * Elements are the rotational symmetries of the unit square in the xy-plane:
 *
 *   Id    |1>          identity
 *   F1    |i e1>       flip about e1
 *   F2    |i e2>       flip about e2
 *   F3    |i e3>       half turn about e3
 *   Rccw  |e_{0+3i}>   quarter turn counterclockwise about e3
 *   Rcw   |e_{0-3i}>   quarter turn clockwise about e3
 *   F1p2  |i e_{1+2}>  flip about the diagonal (e1 + e2)/sqrt2
 *   F1m2  |i e_{1-2}>  flip about the diagonal (e1 - e2)/sqrt2
 *
 * with e_{0+-3i} = (1 +- i e3)/sqrt2.  Products follow the ket convention:
 * multiply(g, h) is "g first, then h" and its rotor is rotor(g) * rotor(h).
 */

#include "cl30/rotor.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cl30 {

enum class D4Label : std::uint8_t { Id = 0, F1, F2, F3, Rccw, Rcw, F1p2, F1m2 };

inline constexpr std::size_t kD4Order = 8;

inline constexpr std::array<D4Label, kD4Order> kD4Labels{D4Label::Id,   D4Label::F1,  D4Label::F2,
                                                         D4Label::F3,   D4Label::Rccw, D4Label::Rcw,
                                                         D4Label::F1p2, D4Label::F1m2};

constexpr std::size_t index_of(D4Label g) { return static_cast<std::size_t>(g); }

/// Stable string label ("Id", "F1", ..., "F1m2").
std::string_view to_string(D4Label g);
/// Inverse of to_string; throws UnknownLabel.
D4Label label_from_string(std::string_view s);
/// Ket notation, e.g. "|i e1>".
std::string_view ket_notation(D4Label g);

struct D4Element {
    D4Label label;
    AxisAngle generator;  // defining rotation
    Rotor rotor;          // canonical exp_half(generator)
};

const D4Element& element(D4Label g);
inline const Rotor& rotor_of(D4Label g) { return element(g).rotor; }

/// Element whose canonical rotor matches R componentwise within tol.
std::optional<D4Label> element_from_rotor(const Rotor& r, double tol = kDefaultTolerance);

/// "g first, then h".  Throws std::logic_error if the product rotor leaves the group.
D4Label multiply(D4Label g, D4Label h, double tol = kDefaultTolerance);

D4Label inverse(D4Label g);

/// Label of the bra argument equivalent to the ket |g>: r|g> = <g^{-1}| r.
inline D4Label bra_argument(D4Label g) { return inverse(g); }

/// table[g][h] = multiply(g, h): rows are the left factor (applied first).
using MultiplicationTable = std::array<std::array<D4Label, kD4Order>, kD4Order>;
const MultiplicationTable& multiplication_table();
/// Same table recomputed with a caller-chosen matching tolerance.
MultiplicationTable compute_multiplication_table(double tol);

/// r |g>, i.e. rotate_vector(rotor(g), r).
Vec3 action_on_vector(D4Label g, const Vec3& r);

/// The four vertices e_{1+2}, e_{-1+2}, e_{-1-2}, e_{1-2} of the unit square.
const std::array<Vec3, 4>& vertex_set();

/// Symmetry axes e1, e2, e3, e_{1+2}, e_{1-2}.
const std::array<Vec3, 5>& symmetry_axes();

}  // namespace cl30
