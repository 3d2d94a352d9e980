#pragma once

/**
 * @file parse.hpp
 * @brief Text grammars used by the command-line front end.
 *
 *   angle       := real | [-][coef[*]]pi[/den]          e.g. pi, -pi/2, 3pi/4
 *   axis        := [-](e1 | e2 | e3 | e1+2 | e1-2) | x,y,z  (normalized; zero rejected)
 *   axis-angle  := axis ':' angle                       e.g. e1:pi, 1,1,0:pi/3
 *   vector      := [x1,x2,x3] | x1,x2,x3
 *   cliffor     := JSON array of 8 | [-][coef*](1|e1|e2|e3|ie1|ie2|ie3|i)
 *   matrix      := [[a,b],[c,d]] with entries real or [re,im]
 *   chain steps := JSON array of {"scale": cliffor} / {"ket": label|axis-angle}
 *                | ';'-separated  scale:<cliffor>  ket:<label|axis-angle>
 *
 * All failures throw MalformedInput, UnknownLabel or MixedBraKetChain.
 */

#include "cl30/chain.hpp"
#include "cl30/d4.hpp"
#include "cl30/matrix.hpp"

#include <string_view>
#include <vector>

namespace cl30 {

double parse_angle(std::string_view text);
Vec3 parse_axis(std::string_view text);
AxisAngle parse_axis_angle(std::string_view text);
Vec3 parse_vec3(std::string_view text);
Cliffor parse_cliffor(std::string_view text);
Matrix2 parse_matrix(std::string_view text);
/// Real 2x2 matrix; rejects entries with a nonzero imaginary part.
RightActingMatrix parse_real_matrix(std::string_view text);
/// A D4 label or an axis-angle, as the rotor of a ket step.
KetStep parse_ket(std::string_view text);
std::vector<ChainStep> parse_chain_steps(std::string_view text);

/// Operand of a chain: 3 numbers give a vector, 8 numbers a full cliffor.
Cliffor parse_operand(std::string_view text);

/// Parses a positive finite tolerance (the CL30_TOL override).
double parse_tolerance(std::string_view text);

}  // namespace cl30
