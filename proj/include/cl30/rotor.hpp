#pragma once

/**
 * @file rotor.hpp
 * @brief Half-angle exponential rotors and the sandwich rotation.
 *
 * A rotation by |theta| counterclockwise (right-hand rule) about theta maps
 *
 *     r' = exp(-i theta / 2) r exp(i theta / 2),
 *
 * so the rotor R = exp(i theta / 2) is the right factor of the sandwich and
 * reverse(R) the left one.  R and -R give the same rotation; Rotor always
 * stores the canonical representative (positive scalar part, or for a zero
 * scalar part, the first nonzero bivector component positive).
 */

#include "cl30/cliffor.hpp"

namespace cl30 {

/// Rotation descriptor.  `angle` is in radians; `degenerate` marks the
/// identity rotation, whose axis is reported as e3 by convention.
struct AxisAngle {
    Vec3 axis = Vec3::e3();
    double angle = 0.0;
    bool degenerate = false;

    /// axis * angle.
    Vec3 vector() const { return axis * angle; }

    /// From a rotation vector theta (axis theta/|theta|, angle |theta|).
    static AxisAngle from_vector(const Vec3& theta);
};

/// Scalar-part threshold below which the canonical sign is decided by the
/// bivector part instead.
inline constexpr double kCanonicalTieTolerance = 1e-12;
inline constexpr double kRotorNormTolerance = 1e-12;

class Rotor {
  public:
    /// The identity rotor 1.
    Rotor() : c_{Cliffor::scalar(1.0)} {}

    const Cliffor& cliffor() const { return c_; }
    double scalar() const { return c_.s(); }
    Vec3 bivector() const { return c_.b(); }

    /// Canonical rotor of the composite "this first, then other".
    Rotor operator*(const Rotor& other) const;
    Rotor inverse() const;

    bool operator==(const Rotor&) const = default;

  private:
    explicit Rotor(const Cliffor& c) : c_{c} {}
    friend Rotor canonicalize(const Cliffor& r);

    Cliffor c_;
};

/// Returns R or -R per the canonical-sign rule.  Requires an even, unit-norm
/// cliffor; throws std::invalid_argument otherwise.
Rotor canonicalize(const Cliffor& r);

/// cos(|theta|/2) + i (theta/|theta|) sin(|theta|/2), canonicalized.
Rotor exp_half(const Vec3& theta);
Rotor exp_half(const AxisAngle& t);

/// Axis and angle in [0, pi] with exp_half(axis * angle) == R.
AxisAngle log_rotor(const Rotor& r);

/// reverse(R) r R.
Vec3 rotate_vector(const Rotor& r, const Vec3& v);

/// Rotates the vector and bivector parts; scalar and pseudoscalar parts are
/// carried over untouched.
Cliffor rotate_cliffor(const Rotor& r, const Cliffor& a);

/// Composite rotation "t1 first, then t2" from the Euler-Rodrigues cos/sin
/// formulas, normalized to angle in [0, pi].
AxisAngle compose_axis_angle(const AxisAngle& t1, const AxisAngle& t2);

/// 180 degree rotation about the unit axis eta: eta r eta.
Vec3 flip(const Vec3& eta, const Vec3& r, double tol = kDefaultTolerance);
/// Mirror reflection through the plane with unit normal eta: -eta r eta.
Vec3 reflect(const Vec3& eta, const Vec3& r, double tol = kDefaultTolerance);

bool approx_equal(const AxisAngle& a, const AxisAngle& b, double tol = kDefaultTolerance);

}  // namespace cl30
