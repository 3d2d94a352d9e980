#include "cl30/rotor.hpp"

#include <cmath>
#include <stdexcept>

namespace cl30 {

namespace {

constexpr double kDegenerateBivector = 1e-14;

void require_unit(const Vec3& eta, double tol) {
    if (std::abs(eta.norm() - 1.0) > tol) throw std::invalid_argument("flip/reflect axis must be a unit vector");
}

bool negative_representative(const Cliffor& r) {
    if (std::abs(r.s()) > kCanonicalTieTolerance) return r.s() < 0.0;
    const Vec3 b = r.b();
    for (std::size_t k = 0; k < 3; ++k) {
        if (std::abs(b[k]) > kCanonicalTieTolerance) return b[k] < 0.0;
    }
    return false;
}

}  // namespace

AxisAngle AxisAngle::from_vector(const Vec3& theta) {
    const double n = theta.norm();
    if (n == 0.0) return AxisAngle{Vec3::e3(), 0.0, true};
    return AxisAngle{theta / n, n, false};
}

Rotor canonicalize(const Cliffor& r) {
    const double odd = std::abs(r[Cliffor::V1]) + std::abs(r[Cliffor::V2]) + std::abs(r[Cliffor::V3]) +
                       std::abs(r[Cliffor::P]);
    if (odd > kRotorNormTolerance) throw std::invalid_argument("rotor must have zero vector and pseudoscalar parts");
    const double n2 = r.s() * r.s() + r.b().dot(r.b());
    if (std::abs(n2 - 1.0) > kRotorNormTolerance) throw std::invalid_argument("rotor must have unit norm");
    return Rotor{negative_representative(r) ? -r : r};
}

Rotor Rotor::operator*(const Rotor& other) const { return canonicalize(c_ * other.c_); }

Rotor Rotor::inverse() const { return canonicalize(reverse(c_)); }

Rotor exp_half(const Vec3& theta) {
    const double n = theta.norm();
    if (n == 0.0) return Rotor{};
    const double half = 0.5 * n;
    const Vec3 b = theta * (std::sin(half) / n);
    return canonicalize(Cliffor::scalar(std::cos(half)) + Cliffor::bivector(b));
}

Rotor exp_half(const AxisAngle& t) {
    if (t.degenerate || t.angle == 0.0) return Rotor{};
    const double half = 0.5 * t.angle;
    return canonicalize(Cliffor::scalar(std::cos(half)) + Cliffor::bivector(t.axis * std::sin(half)));
}

AxisAngle log_rotor(const Rotor& r) {
    const Vec3 b = r.bivector();
    const double sb = b.norm();
    if (sb <= kDegenerateBivector) return AxisAngle{Vec3::e3(), 0.0, true};
    // Canonical rotors have s >= 0 (up to the tie band), so this lands in [0, pi].
    const double angle = 2.0 * std::atan2(sb, std::abs(r.scalar()));
    return AxisAngle{b / sb, angle, false};
}

Vec3 rotate_vector(const Rotor& r, const Vec3& v) {
    const Cliffor& R = r.cliffor();
    return (reverse(R) * Cliffor::vector(v) * R).v();
}

Cliffor rotate_cliffor(const Rotor& r, const Cliffor& a) {
    const Cliffor& R = r.cliffor();
    const Cliffor moved = reverse(R) * (grade_project(a, 1) + grade_project(a, 2)) * R;
    return Cliffor{{a.s(), moved[Cliffor::V1], moved[Cliffor::V2], moved[Cliffor::V3], moved[Cliffor::B1],
                    moved[Cliffor::B2], moved[Cliffor::B3], a.p()}};
}

AxisAngle compose_axis_angle(const AxisAngle& t1, const AxisAngle& t2) {
    const bool id1 = t1.degenerate || t1.angle == 0.0;
    const bool id2 = t2.degenerate || t2.angle == 0.0;
    const double c1 = id1 ? 1.0 : std::cos(0.5 * t1.angle);
    const double s1 = id1 ? 0.0 : std::sin(0.5 * t1.angle);
    const double c2 = id2 ? 1.0 : std::cos(0.5 * t2.angle);
    const double s2 = id2 ? 0.0 : std::sin(0.5 * t2.angle);
    const Vec3& n1 = t1.axis;
    const Vec3& n2 = t2.axis;

    // cos|t3|/2 and (t3/|t3|) sin|t3|/2.
    double c3 = c1 * c2 - n1.dot(n2) * s1 * s2;
    Vec3 v3 = n1 * (s1 * c2) + n2 * (s2 * c1) - n1.cross(n2) * (s1 * s2);

    // exp(i t3/2) and -exp(i t3/2) rotate alike; keep the representative with
    // |t3| in [0, pi], breaking the tie at pi by the first nonzero component.
    Cliffor candidate = Cliffor::scalar(c3) + Cliffor::bivector(v3);
    if (negative_representative(candidate)) {
        c3 = -c3;
        v3 = -v3;
    }
    const double sv = v3.norm();
    if (sv <= kDegenerateBivector) return AxisAngle{Vec3::e3(), 0.0, true};
    return AxisAngle{v3 / sv, 2.0 * std::atan2(sv, std::abs(c3)), false};
}

Vec3 flip(const Vec3& eta, const Vec3& r, double tol) {
    require_unit(eta, tol);
    const Cliffor n = Cliffor::vector(eta);
    return (n * Cliffor::vector(r) * n).v();
}

Vec3 reflect(const Vec3& eta, const Vec3& r, double tol) { return -flip(eta, r, tol); }

bool approx_equal(const AxisAngle& a, const AxisAngle& b, double tol) {
    return approx_equal(exp_half(a).cliffor(), exp_half(b).cliffor(), tol);
}

}  // namespace cl30
