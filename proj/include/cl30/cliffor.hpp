#pragma once

/**
 * @file cliffor.hpp
 * @brief Multivectors ("cliffors") of the Euclidean Clifford algebra Cl(3,0).
 *
 * A cliffor is A = A0 + A1 + i A2 + i A3 where A0 is a scalar, A1 a vector,
 * i A2 a bivector written as the imaginary vector dual to A2, and i A3 the
 * pseudoscalar part.  The unit pseudoscalar i = e1 e2 e3 commutes with every
 * element and squares to -1.
 *
 * Storage order is fixed: [s, v1, v2, v3, b1, b2, b3, p], where b_k is the
 * coefficient of i e_k (so i e1 = e2 e3, i e2 = e3 e1, i e3 = e1 e2).
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <utility>

namespace cl30 {

/// Matching tolerance used for group-element identification and equality.
inline constexpr double kDefaultTolerance = 1e-9;

class Vec3 {
  public:
    constexpr Vec3() = default;
    constexpr Vec3(double x1, double x2, double x3) : x_{x1, x2, x3} {}
    explicit constexpr Vec3(const std::array<double, 3>& x) : x_{x} {}

    static constexpr Vec3 e1() { return {1.0, 0.0, 0.0}; }
    static constexpr Vec3 e2() { return {0.0, 1.0, 0.0}; }
    static constexpr Vec3 e3() { return {0.0, 0.0, 1.0}; }

    constexpr double operator[](std::size_t k) const { return x_[k]; }
    constexpr double x1() const { return x_[0]; }
    constexpr double x2() const { return x_[1]; }
    constexpr double x3() const { return x_[2]; }
    constexpr const std::array<double, 3>& components() const { return x_; }

    constexpr Vec3 operator+(const Vec3& o) const { return {x_[0] + o.x_[0], x_[1] + o.x_[1], x_[2] + o.x_[2]}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x_[0] - o.x_[0], x_[1] - o.x_[1], x_[2] - o.x_[2]}; }
    constexpr Vec3 operator-() const { return {-x_[0], -x_[1], -x_[2]}; }
    constexpr Vec3 operator*(double k) const { return {x_[0] * k, x_[1] * k, x_[2] * k}; }
    constexpr Vec3 operator/(double k) const { return {x_[0] / k, x_[1] / k, x_[2] / k}; }
    friend constexpr Vec3 operator*(double k, const Vec3& v) { return v * k; }

    constexpr bool operator==(const Vec3&) const = default;

    double norm() const { return std::sqrt(dot(*this)); }
    constexpr double dot(const Vec3& o) const { return x_[0] * o.x_[0] + x_[1] * o.x_[1] + x_[2] * o.x_[2]; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {x_[1] * o.x_[2] - x_[2] * o.x_[1], x_[2] * o.x_[0] - x_[0] * o.x_[2],
                x_[0] * o.x_[1] - x_[1] * o.x_[0]};
    }

    /// Unit vector along *this; throws std::invalid_argument for the zero vector.
    Vec3 normalized() const;

  private:
    std::array<double, 3> x_{};
};

bool approx_equal(const Vec3& a, const Vec3& b, double tol = kDefaultTolerance);
double max_abs_diff(const Vec3& a, const Vec3& b);
std::ostream& operator<<(std::ostream& os, const Vec3& v);

class Cliffor {
  public:
    using Coefficients = std::array<double, 8>;

    enum Index : std::size_t { S = 0, V1 = 1, V2 = 2, V3 = 3, B1 = 4, B2 = 5, B3 = 6, P = 7 };

    Cliffor() = default;
    /// Throws std::invalid_argument if any coefficient is not finite.
    explicit Cliffor(const Coefficients& c);

    static Cliffor scalar(double s);
    static Cliffor vector(const Vec3& v);
    /// The bivector i v.
    static Cliffor bivector(const Vec3& v);
    /// The pseudoscalar p i.
    static Cliffor pseudoscalar(double p);
    static Cliffor e1() { return vector(Vec3::e1()); }
    static Cliffor e2() { return vector(Vec3::e2()); }
    static Cliffor e3() { return vector(Vec3::e3()); }
    static Cliffor i() { return pseudoscalar(1.0); }

    double operator[](std::size_t k) const { return c_[k]; }
    const Coefficients& coefficients() const { return c_; }
    double s() const { return c_[S]; }
    Vec3 v() const { return {c_[V1], c_[V2], c_[V3]}; }
    Vec3 b() const { return {c_[B1], c_[B2], c_[B3]}; }
    double p() const { return c_[P]; }

    Cliffor operator+(const Cliffor& o) const;
    Cliffor operator-(const Cliffor& o) const;
    Cliffor operator-() const;
    Cliffor operator*(double k) const;
    Cliffor operator/(double k) const;
    friend Cliffor operator*(double k, const Cliffor& a) { return a * k; }
    friend Cliffor operator*(const Cliffor& a, const Cliffor& b);

    bool operator==(const Cliffor&) const = default;

  private:
    Coefficients c_{};
};

Cliffor geometric_product(const Cliffor& a, const Cliffor& b);

/// Grade-k part, k in {0, 1, 2, 3}; throws std::out_of_range otherwise.
Cliffor grade_project(const Cliffor& a, int k);

/// Reversion: negates the grade-2 and grade-3 parts.
Cliffor reverse(const Cliffor& a);

/// Clifford conjugation: negates the grade-1 and grade-2 parts.  a * conj(a)
/// is always central (scalar + pseudoscalar).
Cliffor clifford_conjugate(const Cliffor& a);

/// Multiplicative inverse; throws NonInvertible when a * conj(a) vanishes.
Cliffor inverse(const Cliffor& a);

/// Splits the product of two vectors into its scalar and imaginary-vector
/// parts: ab = (a.b) + i (a x b).  Returns {dot, cross}.
std::pair<double, Vec3> pauli_decompose(const Vec3& a, const Vec3& b);

/// Sum of squares of all eight coefficients.
double norm_squared(const Cliffor& a);

bool approx_equal(const Cliffor& a, const Cliffor& b, double tol = kDefaultTolerance);
double max_abs_diff(const Cliffor& a, const Cliffor& b);
std::ostream& operator<<(std::ostream& os, const Cliffor& a);

}  // namespace cl30
