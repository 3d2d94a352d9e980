#pragma once

/**
 * @file matrix.hpp
 * @brief 2x2 matrices rebuilt from D4 ket operators, and the Pauli
 *        representation of Cl(3,0).
 *
 * A right-acting matrix .M = sum M_{mu nu} .e_{mu nu} acts on a planar row
 * vector, x'_nu = sum_mu x_mu M_{mu nu}.  Its left-acting counterpart is the
 * transpose, acting on column vectors: M^T . r == r . M.  Left-acting
 * matrices are only ever produced by transposition.
 *
 * pauli_rep is the algebra isomorphism Cl(3,0) -> complex 2x2 matrices with
 * 1 -> sigma0, e_k -> sigma_k and i -> i sigma0.
 */

#include "cl30/group_algebra.hpp"

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

namespace cl30 {

using Complex = std::complex<double>;

class Matrix2 {
  public:
    using Entries = std::array<std::array<Complex, 2>, 2>;

    Matrix2() = default;
    explicit Matrix2(const Entries& e);
    Matrix2(Complex a00, Complex a01, Complex a10, Complex a11) : Matrix2{Entries{{{a00, a01}, {a10, a11}}}} {}

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    /// Row r, column c (0-based).
    const Complex& operator()(std::size_t r, std::size_t c) const { return e_[r][c]; }
    const Entries& entries() const { return e_; }

    Matrix2 operator+(const Matrix2& o) const;
    Matrix2 operator-(const Matrix2& o) const;
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 operator*(Complex k) const;
    friend Matrix2 operator*(Complex k, const Matrix2& m) { return m * k; }

    bool operator==(const Matrix2&) const = default;

  private:
    Entries e_{};
};

double max_abs_diff(const Matrix2& a, const Matrix2& b);
bool approx_equal(const Matrix2& a, const Matrix2& b, double tol = kDefaultTolerance);
std::ostream& operator<<(std::ostream& os, const Matrix2& m);

/// Single-entry matrix e_{mu nu}, mu, nu in {1, 2}.
Matrix2 fermion_matrix(int mu, int nu);

using RealEntries = std::array<std::array<double, 2>, 2>;

class LeftActingMatrix;

class RightActingMatrix {
  public:
    RightActingMatrix() = default;
    explicit RightActingMatrix(const RealEntries& m);

    static RightActingMatrix identity() { return RightActingMatrix{{{{1.0, 0.0}, {0.0, 1.0}}}}; }
    /// Matrix of the dyadic .e_{mu nu}.
    static RightActingMatrix dyadic(int mu, int nu);

    /// M_{mu nu} with 1-based indices.
    double at(int mu, int nu) const;
    const RealEntries& entries() const { return m_; }

    /// sum M_{mu nu} fermion_dyadic(mu, nu).
    GroupAlgebraElement group_algebra() const;

    /// Planar restriction of a group-algebra operator: M_{mu nu} is the
    /// e_nu component of e_mu A.
    static RightActingMatrix from_group_algebra(const GroupAlgebraElement& a);

    bool operator==(const RightActingMatrix&) const = default;

  private:
    RealEntries m_{};
};

class LeftActingMatrix {
  public:
    double at(int row, int col) const;
    const RealEntries& entries() const { return m_; }
    Matrix2 to_complex() const;

    bool operator==(const LeftActingMatrix&) const = default;

  private:
    explicit LeftActingMatrix(const RealEntries& m) : m_{m} {}
    friend LeftActingMatrix transpose(const RightActingMatrix& m);
    friend LeftActingMatrix matrix_multiply(const LeftActingMatrix& a, const LeftActingMatrix& b);

    RealEntries m_{};
};

/// r . M for r in span{e1, e2}; throws NonPlanarVector if |x3| > tol.
Vec3 apply_right(const Vec3& r, const RightActingMatrix& m, double tol = kDefaultTolerance);
/// M^T . r for r in span{e1, e2}; throws NonPlanarVector if |x3| > tol.
Vec3 apply_left(const LeftActingMatrix& m, const Vec3& r, double tol = kDefaultTolerance);

/// .M'' = .M . M' component by component.
RightActingMatrix matrix_multiply(const RightActingMatrix& a, const RightActingMatrix& b);
LeftActingMatrix matrix_multiply(const LeftActingMatrix& a, const LeftActingMatrix& b);

LeftActingMatrix transpose(const RightActingMatrix& m);
RightActingMatrix transpose(const LeftActingMatrix& m);

/// Right-acting matrix of the D4 element on the xy-plane; entries in {0, +-1}.
RightActingMatrix d4_matrix_of(D4Label g);

/// A named left-acting matrix written as a bra of a D4 element.  `ket` is
/// the element whose left-acting form gives `value`, `bra` the bra argument
/// (the inverse exponential), and `planar_negative` the element whose action
/// on the xy-plane is the negative of `ket`'s.
struct CampbellMatrix {
    std::string name;
    Matrix2 value;
    D4Label ket;
    D4Label bra;
    D4Label planar_negative;
};

/// Campbell's primary matrices I, +, x, J.
std::array<CampbellMatrix, 4> campbell_matrices();

/// sigma_k as `factor` times the left-acting matrix of the ket `ket`.  The
/// geometric reading is a rotation by `rotation` followed by multiplication
/// by `factor` (1 or the unit pseudoscalar i).
struct PauliConstruction {
    int index;
    Matrix2 value;
    D4Label ket;
    D4Label bra;
    Complex factor;
    AxisAngle rotation;
    std::string reading;
};

std::array<PauliConstruction, 4> pauli_matrices();

Matrix2 pauli_rep(const Cliffor& a);
/// Inverse of pauli_rep.
Cliffor cliffor_from_matrix(const Matrix2& m);

/// c_{mu nu} with M = sum c_{mu nu} e_{mu nu}; indexed [mu-1][nu-1].
using FermionCoefficients = std::array<std::array<Complex, 2>, 2>;
FermionCoefficients decompose_fermion(const Matrix2& m);

}  // namespace cl30
