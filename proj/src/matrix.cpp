#include "cl30/matrix.hpp"

#include "cl30/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cl30 {

namespace {

void check_index(int k) {
    if (k != 1 && k != 2) throw std::out_of_range("matrix indices must be 1 or 2");
}

void require_planar(const Vec3& r, double tol) {
    if (std::abs(r.x3()) > tol) throw NonPlanarVector("matrix actions require a vector in the xy-plane (x3 = 0)");
}

// Signed-permutation entries come out of the sandwich with rounding noise;
// snap them to the exact integers they represent.
double snap_unit(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-9 || std::abs(r) > 1.0) throw std::logic_error("D4 matrix entry is not 0 or +-1");
    return r == 0.0 ? 0.0 : r;
}

constexpr Complex kI{0.0, 1.0};

}  // namespace

Matrix2::Matrix2(const Entries& e) : e_{e} {
    for (const auto& row : e_) {
        for (const auto& z : row) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
    return {e_[0][0] + o.e_[0][0], e_[0][1] + o.e_[0][1], e_[1][0] + o.e_[1][0], e_[1][1] + o.e_[1][1]};
}

Matrix2 Matrix2::operator-(const Matrix2& o) const {
    return {e_[0][0] - o.e_[0][0], e_[0][1] - o.e_[0][1], e_[1][0] - o.e_[1][0], e_[1][1] - o.e_[1][1]};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    Entries r{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r[i][j] = e_[i][0] * o.e_[0][j] + e_[i][1] * o.e_[1][j];
    }
    return Matrix2{r};
}

Matrix2 Matrix2::operator*(Complex k) const {
    return {e_[0][0] * k, e_[0][1] * k, e_[1][0] * k, e_[1][1] * k};
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Complex d = a(i, j) - b(i, j);
            m = std::max({m, std::abs(d.real()), std::abs(d.imag())});
        }
    }
    return m;
}

bool approx_equal(const Matrix2& a, const Matrix2& b, double tol) { return max_abs_diff(a, b) <= tol; }

std::ostream& operator<<(std::ostream& os, const Matrix2& m) {
    return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

Matrix2 fermion_matrix(int mu, int nu) {
    check_index(mu);
    check_index(nu);
    Matrix2::Entries e{};
    e[mu - 1][nu - 1] = 1.0;
    return Matrix2{e};
}

RightActingMatrix::RightActingMatrix(const RealEntries& m) : m_{m} {
    for (const auto& row : m_) {
        for (double x : row) {
            if (!std::isfinite(x)) throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

RightActingMatrix RightActingMatrix::dyadic(int mu, int nu) {
    check_index(mu);
    check_index(nu);
    RealEntries e{};
    e[mu - 1][nu - 1] = 1.0;
    return RightActingMatrix{e};
}

double RightActingMatrix::at(int mu, int nu) const {
    check_index(mu);
    check_index(nu);
    return m_[mu - 1][nu - 1];
}

GroupAlgebraElement RightActingMatrix::group_algebra() const {
    GroupAlgebraElement sum;
    for (int mu = 1; mu <= 2; ++mu) {
        for (int nu = 1; nu <= 2; ++nu) sum = sum + fermion_dyadic(mu, nu) * at(mu, nu);
    }
    return sum;
}

RightActingMatrix RightActingMatrix::from_group_algebra(const GroupAlgebraElement& a) {
    const Vec3 r1 = ga_apply(a, Vec3::e1());
    const Vec3 r2 = ga_apply(a, Vec3::e2());
    return RightActingMatrix{RealEntries{{{r1.x1(), r1.x2()}, {r2.x1(), r2.x2()}}}};
}

double LeftActingMatrix::at(int row, int col) const {
    check_index(row);
    check_index(col);
    return m_[row - 1][col - 1];
}

Matrix2 LeftActingMatrix::to_complex() const { return {m_[0][0], m_[0][1], m_[1][0], m_[1][1]}; }

Vec3 apply_right(const Vec3& r, const RightActingMatrix& m, double tol) {
    require_planar(r, tol);
    const auto& M = m.entries();
    return {r.x1() * M[0][0] + r.x2() * M[1][0], r.x1() * M[0][1] + r.x2() * M[1][1], 0.0};
}

Vec3 apply_left(const LeftActingMatrix& m, const Vec3& r, double tol) {
    require_planar(r, tol);
    const auto& L = m.entries();
    return {L[0][0] * r.x1() + L[0][1] * r.x2(), L[1][0] * r.x1() + L[1][1] * r.x2(), 0.0};
}

RightActingMatrix matrix_multiply(const RightActingMatrix& a, const RightActingMatrix& b) {
    const auto& M = a.entries();
    const auto& N = b.entries();
    return RightActingMatrix{RealEntries{{
        {M[0][0] * N[0][0] + M[0][1] * N[1][0], M[0][0] * N[0][1] + M[0][1] * N[1][1]},
        {M[1][0] * N[0][0] + M[1][1] * N[1][0], M[1][0] * N[0][1] + M[1][1] * N[1][1]},
    }}};
}

LeftActingMatrix matrix_multiply(const LeftActingMatrix& a, const LeftActingMatrix& b) {
    const auto& M = a.m_;
    const auto& N = b.m_;
    return LeftActingMatrix{RealEntries{{
        {M[0][0] * N[0][0] + M[0][1] * N[1][0], M[0][0] * N[0][1] + M[0][1] * N[1][1]},
        {M[1][0] * N[0][0] + M[1][1] * N[1][0], M[1][0] * N[0][1] + M[1][1] * N[1][1]},
    }}};
}

LeftActingMatrix transpose(const RightActingMatrix& m) {
    const auto& M = m.entries();
    return LeftActingMatrix{RealEntries{{{M[0][0], M[1][0]}, {M[0][1], M[1][1]}}}};
}

RightActingMatrix transpose(const LeftActingMatrix& m) {
    const auto& L = m.entries();
    return RightActingMatrix{RealEntries{{{L[0][0], L[1][0]}, {L[0][1], L[1][1]}}}};
}

RightActingMatrix d4_matrix_of(D4Label g) {
    const auto raw = RightActingMatrix::from_group_algebra(GroupAlgebraElement::ket(g)).entries();
    RealEntries e{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) e[i][j] = snap_unit(raw[i][j]);
    }
    return RightActingMatrix{e};
}

std::array<CampbellMatrix, 4> campbell_matrices() {
    auto make = [](std::string name, D4Label ket, D4Label negative) {
        return CampbellMatrix{std::move(name), transpose(d4_matrix_of(ket)).to_complex(), ket, bra_argument(ket),
                              negative};
    };
    // J = [[0, 1], [-1, 0]] is the left-acting form of the clockwise quarter
    // turn, i.e. the bra <e_{0+3i}|.
    return {make("I", D4Label::Id, D4Label::F3), make("+", D4Label::F1, D4Label::F2),
            make("x", D4Label::F1p2, D4Label::F1m2), make("J", D4Label::Rcw, D4Label::Rccw)};
}

std::array<PauliConstruction, 4> pauli_matrices() {
    auto make = [](int index, D4Label ket, Complex factor, std::string reading) {
        const Matrix2 value = transpose(d4_matrix_of(ket)).to_complex() * factor;
        return PauliConstruction{index, value, ket, bra_argument(ket), factor, element(ket).generator,
                                 std::move(reading)};
    };
    // sigma2 needs the counterclockwise quarter turn: i times the transpose of
    // [[0, 1], [-1, 0]] is [[0, -i], [i, 0]].
    return {make(0, D4Label::Id, 1.0, "identity rotation"),
            make(1, D4Label::F1p2, 1.0, "flip (rotation by pi) about e_{1+2}"),
            make(2, D4Label::Rccw, kI, "rotation by pi/2 about e3, then multiplication by i"),
            make(3, D4Label::F1, 1.0, "flip (rotation by pi) about e1")};
}

Matrix2 pauli_rep(const Cliffor& a) {
    // a = z + w with z = s + i p and complex vector w_k = v_k + i b_k;
    // z sigma0 + sum w_k sigma_k.
    const Complex z{a.s(), a.p()};
    const Complex w1{a[Cliffor::V1], a[Cliffor::B1]};
    const Complex w2{a[Cliffor::V2], a[Cliffor::B2]};
    const Complex w3{a[Cliffor::V3], a[Cliffor::B3]};
    return {z + w3, w1 - kI * w2, w1 + kI * w2, z - w3};
}

Cliffor cliffor_from_matrix(const Matrix2& m) {
    const Complex z = 0.5 * (m(0, 0) + m(1, 1));
    const Complex w3 = 0.5 * (m(0, 0) - m(1, 1));
    const Complex w1 = 0.5 * (m(0, 1) + m(1, 0));
    const Complex w2 = (m(1, 0) - m(0, 1)) / (2.0 * kI);
    return Cliffor{{z.real(), w1.real(), w2.real(), w3.real(), w1.imag(), w2.imag(), w3.imag(), z.imag()}};
}

FermionCoefficients decompose_fermion(const Matrix2& m) {
    return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

}  // namespace cl30
