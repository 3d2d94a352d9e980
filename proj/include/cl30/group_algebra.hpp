#pragma once

/**
 * @file group_algebra.hpp
 * @brief Real group algebra of D4: formal sums of right-acting ket operators.
 *
 * Sums are kept formal.  |g> + |h> is never folded into a single ket, and
 * equality here is coefficient equality.  Operator equivalence ("acts the
 * same on a given subspace") is a separate, subspace-relative predicate:
 * |1> + |i e3> is not the zero element even though it annihilates every
 * vector in the xy-plane.
 */

#include "cl30/d4.hpp"

#include <array>
#include <initializer_list>
#include <utility>

namespace cl30 {

class GroupAlgebraElement {
  public:
    using Coefficients = std::array<double, kD4Order>;

    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(const Coefficients& c);
    GroupAlgebraElement(std::initializer_list<std::pair<D4Label, double>> terms);

    /// The single ket |g>.
    static GroupAlgebraElement ket(D4Label g, double coeff = 1.0);

    double operator[](D4Label g) const { return c_[index_of(g)]; }
    const Coefficients& coefficients() const { return c_; }
    bool is_zero() const;

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-() const;
    GroupAlgebraElement operator*(double k) const;
    friend GroupAlgebraElement operator*(double k, const GroupAlgebraElement& a) { return a * k; }

    bool operator==(const GroupAlgebraElement&) const = default;

  private:
    Coefficients c_{};
};

/// Convolution over the D4 table: (A B)[g h] += A[g] B[h].
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return ga_multiply(a, b);
}

/// r A = sum_g A[g] (r |g>).  For products, the left factor acts first:
/// ga_apply(A B, r) == ga_apply(B, ga_apply(A, r)).
Vec3 ga_apply(const GroupAlgebraElement& a, const Vec3& r);

/// Unit extraction-replacement operator .e_{mu nu} (mu, nu in {1, 2}):
/// e_lambda . e_{mu nu} = delta_{lambda mu} e_nu.
GroupAlgebraElement fermion_dyadic(int mu, int nu);

enum class Subspace {
    Line1,    ///< span{e1}
    Plane12,  ///< span{e1, e2}
    Space,    ///< span{e1, e2, e3}
};

/// A and B act identically on every vector of the subspace.
bool equivalent_on(const GroupAlgebraElement& a, const GroupAlgebraElement& b, Subspace s,
                   double tol = kDefaultTolerance);
/// A sends every vector of the subspace to 0.
bool annihilates(const GroupAlgebraElement& a, Subspace s, double tol = kDefaultTolerance);

/// Representative of A modulo the two-sided ideal spanned by
/// N = |1> + |i e1> + |i e2> + |i e3> and N |e_{0+3i}>.  Both act as zero on
/// every vector, so A and reduce_null(A) are equivalent on all of space; the
/// result has zero |i e3> and |i e_{1-2}> coefficients.
GroupAlgebraElement reduce_null(const GroupAlgebraElement& a);

/// Coefficient equality after reduce_null.  This is the sense in which the
/// dyadic product rule holds exactly.
bool equal_modulo_null(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

double max_abs_diff(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

}  // namespace cl30
