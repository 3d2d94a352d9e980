#include "cl30/group_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cl30 {

namespace {

std::vector<Vec3> basis_of(Subspace s) {
    switch (s) {
    case Subspace::Line1: return {Vec3::e1()};
    case Subspace::Plane12: return {Vec3::e1(), Vec3::e2()};
    case Subspace::Space: return {Vec3::e1(), Vec3::e2(), Vec3::e3()};
    }
    throw std::invalid_argument("unknown subspace");
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(const Coefficients& c) : c_{c} {
    for (double x : c_) {
        if (!std::isfinite(x)) throw std::invalid_argument("group algebra coefficients must be finite");
    }
}

GroupAlgebraElement::GroupAlgebraElement(std::initializer_list<std::pair<D4Label, double>> terms) {
    for (const auto& [g, x] : terms) c_[index_of(g)] += x;
    for (double x : c_) {
        if (!std::isfinite(x)) throw std::invalid_argument("group algebra coefficients must be finite");
    }
}

GroupAlgebraElement GroupAlgebraElement::ket(D4Label g, double coeff) { return GroupAlgebraElement{{g, coeff}}; }

bool GroupAlgebraElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](double x) { return x == 0.0; });
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    Coefficients r;
    for (std::size_t k = 0; k < kD4Order; ++k) r[k] = c_[k] + o.c_[k];
    return GroupAlgebraElement{r};
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    Coefficients r;
    for (std::size_t k = 0; k < kD4Order; ++k) r[k] = c_[k] - o.c_[k];
    return GroupAlgebraElement{r};
}

GroupAlgebraElement GroupAlgebraElement::operator-() const { return *this * -1.0; }

GroupAlgebraElement GroupAlgebraElement::operator*(double k) const {
    Coefficients r;
    for (std::size_t j = 0; j < kD4Order; ++j) r[j] = c_[j] * k;
    return GroupAlgebraElement{r};
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    const auto& table = multiplication_table();
    GroupAlgebraElement::Coefficients r{};
    for (std::size_t g = 0; g < kD4Order; ++g) {
        if (a.coefficients()[g] == 0.0) continue;
        for (std::size_t h = 0; h < kD4Order; ++h) {
            r[index_of(table[g][h])] += a.coefficients()[g] * b.coefficients()[h];
        }
    }
    return GroupAlgebraElement{r};
}

Vec3 ga_apply(const GroupAlgebraElement& a, const Vec3& r) {
    Vec3 out;
    for (D4Label g : kD4Labels) {
        const double x = a[g];
        if (x != 0.0) out = out + action_on_vector(g, r) * x;
    }
    return out;
}

GroupAlgebraElement fermion_dyadic(int mu, int nu) {
    const auto half_11 = GroupAlgebraElement{{D4Label::Id, 0.5}, {D4Label::F1, 0.5}};
    const auto half_22 = GroupAlgebraElement{{D4Label::Id, 0.5}, {D4Label::F2, 0.5}};
    if (mu == 1 && nu == 1) return half_11;
    if (mu == 1 && nu == 2) return half_11 * GroupAlgebraElement::ket(D4Label::Rccw);
    if (mu == 2 && nu == 1) return half_22 * GroupAlgebraElement::ket(D4Label::Rcw);
    if (mu == 2 && nu == 2) return half_22;
    throw std::out_of_range("dyadic indices must be 1 or 2");
}

bool equivalent_on(const GroupAlgebraElement& a, const GroupAlgebraElement& b, Subspace s, double tol) {
    // Both sides are linear in r, so agreement on a basis is agreement on the span.
    for (const Vec3& e : basis_of(s)) {
        if (!approx_equal(ga_apply(a, e), ga_apply(b, e), tol)) return false;
    }
    return true;
}

bool annihilates(const GroupAlgebraElement& a, Subspace s, double tol) {
    return equivalent_on(a, GroupAlgebraElement{}, s, tol);
}

GroupAlgebraElement reduce_null(const GroupAlgebraElement& a) {
    const GroupAlgebraElement n{{D4Label::Id, 1.0}, {D4Label::F1, 1.0}, {D4Label::F2, 1.0}, {D4Label::F3, 1.0}};
    const GroupAlgebraElement nq = n * GroupAlgebraElement::ket(D4Label::Rccw);
    return a - n * a[D4Label::F3] - nq * a[D4Label::F1m2];
}

bool equal_modulo_null(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return reduce_null(a) == reduce_null(b);
}

double max_abs_diff(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < kD4Order; ++k) m = std::max(m, std::abs(a.coefficients()[k] - b.coefficients()[k]));
    return m;
}

}  // namespace cl30
