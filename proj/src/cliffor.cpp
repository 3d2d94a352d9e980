#include "cl30/cliffor.hpp"

#include "cl30/errors.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cl30 {

namespace {

// Basis blades are bitmasks over {e1, e2, e3}: bit 0 = e1, bit 1 = e2, bit 2 = e3.
// The product of two blades is the XOR of their masks times the sign picked up
// while anticommuting generators into ascending order (e_j e_k = -e_k e_j,
// j != k) and contracting repeated generators (e_j^2 = 1).
constexpr int reordering_sign(unsigned a, unsigned b) {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

struct BladeSlot {
    unsigned mask;
    double sign;  // storage coefficient = sign * blade coefficient
};

// Storage slot -> blade.  i e1 = e2e3, i e2 = e3e1 = -e1e3, i e3 = e1e2.
constexpr std::array<BladeSlot, 8> kSlots{{
    {0b000, 1.0},   // s
    {0b001, 1.0},   // e1
    {0b010, 1.0},   // e2
    {0b100, 1.0},   // e3
    {0b110, 1.0},   // i e1 = e2 e3
    {0b101, -1.0},  // i e2 = -e1 e3
    {0b011, 1.0},   // i e3 = e1 e2
    {0b111, 1.0},   // i = e1 e2 e3
}};

constexpr std::array<std::size_t, 8> make_slot_of_mask() {
    std::array<std::size_t, 8> out{};
    for (std::size_t k = 0; k < 8; ++k) out[kSlots[k].mask] = k;
    return out;
}
constexpr auto kSlotOfMask = make_slot_of_mask();

struct ProductEntry {
    std::size_t slot;
    double sign;
};

// table[j][k]: storage slot and sign of (basis_j * basis_k).
constexpr std::array<std::array<ProductEntry, 8>, 8> make_product_table() {
    std::array<std::array<ProductEntry, 8>, 8> t{};
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t k = 0; k < 8; ++k) {
            const unsigned mj = kSlots[j].mask;
            const unsigned mk = kSlots[k].mask;
            const unsigned mr = mj ^ mk;
            const std::size_t slot = kSlotOfMask[mr];
            // basis_j = sign_j * blade(mj), so the product in storage units is
            // sign_j * sign_k * reorder * blade(mr) = (.../sign_r) * basis_r.
            const double sign =
                kSlots[j].sign * kSlots[k].sign * reordering_sign(mj, mk) * kSlots[slot].sign;
            t[j][k] = {slot, sign};
        }
    }
    return t;
}
constexpr auto kProduct = make_product_table();

}  // namespace

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize the zero vector");
    return *this / n;
}

double max_abs_diff(const Vec3& a, const Vec3& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < 3; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

bool approx_equal(const Vec3& a, const Vec3& b, double tol) { return max_abs_diff(a, b) <= tol; }

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
}

Cliffor::Cliffor(const Coefficients& c) : c_{c} {
    for (double x : c_) {
        if (!std::isfinite(x)) throw std::invalid_argument("cliffor coefficients must be finite");
    }
}

Cliffor Cliffor::scalar(double s) { return Cliffor{{s, 0, 0, 0, 0, 0, 0, 0}}; }
Cliffor Cliffor::vector(const Vec3& v) { return Cliffor{{0, v[0], v[1], v[2], 0, 0, 0, 0}}; }
Cliffor Cliffor::bivector(const Vec3& v) { return Cliffor{{0, 0, 0, 0, v[0], v[1], v[2], 0}}; }
Cliffor Cliffor::pseudoscalar(double p) { return Cliffor{{0, 0, 0, 0, 0, 0, 0, p}}; }

Cliffor Cliffor::operator+(const Cliffor& o) const {
    Coefficients r;
    for (std::size_t k = 0; k < 8; ++k) r[k] = c_[k] + o.c_[k];
    return Cliffor{r};
}

Cliffor Cliffor::operator-(const Cliffor& o) const {
    Coefficients r;
    for (std::size_t k = 0; k < 8; ++k) r[k] = c_[k] - o.c_[k];
    return Cliffor{r};
}

Cliffor Cliffor::operator-() const {
    Coefficients r;
    for (std::size_t k = 0; k < 8; ++k) r[k] = -c_[k];
    return Cliffor{r};
}

Cliffor Cliffor::operator*(double k) const {
    Coefficients r;
    for (std::size_t j = 0; j < 8; ++j) r[j] = c_[j] * k;
    return Cliffor{r};
}

Cliffor Cliffor::operator/(double k) const {
    Coefficients r;
    for (std::size_t j = 0; j < 8; ++j) r[j] = c_[j] / k;
    return Cliffor{r};
}

Cliffor operator*(const Cliffor& a, const Cliffor& b) {
    Cliffor::Coefficients r{};
    for (std::size_t j = 0; j < 8; ++j) {
        if (a.c_[j] == 0.0) continue;
        for (std::size_t k = 0; k < 8; ++k) {
            const auto& e = kProduct[j][k];
            r[e.slot] += e.sign * a.c_[j] * b.c_[k];
        }
    }
    return Cliffor{r};
}

Cliffor geometric_product(const Cliffor& a, const Cliffor& b) { return a * b; }

Cliffor grade_project(const Cliffor& a, int k) {
    const auto& c = a.coefficients();
    switch (k) {
    case 0: return Cliffor::scalar(c[Cliffor::S]);
    case 1: return Cliffor::vector(a.v());
    case 2: return Cliffor::bivector(a.b());
    case 3: return Cliffor::pseudoscalar(c[Cliffor::P]);
    default: throw std::out_of_range("grade must be 0, 1, 2 or 3, got " + std::to_string(k));
    }
}

Cliffor reverse(const Cliffor& a) {
    auto c = a.coefficients();
    for (std::size_t k = Cliffor::B1; k <= Cliffor::P; ++k) c[k] = -c[k];
    return Cliffor{c};
}

Cliffor clifford_conjugate(const Cliffor& a) {
    auto c = a.coefficients();
    for (std::size_t k = Cliffor::V1; k <= Cliffor::B3; ++k) c[k] = -c[k];
    return Cliffor{c};
}

Cliffor inverse(const Cliffor& a) {
    // a * conj(a) = z = x + i y is central, so a^{-1} = conj(a) * conj(z) / |z|^2.
    const Cliffor bar = clifford_conjugate(a);
    const Cliffor z = a * bar;
    const double x = z.s();
    const double y = z.p();
    const double zz = x * x + y * y;
    const double scale = norm_squared(a);
    if (!(zz > 0.0) || std::sqrt(zz) <= 1e-14 * scale) {
        throw NonInvertible("cliffor is not invertible (zero complex norm)");
    }
    return bar * Cliffor{{x / zz, 0, 0, 0, 0, 0, 0, -y / zz}};
}

std::pair<double, Vec3> pauli_decompose(const Vec3& a, const Vec3& b) {
    const Cliffor ab = Cliffor::vector(a) * Cliffor::vector(b);
    return {ab.s(), ab.b()};
}

double norm_squared(const Cliffor& a) {
    double s = 0.0;
    for (double x : a.coefficients()) s += x * x;
    return s;
}

double max_abs_diff(const Cliffor& a, const Cliffor& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < 8; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

bool approx_equal(const Cliffor& a, const Cliffor& b, double tol) { return max_abs_diff(a, b) <= tol; }

std::ostream& operator<<(std::ostream& os, const Cliffor& a) {
    os << '[';
    for (std::size_t k = 0; k < 8; ++k) os << (k ? ", " : "") << a[k];
    return os << ']';
}

}  // namespace cl30
