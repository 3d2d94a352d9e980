#include "cl30/verify.hpp"

#include "cl30/d4.hpp"
#include "cl30/group_algebra.hpp"
#include "cl30/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cl30 {

namespace {

using L = D4Label;

// Reference multiplication table, rows = left factor.
constexpr MultiplicationTable kReferenceTable{{
    {L::Id, L::F1, L::F2, L::F3, L::Rccw, L::Rcw, L::F1p2, L::F1m2},
    {L::F1, L::Id, L::F3, L::F2, L::F1p2, L::F1m2, L::Rccw, L::Rcw},
    {L::F2, L::F3, L::Id, L::F1, L::F1m2, L::F1p2, L::Rcw, L::Rccw},
    {L::F3, L::F2, L::F1, L::Id, L::Rcw, L::Rccw, L::F1m2, L::F1p2},
    {L::Rccw, L::F1m2, L::F1p2, L::Rcw, L::F3, L::Id, L::F1, L::F2},
    {L::Rcw, L::F1p2, L::F1m2, L::Rccw, L::Id, L::F3, L::F2, L::F1},
    {L::F1p2, L::Rcw, L::Rccw, L::F1m2, L::F2, L::F1, L::Id, L::F3},
    {L::F1m2, L::Rccw, L::Rcw, L::F1p2, L::F1, L::F2, L::F3, L::Id},
}};

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_{seed} {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>{lo, hi}(rng_); }
    Vec3 vec() { return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)}; }
    Vec3 planar() { return {uniform(-1, 1), uniform(-1, 1), 0.0}; }
    Vec3 unit() {
        std::normal_distribution<double> n;
        while (true) {
            const Vec3 v{n(rng_), n(rng_), n(rng_)};
            if (v.norm() > 1e-6) return v.normalized();
        }
    }
    AxisAngle axis_angle() { return {unit(), uniform(0.0, std::numbers::pi), false}; }
    Cliffor cliffor() {
        Cliffor::Coefficients c;
        for (double& x : c) x = uniform(-1, 1);
        return Cliffor{c};
    }

  private:
    std::mt19937_64 rng_;
};

class Suite {
  public:
    void add(std::string name, double err, double tol) {
        checks_.push_back({std::move(name), err <= tol, err, tol});
    }
    void add_exact(std::string name, bool ok) { checks_.push_back({std::move(name), ok, ok ? 0.0 : 1.0, 0.0}); }
    std::vector<IdentityCheck> take() { return std::move(checks_); }

  private:
    std::vector<IdentityCheck> checks_;
};

D4Label power(D4Label g, int n) {
    D4Label out = L::Id;
    for (int k = 0; k < n; ++k) out = multiply(out, g);
    return out;
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(double match_tol, std::uint64_t seed) {
    Sampler rnd{seed};
    Suite suite;
    constexpr int kSamples = 1000;

    // ga-core
    {
        double err = 0.0;
        const std::array<Cliffor, 3> e{Cliffor::e1(), Cliffor::e2(), Cliffor::e3()};
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                const Cliffor sum = e[j] * e[k] + e[k] * e[j];
                err = std::max(err, max_abs_diff(sum, Cliffor::scalar(j == k ? 2.0 : 0.0)));
            }
        }
        suite.add("orthonormality e_j e_k + e_k e_j = 2 delta_jk", err, 0.0);
    }
    {
        double pauli = 0.0, assoc = 0.0, hom = 0.0, round = 0.0;
        for (int n = 0; n < kSamples; ++n) {
            const Vec3 a = rnd.vec(), b = rnd.vec();
            const Cliffor expected = Cliffor::scalar(a.dot(b)) + Cliffor::bivector(a.cross(b));
            pauli = std::max(pauli, max_abs_diff(Cliffor::vector(a) * Cliffor::vector(b), expected));

            const Cliffor x = rnd.cliffor(), y = rnd.cliffor(), z = rnd.cliffor();
            assoc = std::max(assoc, max_abs_diff((x * y) * z, x * (y * z)));
            hom = std::max(hom, max_abs_diff(pauli_rep(x * y), pauli_rep(x) * pauli_rep(y)));
            round = std::max(round, max_abs_diff(cliffor_from_matrix(pauli_rep(x)), x));
        }
        suite.add("Pauli identity ab = a.b + i (a x b)", pauli, 1e-12);
        suite.add("associativity of the geometric product", assoc, 1e-12);
        suite.add("Pauli representation preserves products", hom, 1e-12);
        suite.add("matrix to cliffor inverts the Pauli representation", round, 1e-12);
    }
    {
        double err = 0.0;
        for (int n = 0; n < kSamples; ++n) {
            const Vec3 a = rnd.vec(), b = rnd.vec();
            const Vec3 par = b * (a.dot(b) / b.dot(b));
            const Vec3 perp = a - par;
            const Cliffor B = Cliffor::vector(b);
            err = std::max(err, max_abs_diff(Cliffor::vector(par) * B, B * Cliffor::vector(par)));
            err = std::max(err, max_abs_diff(Cliffor::vector(perp) * B, -(B * Cliffor::vector(perp))));
        }
        suite.add("parallel vectors commute, perpendicular vectors anticommute", err, 1e-12);
    }

    // rotors
    {
        double norm = 0.0, parallel = 0.0, closure = 0.0, flips = 0.0, scalar_part = 0.0;
        bool hestenes = true;
        for (int n = 0; n < kSamples; ++n) {
            const AxisAngle t1 = rnd.axis_angle(), t2 = rnd.axis_angle();
            const Rotor R = exp_half(t1);
            const Vec3 r = rnd.vec();
            const Vec3 rr = rotate_vector(R, r);
            norm = std::max(norm, std::abs(rr.norm() - r.norm()));
            const Vec3 par = t1.axis * r.dot(t1.axis);
            parallel = std::max(parallel, std::abs(rr.dot(t1.axis) - r.dot(t1.axis)));
            parallel = std::max(parallel, max_abs_diff(rotate_vector(R, par), par));

            const Vec3 sequential = rotate_vector(exp_half(t2), rotate_vector(R, r));
            closure = std::max(closure, max_abs_diff(rotate_vector(exp_half(compose_axis_angle(t1, t2)), r), sequential));

            hestenes = hestenes && rotate_vector(canonicalize(-R.cliffor()), r) == rr;

            const Vec3 eta = rnd.unit();
            flips = std::max(flips, max_abs_diff(flip(eta, r), rotate_vector(exp_half(eta * std::numbers::pi), r)));

            const Cliffor A = rnd.cliffor();
            const Cliffor RA = rotate_cliffor(R, A);
            scalar_part = std::max({scalar_part, std::abs(RA.s() - A.s()), std::abs(RA.p() - A.p())});
        }
        suite.add("rotation preserves length", norm, 1e-12);
        suite.add("component along the rotation axis is unchanged", parallel, 1e-12);
        suite.add("Euler-Rodrigues composition equals sequential rotation", closure, 1e-12);
        suite.add_exact("Hestenes equivalence: R and -R rotate alike", hestenes);
        suite.add("flip eta r eta is a half-turn rotation", flips, 1e-12);
        suite.add("rotation leaves scalar and pseudoscalar parts unchanged", scalar_part, 0.0);
    }

    // d4
    {
        const auto& t = multiplication_table();
        suite.add_exact("D4 multiplication table matches the reference table", t == kReferenceTable);

        bool axioms = true;
        for (L g : kD4Labels) {
            axioms = axioms && multiply(L::Id, g) == g && multiply(g, L::Id) == g;
            axioms = axioms && multiply(g, inverse(g)) == L::Id;
            std::array<bool, kD4Order> row_seen{}, col_seen{};
            for (L h : kD4Labels) {
                row_seen[index_of(t[index_of(g)][index_of(h)])] = true;
                col_seen[index_of(t[index_of(h)][index_of(g)])] = true;
                for (L k : kD4Labels) axioms = axioms && multiply(multiply(g, h), k) == multiply(g, multiply(h, k));
            }
            axioms = axioms && std::all_of(row_seen.begin(), row_seen.end(), [](bool b) { return b; }) &&
                     std::all_of(col_seen.begin(), col_seen.end(), [](bool b) { return b; });
        }
        suite.add_exact("D4 group axioms: closure, identity, inverses, associativity", axioms);

        const bool generators = power(L::F1, 2) == L::Id && power(L::Rccw, 4) == L::Id &&
                                power(L::Rccw, 2) == L::F3 && power(L::Rccw, 3) == L::Rcw &&
                                multiply(L::F1, power(L::Rccw, 2)) == L::F2 && multiply(L::F1, L::Rccw) == L::F1p2 &&
                                multiply(L::F1, power(L::Rccw, 3)) == L::F1m2;
        suite.add_exact("D4 is generated by the e1 flip and the quarter turn", generators);

        const bool conj = multiply(L::F1, L::Rccw) == multiply(L::Rcw, L::F1) &&
                          multiply(L::F2, L::Rccw) == multiply(L::Rcw, L::F2) &&
                          multiply(L::F3, L::Rccw) == multiply(L::Rccw, L::F3) &&
                          multiply(L::Rccw, L::F1) == multiply(L::F2, L::Rccw) &&
                          multiply(L::Rccw, L::F2) == multiply(L::F1, L::Rccw) &&
                          multiply(L::Rcw, L::F1) == multiply(L::F2, L::Rcw);
        suite.add_exact("conjugation-commutation relations of flips and quarter turns", conj);

        double orbit = 0.0;
        for (L g : kD4Labels) {
            for (const Vec3& v : vertex_set()) {
                double best = 1e300;
                for (const Vec3& w : vertex_set()) best = std::min(best, max_abs_diff(action_on_vector(g, v), w));
                orbit = std::max(orbit, best);
            }
        }
        suite.add("every D4 element permutes the vertices of the square", orbit, 1e-12);

        const auto unmatched = element_from_rotor(exp_half(Vec3::e3() * (std::numbers::pi / 3)), match_tol);
        suite.add_exact("a 60 degree turn is not a square symmetry", !unmatched.has_value());
    }

    // group algebra
    {
        using G = GroupAlgebraElement;
        const bool quasi = multiply(L::F1, L::F2) == L::F3 && multiply(L::F2, L::F1) == L::F3 &&
                           multiply(L::F2, L::F3) == L::F1 && multiply(L::F3, L::F2) == L::F1 &&
                           multiply(L::F3, L::F1) == L::F2 && multiply(L::F1, L::F3) == L::F2;
        suite.add_exact("flips about e1, e2, e3 form a commuting quasi-quaternion algebra", quasi);

        bool sums = true;
        for (L f : {L::F1, L::F2, L::F3}) {
            const G s{{L::Id, 1.0}, {f, 1.0}};
            sums = sums && ga_multiply(s, s) == s * 2.0;
        }
        for (L q : {L::Rccw, L::Rcw}) {
            const G k = G::ket(q);
            sums = sums && k * G{{L::Id, 1.0}, {L::F1, 1.0}} == G{{L::Id, 1.0}, {L::F2, 1.0}} * k;
            sums = sums && k * G{{L::Id, 1.0}, {L::F2, 1.0}} == G{{L::Id, 1.0}, {L::F1, 1.0}} * k;
            sums = sums && k * G{{L::Id, 1.0}, {L::F3, 1.0}} == G{{L::Id, 1.0}, {L::F3, 1.0}} * k;
        }
        suite.add_exact("products of sums of flips", sums);

        bool dyadic_products = true;
        for (int a = 1; a <= 2; ++a) {
            for (int b = 1; b <= 2; ++b) {
                for (int mu = 1; mu <= 2; ++mu) {
                    for (int nu = 1; nu <= 2; ++nu) {
                        const G expected = b == mu ? fermion_dyadic(a, nu) : G{};
                        dyadic_products = dyadic_products && equal_modulo_null(fermion_dyadic(a, b) * fermion_dyadic(mu, nu), expected);
                    }
                }
            }
        }
        suite.add_exact("dyadic product rule e_{m'n'} e_{mn} = delta_{n'm} e_{m'n}", dyadic_products);

        double basis_action = 0.0;
        const std::array<Vec3, 2> e{Vec3::e1(), Vec3::e2()};
        for (int lambda = 1; lambda <= 2; ++lambda) {
            for (int mu = 1; mu <= 2; ++mu) {
                for (int nu = 1; nu <= 2; ++nu) {
                    const Vec3 expected = lambda == mu ? e[nu - 1] : Vec3{};
                    basis_action = std::max(basis_action,
                                            max_abs_diff(ga_apply(fermion_dyadic(mu, nu), e[lambda - 1]), expected));
                }
            }
        }
        suite.add("dyadic basis action e_l . e_{mn} = delta_{lm} e_n", basis_action, 1e-12);

        double nulls = 0.0;
        const std::array<std::pair<G, Subspace>, 6> null_sums{{
            {G{{L::Id, 1.0}, {L::F1, -1.0}}, Subspace::Line1},
            {G{{L::Id, 1.0}, {L::F3, 1.0}}, Subspace::Plane12},
            {G{{L::F1, 1.0}, {L::F2, 1.0}}, Subspace::Plane12},
            {G{{L::Rccw, 1.0}, {L::Rcw, 1.0}}, Subspace::Plane12},
            {G{{L::F1p2, 1.0}, {L::F1m2, 1.0}}, Subspace::Plane12},
            {G{{L::Id, 1.0}, {L::F1, 1.0}, {L::F2, 1.0}, {L::F3, 1.0}}, Subspace::Space},
        }};
        for (int n = 0; n < 100; ++n) {
            const Vec3 r = rnd.vec();
            for (const auto& [sum, space] : null_sums) {
                const Vec3 v = space == Subspace::Line1     ? Vec3{r.x1(), 0, 0}
                               : space == Subspace::Plane12 ? Vec3{r.x1(), r.x2(), 0}
                                                            : r;
                nulls = std::max(nulls, max_abs_diff(ga_apply(sum, v), Vec3{}));
            }
        }
        suite.add("null sums annihilate their subspaces", nulls, 1e-15);
    }

    // matrix bridge
    {
        bool hom = true;
        for (L g : kD4Labels) {
            for (L h : kD4Labels) hom = hom && d4_matrix_of(multiply(g, h)) == matrix_multiply(d4_matrix_of(g), d4_matrix_of(h));
        }
        suite.add_exact("D4 matrices form a representation", hom);

        double action = 0.0;
        bool transposes = true;
        for (int n = 0; n < 100; ++n) {
            const RightActingMatrix M{RealEntries{{{rnd.uniform(-1, 1), rnd.uniform(-1, 1)},
                                                   {rnd.uniform(-1, 1), rnd.uniform(-1, 1)}}}};
            const RightActingMatrix N{RealEntries{{{rnd.uniform(-1, 1), rnd.uniform(-1, 1)},
                                                   {rnd.uniform(-1, 1), rnd.uniform(-1, 1)}}}};
            const Vec3 r = rnd.planar();
            action = std::max(action, max_abs_diff(ga_apply(M.group_algebra(), r), apply_right(r, M)));
            action = std::max(action, max_abs_diff(apply_left(transpose(M), r), apply_right(r, M)));
            transposes = transposes && transpose(matrix_multiply(M, N)) == matrix_multiply(transpose(N), transpose(M));
        }
        suite.add("group-algebra action equals the row-vector matrix product", action, 1e-12);
        suite.add_exact("transpose of a product reverses the factors", transposes);

        const std::array<Matrix2, 4> sigma{
            Matrix2::identity(), Matrix2{0.0, 1.0, 1.0, 0.0}, Matrix2{0.0, Complex{0, -1}, Complex{0, 1}, 0.0},
            Matrix2{1.0, 0.0, 0.0, -1.0}};
        bool pauli = true;
        for (const auto& p : pauli_matrices()) pauli = pauli && p.value == sigma[p.index];
        double anti = 0.0;
        const std::array<Cliffor, 3> e{Cliffor::e1(), Cliffor::e2(), Cliffor::e3()};
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                const Matrix2 s = pauli_rep(e[j]) * pauli_rep(e[k]) + pauli_rep(e[k]) * pauli_rep(e[j]);
                anti = std::max(anti, max_abs_diff(s, Matrix2::identity() * (j == k ? 2.0 : 0.0)));
            }
        }
        suite.add_exact("Pauli matrices built from rotation operators", pauli);
        suite.add("Pauli matrices anticommute: s_j s_k + s_k s_j = 2 delta_jk", anti, 0.0);

        double campbell = 0.0;
        for (const auto& c : campbell_matrices()) {
            for (int n = 0; n < 100; ++n) {
                const Vec3 r = rnd.planar();
                campbell = std::max(campbell, max_abs_diff(action_on_vector(c.ket, r), -action_on_vector(c.planar_negative, r)));
            }
        }
        suite.add("Campbell matrices equal their negated partners on the plane", campbell, 1e-12);
    }

    return suite.take();
}

}  // namespace cl30
