#include "cl30/cliffor.hpp"
#include "cl30/errors.hpp"
#include "cl30/matrix.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace cl30;

namespace {

Cliffor from(const oracle::C8& a) { return Cliffor{a}; }

}  // namespace

TEST(Cliffor, BasisVectorsAreOrthonormal) {
    const std::array<Cliffor, 3> e{Cliffor::e1(), Cliffor::e2(), Cliffor::e3()};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            const Cliffor anti = e[j] * e[k] + e[k] * e[j];
            EXPECT_EQ(anti, Cliffor::scalar(j == k ? 2.0 : 0.0)) << j << k;
        }
    }
    EXPECT_EQ(Cliffor::e1() * Cliffor::e1(), Cliffor::scalar(1.0));
}

TEST(Cliffor, PseudoscalarIsCentralAndSquaresToMinusOne) {
    EXPECT_EQ(Cliffor::e1() * Cliffor::e2() * Cliffor::e3(), Cliffor::i());
    EXPECT_EQ(Cliffor::i() * Cliffor::i(), Cliffor::scalar(-1.0));
    oracle::Rng rng{1};
    for (int n = 0; n < 20; ++n) {
        const Cliffor a = from(rng.cliffor());
        EXPECT_EQ(Cliffor::i() * a, a * Cliffor::i());
    }
}

TEST(Cliffor, BivectorStorageIsDualOfVector) {
    EXPECT_EQ(Cliffor::e2() * Cliffor::e3(), Cliffor::bivector(Vec3::e1()));
    EXPECT_EQ(Cliffor::e3() * Cliffor::e1(), Cliffor::bivector(Vec3::e2()));
    EXPECT_EQ(Cliffor::e1() * Cliffor::e2(), Cliffor::bivector(Vec3::e3()));
}

TEST(Cliffor, ProductOfOnePlusVectorsMatchesMatrixOracle) {
    const Cliffor a = Cliffor::scalar(1.0) + Cliffor::e1();
    const Cliffor b = Cliffor::scalar(1.0) + Cliffor::e2();
    const Cliffor expected{{1, 1, 1, 0, 0, 0, 1, 0}};
    EXPECT_EQ(a * b, expected);
    const auto m = oracle::mul(oracle::pauli_map(a.coefficients()), oracle::pauli_map(b.coefficients()));
    EXPECT_LT(oracle::max_diff(m, oracle::pauli_map(expected.coefficients())), 1e-15);
}

TEST(Cliffor, ProductAgreesWithMatrixOracleOnRandomInputs) {
    oracle::Rng rng{2};
    for (int n = 0; n < 200; ++n) {
        const auto a = rng.cliffor();
        const auto b = rng.cliffor();
        const auto lhs = oracle::pauli_map((from(a) * from(b)).coefficients());
        const auto rhs = oracle::mul(oracle::pauli_map(a), oracle::pauli_map(b));
        EXPECT_LT(oracle::max_diff(lhs, rhs), 1e-12);
    }
}

TEST(Cliffor, ProductIsAssociative) {
    oracle::Rng rng{3};
    for (int n = 0; n < 100; ++n) {
        const Cliffor a = from(rng.cliffor()), b = from(rng.cliffor()), c = from(rng.cliffor());
        EXPECT_LT(max_abs_diff((a * b) * c, a * (b * c)), 1e-12);
    }
}

TEST(Cliffor, PauliIdentityMatchesCoordinateFormulas) {
    const auto [d, x] = pauli_decompose({1, 2, 0}, {3, 0, 1});
    EXPECT_DOUBLE_EQ(d, 3.0);
    EXPECT_TRUE(approx_equal(x, Vec3{2, -1, -6}, 0.0));

    oracle::Rng rng{4};
    for (int n = 0; n < 100; ++n) {
        const auto a = rng.vec(), b = rng.vec();
        const Cliffor ab = Cliffor::vector({a[0], a[1], a[2]}) * Cliffor::vector({b[0], b[1], b[2]});
        const auto c = oracle::cross(a, b);
        EXPECT_NEAR(ab.s(), oracle::dot(a, b), 1e-12);
        EXPECT_LT(oracle::max_diff(ab.b().components(), c), 1e-12);
        EXPECT_EQ(ab.v(), Vec3{});
        EXPECT_EQ(ab.p(), 0.0);
    }
}

TEST(Cliffor, ParallelCommutesPerpendicularAnticommutes) {
    const Cliffor a = Cliffor::vector({1, 2, 3});
    const Cliffor par = Cliffor::vector({-2, -4, -6});
    const Cliffor perp = Cliffor::vector({3, 0, -1});
    EXPECT_EQ(a * par, par * a);
    EXPECT_EQ(a * perp, -(perp * a));
}

TEST(Cliffor, GradeProjection) {
    const Cliffor a{{1, 2, 3, 4, 5, 6, 7, 8}};
    EXPECT_EQ(grade_project(a, 0), Cliffor::scalar(1));
    EXPECT_EQ(grade_project(a, 1), Cliffor::vector({2, 3, 4}));
    EXPECT_EQ(grade_project(a, 2), Cliffor::bivector({5, 6, 7}));
    EXPECT_EQ(grade_project(a, 3), Cliffor::pseudoscalar(8));
    EXPECT_THROW(grade_project(a, 4), std::out_of_range);
    EXPECT_THROW(grade_project(a, -1), std::out_of_range);
}

TEST(Cliffor, ReverseOfQuarterTurnIsItsInverse) {
    const double h = 1.0 / std::sqrt(2.0);
    const Cliffor r{{h, 0, 0, 0, 0, 0, h, 0}};
    const Cliffor expected{{h, 0, 0, 0, 0, 0, -h, 0}};
    EXPECT_EQ(reverse(r), expected);
    EXPECT_LT(max_abs_diff(inverse(r), expected), 1e-15);
}

TEST(Cliffor, ReverseReversesProducts) {
    oracle::Rng rng{5};
    for (int n = 0; n < 50; ++n) {
        const Cliffor a = from(rng.cliffor()), b = from(rng.cliffor());
        EXPECT_LT(max_abs_diff(reverse(a * b), reverse(b) * reverse(a)), 1e-12);
    }
}

TEST(Cliffor, InverseOfGeneralCliffor) {
    oracle::Rng rng{6};
    for (int n = 0; n < 100; ++n) {
        const Cliffor a = from(rng.cliffor());
        EXPECT_LT(max_abs_diff(a * inverse(a), Cliffor::scalar(1)), 1e-9);
        EXPECT_LT(max_abs_diff(inverse(a) * a, Cliffor::scalar(1)), 1e-9);
    }
}

TEST(Cliffor, NullCliffordsAreNotInvertible) {
    EXPECT_THROW(inverse(Cliffor{}), NonInvertible);
    // (1 + e1) is a zero divisor: (1 + e1)(1 - e1) = 0.
    EXPECT_THROW(inverse(Cliffor::scalar(1) + Cliffor::e1()), NonInvertible);
}

TEST(Cliffor, RejectsNonFiniteCoefficients) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW((Cliffor{{0, 0, nan, 0, 0, 0, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(Cliffor::scalar(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(Cliffor, CliffordConjugateGivesCentralNorm) {
    oracle::Rng rng{7};
    for (int n = 0; n < 50; ++n) {
        const Cliffor a = from(rng.cliffor());
        const Cliffor z = a * clifford_conjugate(a);
        EXPECT_LT(z.v().norm() + z.b().norm(), 1e-12);
    }
}
