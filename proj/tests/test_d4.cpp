#include "cl30/d4.hpp"
#include "cl30/errors.hpp"
#include "reference.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace cl30;
using L = D4Label;

namespace {

// Library labels in the reference table's row order.
constexpr std::array<L, 8> kByKet{L::Id, L::F1, L::F2, L::F3, L::Rccw, L::Rcw, L::F1p2, L::F1m2};

}  // namespace

TEST(D4, TableMatchesReference) {
    const auto& t = multiplication_table();
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            const int expected = reference::ket_index(reference::kTable[r][c]);
            ASSERT_GE(expected, 0);
            EXPECT_EQ(t[index_of(kByKet[r])][index_of(kByKet[c])], kByKet[expected])
                << reference::kKetOrder[r] << " * " << reference::kKetOrder[c];
        }
    }
}

TEST(D4, NamedProducts) {
    EXPECT_EQ(multiply(L::F1, L::F2), L::F3);
    EXPECT_EQ(multiply(L::F1, L::Rccw), L::F1p2);
    EXPECT_EQ(multiply(L::Rccw, L::F1), L::F1m2);
    EXPECT_EQ(multiply(L::Rccw, L::Rccw), L::F3);
    EXPECT_EQ(multiply(L::F1p2, L::F1m2), L::F3);
}

TEST(D4, GroupAxioms) {
    for (L a : kD4Labels) {
        EXPECT_EQ(multiply(L::Id, a), a);
        EXPECT_EQ(multiply(a, L::Id), a);
        EXPECT_EQ(multiply(a, inverse(a)), L::Id);
        for (L b : kD4Labels) {
            for (L c : kD4Labels) EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        }
    }
    EXPECT_EQ(inverse(L::Rccw), L::Rcw);
    EXPECT_EQ(inverse(L::F1p2), L::F1p2);
}

TEST(D4, GeneratedByFlipAndQuarterTurn) {
    std::set<L> seen{L::Id};
    for (bool grew = true; grew;) {
        grew = false;
        for (L g : std::set<L>{seen}) {
            for (L s : {L::F1, L::Rccw}) grew |= seen.insert(multiply(g, s)).second;
        }
    }
    EXPECT_EQ(seen.size(), kD4Order);
}

TEST(D4, ActionsOnVectors) {
    const Vec3 r{0.5, -1.5, 2.0};
    EXPECT_TRUE(approx_equal(action_on_vector(L::F3, r), Vec3{-0.5, 1.5, 2.0}, 1e-15));
    EXPECT_TRUE(approx_equal(action_on_vector(L::Rcw, r), Vec3{-1.5, -0.5, 2.0}, 1e-15));
    EXPECT_TRUE(approx_equal(action_on_vector(L::Rccw, Vec3::e1()), Vec3::e2(), 1e-15));
    EXPECT_TRUE(approx_equal(action_on_vector(L::F1p2, Vec3::e1()), Vec3::e2(), 1e-15));
}

TEST(D4, ElementsPermuteTheSquare) {
    const auto& v = vertex_set();
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) EXPECT_FALSE(approx_equal(v[a], v[b], 1e-6));
    }
    for (L g : kD4Labels) {
        std::set<std::size_t> hit;
        for (const Vec3& p : v) {
            const Vec3 q = action_on_vector(g, p);
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (approx_equal(q, v[k], 1e-12)) hit.insert(k);
            }
        }
        EXPECT_EQ(hit.size(), 4u) << to_string(g);
    }
}

TEST(D4, SixtyDegreeTurnIsNotASymmetry) {
    const Rotor r = exp_half(Vec3::e3() * (std::numbers::pi / 3));
    EXPECT_FALSE(element_from_rotor(r).has_value());
}

TEST(D4, RecognisesRotors) {
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_EQ(element_from_rotor(canonicalize(Cliffor{{h, 0, 0, 0, 0, 0, h, 0}})), L::Rccw);
    EXPECT_EQ(element_from_rotor(canonicalize(Cliffor::bivector(Vec3::e2()))), L::F2);
    EXPECT_EQ(element_from_rotor(canonicalize(-Cliffor::bivector(Vec3::e2()))), L::F2);
}

TEST(D4, LabelsRoundTrip) {
    for (L g : kD4Labels) EXPECT_EQ(label_from_string(to_string(g)), g);
    EXPECT_THROW(label_from_string("R90"), UnknownLabel);
    EXPECT_EQ(ket_notation(L::Rccw), "|e_{0+3i}>");
}

TEST(D4, LooseToleranceStillGivesTheSameTable) {
    EXPECT_EQ(compute_multiplication_table(1e-6), multiplication_table());
}
