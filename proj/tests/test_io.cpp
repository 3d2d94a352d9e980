#include "cl30/chain.hpp"
#include "cl30/d4.hpp"
#include "cl30/errors.hpp"
#include "cl30/json_io.hpp"
#include "cl30/parse.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace cl30;

TEST(Parse, Angles) {
    const double pi = std::numbers::pi;
    EXPECT_DOUBLE_EQ(parse_angle("pi"), pi);
    EXPECT_DOUBLE_EQ(parse_angle("pi/2"), pi / 2);
    EXPECT_DOUBLE_EQ(parse_angle("-3*pi/4"), -3 * pi / 4);
    EXPECT_DOUBLE_EQ(parse_angle("2pi/3"), 2 * pi / 3);
    EXPECT_DOUBLE_EQ(parse_angle("0.25"), 0.25);
    EXPECT_THROW(parse_angle("tau"), MalformedInput);
    EXPECT_THROW(parse_angle("pi/0"), MalformedInput);
}

TEST(Parse, Axes) {
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_EQ(parse_axis("e2"), Vec3::e2());
    EXPECT_EQ(parse_axis("-e3"), -Vec3::e3());
    EXPECT_TRUE(approx_equal(parse_axis("e1-2"), Vec3{h, -h, 0}, 1e-15));
    EXPECT_TRUE(approx_equal(parse_axis("0,0,5"), Vec3::e3(), 0.0));
    EXPECT_THROW(parse_axis("0,0,0"), MalformedInput);
    EXPECT_THROW(parse_axis("e4"), MalformedInput);
}

TEST(Parse, AxisAngleAndVectors) {
    const AxisAngle t = parse_axis_angle("e1+2:pi");
    EXPECT_DOUBLE_EQ(t.angle, std::numbers::pi);
    EXPECT_EQ(parse_vec3("[1, 2, 3]"), (Vec3{1, 2, 3}));
    EXPECT_EQ(parse_vec3("1,2,3"), (Vec3{1, 2, 3}));
    EXPECT_THROW(parse_vec3("[1,2]"), MalformedInput);
    EXPECT_THROW(parse_axis_angle("e1"), MalformedInput);
}

TEST(Parse, CliffordsAndMatrices) {
    EXPECT_EQ(parse_cliffor("ie3"), Cliffor::bivector(Vec3::e3()));
    EXPECT_EQ(parse_cliffor("-2*e1"), Cliffor::vector({-2, 0, 0}));
    EXPECT_EQ(parse_cliffor("i"), Cliffor::i());
    EXPECT_EQ(parse_cliffor("1.5"), Cliffor::scalar(1.5));
    EXPECT_EQ(parse_cliffor("[1,0,0,0,0,0,0,2]"), Cliffor::scalar(1) + Cliffor::pseudoscalar(2));
    EXPECT_EQ(parse_matrix("[[0,[0,-1]],[[0,1],0]]"), Matrix2(0, Complex(0, -1), Complex(0, 1), 0));
    EXPECT_THROW(parse_matrix("[[1,2],[3]]"), MalformedInput);
    EXPECT_THROW(parse_real_matrix("[[0,[0,-1]],[[0,1],0]]"), MalformedInput);
    EXPECT_THROW(parse_matrix("not json"), MalformedInput);
}

TEST(Parse, UnknownLabelsAreReported) { EXPECT_THROW(parse_ket("R90"), UnknownLabel); }

TEST(Chain, KetRotatesOperand) {
    const auto steps = parse_chain_steps("ket:Rccw");
    const Cliffor out = eval_chain({Cliffor::e1(), steps});
    EXPECT_LT(max_abs_diff(out, Cliffor::e2()), 1e-15);
}

TEST(Chain, EmptyChainIsIdentity) { EXPECT_EQ(eval_chain({Cliffor::e1(), {}}), Cliffor::e1()); }

TEST(Chain, ScaleThenKet) {
    // (e1 e2)|i e1> = (i e1)^-1 (e1 e2) (i e1) = -i e3.
    const Cliffor expected = reverse(Cliffor::bivector(Vec3::e1())) * Cliffor::e1() * Cliffor::e2() *
                             Cliffor::bivector(Vec3::e1());
    EXPECT_EQ(expected, -Cliffor::bivector(Vec3::e3()));
    for (const char* text : {"scale:e2;ket:F1", R"([{"scale":"e2"},{"ket":"F1"}])"}) {
        const Cliffor out = eval_chain({Cliffor::e1(), parse_chain_steps(text)});
        EXPECT_LT(max_abs_diff(out, expected), 1e-15) << text;
    }
}

TEST(Chain, FoldsLeftToRight) {
    const Cliffor ab = eval_chain({Cliffor::e1(), parse_chain_steps("ket:Rccw;ket:F1")});
    const Cliffor ba = eval_chain({Cliffor::e1(), parse_chain_steps("ket:F1;ket:Rccw")});
    EXPECT_LT(max_abs_diff(ab, Cliffor::vector(-Vec3::e2())), 1e-15);
    EXPECT_LT(max_abs_diff(ba, Cliffor::e2()), 1e-15);
}

TEST(Chain, BraStepsAreRejected) {
    EXPECT_THROW(parse_chain_steps("ket:F1;bra:F2"), MixedBraKetChain);
    EXPECT_THROW(parse_chain_steps(R"([{"bra":"F2"}])"), MixedBraKetChain);
    EXPECT_THROW(parse_chain_steps("twist:F1"), MalformedInput);
}

TEST(Json, RoundTripsAreByteStable) {
    const Cliffor a{{1, -2, 0.5, 0, 0, 3, 0, -1}};
    EXPECT_EQ(to_json(cliffor_from_json(to_json(a))).dump(), to_json(a).dump());
    const Vec3 v{0.25, -1, 2};
    EXPECT_EQ(to_json(vec3_from_json(to_json(v))).dump(), to_json(v).dump());
    const Rotor r = rotor_of(D4Label::F1p2);
    EXPECT_EQ(to_json(rotor_from_json(to_json(r))).dump(), to_json(r).dump());
    const Matrix2 m(1, Complex(0, -1), Complex(2, 3), 0);
    EXPECT_EQ(to_json(matrix2_from_json(to_json(m))).dump(), to_json(m).dump());
    const auto e = fermion_dyadic(1, 2);
    EXPECT_EQ(to_json(group_algebra_from_json(to_json(e))).dump(), to_json(e).dump());
    const auto& t = multiplication_table();
    EXPECT_EQ(to_json(table_from_json(to_json(t))).dump(), to_json(t).dump());
    const AxisAngle q{Vec3::e2(), 1.25, false};
    EXPECT_EQ(to_json(axis_angle_from_json(to_json(q))).dump(), to_json(q).dump());
}

TEST(Json, GroupAlgebraOmitsZeroTerms) {
    EXPECT_EQ(to_json(fermion_dyadic(1, 1)).dump(), R"({"F1":0.5,"Id":0.5})");
}

TEST(Json, MalformedInputsThrow) {
    EXPECT_THROW(cliffor_from_json(json::parse("[1,2,3]")), MalformedInput);
    EXPECT_THROW(group_algebra_from_json(json::parse(R"({"Q":1})")), UnknownLabel);
    EXPECT_THROW(parse_json("{"), MalformedInput);
}
