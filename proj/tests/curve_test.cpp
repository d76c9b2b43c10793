#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "hyperquot/curve/curve.hpp"

using namespace hyperquot;
using curve::CurvePoint;
using curve::HyperellipticCurve;
using testutil::curve_of;
using testutil::P;

TEST(Curve, Genus)
{
    EXPECT_EQ(testutil::genus3_curve().genus(), 3u);
    const auto& F3 = ff::Field::get(3, 1);
    EXPECT_EQ(curve_of(F3, 1, {-1, 1}).genus(), 0u);
    EXPECT_EQ(curve_of(F3, 1, {-1, 0, 0, 0, 1}).genus(), 1u);
    EXPECT_EQ(curve_of(ff::Field::get(5, 1), 1, {-1, 0, 0, 1, 0}).degree(), 3u);
}

TEST(Curve, NormalisesLeadingCoefficientIntoC)
{
    const auto& F5 = ff::Field::get(5, 1);
    const HyperellipticCurve C = curve_of(F5, 1, {1, 0, 2});  // 2x^2 + 1
    EXPECT_EQ(C.c(), F5.from_int(2));
    EXPECT_EQ(C.f(), P(F5, {3, 0, 1}));
    EXPECT_EQ(C.rhs(), P(F5, {1, 0, 2}));
}

TEST(Curve, RejectsBadInput)
{
    const auto& F3 = ff::Field::get(3, 1);
    EXPECT_THROW(curve_of(F3, 1, {1, 2, 1}), std::invalid_argument);  // (x+1)^2
    EXPECT_THROW(curve_of(F3, 0, {0, 1}), std::invalid_argument);
    EXPECT_THROW(curve_of(F3, 1, {2}), std::invalid_argument);
}

TEST(Curve, RootsAndSplittingField)
{
    const auto C = testutil::genus3_curve();
    EXPECT_EQ(&C.splitting_field(), &ff::Field::get(3, 2));
    ASSERT_EQ(C.roots().size(), 8u);
    const auto& F3 = ff::Field::get(3, 1);
    const auto D = curve_of(F3, 1, {1, 0, 0, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(D.splitting_field().degree(), 4u);
    EXPECT_EQ(ff::Poly::from_roots(D.splitting_field(), D.roots()), D.f().embed(D.splitting_field()));
}

TEST(Curve, OnCurve)
{
    const auto C = testutil::genus3_curve();
    const auto& F9 = C.base_field();
    const auto w = F9.generator();
    EXPECT_TRUE(C.on_curve(CurvePoint::affine(F9.zero(), w.pow(2))));
    EXPECT_FALSE(C.on_curve(CurvePoint::affine(F9.one(), F9.one())));
    const auto inf = C.infinity_points();
    ASSERT_EQ(inf.size(), 2u);
    EXPECT_TRUE(C.on_curve(inf[0]));
    EXPECT_TRUE(C.on_curve(inf[1]));
    EXPECT_EQ(inf[0].v, F9.one());
    EXPECT_FALSE(C.on_curve(CurvePoint::at_infinity(1, -F9.one())));
}

TEST(Curve, InfinityPoints)
{
    const auto& F3 = ff::Field::get(3, 1);
    EXPECT_EQ(curve_of(ff::Field::get(5, 1), 1, {-1, 0, 0, 1}).infinity_points().size(), 1u);
    const auto C = curve_of(F3, 2, {-1, 0, 1});
    EXPECT_EQ(&C.infinity_field(), &ff::Field::get(3, 2));
    const auto inf = C.infinity_points();
    ASSERT_EQ(inf.size(), 2u);
    EXPECT_EQ(inf[0].v * inf[0].v, ff::Field::get(3, 2).from_int(2));
    EXPECT_TRUE(C.infinity_points_over(F3).empty());
    EXPECT_EQ(C.infinity_points_over(ff::Field::get(3, 4)).size(), 2u);
    for (const auto& Q : C.infinity_points_over(ff::Field::get(3, 4))) EXPECT_TRUE(C.on_curve(Q));
}

TEST(Curve, LinearCurveOverF3)
{
    const auto& F3 = ff::Field::get(3, 1);
    const auto C = curve_of(F3, 1, {-1, 1});
    const auto pts = C.points_over(F3);
    int affine = 0, inf = 0;
    for (const auto& Q : pts) (Q.is_affine() ? affine : inf)++;
    EXPECT_EQ(affine, 3);
    EXPECT_EQ(inf, 1);
}

TEST(Curve, EnumerationAgreesWithCharacterSum)
{
    struct Case {
        std::uint32_t p;
        unsigned k;
        std::int64_t c;
        std::vector<std::int64_t> f;
    };
    const std::vector<Case> cases{
        {3, 2, 1, {-1, 0, 0, 0, 1}},
        {3, 2, 1, {-1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 1, 2, {-1, 0, 1}},
        {5, 1, 2, {1, 1, 0, 1}},
        {7, 1, 3, {1, 0, 0, 0, 0, 1}},
    };
    for (const auto& cs : cases) {
        const auto& F = ff::Field::get(cs.p, cs.k);
        const HyperellipticCurve C(F.from_int(cs.c), ff::Poly::from_ints(F, cs.f));
        for (unsigned s = 1; s * cs.k <= 8 && std::pow(cs.p, s * cs.k) <= 531441; ++s) {
            const auto& E = F.extension(s);
            const auto pts = C.points_over(E);
            EXPECT_EQ(pts.size(), C.count_points(E)) << C.to_string() << " over " << E.name();
            for (const auto& Q : pts) ASSERT_TRUE(C.on_curve(Q)) << Q.to_string();
        }
    }
}

TEST(Curve, WeilBoundForX8Plus1)
{
    const auto& F3 = ff::Field::get(3, 1);
    const auto C = curve_of(F3, 1, {1, 0, 0, 0, 0, 0, 0, 0, 1});
    const auto N = static_cast<double>(C.points_over(F3).size());
    EXPECT_LE(std::abs(N - 4.0), 2.0 * C.genus() * std::sqrt(3.0));
}

TEST(Curve, ThreeToTheTwelveCountsMatchOnX4Minus1)
{
    // Only the cheap character sum at this size; full enumeration is covered
    // above on smaller fields.
    const auto C = curve_of(ff::Field::get(3, 2), 1, {-1, 0, 0, 0, 1});
    const auto& E = ff::Field::get(3, 12);
    EXPECT_EQ(C.count_points(E), C.points_over(E).size());
}
