#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "hyperquot/quotient/quotient.hpp"

using namespace hyperquot;
using group::AffineAutomorphism;
using group::AutoGroup;
using quotient::QuotientCase;
using testutil::curve_of;
using testutil::P;
using ff::Elem;

namespace {

AffineAutomorphism aut(const ff::Field& F, std::int64_t a, std::int64_t b, std::int64_t c)
{
    return {F.from_int(a), F.from_int(b), F.from_int(c)};
}

const ff::Field& F7() { return ff::Field::get(7, 1); }

// x (x^3 - 2)(x^3 - 3) over F_7 with x -> 2x, y -> 4y.
AutoGroup rotation3()
{
    const auto f = P(F7(), {0, 1}) * P(F7(), {-2, 0, 0, 1}) * P(F7(), {-3, 0, 0, 1});
    return AutoGroup::closure({F7().one(), f}, {aut(F7(), 2, 0, 4)});
}

AutoGroup rotation3_r3()
{
    const auto f = P(F7(), {0, 1}) * P(F7(), {-2, 0, 0, 1}) * P(F7(), {-3, 0, 0, 1}) * P(F7(), {-5, 0, 0, 1});
    return AutoGroup::closure({F7().one(), f}, {aut(F7(), 2, 0, 4)});
}

AutoGroup genus3_odd_gamma()
{
    return AutoGroup::closure(testutil::genus3_curve(), {aut(ff::Field::get(3, 2), -1, 0, -1)});
}

AutoGroup s3()
{
    const auto& F3 = ff::Field::get(3, 1);
    return AutoGroup::closure(curve_of(F3, 1, {-1, 0, 1, 0, -2, 0, 1}), {aut(F3, 1, 1, 1), aut(F3, -1, 0, 1)});
}

AutoGroup s3_twisted()
{
    // gamma = alpha on x -> -x: here |R| = 6 so gamma^2 = alpha^6 = 1 holds.
    const auto& F3 = ff::Field::get(3, 1);
    return AutoGroup::closure(curve_of(F3, 1, {-1, 0, 1, 0, -2, 0, 1}), {aut(F3, 1, 1, 1), aut(F3, -1, 0, -1)});
}

AutoGroup genus3_group() { return AutoGroup::closure(testutil::genus3_curve(), {aut(ff::Field::get(3, 2), -1, 0, 1)}); }

void check_push_invariance(const AutoGroup& G, const ff::Field& E)
{
    const auto Q = quotient::quotient_curve(G);
    ASSERT_TRUE(Q.curve.has_value());
    for (const auto& Pt : G.curve().points_over(E)) {
        if (!Pt.is_affine()) continue;
        const auto img = quotient::push_point(Q, Pt);
        ASSERT_TRUE(Q.curve->on_curve(img)) << Pt.to_string();
        for (const auto& g : G.elements()) ASSERT_EQ(quotient::push_point(Q, group::apply(G.curve(), g, Pt)), img);
    }
}

}  // namespace

TEST(Invariants, I)
{
    const auto G = genus3_group();
    const auto& F9 = ff::Field::get(3, 2);
    EXPECT_EQ(quotient::invariant_I(G), P(F9, {0, 0, -1}));
    EXPECT_EQ(quotient::invariant_I(AutoGroup::closure(testutil::genus3_curve(), {})), P(F9, {0, 1}));
    const auto& F3 = ff::Field::get(3, 1);
    const auto T = AutoGroup::closure(curve_of(F3, 1, {0, 1, 1, -1, -2, 0, 1}), {aut(F3, 1, 1, 1)});
    EXPECT_EQ(quotient::invariant_I(T), P(F3, {0, -1, 0, 1}));
    EXPECT_EQ(quotient::invariant_IT(T), P(F3, {0, -1, 0, 1}));
    EXPECT_EQ(quotient::invariant_IT(G), P(F9, {0, 1}));
}

TEST(Invariants, IIsInvariantWithExpectedShape)
{
    for (const auto& G : {genus3_group(), rotation3(), s3(), genus3_odd_gamma()}) {
        const auto I = quotient::invariant_I(G);
        const auto IT = quotient::invariant_IT(G);
        EXPECT_EQ(I.degree(), static_cast<int>(G.gbar_order()));
        EXPECT_EQ(IT.degree(), static_cast<int>(G.t_order()));
        EXPECT_TRUE(I.coeff(0).is_zero());
        const auto& F = I.field();
        EXPECT_EQ(I.leading(), G.gbar_order() % 2 == 1 ? F.one() : -F.one());
        for (const auto& g : G.elements()) {
            EXPECT_EQ(I.compose(g.x_poly()), I);
            const auto shifted = IT - ff::Poly::constant(G.lambda().value_or(F.zero()));
            if (G.lambda()) {
                EXPECT_EQ(shifted.compose(g.x_poly()), g.alpha.pow(static_cast<std::int64_t>(G.t_order())) * shifted);
            }
        }
    }
}

TEST(Invariants, OrbitPolynomialIdentities)
{
    for (const auto& G : {genus3_group(), rotation3(), rotation3_r3(), s3(), genus3_odd_gamma()}) {
        const auto& E = G.curve().splitting_field();
        const auto I = quotient::invariant_I(G).embed(E);
        const auto orb = group::orbits_on_roots(G);
        const Elem sign = G.gbar_order() % 2 == 1 ? E.one() : -E.one();
        for (const auto& o : orb.regular) {
            Elem prod = E.one();
            for (const auto& r : o) prod *= r;
            EXPECT_EQ(ff::Poly::from_roots(E, o), sign * (I - ff::Poly::constant(prod)));
        }
        if (!G.xi().empty()) {
            std::vector<Elem> xi;
            for (const auto& a : G.xi()) xi.push_back(ff::embed(a, E));
            const auto IT = quotient::invariant_IT(G).embed(E);
            EXPECT_EQ(ff::Poly::from_roots(E, xi), IT - ff::Poly::constant(ff::embed(*G.lambda(), E)));
        }
        if (orb.irregular) {
            std::set<std::uint32_t> a, b;
            for (const auto& r : *orb.irregular) a.insert(r.code());
            for (const auto& x : G.xi()) b.insert(ff::embed(x, E).code());
            EXPECT_EQ(a, b);
        }
    }
}

TEST(Quotient, Genus3)
{
    const auto G = genus3_group();
    const auto Q = quotient::quotient_curve(G);
    EXPECT_EQ(Q.kind, QuotientCase::trivial_gamma);
    EXPECT_EQ(Q.sign_exponent, 4u);
    const auto& F9 = ff::Field::get(3, 2);
    const auto w = F9.generator();
    std::set<std::uint32_t> prods, want;
    for (const auto& p : Q.orbit_products) prods.insert(p.code());
    for (int i = 0; i < 4; ++i) want.insert((-w.pow(2 * i)).code());
    EXPECT_EQ(prods, want);
    ASSERT_TRUE(Q.curve.has_value());
    EXPECT_EQ(Q.curve->c(), F9.one());
    EXPECT_EQ(Q.curve->f(), P(F9, {-1, 0, 0, 0, 1}));
    for (int i = 0; i <= 4; ++i) EXPECT_TRUE(ff::descend(Q.curve->f().coeff(i), ff::Field::get(3, 1)).has_value());
    EXPECT_EQ(quotient::quotient_genus(G), 1u);
    EXPECT_EQ(Q.curve->genus(), 1u);
}

TEST(Quotient, TrivialGroupEchoesCurve)
{
    const auto C = testutil::genus3_curve();
    const auto Q = quotient::quotient_curve(AutoGroup::closure(C, {}));
    EXPECT_EQ(Q.kind, QuotientCase::trivial_gamma);
    EXPECT_EQ(Q.curve->f(), C.f());
    EXPECT_EQ(Q.curve->c(), C.c());
}

TEST(Quotient, ProjectiveLine)
{
    const auto C = testutil::genus3_curve();
    const auto& F9 = C.base_field();
    const auto Q1 = quotient::quotient_curve(AutoGroup::closure(C, {aut(F9, 1, 0, -1)}));
    EXPECT_EQ(Q1.kind, QuotientCase::projective_line);
    EXPECT_FALSE(Q1.curve.has_value());
    const auto G = AutoGroup::closure(C, {aut(F9, 1, 0, -1), aut(F9, -1, 0, 1)});
    EXPECT_EQ(G.order(), 4u);
    const auto Q = quotient::quotient_curve(G);
    EXPECT_EQ(Q.kind, QuotientCase::projective_line);
    EXPECT_EQ(Q.I, P(F9, {0, 0, -1}));
    EXPECT_EQ(quotient::quotient_genus(G), 0u);
    EXPECT_THROW(quotient::push_point(Q, curve::CurvePoint::affine(F9.one(), F9.zero())), std::invalid_argument);
}

TEST(Quotient, RotationCase3)
{
    const auto G = rotation3();
    const auto Q = quotient::quotient_curve(G);
    EXPECT_EQ(Q.kind, QuotientCase::nontrivial_gamma);
    EXPECT_EQ(Q.regular_orbits, 2u);
    EXPECT_EQ(Q.sign_exponent, 4u);
    EXPECT_EQ(Q.I, P(F7(), {0, 0, 0, 1}));
    EXPECT_EQ(Q.y_factor, P(F7(), {0, 1}));
    EXPECT_EQ(Q.curve->f(), P(F7(), {0, 1}) * P(F7(), {-2, 1}) * P(F7(), {-3, 1}));
    EXPECT_EQ(quotient::quotient_genus(G), 1u);
    EXPECT_EQ(Q.curve->genus(), 1u);
    EXPECT_EQ(quotient::quotient_genus(rotation3_r3()), 1u);
    EXPECT_EQ(quotient::quotient_curve(rotation3_r3()).curve->genus(), 1u);
}

TEST(Quotient, EvenRotationCase3)
{
    const auto G = genus3_odd_gamma();
    const auto Q = quotient::quotient_curve(G);
    EXPECT_EQ(Q.kind, QuotientCase::nontrivial_gamma);
    EXPECT_EQ(Q.sign_exponent, 3u);
    EXPECT_EQ(Q.curve->c(), -G.curve().c());
    EXPECT_EQ(Q.curve->degree(), 5u);
    EXPECT_EQ(quotient::quotient_genus(G), 2u);
    EXPECT_EQ(Q.curve->genus(), 2u);
}

TEST(PushPoint, Genus3Weierstrass)
{
    const auto G = genus3_group();
    const auto Q = quotient::quotient_curve(G);
    const auto& F9 = ff::Field::get(3, 2);
    const auto w = F9.generator();
    const auto img = quotient::push_point(Q, curve::CurvePoint::affine(w, F9.zero()));
    EXPECT_EQ(img, curve::CurvePoint::affine(-w.pow(2), F9.zero()));
    EXPECT_TRUE(Q.curve->on_curve(img));
    for (const auto& r : G.curve().roots()) {
        const auto im = quotient::push_point(Q, curve::CurvePoint::affine(r, F9.zero()));
        EXPECT_TRUE(Q.curve->rhs_at(im.x).is_zero());
    }
    EXPECT_THROW(quotient::push_point(Q, G.curve().infinity_points()[0]), std::invalid_argument);
}

TEST(PushPoint, InvariantUnderGroupAndLandsOnQuotient)
{
    check_push_invariance(genus3_group(), ff::Field::get(3, 4));
    check_push_invariance(genus3_odd_gamma(), ff::Field::get(3, 4));
    check_push_invariance(rotation3(), ff::Field::get(7, 2));
    check_push_invariance(rotation3_r3(), ff::Field::get(7, 3));
    check_push_invariance(s3(), ff::Field::get(3, 4));
    check_push_invariance(s3_twisted(), ff::Field::get(3, 4));
}

TEST(Quotient, GenusFormulaMatchesModel)
{
    for (const auto& G : {genus3_group(), rotation3(), rotation3_r3(), s3(), s3_twisted(), genus3_odd_gamma()}) {
        const auto Q = quotient::quotient_curve(G);
        ASSERT_TRUE(Q.curve.has_value());
        EXPECT_EQ(quotient::quotient_genus(G), Q.curve->genus());
    }
}
