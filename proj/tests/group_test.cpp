#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "hyperquot/group/group.hpp"

using namespace hyperquot;
using group::AffineAutomorphism;
using group::AutoGroup;
using testutil::curve_of;

namespace {

AffineAutomorphism aut(const ff::Field& F, std::int64_t a, std::int64_t b, std::int64_t c)
{
    return {F.from_int(a), F.from_int(b), F.from_int(c)};
}

// Oracle: does x -> alpha x + beta send the root set onto itself?
bool permutes_roots(const curve::HyperellipticCurve& C, const AffineAutomorphism& g)
{
    std::set<std::uint32_t> R, img;
    for (const auto& r : C.roots()) {
        R.insert(r.code());
        img.insert(g.apply_x(r).code());
    }
    return R == img && g.gamma * g.gamma == g.alpha.pow(C.degree());
}

std::size_t brute_fixed_count(const curve::HyperellipticCurve& C, const AffineAutomorphism& g)
{
    const unsigned d = std::lcm(2u, C.splitting_field().degree() / C.base_field().degree());
    const auto& E = C.base_field().extension(d);
    std::size_t n = 0;
    for (const auto& P : C.points_over(E))
        if (group::apply(C, g, P) == P) ++n;
    return n;
}

// (X^3 - X)^2 - 1 over F_3, invariant under x -> x+1 and x -> -x.
curve::HyperellipticCurve s3_curve()
{
    return curve_of(ff::Field::get(3, 1), 1, {-1, 0, 1, 0, -2, 0, 1});
}

}  // namespace

TEST(Auto, CompositionActsOnPoints)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    const auto w = F.generator();
    const AffineAutomorphism g{w.pow(2), F.from_int(1), w}, h{F.from_int(2), w, F.one()};
    const curve::CurvePoint P = curve::CurvePoint::affine(w.pow(3), w);
    EXPECT_EQ(group::apply(C, g * h, P), group::apply(C, g, group::apply(C, h, P)));
    EXPECT_TRUE((g * g.inverse()).is_identity());
    EXPECT_EQ(g.pow(3), g * g * g);
    EXPECT_EQ(g.pow(-2), g.inverse() * g.inverse());
}

TEST(Auto, Validate)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    EXPECT_TRUE(group::validate_auto(C, aut(F, -1, 0, 1)));
    EXPECT_TRUE(group::validate_auto(C, aut(F, 1, 0, -1)));
    EXPECT_FALSE(group::validate_auto(C, aut(F, -1, 1, 1)));
    EXPECT_FALSE(permutes_roots(C, aut(F, -1, 1, 1)));
    EXPECT_THROW(group::validate_auto(C, aut(F, 0, 1, 1)), std::invalid_argument);
    EXPECT_THROW(group::validate_auto(C, aut(F, 1, 1, 0)), std::invalid_argument);
}

TEST(Auto, ValidateAgreesWithRootPermutationOracle)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    for (std::uint32_t a = 1; a < 9; ++a)
        for (std::uint32_t b = 0; b < 9; ++b)
            for (std::uint32_t c = 1; c < 9; ++c) {
                const AffineAutomorphism g{F.element(a), F.element(b), F.element(c)};
                ASSERT_EQ(group::validate_auto(C, g), permutes_roots(C, g)) << g.to_string();
            }
}

TEST(Group, Genus3)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    const auto G = AutoGroup::closure(C, {aut(F, -1, 0, 1)});
    EXPECT_EQ(G.order(), 2u);
    EXPECT_FALSE(G.has_kappa());
    EXPECT_EQ(G.t_order(), 1u);
    EXPECT_EQ(G.m(), 2u);
    ASSERT_EQ(G.xi().size(), 1u);
    EXPECT_TRUE(G.xi()[0].is_zero());
    EXPECT_TRUE(G.lambda()->is_zero());
    EXPECT_TRUE(G.gamma_trivial());
    EXPECT_TRUE(G[0].is_identity());
}

TEST(Group, TrivialAndKappa)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    const auto T = AutoGroup::closure(C, {});
    EXPECT_EQ(T.order(), 1u);
    EXPECT_EQ(T.m(), 1u);
    const auto K = AutoGroup::closure(C, {aut(F, 1, 0, -1)});
    EXPECT_EQ(K.order(), 2u);
    EXPECT_TRUE(K.has_kappa());
    EXPECT_EQ(K.gbar_order(), 1u);
    EXPECT_EQ(K.m(), 1u);
    EXPECT_TRUE(K.xi().empty());
    EXPECT_FALSE(K.lambda().has_value());
    EXPECT_EQ(K[*K.kappa()].gamma, -F.one());
}

TEST(Group, TranslationSubgroup)
{
    const auto& F3 = ff::Field::get(3, 1);
    // (X^3 - X)(X^3 - X - 1)
    const auto C = curve_of(F3, 1, {0, 1, 1, -1, -2, 0, 1});
    const auto G = AutoGroup::closure(C, {aut(F3, 1, 1, 1)});
    EXPECT_EQ(G.order(), 3u);
    EXPECT_EQ(G.t_order(), 3u);
    EXPECT_EQ(G.m(), 1u);
    EXPECT_TRUE(G.xi().empty());
}

TEST(Group, AffineGroupOfF9)
{
    // X^9 - X over F_9 is invariant under x -> x + 1 and x -> w^2 x.
    const auto& F = ff::Field::get(3, 2);
    const auto w = F.generator();
    std::vector<std::int64_t> f(10, 0);
    f[1] = -1;
    f[9] = 1;
    const curve::HyperellipticCurve C(F.one(), ff::Poly::from_ints(F, f));
    const auto G = AutoGroup::closure(C, {{F.one(), F.one(), F.one()}, {w.pow(2), F.zero(), w}});
    EXPECT_EQ(G.gbar_order(), 36u);
    EXPECT_EQ(G.t_order(), 9u);
    EXPECT_EQ(G.m(), 4u);
    EXPECT_EQ(G.gbar_order(), G.t_order() * G.m());
    EXPECT_NE(G.m() % 3, 0u);
    // gamma^2 = alpha forces gamma of order 8, so kappa is in G.
    EXPECT_TRUE(G.has_kappa());
    EXPECT_EQ(G.order(), 72u);
    EXPECT_EQ(G.xi().size(), 9u);
    EXPECT_EQ(G.xi().size() * G.m(), G.gbar_order());
    auto orb = group::orbits_on_roots(G);
    EXPECT_TRUE(orb.regular.empty());
    ASSERT_TRUE(orb.irregular.has_value());
    EXPECT_EQ(orb.irregular->size(), 9u);
    for (const auto& g : G.elements()) EXPECT_EQ(g.gamma * g.gamma, g.alpha.pow(9));
}

TEST(Group, ClosureBound)
{
    const auto& F = ff::Field::get(3, 2);
    std::vector<std::int64_t> f(10, 0);
    f[1] = -1;
    f[9] = 1;
    const curve::HyperellipticCurve C(F.one(), ff::Poly::from_ints(F, f));
    EXPECT_THROW(AutoGroup::closure(C, {{F.one(), F.one(), F.one()}, {F.generator().pow(2), F.zero(), F.generator()}}, 20),
                 std::length_error);
    EXPECT_THROW(AutoGroup::closure(testutil::genus3_curve(), {aut(F, -1, 1, 1)}), std::invalid_argument);
}

TEST(Group, KappaIsCentral)
{
    const auto& F = ff::Field::get(3, 2);
    std::vector<std::int64_t> f(10, 0);
    f[1] = -1;
    f[9] = 1;
    const curve::HyperellipticCurve C(F.one(), ff::Poly::from_ints(F, f));
    const auto G = AutoGroup::closure(C, {{F.one(), F.one(), F.one()}, {F.generator().pow(2), F.zero(), F.generator()}});
    const auto k = *G.kappa();
    for (std::size_t i = 0; i < G.order(); ++i) EXPECT_EQ(G.mul(i, k), G.mul(k, i));
    EXPECT_EQ(G.classes()[G.class_of(k)].size(), 1u);
}

TEST(Orbits, Genus3)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    const auto w = F.generator();
    const auto G = AutoGroup::closure(C, {aut(F, -1, 0, 1)});
    const auto orb = group::orbits_on_roots(G);
    EXPECT_FALSE(orb.irregular.has_value());
    std::set<std::set<std::uint32_t>> got, want;
    for (const auto& o : orb.regular) {
        std::set<std::uint32_t> s;
        for (const auto& r : o) s.insert(r.code());
        got.insert(s);
    }
    for (int i = 0; i < 4; ++i) want.insert({w.pow(i).code(), (-w.pow(i)).code()});
    EXPECT_EQ(got, want);
}

TEST(Orbits, TrivialGroupIsAllRegular)
{
    const auto C = testutil::genus3_curve();
    const auto orb = group::orbits_on_roots(AutoGroup::closure(C, {}));
    EXPECT_EQ(orb.regular.size(), 8u);
    EXPECT_FALSE(orb.irregular.has_value());
}

TEST(Orbits, RotationWithFixedRoot)
{
    // x(x^6 - 1) over F_7, x -> 2x of order 3, gamma^2 = 2.
    const auto& F7 = ff::Field::get(7, 1);
    const auto C = curve_of(F7, 1, {0, -1, 0, 0, 0, 0, 0, 1});
    const auto G = AutoGroup::closure(C, {aut(F7, 2, 0, 4)});
    EXPECT_EQ(G.order(), 3u);
    const auto orb = group::orbits_on_roots(G);
    EXPECT_EQ(orb.regular.size(), 2u);
    ASSERT_TRUE(orb.irregular.has_value());
    EXPECT_EQ(orb.irregular->size(), 1u);
    EXPECT_TRUE((*orb.irregular)[0].is_zero());
    EXPECT_EQ(C.degree() % G.m(), 1u);
}

TEST(Infinity, Action)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    const auto G = AutoGroup::closure(C, {aut(F, -1, 0, 1), aut(F, 1, 0, -1)});
    const auto act = group::infinity_action(G);
    for (std::size_t i = 0; i < G.order(); ++i) {
        const auto& g = G[i];
        const bool swap = g.gamma / g.alpha.pow(4) == -F.one();
        EXPECT_EQ(act[i], swap ? std::vector<std::size_t>({1, 0}) : std::vector<std::size_t>({0, 1}));
        // Cross-check against the chart action on the actual points.
        const auto inf = C.infinity_points();
        EXPECT_EQ(group::apply(C, g, inf[0]), inf[act[i][0]]);
    }
    EXPECT_EQ(act[0], std::vector<std::size_t>({0, 1}));
    EXPECT_EQ(act[*G.kappa()], std::vector<std::size_t>({1, 0}));
}

TEST(FixedPoints, Genus3Element)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    const auto w = F.generator();
    const auto pts = group::fixed_points_of_auto(C, aut(F, -1, 0, 1));
    ASSERT_EQ(pts.size(), 4u);
    std::set<std::uint32_t> ys;
    for (const auto& P : pts) {
        EXPECT_TRUE(C.on_curve(P));
        if (P.is_affine()) {
            EXPECT_TRUE(P.x.is_zero());
            ys.insert(P.y.code());
        }
    }
    EXPECT_EQ(ys, (std::set<std::uint32_t>{w.pow(2).code(), w.pow(6).code()}));
}

TEST(FixedPoints, HyperellipticInvolution)
{
    const auto C = testutil::genus3_curve();
    const auto pts = group::fixed_points_of_auto(C, aut(C.base_field(), 1, 0, -1));
    EXPECT_EQ(pts.size(), 8u);
    for (const auto& P : pts) EXPECT_TRUE(P.is_affine() && P.y.is_zero());
    EXPECT_THROW(group::fixed_points_of_auto(C, aut(C.base_field(), 1, 0, 1)), std::invalid_argument);
}

TEST(FixedPoints, ClosedFormMatchesEnumeration)
{
    struct Inst {
        curve::HyperellipticCurve C;
        std::vector<AffineAutomorphism> gens;
    };
    const auto& F3 = ff::Field::get(3, 1);
    const auto& F5 = ff::Field::get(5, 1);
    const auto& F7 = ff::Field::get(7, 1);
    std::vector<Inst> insts;
    insts.push_back({testutil::genus3_curve(), {aut(ff::Field::get(3, 2), -1, 0, 1), aut(ff::Field::get(3, 2), 1, 0, -1)}});
    insts.push_back({s3_curve(), {aut(F3, 1, 1, 1), aut(F3, -1, 0, 1)}});
    insts.push_back({s3_curve(), {aut(F3, 1, 1, 1), aut(F3, -1, 0, -1)}});
    insts.push_back({curve_of(F7, 1, {0, -1, 0, 0, 0, 0, 0, 1}), {aut(F7, 2, 0, 3), aut(F7, 1, 0, -1)}});
    insts.push_back({curve_of(F5, 1, {-3, 0, 0, 0, 1}), {aut(F5, 2, 0, 1)}});
    insts.push_back({curve_of(F5, 2, {1, 0, 1, 0, 0, 0, 1}), {aut(F5, -1, 0, -1)}});
    for (const auto& in : insts) {
        const auto G = AutoGroup::closure(in.C, in.gens);
        for (std::size_t i = 1; i < G.order(); ++i) {
            const auto pts = group::fixed_points_of_auto(in.C, G[i]);
            for (const auto& P : pts) EXPECT_TRUE(in.C.on_curve(P));
            EXPECT_EQ(pts.size(), brute_fixed_count(in.C, G[i])) << in.C.to_string() << " g=" << G[i].to_string();
            std::set<std::uint32_t> xs;
            const auto& E = in.C.base_field().extension(2 * in.C.splitting_field().degree());
            for (const auto& P : pts)
                if (P.is_affine()) xs.insert(ff::embed(P.x, E).code());
            if (!G[i].is_translation()) EXPECT_LE(xs.size(), 1u);
            if (G[i].is_translation() && !G[i].beta.is_zero()) EXPECT_EQ(xs.size(), 0u);
        }
    }
}

TEST(Subgroups, Cyclic)
{
    const auto C = testutil::genus3_curve();
    const auto& F = C.base_field();
    EXPECT_EQ(AutoGroup::closure(C, {aut(F, -1, 0, 1)}).cyclic_subgroups().size(), 2u);

    const auto& F5 = ff::Field::get(5, 1);
    const auto C4 = AutoGroup::closure(curve_of(F5, 1, {-3, 0, 0, 0, 1}), {aut(F5, 2, 0, 1)});
    ASSERT_EQ(C4.order(), 4u);
    std::vector<std::size_t> orders;
    for (const auto& H : C4.cyclic_subgroups()) orders.push_back(H.order());
    EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 4}));

    const auto S3 = AutoGroup::closure(s3_curve(), {aut(ff::Field::get(3, 1), 1, 1, 1), aut(ff::Field::get(3, 1), -1, 0, 1)});
    ASSERT_EQ(S3.order(), 6u);
    EXPECT_FALSE(S3.is_abelian());
    orders.clear();
    for (const auto& H : S3.cyclic_subgroups()) orders.push_back(H.order());
    EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2, 2, 3}));
    EXPECT_EQ(S3.classes().size(), 3u);
    EXPECT_EQ(S3.t_order(), 3u);
    EXPECT_EQ(S3.m(), 2u);
    EXPECT_EQ(S3.xi().size(), 3u);
    EXPECT_TRUE(S3.lambda()->is_zero());

    orders.clear();
    for (const auto& H : S3.all_subgroups()) orders.push_back(H.order());
    EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2, 2, 3, 6}));
}

TEST(Subgroups, ParentIndicesLineUp)
{
    const auto S3 = AutoGroup::closure(s3_curve(), {aut(ff::Field::get(3, 1), 1, 1, 1), aut(ff::Field::get(3, 1), -1, 0, 1)});
    for (const auto& H : S3.all_subgroups()) {
        ASSERT_EQ(H.parent_indices().size(), H.order());
        for (std::size_t i = 0; i < H.order(); ++i) EXPECT_EQ(H[i], S3[H.parent_indices()[i]]);
    }
}

TEST(FixedPoints, WildMultiplicitiesMatchTraces)
{
    // y^2 = x^3 - x over GF(3): genus 1, the roots are permuted cyclically by
    // x -> x + 1, so the trace on H^1 is -gamma and 2 - trace counts the
    // single point at infinity with multiplicity 3 or 1.
    const auto& F3 = ff::Field::get(3, 1);
    const auto C = curve_of(F3, 1, {0, -1, 0, 1});
    const AffineAutomorphism g{F3.one(), F3.one(), F3.one()};
    const AffineAutomorphism h{F3.one(), F3.one(), -F3.one()};
    EXPECT_EQ(group::fixed_points_of_auto(C, g).size(), 1u);
    EXPECT_EQ(group::lefschetz_fixed_count(C, g), 3);
    EXPECT_EQ(group::lefschetz_fixed_count(C, h), 1);
    // Even degree: both points at infinity are fixed with multiplicity 2.
    const auto D = curve_of(F3, 1, {0, 1, 1, -1, -2, 0, 1});
    EXPECT_EQ(group::lefschetz_fixed_count(D, g), 4);
    EXPECT_EQ(group::lefschetz_fixed_count(D, h), 0);
    // Tame elements fix points transversally.
    const AffineAutomorphism k{-F3.one(), F3.zero(), F3.one()};
    const auto E = curve_of(F3, 1, {-1, 0, 1, 0, -2, 0, 1});
    EXPECT_EQ(group::lefschetz_fixed_count(E, k), static_cast<std::int64_t>(group::fixed_points_of_auto(E, k).size()));
}
