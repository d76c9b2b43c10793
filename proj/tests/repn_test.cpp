#include <gtest/gtest.h>

#include <numeric>

#include "helpers.hpp"
#include "hyperquot/quotient/quotient.hpp"
#include "hyperquot/repn/character.hpp"

using namespace hyperquot;
using group::AffineAutomorphism;
using group::AutoGroup;
using repn::ClassFunction;
using repn::Cyclotomic;
using testutil::curve_of;
using testutil::P;

namespace {

AffineAutomorphism aut(const ff::Field& F, std::int64_t a, std::int64_t b, std::int64_t c)
{
    return {F.from_int(a), F.from_int(b), F.from_int(c)};
}

AutoGroup genus3_group() { return AutoGroup::closure(testutil::genus3_curve(), {aut(ff::Field::get(3, 2), -1, 0, 1)}); }

int mobius(unsigned n)
{
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

// A spread of instances covering all three quotient cases.
std::vector<AutoGroup> instances()
{
    const auto& F3 = ff::Field::get(3, 1);
    const auto& F5 = ff::Field::get(5, 1);
    const auto& F7 = ff::Field::get(7, 1);
    const auto& F9 = ff::Field::get(3, 2);
    const auto s3c = curve_of(F3, 1, {-1, 0, 1, 0, -2, 0, 1});
    std::vector<AutoGroup> v;
    v.push_back(genus3_group());
    v.push_back(AutoGroup::closure(testutil::genus3_curve(), {}));
    v.push_back(AutoGroup::closure(testutil::genus3_curve(), {aut(F9, 1, 0, -1)}));
    v.push_back(AutoGroup::closure(testutil::genus3_curve(), {aut(F9, -1, 0, -1)}));
    v.push_back(AutoGroup::closure(testutil::genus3_curve(), {aut(F9, -1, 0, 1), aut(F9, 1, 0, -1)}));
    v.push_back(AutoGroup::closure(testutil::genus3_curve(), {{F9.generator(), F9.zero(), F9.one()}}));
    v.push_back(AutoGroup::closure(s3c, {aut(F3, 1, 1, 1), aut(F3, -1, 0, 1)}));
    v.push_back(AutoGroup::closure(s3c, {aut(F3, 1, 1, 1), aut(F3, -1, 0, -1)}));
    v.push_back(AutoGroup::closure(s3c, {aut(F3, 1, 1, -1), aut(F3, -1, 0, -1)}));
    const auto f7 = P(F7, {0, 1}) * P(F7, {-2, 0, 0, 1}) * P(F7, {-3, 0, 0, 1});
    v.push_back(AutoGroup::closure({F7.one(), f7}, {aut(F7, 2, 0, 4)}));
    v.push_back(AutoGroup::closure({F7.one(), f7}, {aut(F7, 2, 0, 3)}));
    v.push_back(AutoGroup::closure(curve_of(F5, 1, {0, 2, 0, -3, 0, 1}), {aut(F5, -1, 0, 2)}));
    v.push_back(AutoGroup::closure(curve_of(F5, 1, {-3, 0, 0, 0, 1}), {aut(F5, 2, 0, 1)}));
    v.push_back(AutoGroup::closure(curve_of(F5, 2, {1, 0, 1, 0, 0, 0, 1}), {aut(F5, -1, 0, -1)}));
    return v;
}

}  // namespace

TEST(Cyclotomic, Polynomials)
{
    EXPECT_EQ(repn::cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(repn::cyclotomic_polynomial(2), (std::vector<std::int64_t>{1, 1}));
    EXPECT_EQ(repn::cyclotomic_polynomial(8), (std::vector<std::int64_t>{1, 0, 0, 0, 1}));
    EXPECT_EQ(repn::cyclotomic_polynomial(9), (std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(repn::cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, Arithmetic)
{
    EXPECT_EQ(Cyclotomic::zeta(4, 2), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::zeta(8, 8), Cyclotomic(1));
    EXPECT_EQ(Cyclotomic::zeta(8, 3) * Cyclotomic::zeta(8, 5), Cyclotomic(1));
    EXPECT_EQ(Cyclotomic::zeta(4, 1), Cyclotomic::zeta(8, 2));
    EXPECT_EQ(Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::zeta(12, 1).conj(), Cyclotomic::zeta(12, -1));
    EXPECT_FALSE(Cyclotomic::zeta(8, 1).is_rational());
    EXPECT_TRUE((Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7) - Cyclotomic::zeta(8, 1).conj()).lift(24) ==
                Cyclotomic::zeta(8, 7) + Cyclotomic::zeta(8, 1) - Cyclotomic::zeta(8, 7));
    EXPECT_EQ(Cyclotomic::zeta(5, 2).pow(5), Cyclotomic(1));
    EXPECT_EQ(Cyclotomic(6).to_string(), "6");
    EXPECT_EQ((Cyclotomic(1) - Cyclotomic::zeta(8, 2)).to_string(), "1 - z8^2");
    EXPECT_THROW(Cyclotomic::zeta(4, 1).to_integer(), std::domain_error);
}

TEST(Cyclotomic, SumOfPrimitiveRootsIsMobius)
{
    for (unsigned N = 1; N <= 40; ++N) {
        Cyclotomic s;
        for (unsigned k = 0; k < N; ++k)
            if (std::gcd(k, N) == 1) s += Cyclotomic::zeta(N, k);
        EXPECT_EQ(s, Cyclotomic(mobius(N))) << N;
        // Sum of all N-th roots of unity vanishes for N > 1.
        Cyclotomic t;
        for (unsigned k = 0; k < N; ++k) t += Cyclotomic::zeta(N, k);
        EXPECT_EQ(t, Cyclotomic(N == 1 ? 1 : 0));
    }
}

TEST(Characters, Genus3PermutationCharacters)
{
    const auto G = genus3_group();
    const auto R = repn::root_character(G);
    EXPECT_EQ(R.at(0), Cyclotomic(8));
    EXPECT_EQ(R.at(1), Cyclotomic(0));
    const auto inf = repn::infinity_character(G);
    EXPECT_EQ(inf.at(0), Cyclotomic(2));
    EXPECT_EQ(inf.at(1), Cyclotomic(2));
    EXPECT_EQ(repn::dim_invariants(R, G), 4);
    EXPECT_EQ(repn::dim_invariants(repn::trivial_character(G), G), 1);
    const auto trivial = AutoGroup::closure(testutil::genus3_curve(), {});
    EXPECT_EQ(repn::root_character(trivial).at(0), Cyclotomic(8));
}

TEST(Characters, Genus3H1)
{
    const auto G = genus3_group();
    const auto chi = repn::h1_character(G);
    EXPECT_EQ(chi.at(0), Cyclotomic(6));
    EXPECT_EQ(chi.at(1), Cyclotomic(-2));
    EXPECT_EQ(repn::dim_invariants(chi, G), 2);
    const auto parts = repn::abelian_decomposition(chi, G);
    EXPECT_EQ(repn::decomposition_string(parts), "triv^2 + eta^4");
    EXPECT_EQ(repn::gamma_tilde(G), repn::trivial_character(G));
    const auto eps = repn::epsilon_character(G);
    EXPECT_EQ(eps.det, repn::trivial_character(G));
}

TEST(Characters, KappaValues)
{
    const auto G = AutoGroup::closure(testutil::genus3_curve(), {aut(ff::Field::get(3, 2), 1, 0, -1)});
    const auto k = *G.kappa();
    EXPECT_EQ(repn::gamma_tilde(G).at(k), Cyclotomic(-1));
    EXPECT_EQ(repn::h1_character(G).at(k), Cyclotomic(-6));
    EXPECT_EQ(repn::epsilon_character(G).det.at(k), Cyclotomic(-1));
    EXPECT_EQ(repn::dim_invariants(repn::h1_character(G), G), 0);
}

TEST(Characters, OddDegreeHasNoEpsilon)
{
    const auto& F7 = ff::Field::get(7, 1);
    const auto f7 = P(F7, {0, 1}) * P(F7, {-2, 0, 0, 1}) * P(F7, {-3, 0, 0, 1});
    const auto G = AutoGroup::closure({F7.one(), f7}, {aut(F7, 2, 0, 4)});
    EXPECT_THROW(repn::epsilon_character(G), std::invalid_argument);
    EXPECT_EQ(repn::h1_character(G), repn::v_character(G));
}

TEST(Characters, GammaTildeOfOrderFour)
{
    const auto& F5 = ff::Field::get(5, 1);
    const auto G = AutoGroup::closure(curve_of(F5, 1, {0, 2, 0, -3, 0, 1}), {aut(F5, -1, 0, 2)});
    ASSERT_EQ(G.order(), 4u);
    const auto g1 = repn::gamma_tilde(G, 1), g3 = repn::gamma_tilde(G, 3);
    EXPECT_FALSE(g1 == g3);
    const auto idx = *G.index_of(aut(F5, -1, 0, 2));
    EXPECT_EQ(g1.at(idx).pow(4), Cyclotomic(1));
    EXPECT_FALSE(g1.at(idx).pow(2) == Cyclotomic(1));
    EXPECT_EQ(repn::h1_character(G, 1), repn::h1_character(G, 3));
    EXPECT_THROW(repn::gamma_tilde(G, 2), std::invalid_argument);
}

TEST(Characters, ChoiceOfEmbeddingDoesNotMatter)
{
    for (const auto& G : instances()) {
        const auto q1 = static_cast<std::int64_t>(G.curve().base_field().order() - 1);
        const auto ref = repn::h1_character(G, 1);
        for (std::int64_t u = 2; u < q1; ++u) {
            if (std::gcd(u, q1) != 1) continue;
            EXPECT_EQ(repn::h1_character(G, u), ref) << G.curve().to_string() << " u=" << u;
            if (G.curve().degree() % 2 == 0) EXPECT_NO_THROW(repn::epsilon_character(G, u));
        }
    }
}

TEST(Characters, VerifyH1OnInstances)
{
    for (const auto& G : instances()) {
        const auto rep = repn::verify_h1(G, true);
        std::string fails;
        for (const auto& c : rep.checks)
            if (!c.ok) fails += c.name + ": " + c.detail + "\n";
        EXPECT_TRUE(rep.ok) << G.curve().to_string() << " |G|=" << G.order() << "\n" << fails;
        EXPECT_TRUE(repn::h1_character(G).is_integer_valued());
    }
}

TEST(Characters, VerifyH1DetectsWrongCharacter)
{
    // Sanity check that the report can fail: dropping epsilon breaks the
    // invariant-dimension identity for the genus3 group.
    const auto G = genus3_group();
    const auto V = repn::v_character(G);
    EXPECT_NE(repn::dim_invariants(V, G), 2 * static_cast<std::int64_t>(quotient::quotient_genus(G)));
}

TEST(Characters, AbelianCharactersAreOrthonormal)
{
    for (const auto& G : instances()) {
        if (!G.is_abelian()) {
            EXPECT_THROW(repn::abelian_characters(G), std::invalid_argument);
            continue;
        }
        const auto irr = repn::abelian_characters(G);
        ASSERT_EQ(irr.size(), G.order());
        EXPECT_EQ(irr[0].label, "triv");
        for (std::size_t i = 0; i < irr.size(); ++i)
            for (std::size_t j = 0; j < irr.size(); ++j)
                EXPECT_EQ(repn::inner_product(irr[i].chi, irr[j].chi), Cyclotomic(i == j ? 1 : 0));
        // chi = sum of multiplicity * irreducible.
        const auto chi = repn::h1_character(G);
        ClassFunction rebuilt = 0 * repn::trivial_character(G);
        for (const auto& c : repn::abelian_decomposition(chi, G))
            for (const auto& x : irr)
                if (x.label == c.label) rebuilt = rebuilt + c.multiplicity * x.chi;
        EXPECT_EQ(rebuilt, chi);
    }
}

TEST(Characters, TwistIdentityOnSemidirectProducts)
{
    // m (fix_Xi(g) - 1) = reg(g) - m [g in T], on T x| C_m instances.
    for (const auto& G : instances()) {
        if (G.m() == 1) continue;
        const auto m = static_cast<std::int64_t>(G.m());
        std::vector<std::vector<std::size_t>> perms;
        for (const auto& g : G.elements()) {
            std::vector<std::size_t> p;
            for (const auto& a : G.xi()) {
                const auto img = g.apply_x(a);
                p.push_back(static_cast<std::size_t>(std::lower_bound(G.xi().begin(), G.xi().end(), img) - G.xi().begin()));
            }
            perms.push_back(p);
        }
        const auto xi = repn::perm_character(G, perms);
        const ClassFunction lhs = m * (xi - repn::trivial_character(G));
        const ClassFunction rhs(G, [&](std::size_t i) {
            std::int64_t v = G.gbar_of(i) == 0 ? static_cast<std::int64_t>(G.gbar_order()) : 0;
            if (G[i].is_translation()) v -= m;
            return Cyclotomic(v);
        });
        EXPECT_EQ(lhs, rhs) << G.curve().to_string();
    }
}
