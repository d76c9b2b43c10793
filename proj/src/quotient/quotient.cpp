#include "hyperquot/quotient/quotient.hpp"

#include <stdexcept>

namespace hyperquot::quotient {

const char* to_string(QuotientCase c)
{
    switch (c) {
        case QuotientCase::projective_line: return "P1";
        case QuotientCase::trivial_gamma: return "trivial-gamma";
        case QuotientCase::nontrivial_gamma: return "nontrivial-gamma";
    }
    return "?";
}

Poly invariant_I(const AutoGroup& G)
{
    const auto& F = G.curve().base_field();
    Poly I = Poly::constant(F.one());
    for (auto i : G.gbar()) I *= G[i].x_poly();
    return I;
}

Poly invariant_IT(const AutoGroup& G)
{
    const auto& F = G.curve().base_field();
    Poly I = Poly::constant(F.one());
    for (const auto& b : G.translations()) I *= Poly(F, std::vector<Elem>{b, F.one()});
    return I;
}

namespace {

Poly power(const Poly& a, std::size_t e)
{
    Poly r = Poly::constant(a.field().one());
    for (std::size_t i = 0; i < e; ++i) r *= a;
    return r;
}

bool case3(const AutoGroup& G) { return !G.has_kappa() && !G.gamma_trivial(); }

}  // namespace

QuotientResult quotient_curve(const AutoGroup& G)
{
    const auto& C = G.curve();
    const auto& F = C.base_field();
    QuotientResult Q{QuotientCase::trivial_gamma, invariant_I(G), invariant_IT(G), G.lambda(), std::nullopt, G.m(),
                     0, 0, 0, {}, Poly::constant(F.one()), std::nullopt};
    if (G.has_kappa()) {
        Q.kind = QuotientCase::projective_line;
    } else if (!G.gamma_trivial()) {
        Q.kind = QuotientCase::nontrivial_gamma;
    }

    const auto orb = group::orbits_on_roots(G);
    Q.orbits = orb.count();
    Q.regular_orbits = orb.regular.size();
    if (Q.kind == QuotientCase::projective_line) return Q;

    // Orbit products live in the splitting field; Galois permutes the orbits,
    // so only their polynomial has to descend.
    const ff::Field& E = C.splitting_field();
    auto product = [&](const std::vector<Elem>& o) {
        Elem p = E.one();
        for (const auto& r : o) p *= r;
        return p;
    };
    for (const auto& o : orb.regular) Q.orbit_products.push_back(product(o));
    if (Q.kind == QuotientCase::trivial_gamma && orb.irregular) {
        // Only possible for an invalid group; the orbit would need gamma^2 != 1.
        Q.orbit_products.push_back(product(*orb.irregular));
    }
    Poly rhs_e = Poly::constant(E.one());
    for (const auto& pr : Q.orbit_products) rhs_e *= Poly(E, std::vector<Elem>{-pr, E.one()});
    auto rhs_d = rhs_e.descend(F);
    if (!rhs_d) throw std::domain_error("orbit polynomial does not descend to " + F.name());
    Poly rhs = *rhs_d;
    Elem c = C.c();
    if (Q.kind == QuotientCase::trivial_gamma) {
        Q.sign_exponent = C.degree() - Q.orbits;
    } else {
        if (orb.irregular) {
            // The non-regular orbit is Xi; its factor is replaced by (x - lambda^m).
            if (orb.irregular->size() != G.xi().size()) throw std::logic_error("non-regular orbit differs from Xi");
        }
        Q.mu = G.lambda()->pow(static_cast<std::int64_t>(Q.m));
        rhs *= Poly(F, std::vector<Elem>{-*Q.mu, F.one()});
        Q.sign_exponent = (Q.m - 1) * (Q.orbits - 1);
        Q.y_factor = power(Q.I_T - Poly::constant(*G.lambda()), Q.m / 2);
    }
    if (Q.sign_exponent % 2 == 1) c = -c;
    Q.curve.emplace(c, rhs);
    return Q;
}

CurvePoint push_point(const QuotientResult& Q, const CurvePoint& P)
{
    if (Q.kind == QuotientCase::projective_line) {
        throw std::invalid_argument("the quotient is P^1; no hyperelliptic model to push to");
    }
    if (!P.is_affine()) {
        throw std::invalid_argument("push_point is defined on affine points only");
    }
    const auto& E = P.x.field();
    return CurvePoint::affine(Q.I.embed(E)(P.x), Q.y_factor.embed(E)(P.x) * P.y);
}

unsigned quotient_genus(const AutoGroup& G)
{
    if (G.has_kappa()) return 0;
    const auto r = static_cast<unsigned>(group::orbits_on_roots(G).regular.size());
    if (case3(G)) return r / 2;
    return r == 0 ? 0 : (r - 1) / 2;
}

}  // namespace hyperquot::quotient
