#include "instances.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hyperquot::acceptance {

using ff::Elem;
using ff::Field;
using ff::Poly;
using group::AffineAutomorphism;

namespace {

struct XMap {
    Elem a, b;
    friend bool operator==(const XMap& u, const XMap& v) { return u.a == v.a && u.b == v.b; }
};

XMap compose(const XMap& g, const XMap& h) { return {g.a * h.a, g.a * h.b + g.b}; }

std::vector<XMap> closure(const Field& F, const std::vector<XMap>& gens, std::size_t bound)
{
    std::vector<XMap> out{{F.one(), F.zero()}};
    for (std::size_t i = 0; i < out.size() && out.size() <= bound; ++i) {
        for (const auto& g : gens) {
            const auto h = compose(g, out[i]);
            if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
        }
    }
    return out;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Elem random_elem(std::mt19937_64& rng, const Field& F, bool nonzero)
{
    std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, F.order() - 1);
    return F.element(static_cast<Field::code_t>(d(rng)));
}

/// Element of multiplicative order m (m divides |F| - 1).
Elem root_of_unity(const Field& F, std::uint64_t m) { return F.generator().pow_u((F.order() - 1) / m); }

std::vector<std::uint64_t> divisors_above_one(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Instance random_instance(std::mt19937_64& rng, const InstanceLimits& lim)
{
    const std::vector<std::pair<std::uint32_t, unsigned>> fields{{3, 1}, {3, 2}, {5, 1}, {7, 1}};
    const std::vector<std::string> shapes{"trivial", "rotation", "translation", "affine"};
    for (;;) {
        const auto [p, k] = pick(rng, fields);
        const Field& F = Field::get(p, k);
        const Field& Fp = Field::get(p, 1);
        const std::string shape = pick(rng, shapes);

        std::vector<XMap> gens;
        if (shape == "rotation") {
            const Elem zeta = root_of_unity(F, pick(rng, divisors_above_one(F.order() - 1)));
            const Elem centre = random_elem(rng, F, false);
            gens.push_back({zeta, centre * (F.one() - zeta)});
        } else if (shape == "translation") {
            gens.push_back({F.one(), random_elem(rng, F, true)});
            if (k > 1 && coin(rng, 0.3)) gens.push_back({F.one(), random_elem(rng, F, true)});
        } else if (shape == "affine") {
            // F_p is stable under multiplication by a root of unity in F_p.
            const auto zeta_fp = root_of_unity(Fp, pick(rng, divisors_above_one(p - 1)));
            gens.push_back({F.one(), F.one()});
            gens.push_back({ff::embed(zeta_fp, F), F.zero()});
        }
        const auto gbar = closure(F, gens, lim.max_group);
        if (gbar.size() > lim.max_group) continue;

        std::vector<Elem> xi;
        for (const auto& g : gbar) {
            if (g.a.is_one()) continue;
            const Elem x = g.b / (F.one() - g.a);
            if (std::find(xi.begin(), xi.end(), x) == xi.end()) xi.push_back(x);
        }
        const bool use_xi = !xi.empty() && coin(rng, 0.5);
        const std::size_t fixed_deg = use_xi ? xi.size() : 0;
        if (gbar.size() + fixed_deg > lim.max_degree) continue;
        const std::size_t max_dh = (lim.max_degree - fixed_deg) / gbar.size();
        const std::size_t dh = std::uniform_int_distribution<std::size_t>(1, max_dh)(rng);
        if (gbar.size() * dh + fixed_deg < 3) continue;

        std::vector<Elem> hc;
        for (std::size_t i = 0; i < dh; ++i) hc.push_back(random_elem(rng, F, false));
        hc.push_back(F.one());
        const Poly h(F, std::span<const Elem>(hc));
        Poly f = Poly::constant(F.one());
        for (const auto& g : gbar) f *= h.compose_linear(g.a, g.b);
        if (use_xi) f *= Poly::from_roots(F, xi);

        std::optional<curve::HyperellipticCurve> C;
        try {
            C.emplace(random_elem(rng, F, true), f);
        } catch (const std::exception&) {
            continue;  // not squarefree, or splitting field too large
        }

        std::vector<AffineAutomorphism> lifts;
        bool liftable = true;
        for (const auto& g : gens) {
            const Poly fg = C->f().compose_linear(g.a, g.b);
            const Elem s = fg.leading() / C->f().leading();
            const auto r = s.sqrt();
            if (fg != s * C->f() || !r) {
                liftable = false;
                break;
            }
            lifts.push_back({g.a, g.b, coin(rng, 0.5) ? *r : -*r});
        }
        if (!liftable) continue;
        std::string label = shape;
        if (2 * gbar.size() <= lim.max_group && coin(rng, 0.2)) {
            lifts.push_back(AffineAutomorphism::hyperelliptic_involution(F));
            label += "+kappa";
        }
        try {
            const auto G = group::AutoGroup::closure(*C, lifts, lim.max_group);
            const auto& twist = G[std::uniform_int_distribution<std::size_t>(0, G.order() - 1)(rng)];
            frob::FrobMorphism phi{twist.alpha, twist.beta, twist.gamma, F.order()};
            // Keep only instances whose iterates up to 2g can all be counted
            // within the point budget.
            double points = 1;
            for (unsigned i = 0; i < 2 * C->genus(); ++i) points *= static_cast<double>(F.order());
            if (points > lim.max_points) continue;
            for (unsigned i = 1; i <= 2 * C->genus(); ++i) frob::count_fixed(*C, phi, i);
            return {*C, lifts, phi, label};
        } catch (const std::length_error&) {
            continue;
        }
    }
}

}  // namespace hyperquot::acceptance
