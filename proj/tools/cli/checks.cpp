#include "checks.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperquot/quotient/quotient.hpp"
#include "report.hpp"

namespace hyperquot::cli {

using ff::Elem;
using ff::Field;
using ff::Poly;
using group::AutoGroup;

void CheckList::add(std::string name, bool ok, std::string detail)
{
    items.push_back({std::move(name), ok, std::move(detail)});
}

void CheckList::append(const std::vector<Check>& more, const std::string& prefix)
{
    for (const auto& c : more) items.push_back({prefix + c.name, c.ok, c.detail});
}

bool CheckList::ok() const
{
    return std::all_of(items.begin(), items.end(), [](const Check& c) { return c.ok; });
}

namespace {

constexpr std::uint64_t kPushFieldLimit = std::uint64_t{1} << 14;

void orbit_identities(const AutoGroup& G, CheckList& out)
{
    const Field& E = G.curve().splitting_field();
    const Poly I = quotient::invariant_I(G).embed(E);
    const auto orb = group::orbits_on_roots(G);
    const Elem sign = G.gbar_order() % 2 == 1 ? E.one() : -E.one();
    std::size_t bad = 0;
    for (const auto& o : orb.regular) {
        Elem prod = E.one();
        for (const auto& r : o) prod *= r;
        if (Poly::from_roots(E, o) != sign * (I - Poly::constant(prod))) ++bad;
    }
    out.add("regular orbit identity", bad == 0,
            std::to_string(orb.regular.size() - bad) + "/" + std::to_string(orb.regular.size()) + " orbits");
    if (G.xi().empty()) return;
    std::vector<Elem> xi;
    for (const auto& a : G.xi()) xi.push_back(ff::embed(a, E));
    const Poly IT = quotient::invariant_IT(G).embed(E);
    out.add("irregular orbit identity", Poly::from_roots(E, xi) == IT - Poly::constant(ff::embed(*G.lambda(), E)),
            std::to_string(xi.size()) + " fixed points");
}

}  // namespace

CheckList verify_quotient(const AutoGroup& G)
{
    CheckList out;
    const auto& C = G.curve();
    const Field& F = C.base_field();
    orbit_identities(G, out);

    const Poly I = quotient::invariant_I(G);
    bool invariant = true;
    for (const auto& g : G.elements()) invariant = invariant && I.compose(g.x_poly()) == I;
    out.add("I is G-invariant", invariant);

    const auto Q = quotient::quotient_curve(G);
    if (!Q.curve) {
        out.add("genus formula", quotient::quotient_genus(G) == 0, "quotient is the projective line");
        return out;
    }
    const unsigned formula = quotient::quotient_genus(G);
    out.add("genus formula", formula == Q.curve->genus(),
            "formula " + std::to_string(formula) + ", model " + std::to_string(Q.curve->genus()));

    std::vector<const Field*> fields{&F};
    if (F.order() * F.order() <= kPushFieldLimit) fields.push_back(&F.extension(2));
    std::size_t points = 0, bad = 0;
    for (const Field* E : fields) {
        for (const auto& P : C.points_over(*E)) {
            if (!P.is_affine()) continue;
            ++points;
            const auto img = quotient::push_point(Q, P);
            bool good = Q.curve->on_curve(img);
            for (const auto& g : G.elements()) good = good && quotient::push_point(Q, group::apply(C, g, P)) == img;
            if (!good) ++bad;
        }
    }
    out.add("quotient map is G-invariant", bad == 0,
            std::to_string(points - bad) + "/" + std::to_string(points) + " affine points");
    return out;
}

CheckList verify_frobenius(const AutoGroup& G, const frob::FrobMorphism& phi, const frob::CountOptions& opt)
{
    CheckList out;
    const auto& C = G.curve();
    const bool valid = frob::validate_frob(C, phi);
    out.add("frobenius is a morphism of the curve", valid, frob_text(phi));
    if (!valid) return out;
    const auto norm = frob::normalizes(phi, G);
    out.add("frobenius normalises G", norm.ok);
    if (!norm.ok || G.has_kappa()) return out;

    const auto Q = quotient::quotient_curve(G);
    frob::Descent desc;
    try {
        desc = frob::descend(phi, G, Q);
        out.add("descent commuting square", true,
                std::to_string(desc.points_checked) + " points, psi = " + frob_text(desc.psi));
    } catch (const std::length_error&) {
        throw;
    } catch (const std::logic_error& e) {
        out.add("descent commuting square", false, e.what());
        return out;
    }

    frob::CountOptions cross = opt;
    cross.cross_check = true;
    std::vector<std::uint64_t> counts;
    std::size_t compared = 0;
    for (unsigned i = 1; i <= 2 * C.genus(); ++i) {
        try {
            const auto fc = frob::count_fixed(C, phi, i, cross);
            counts.push_back(fc.total);
            if (fc.cross_checked) ++compared;
        } catch (const std::length_error&) {
            throw;
        } catch (const std::logic_error& e) {
            out.add("fixed counts agree across methods", false, "iterate " + std::to_string(i) + ": " + e.what());
            return out;
        }
    }
    out.add("fixed counts agree across methods", true,
            std::to_string(compared) + "/" + std::to_string(counts.size()) + " iterates compared");

    const auto full = frob::charpoly_h1(C, phi, counts);
    const auto inv = frob::charpoly_h1(*Q.curve, desc.psi, frob::fixed_counts(*Q.curve, desc.psi, 2 * Q.curve->genus(), opt));
    try {
        const auto cof = frob::divide_exact(full, inv);
        out.add("quotient charpoly divides", true, "(" + inv.to_string() + ") * (" + cof.to_string() + ")");
    } catch (const std::domain_error&) {
        out.add("quotient charpoly divides", false, inv.to_string() + " does not divide " + full.to_string());
    }
    return out;
}

}  // namespace hyperquot::cli
