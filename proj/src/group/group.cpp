#include "hyperquot/group/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperquot::group {

AffineAutomorphism AffineAutomorphism::inverse() const
{
    const Elem ai = alpha.inv();
    return {ai, -(ai * beta), gamma.inv()};
}

AffineAutomorphism AffineAutomorphism::pow(std::int64_t e) const
{
    AffineAutomorphism base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    AffineAutomorphism r = identity(alpha.field());
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Elem AffineAutomorphism::apply_x(const Elem& x) const
{
    const Field& E = x.field();
    return ff::embed(alpha, E) * x + ff::embed(beta, E);
}

Poly AffineAutomorphism::x_poly() const { return Poly(alpha.field(), std::vector<Elem>{beta, alpha}); }

std::strong_ordering operator<=>(const AffineAutomorphism& a, const AffineAutomorphism& b)
{
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    if (auto c = a.beta <=> b.beta; c != 0) return c;
    return a.gamma <=> b.gamma;
}

std::string AffineAutomorphism::to_string() const
{
    return "(" + alpha.to_string() + ", " + beta.to_string() + ", " + gamma.to_string() + ")";
}

bool validate_auto(const HyperellipticCurve& C, const AffineAutomorphism& g)
{
    if (g.alpha.is_zero() || g.gamma.is_zero()) {
        throw std::invalid_argument("automorphism with zero alpha or gamma");
    }
    const Field& F = C.base_field();
    if (g.alpha.field_ptr() != &F || g.beta.field_ptr() != &F || g.gamma.field_ptr() != &F) {
        throw ff::FieldMismatch("automorphism coefficients outside the curve's base field");
    }
    return C.f().compose_linear(g.alpha, g.beta) == (g.gamma * g.gamma) * C.f();
}

bool swaps_infinity(const HyperellipticCurve& C, const AffineAutomorphism& g)
{
    if (C.degree() % 2 == 1) return false;
    return g.gamma != g.alpha.pow(C.degree() / 2);
}

CurvePoint apply(const HyperellipticCurve& C, const AffineAutomorphism& g, const CurvePoint& P)
{
    if (P.is_affine()) {
        const Field& E = P.x.field();
        return CurvePoint::affine(g.apply_x(P.x), ff::embed(g.gamma, E) * P.y);
    }
    if (!swaps_infinity(C, g)) return P;
    return CurvePoint::at_infinity(-P.sign, -P.v);
}

std::vector<CurvePoint> fixed_points_of_auto(const HyperellipticCurve& C, const AffineAutomorphism& g)
{
    if (g.is_identity()) {
        throw std::invalid_argument("the identity fixes every point");
    }
    const Field& F = C.base_field();
    std::vector<CurvePoint> out;
    if (!g.alpha.is_one()) {
        const Elem x0 = g.beta / (F.one() - g.alpha);
        const Elem w = C.rhs_at(x0);
        if (w.is_zero()) {
            out.push_back(CurvePoint::affine(x0, w));
        } else if (g.gamma.is_one()) {
            const Field& E = w.is_square() ? F : F.extension(2);
            const Elem y = *ff::embed(w, E).sqrt();
            const Elem xe = ff::embed(x0, E);
            out.push_back(CurvePoint::affine(xe, y));
            out.push_back(CurvePoint::affine(xe, -y));
        }
    } else if (g.beta.is_zero()) {
        // gamma = -1: the hyperelliptic involution fixes the Weierstrass points.
        const Field& E = C.splitting_field();
        for (const auto& r : C.roots()) out.push_back(CurvePoint::affine(r, E.zero()));
    }
    if (C.degree() % 2 == 1 || !swaps_infinity(C, g)) {
        for (auto& P : C.infinity_points()) out.push_back(P);
    }
    return out;
}

std::int64_t fixed_point_multiplicity(const HyperellipticCurve& C, const AffineAutomorphism& g, const CurvePoint& P)
{
    if (P.kind == CurvePoint::Kind::affine || !g.alpha.is_one()) return 1;
    // Translation x -> x + b with gamma = +-1.
    const auto n = static_cast<std::int64_t>(C.degree());
    // u = 1/x is a parameter at each of the two points; g*u - u = -b/(x(x+b)).
    if (n % 2 == 0) return 2;
    // t = x^k / y with n = 2k + 1; g acts on the tangent line by 1/gamma.
    if (!g.gamma.is_one()) return 1;
    // g*t - t = ((x+b)^k - x^k)/y = (k b x^(k-1) + ...)/y, and p does not
    // divide k because translation invariance forces p | n.
    return 3;
}

std::int64_t lefschetz_fixed_count(const HyperellipticCurve& C, const AffineAutomorphism& g)
{
    std::int64_t s = 0;
    for (const auto& P : fixed_points_of_auto(C, g)) s += fixed_point_multiplicity(C, g, P);
    return s;
}

AutoGroup::AutoGroup(std::shared_ptr<const HyperellipticCurve> C, std::vector<AffineAutomorphism> elems)
    : curve_(std::move(C)), elems_(std::move(elems))
{
    std::sort(elems_.begin(), elems_.end());
    build();
}

AutoGroup AutoGroup::closure(const HyperellipticCurve& C, const std::vector<AffineAutomorphism>& generators,
                             std::size_t bound)
{
    for (const auto& g : generators) {
        if (!validate_auto(C, g)) {
            throw std::invalid_argument("generator " + g.to_string() + " is not an automorphism of " + C.to_string());
        }
    }
    std::set<AffineAutomorphism> seen{AffineAutomorphism::identity(C.base_field())};
    std::vector<AffineAutomorphism> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<AffineAutomorphism> next;
        for (const auto& h : frontier) {
            for (const auto& g : generators) {
                auto gh = g * h;
                if (seen.insert(gh).second) {
                    if (seen.size() > bound) {
                        throw std::length_error("group closure exceeds " + std::to_string(bound) + " elements");
                    }
                    next.push_back(gh);
                }
            }
        }
        frontier = std::move(next);
    }
    return AutoGroup(std::make_shared<const HyperellipticCurve>(C), {seen.begin(), seen.end()});
}

std::optional<std::size_t> AutoGroup::index_of(const AffineAutomorphism& g) const
{
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
    if (it == elems_.end() || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

void AutoGroup::build()
{
    const std::size_t n = order();
    const Field& F = curve_->base_field();
    table_.assign(n * n, 0);
    inv_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto idx = index_of(elems_[i] * elems_[j]);
            if (!idx) throw std::logic_error("element list is not closed under composition");
            table_[i * n + j] = *idx;
            if (*idx == 0) inv_[i] = j;
        }
    }
    order_.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = i;
        while (k != 0) {
            k = mul(k, i);
            ++order_[i];
        }
    }

    kappa_ = index_of(AffineAutomorphism::hyperelliptic_involution(F));
    gbar_.clear();
    gbar_of_.assign(n, 0);
    translations_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t slot = gbar_.size();
        for (std::size_t s = 0; s < gbar_.size(); ++s) {
            if (elems_[gbar_[s]].same_x_action(elems_[i])) slot = s;
        }
        if (slot == gbar_.size()) {
            gbar_.push_back(i);
            if (elems_[i].is_translation()) translations_.push_back(elems_[i].beta);
        }
        gbar_of_[i] = slot;
    }
    std::sort(translations_.begin(), translations_.end());

    std::set<Elem> xi;
    for (auto i : gbar_) {
        const auto& g = elems_[i];
        if (!g.alpha.is_one()) xi.insert(g.beta / (F.one() - g.alpha));
    }
    xi_.assign(xi.begin(), xi.end());
    lambda_.reset();
    if (!xi_.empty()) {
        Elem l = F.one();
        for (const auto& a : xi_) l *= a;
        lambda_ = l;
    }
    if (n != gbar_.size() * (kappa_ ? 2 : 1)) {
        throw std::logic_error("kernel of the X-action is not generated by the hyperelliptic involution");
    }
    if (gbar_order() % t_order() != 0 || m() % F.characteristic() == 0 ||
        (m() > 1 && xi_.size() != t_order()) || (m() == 1 && !xi_.empty())) {
        throw std::logic_error("inconsistent group structure");
    }

    class_of_.assign(n, n);
    classes_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of_[i] != n) continue;
        std::set<std::size_t> cls;
        for (std::size_t h = 0; h < n; ++h) cls.insert(mul(mul(h, i), inv_[h]));
        for (auto c : cls) class_of_[c] = classes_.size();
        classes_.emplace_back(cls.begin(), cls.end());
    }

    const auto& R = curve_->roots();
    root_perm_.assign(n, std::vector<std::size_t>(R.size(), 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < R.size(); ++r) {
            const Elem img = elems_[i].apply_x(R[r]);
            auto it = std::lower_bound(R.begin(), R.end(), img);
            if (it == R.end() || *it != img) throw std::logic_error("element does not permute the roots");
            root_perm_[i][r] = static_cast<std::size_t>(it - R.begin());
        }
    }
}

bool AutoGroup::is_abelian() const
{
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

bool AutoGroup::gamma_trivial() const
{
    return std::all_of(elems_.begin(), elems_.end(), [](const auto& g) { return g.gamma.is_one(); });
}

std::size_t AutoGroup::alpha_order() const
{
    std::size_t l = 1;
    for (const auto& g : elems_) l = std::lcm(l, static_cast<std::size_t>(g.alpha.field().element_order(g.alpha.code())));
    return l;
}

std::size_t AutoGroup::gamma_order() const
{
    std::size_t l = 1;
    for (const auto& g : elems_) l = std::lcm(l, static_cast<std::size_t>(g.gamma.field().element_order(g.gamma.code())));
    return l;
}

int AutoGroup::root_sign(std::size_t i) const
{
    const auto& perm = root_perm_[i];
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t t = s; !seen[t]; t = perm[t]) {
            seen[t] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::size_t AutoGroup::fixed_roots(std::size_t i) const
{
    std::size_t k = 0;
    for (std::size_t r = 0; r < root_perm_[i].size(); ++r) k += root_perm_[i][r] == r;
    return k;
}

AutoGroup AutoGroup::subgroup(std::vector<std::size_t> indices) const
{
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    std::vector<AffineAutomorphism> els;
    for (auto i : indices) els.push_back(elems_[i]);
    AutoGroup H(curve_, std::move(els));
    // Sorting is inherited from the parent, so positions line up.
    H.parent_ = std::move(indices);
    return H;
}

std::vector<std::size_t> AutoGroup::generated(std::vector<std::size_t> gens) const
{
    std::set<std::size_t> seen{0};
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto h : frontier)
            for (auto g : gens)
                if (seen.insert(mul(g, h)).second) next.push_back(mul(g, h));
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

std::vector<std::vector<std::size_t>> sort_subgroups(std::set<std::vector<std::size_t>> s)
{
    std::vector<std::vector<std::size_t>> v(s.begin(), s.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return v;
}

}  // namespace

std::vector<AutoGroup> AutoGroup::cyclic_subgroups() const
{
    std::set<std::vector<std::size_t>> found;
    for (std::size_t i = 0; i < order(); ++i) found.insert(generated({i}));
    std::vector<AutoGroup> out;
    for (auto& s : sort_subgroups(std::move(found))) out.push_back(subgroup(s));
    return out;
}

std::vector<AutoGroup> AutoGroup::all_subgroups() const
{
    if (order() > kFullLatticeLimit) {
        throw std::length_error("full subgroup lattice is limited to groups of order " +
                                std::to_string(kFullLatticeLimit));
    }
    std::set<std::vector<std::size_t>> found;
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = i; j < order(); ++j) found.insert(generated({i, j}));
    std::vector<AutoGroup> out;
    for (auto& s : sort_subgroups(std::move(found))) out.push_back(subgroup(s));
    return out;
}

RootOrbits orbits_on_roots(const AutoGroup& G)
{
    const auto& R = G.curve().roots();
    std::vector<bool> seen(R.size(), false);
    RootOrbits out;
    for (std::size_t r = 0; r < R.size(); ++r) {
        if (seen[r]) continue;
        std::set<std::size_t> orbit;
        for (auto gi : G.gbar()) orbit.insert(G.root_permutation(gi)[r]);
        std::vector<Elem> o;
        for (auto s : orbit) {
            seen[s] = true;
            o.push_back(R[s]);
        }
        if (o.size() == G.gbar_order()) {
            out.regular.push_back(std::move(o));
        } else if (out.irregular) {
            throw std::logic_error("more than one non-regular orbit on the roots");
        } else {
            out.irregular = std::move(o);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> infinity_action(const AutoGroup& G)
{
    std::vector<std::vector<std::size_t>> out;
    const bool two = G.curve().degree() % 2 == 0;
    for (const auto& g : G.elements()) {
        if (!two) {
            out.push_back({0});
        } else if (swaps_infinity(G.curve(), g)) {
            out.push_back({1, 0});
        } else {
            out.push_back({0, 1});
        }
    }
    return out;
}

}  // namespace hyperquot::group
