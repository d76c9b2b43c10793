#ifndef HYPERQUOT_GROUP_GROUP_HPP
#define HYPERQUOT_GROUP_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperquot/curve/curve.hpp"

namespace hyperquot::group {

using curve::CurvePoint;
using curve::HyperellipticCurve;
using ff::Elem;
using ff::Field;
using ff::Poly;

/// (x, y) -> (alpha x + beta, gamma y), coefficients in the base field.
struct AffineAutomorphism {
    Elem alpha, beta, gamma;

    static AffineAutomorphism identity(const Field& F) { return {F.one(), F.zero(), F.one()}; }
    static AffineAutomorphism hyperelliptic_involution(const Field& F) { return {F.one(), F.zero(), -F.one()}; }

    /// (g * h)(P) = g(h(P))
    friend AffineAutomorphism operator*(const AffineAutomorphism& g, const AffineAutomorphism& h)
    {
        return {g.alpha * h.alpha, g.alpha * h.beta + g.beta, g.gamma * h.gamma};
    }
    AffineAutomorphism inverse() const;
    AffineAutomorphism pow(std::int64_t e) const;

    bool is_identity() const { return alpha.is_one() && beta.is_zero() && gamma.is_one(); }
    bool is_translation() const { return alpha.is_one(); }
    bool same_x_action(const AffineAutomorphism& o) const { return alpha == o.alpha && beta == o.beta; }

    /// alpha x + beta with x in any extension of the base field.
    Elem apply_x(const Elem& x) const;
    /// alpha X + beta over the base field.
    Poly x_poly() const;

    friend bool operator==(const AffineAutomorphism& a, const AffineAutomorphism& b)
    {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
    /// Lexicographic on codes of (alpha, beta, gamma); the identity is minimal.
    friend std::strong_ordering operator<=>(const AffineAutomorphism& a, const AffineAutomorphism& b);

    std::string to_string() const;
};

/// True iff g is an automorphism of C: f(alpha X + beta) = gamma^2 f(X).
/// Throws std::invalid_argument if alpha or gamma is zero.
bool validate_auto(const HyperellipticCurve& C, const AffineAutomorphism& g);

/// Image of a point; infinity points are swapped or fixed per the chart rule.
CurvePoint apply(const HyperellipticCurve& C, const AffineAutomorphism& g, const CurvePoint& P);

/// True iff g swaps the two points at infinity (even degree only; false for odd).
bool swaps_infinity(const HyperellipticCurve& C, const AffineAutomorphism& g);

/// All fixed points of g on C over the algebraic closure, infinity included.
/// Coordinates live in the smallest convenient field (base, quadratic
/// extension, or splitting field for Weierstrass points). Throws
/// std::invalid_argument for the identity.
std::vector<CurvePoint> fixed_points_of_auto(const HyperellipticCurve& C, const AffineAutomorphism& g);

/// Intersection multiplicity of the graph of g with the diagonal at a fixed
/// point P, i.e. v_P(g*t - t) for a local parameter t. It is 1 unless g is
/// a translation (order divisible by p), which fixes only points at infinity.
std::int64_t fixed_point_multiplicity(const HyperellipticCurve& C, const AffineAutomorphism& g, const CurvePoint& P);

/// Fixed points of g counted with multiplicity; 2 minus this is the trace of
/// g on H^1.
std::int64_t lefschetz_fixed_count(const HyperellipticCurve& C, const AffineAutomorphism& g);

struct RootOrbits {
    std::vector<std::vector<Elem>> regular;
    std::optional<std::vector<Elem>> irregular;

    std::size_t count() const { return regular.size() + (irregular ? 1 : 0); }
};

/// A finite group of affine automorphisms stored as a sorted element list
/// (identity first) with its multiplication table and structure data.
class AutoGroup {
  public:
    static constexpr std::size_t kDefaultBound = 256;
    static constexpr std::size_t kFullLatticeLimit = 64;

    /// Group generated by `generators`. Throws std::invalid_argument for a
    /// generator that is not an automorphism and std::length_error if the
    /// closure exceeds `bound` elements.
    static AutoGroup closure(const HyperellipticCurve& C, const std::vector<AffineAutomorphism>& generators,
                             std::size_t bound = kDefaultBound);

    const HyperellipticCurve& curve() const { return *curve_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<AffineAutomorphism>& elements() const { return elems_; }
    const AffineAutomorphism& operator[](std::size_t i) const { return elems_[i]; }
    std::optional<std::size_t> index_of(const AffineAutomorphism& g) const;
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
    std::size_t inverse(std::size_t i) const { return inv_[i]; }
    std::size_t element_order(std::size_t i) const { return order_[i]; }
    bool is_abelian() const;

    // Structure.
    std::optional<std::size_t> kappa() const { return kappa_; }
    bool has_kappa() const { return kappa_.has_value(); }
    /// Distinct X-actions, as indices of representative elements.
    const std::vector<std::size_t>& gbar() const { return gbar_; }
    std::size_t gbar_order() const { return gbar_.size(); }
    /// Index into gbar() of the X-action of element i.
    std::size_t gbar_of(std::size_t i) const { return gbar_of_[i]; }
    /// Translation parts beta of T, sorted.
    const std::vector<Elem>& translations() const { return translations_; }
    std::size_t t_order() const { return translations_.size(); }
    std::size_t m() const { return gbar_order() / t_order(); }
    /// Fixed points beta/(1 - alpha) of the non-translations, sorted.
    const std::vector<Elem>& xi() const { return xi_; }
    /// Product of xi(); empty when xi() is empty.
    const std::optional<Elem>& lambda() const { return lambda_; }
    bool gamma_trivial() const;
    /// Orders of the cyclic images of g -> alpha(g) and g -> gamma(g) in k^x.
    std::size_t alpha_order() const;
    std::size_t gamma_order() const;

    // Conjugacy classes, each sorted, ordered by smallest member.
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t i) const { return class_of_[i]; }

    /// Permutation of roots() of the curve induced by element i.
    const std::vector<std::size_t>& root_permutation(std::size_t i) const { return root_perm_[i]; }
    int root_sign(std::size_t i) const;
    std::size_t fixed_roots(std::size_t i) const;

    /// Subgroup on the given element indices (must be closed).
    AutoGroup subgroup(std::vector<std::size_t> indices) const;
    /// For a subgroup: the index in the parent of each element; empty otherwise.
    const std::vector<std::size_t>& parent_indices() const { return parent_; }

    std::vector<AutoGroup> cyclic_subgroups() const;
    /// Every subgroup, found as closures of pairs; requires order() <= 64.
    std::vector<AutoGroup> all_subgroups() const;

  private:
    AutoGroup(std::shared_ptr<const HyperellipticCurve> C, std::vector<AffineAutomorphism> elems);
    void build();
    std::vector<std::size_t> generated(std::vector<std::size_t> gens) const;

    std::shared_ptr<const HyperellipticCurve> curve_;
    std::vector<AffineAutomorphism> elems_;
    std::vector<std::size_t> table_, inv_, order_;
    std::optional<std::size_t> kappa_;
    std::vector<std::size_t> gbar_, gbar_of_;
    std::vector<Elem> translations_, xi_;
    std::optional<Elem> lambda_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> root_perm_;
    std::vector<std::size_t> parent_;
};

/// Orbits of the X-action on the roots of f. An orbit is regular when its
/// size equals |Gbar|; for the trivial group every singleton counts as regular.
RootOrbits orbits_on_roots(const AutoGroup& G);

/// For each element, the permutation it induces on curve.infinity_points().
std::vector<std::vector<std::size_t>> infinity_action(const AutoGroup& G);

}  // namespace hyperquot::group

#endif
