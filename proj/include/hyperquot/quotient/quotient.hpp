#ifndef HYPERQUOT_QUOTIENT_QUOTIENT_HPP
#define HYPERQUOT_QUOTIENT_QUOTIENT_HPP

#include <optional>
#include <vector>

#include "hyperquot/group/group.hpp"

namespace hyperquot::quotient {

using curve::CurvePoint;
using curve::HyperellipticCurve;
using ff::Elem;
using ff::Poly;
using group::AutoGroup;

enum class QuotientCase {
    projective_line = 1,   // the hyperelliptic involution lies in G
    trivial_gamma = 2,     // G acts trivially on Y
    nontrivial_gamma = 3,
};

const char* to_string(QuotientCase c);

struct QuotientResult {
    QuotientCase kind;
    Poly I;    // product of g(X) over the X-actions
    Poly I_T;  // product over the translations
    std::optional<Elem> lambda;
    std::optional<Elem> mu;  // lambda^m, case 3
    std::size_t m = 1;
    std::size_t orbits = 0;          // |R/G|
    std::size_t regular_orbits = 0;  // r
    /// Exponent of -1 in the leading constant: |R| - |R/G| or delta.
    std::size_t sign_exponent = 0;
    /// Products of the roots in each orbit, in the splitting field of f.
    std::vector<Elem> orbit_products;
    /// y = y_factor(X) * Y; the constant 1 in case 2.
    Poly y_factor;
    /// The model y^2 = c' f'(x); absent in case 1.
    std::optional<HyperellipticCurve> curve;
};

/// prod over Gbar of (alpha X + beta)
Poly invariant_I(const AutoGroup& G);
/// prod over T of (X + beta)
Poly invariant_IT(const AutoGroup& G);

/// Closed-form quotient C/G. Throws std::domain_error if the orbit
/// polynomial does not descend to the base field.
QuotientResult quotient_curve(const AutoGroup& G);

/// (I(x), y_factor(x) y) for an affine point P of C. Throws
/// std::invalid_argument in case 1 and for points at infinity.
CurvePoint push_point(const QuotientResult& Q, const CurvePoint& P);

/// Genus of C/G from the number of regular orbits.
unsigned quotient_genus(const AutoGroup& G);

}  // namespace hyperquot::quotient

#endif
