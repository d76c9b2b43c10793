#ifndef HYPERQUOT_CURVE_CURVE_HPP
#define HYPERQUOT_CURVE_CURVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperquot/ff/field.hpp"
#include "hyperquot/ff/poly.hpp"

namespace hyperquot::curve {

using ff::Elem;
using ff::Field;
using ff::Poly;

/// A point of Y^2 = c f(X): affine (x, y), or a point at infinity.
///
/// At infinity the chart is u = 1/X, v = Y/X^{n/2}. For odd n there is one
/// point (sign 0). For even n the points are (0, v) with v^2 = c; sign +1
/// marks the square root of c with the smaller code in the smallest field
/// containing it, sign -1 its negative.
struct CurvePoint {
    enum class Kind { affine, infinity };

    Kind kind = Kind::affine;
    Elem x, y;  // affine only
    int sign = 0;
    Elem v;  // infinity, even degree only

    static CurvePoint affine(const Elem& x, const Elem& y) { return {Kind::affine, x, y, 0, {}}; }
    static CurvePoint at_infinity(int sign, const Elem& v = {}) { return {Kind::infinity, {}, {}, sign, v}; }

    bool is_affine() const { return kind == Kind::affine; }
    bool is_infinity() const { return kind == Kind::infinity; }
    /// Field holding the coordinates; null for the odd-degree point at infinity.
    const Field* field() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b);
    std::string to_string() const;
};

class HyperellipticCurve {
  public:
    /// Y^2 = c * f(X). A non-monic f is normalised by moving its leading
    /// coefficient into c. Requires c != 0, deg f >= 1, f squarefree.
    HyperellipticCurve(const Elem& c, const Poly& f);

    const Field& base_field() const { return *base_; }
    const Elem& c() const { return c_; }
    const Poly& f() const { return f_; }
    /// c * f
    Poly rhs() const { return c_ * f_; }
    unsigned degree() const { return static_cast<unsigned>(f_.degree()); }
    unsigned genus() const { return (degree() - 1) / 2; }

    /// Smallest extension over which f splits, and the roots of f there.
    const Field& splitting_field() const { return *split_; }
    const std::vector<Elem>& roots() const { return roots_; }

    /// c f(x) for x in any extension of the base field.
    Elem rhs_at(const Elem& x) const;

    /// The points at infinity over the smallest field where they are defined.
    std::vector<CurvePoint> infinity_points() const;
    /// The points at infinity rational over E.
    std::vector<CurvePoint> infinity_points_over(const Field& E) const;
    /// Smallest field containing sqrt(c): the base field or its quadratic extension.
    const Field& infinity_field() const;

    bool on_curve(const CurvePoint& P) const;

    /// All E-rational points, affine points first in x-code order.
    std::vector<CurvePoint> points_over(const Field& E) const;
    /// |C(E)| through the quadratic character sum.
    std::uint64_t count_points(const Field& E) const;

    std::string to_string() const;

    /// Largest field enumerated by points_over / count_points.
    static constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

  private:
    const Field* base_;
    Elem c_;
    Poly f_;
    const Field* split_;
    std::vector<Elem> roots_;
};

/// Quadratic character on a finite field: 0, 1 or -1.
int quadratic_character(const Elem& w);

}  // namespace hyperquot::curve

#endif
