#include "hyperquot/curve/curve.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hyperquot/ff/roots.hpp"

namespace hyperquot::curve {

namespace {

bool same_elem(const Elem& a, const Elem& b)
{
    if (a.valid() != b.valid()) return false;
    return !a.valid() || (a.field_ptr() == b.field_ptr() && a.code() == b.code());
}

}  // namespace

const Field* CurvePoint::field() const
{
    if (is_affine()) return x.field_ptr();
    return v.valid() ? v.field_ptr() : nullptr;
}

bool operator==(const CurvePoint& a, const CurvePoint& b)
{
    if (a.kind != b.kind) return false;
    if (a.is_affine()) return same_elem(a.x, b.x) && same_elem(a.y, b.y);
    return a.sign == b.sign && same_elem(a.v, b.v);
}

std::string CurvePoint::to_string() const
{
    if (is_affine()) return "(" + x.to_string() + ", " + y.to_string() + ")";
    if (sign == 0) return "inf";
    return sign > 0 ? "inf+" : "inf-";
}

HyperellipticCurve::HyperellipticCurve(const Elem& c, const Poly& f)
    : base_(&f.field()), c_(c), f_(f), split_(nullptr)
{
    if (c.field_ptr() != base_) {
        throw ff::FieldMismatch("curve constant and polynomial over different fields");
    }
    if (f.degree() < 1) {
        throw std::invalid_argument("curve polynomial must have degree >= 1");
    }
    if (c.is_zero()) {
        throw std::invalid_argument("curve constant must be nonzero");
    }
    c_ = c * f.leading();
    f_ = f.monic();
    if (!ff::is_squarefree(f_)) {
        throw std::invalid_argument("curve polynomial is not squarefree: " + f_.to_string());
    }
    const unsigned d = ff::splitting_degree(f_);
    const double bits = static_cast<double>(base_->degree()) * d * std::log2(base_->characteristic());
    if (bits > 32.0) {
        throw std::domain_error("splitting field of " + f_.to_string() + " exceeds 2^32 elements");
    }
    split_ = &base_->extension(d);
    roots_ = ff::roots_in(f_, *split_);
}

Elem HyperellipticCurve::rhs_at(const Elem& x) const
{
    const Field& E = x.field();
    return ff::embed(c_, E) * f_.embed(E)(x);
}

const Field& HyperellipticCurve::infinity_field() const
{
    return c_.is_square() ? *base_ : base_->extension(2);
}

std::vector<CurvePoint> HyperellipticCurve::infinity_points() const
{
    if (degree() % 2 == 1) return {CurvePoint::at_infinity(0)};
    return infinity_points_over(infinity_field());
}

std::vector<CurvePoint> HyperellipticCurve::infinity_points_over(const Field& E) const
{
    if (degree() % 2 == 1) return {CurvePoint::at_infinity(0)};
    const Elem ce = ff::embed(c_, E);
    if (!ce.is_square()) return {};
    const Field& F0 = infinity_field();
    const Elem v0 = *ff::embed(c_, F0).sqrt();
    const Elem v = ff::embed(v0, E);
    return {CurvePoint::at_infinity(+1, v), CurvePoint::at_infinity(-1, -v)};
}

bool HyperellipticCurve::on_curve(const CurvePoint& P) const
{
    if (P.is_affine()) {
        if (!P.x.valid() || !P.y.valid() || P.x.field_ptr() != P.y.field_ptr()) return false;
        if (!base_->divides(P.x.field())) return false;
        return P.y * P.y == rhs_at(P.x);
    }
    if (degree() % 2 == 1) return P.sign == 0 && !P.v.valid();
    if (!P.v.valid() || !base_->divides(P.v.field()) || (P.sign != 1 && P.sign != -1)) return false;
    if (P.v * P.v != ff::embed(c_, P.v.field())) return false;
    // The sign label must match the canonical root.
    for (const auto& Q : infinity_points_over(P.v.field())) {
        if (Q.sign == P.sign) return Q.v == P.v;
    }
    return false;
}

std::vector<CurvePoint> HyperellipticCurve::points_over(const Field& E) const
{
    if (E.order() > kEnumerationLimit) {
        throw std::domain_error("point enumeration over " + E.name() + " exceeds the enumeration limit");
    }
    const Poly g = rhs().embed(E);
    std::vector<CurvePoint> out;
    for (std::uint64_t code = 0; code < E.order(); ++code) {
        const Elem x = E.element(static_cast<Field::code_t>(code));
        const Elem w = g(x);
        if (w.is_zero()) {
            out.push_back(CurvePoint::affine(x, w));
        } else if (auto s = w.sqrt()) {
            out.push_back(CurvePoint::affine(x, *s));
            out.push_back(CurvePoint::affine(x, -*s));
        }
    }
    for (auto& P : infinity_points_over(E)) out.push_back(P);
    return out;
}

int quadratic_character(const Elem& w)
{
    if (w.is_zero()) return 0;
    return w.pow_u((w.field().order() - 1) / 2).is_one() ? 1 : -1;
}

std::uint64_t HyperellipticCurve::count_points(const Field& E) const
{
    if (E.order() > kEnumerationLimit) {
        throw std::domain_error("point count over " + E.name() + " exceeds the enumeration limit");
    }
    const Poly g = rhs().embed(E);
    std::int64_t total = 0;
    for (std::uint64_t code = 0; code < E.order(); ++code) {
        total += 1 + quadratic_character(g(E.element(static_cast<Field::code_t>(code))));
    }
    if (degree() % 2 == 1) {
        total += 1;
    } else {
        total += 1 + quadratic_character(ff::embed(c_, E));
    }
    return static_cast<std::uint64_t>(total);
}

std::string HyperellipticCurve::to_string() const
{
    std::ostringstream os;
    os << "y^2 = ";
    if (!c_.is_one()) os << c_.to_string() << "*(";
    os << f_.to_string();
    if (!c_.is_one()) os << ")";
    os << " over " << base_->name();
    return os.str();
}

}  // namespace hyperquot::curve
