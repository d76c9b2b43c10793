#include "hyperquot/ff/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperquot::ff {

namespace {

void require_same(const Poly& a, const Poly& b)
{
    if (&a.field() != &b.field()) {
        throw FieldMismatch("polynomials over different fields");
    }
}

}  // namespace

Poly::Poly(const Field& f, std::vector<code_t> codes) : f_(&f), c_(std::move(codes))
{
    normalize();
}

Poly::Poly(const Field& f, std::span<const Elem> coeffs) : f_(&f)
{
    c_.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (&e.field() != f_) {
            throw FieldMismatch("coefficient outside polynomial field");
        }
        c_.push_back(e.code());
    }
    normalize();
}

void Poly::normalize()
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Poly Poly::x(const Field& f) { return Poly(f, std::vector<code_t>{0, 1}); }

Poly Poly::constant(const Elem& c) { return Poly(c.field(), std::vector<code_t>{c.code()}); }

Poly Poly::monomial(const Elem& c, std::size_t deg)
{
    std::vector<code_t> v(deg + 1, 0);
    v[deg] = c.code();
    return Poly(c.field(), std::move(v));
}

Poly Poly::from_roots(const Field& f, std::span<const Elem> roots)
{
    std::vector<code_t> v{1};
    for (const auto& r : roots) {
        if (&r.field() != &f) {
            throw FieldMismatch("root outside polynomial field");
        }
        const code_t nr = f.neg(r.code());
        std::vector<code_t> next(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], v[i]);
            next[i] = f.add(next[i], f.mul(v[i], nr));
        }
        v = std::move(next);
    }
    return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, std::span<const std::int64_t> coeffs)
{
    std::vector<code_t> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(f.from_int_code(c));
    return Poly(f, std::move(v));
}

Elem Poly::coeff(std::size_t i) const { return {*f_, i < c_.size() ? c_[i] : 0}; }

Elem Poly::leading() const { return {*f_, c_.empty() ? 0 : c_.back()}; }

Poly::code_t Poly::eval_code(code_t x) const
{
    code_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = f_->add(f_->mul(r, x), *it);
    }
    return r;
}

Elem Poly::operator()(const Elem& x) const
{
    if (&x.field() != f_) {
        throw FieldMismatch("evaluation point outside polynomial field");
    }
    return {*f_, eval_code(x.code())};
}

Poly operator+(const Poly& a, const Poly& b)
{
    require_same(a, b);
    const Field& f = a.field();
    std::vector<Poly::code_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto x = i < a.c_.size() ? a.c_[i] : 0;
        const auto y = i < b.c_.size() ? b.c_[i] : 0;
        v[i] = f.add(x, y);
    }
    return Poly(f, std::move(v));
}

Poly Poly::operator-() const
{
    std::vector<code_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->neg(c_[i]);
    return Poly(*f_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b)
{
    require_same(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Poly::code_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const auto x = a.c_[i];
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            v[i + j] = f.add(v[i + j], f.mul(x, b.c_[j]));
        }
    }
    return Poly(f, std::move(v));
}

Poly operator*(const Elem& s, const Poly& a)
{
    if (&s.field() != &a.field()) {
        throw FieldMismatch("scalar outside polynomial field");
    }
    std::vector<Poly::code_t> v(a.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_->mul(s.code(), a.c_[i]);
    return Poly(a.field(), std::move(v));
}

bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b)
{
    require_same(a, b);
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    const Field& f = a.field();
    if (a.degree() < b.degree()) {
        return {Poly(f), a};
    }
    std::vector<code_t> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<code_t> q(r.size() - db, 0);
    const code_t inv_lead = f.inv(b.c_.back());
    // Nonzero terms of the divisor below the leading one.
    std::vector<std::pair<std::size_t, code_t>> terms;
    for (std::size_t j = 0; j < db; ++j) {
        if (b.c_[j] != 0) terms.emplace_back(j, f.neg(b.c_[j]));
    }
    for (std::size_t i = r.size(); i-- > db;) {
        const code_t c = inv_lead == 1 ? r[i] : f.mul(r[i], inv_lead);
        if (c == 0) continue;
        const std::size_t shift = i - db;
        q[shift] = c;
        r[i] = 0;
        for (const auto& [j, nb] : terms) {
            r[shift + j] = f.add(r[shift + j], f.mul(c, nb));
        }
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return Poly(*f_);
    std::vector<code_t> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        v[i - 1] = f_->mul(c_[i], f_->from_int_code(static_cast<std::int64_t>(i % f_->characteristic())));
    }
    return Poly(*f_, std::move(v));
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return leading().inv() * *this;
}

Poly Poly::compose_linear(const Elem& a, const Elem& b) const
{
    // Horner in the ring: r = r*(aX+b) + c_i
    const Poly lin(*f_, std::vector<code_t>{b.code(), a.code()});
    Poly r(*f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * lin + Poly(*f_, std::vector<code_t>{*it});
    }
    return r;
}

Poly Poly::compose(const Poly& g) const
{
    require_same(*this, g);
    Poly r(*f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * g + Poly(*f_, std::vector<code_t>{*it});
    }
    return r;
}

Poly Poly::frobenius_coeffs(std::uint64_t s) const
{
    std::vector<code_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->frobenius(c_[i], s);
    return Poly(*f_, std::move(v));
}

Poly Poly::inflate(std::size_t e) const
{
    if (is_zero()) return *this;
    std::vector<code_t> v((c_.size() - 1) * e + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * e] = c_[i];
    return Poly(*f_, std::move(v));
}

Poly Poly::embed(const Field& target) const
{
    if (&target == f_) return *this;
    std::vector<code_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v[i] = ff::embed(Elem(*f_, c_[i]), target).code();
    }
    return Poly(target, std::move(v));
}

std::optional<Poly> Poly::descend(const Field& sub) const
{
    if (&sub == f_) return *this;
    std::vector<code_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        auto d = ff::descend(Elem(*f_, c_[i]), sub);
        if (!d) return std::nullopt;
        v[i] = d->code();
    }
    return Poly(sub, std::move(v));
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const Elem c(*f_, c_[i]);
        if (i == 0 || c_[i] != 1) {
            os << c.to_string();
            if (i > 0) os << '*';
        }
        if (i >= 1) os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Poly gcd(Poly a, Poly b)
{
    require_same(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m)
{
    Poly r = Poly::constant(m.field().one()) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

Poly powmod_frobenius(const Poly& base, std::uint64_t s, const Poly& m)
{
    Poly r = base % m;
    for (std::uint64_t i = 0; i < s; ++i) {
        r = powmod(r, m.field().characteristic(), m);
    }
    return r;
}

bool is_squarefree(const Poly& f)
{
    if (f.degree() <= 0) return true;
    const Poly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

}  // namespace hyperquot::ff
