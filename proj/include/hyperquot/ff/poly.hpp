#ifndef HYPERQUOT_FF_POLY_HPP
#define HYPERQUOT_FF_POLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperquot/ff/field.hpp"

namespace hyperquot::ff {

/// Dense univariate polynomial over an interned finite field.
/// Coefficients are stored little-endian; the zero polynomial has no
/// coefficients and degree -1.
class Poly {
  public:
    using code_t = Field::code_t;

    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<code_t> codes);
    Poly(const Field& f, std::span<const Elem> coeffs);

    static Poly x(const Field& f);
    static Poly constant(const Elem& c);
    static Poly monomial(const Elem& c, std::size_t deg);
    /// prod (X - r)
    static Poly from_roots(const Field& f, std::span<const Elem> roots);
    /// Coefficients given as integers mod p (little-endian).
    static Poly from_ints(const Field& f, std::span<const std::int64_t> coeffs);

    const Field& field() const { return *f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const code_t> codes() const { return c_; }
    Elem coeff(std::size_t i) const;
    Elem leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Elem operator()(const Elem& x) const;
    /// Evaluation by Horner on raw codes.
    code_t eval_code(code_t x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Elem& s, const Poly& a);
    Poly operator-() const;
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b);

    /// Quotient and remainder; throws on division by zero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    Poly derivative() const;
    Poly monic() const;
    /// f(a X + b)
    Poly compose_linear(const Elem& a, const Elem& b) const;
    /// f(g(X))
    Poly compose(const Poly& g) const;
    /// Raises every coefficient to the p^s-th power.
    Poly frobenius_coeffs(std::uint64_t s) const;
    /// f(X^e)
    Poly inflate(std::size_t e) const;
    /// Image under the canonical embedding into an extension field.
    Poly embed(const Field& target) const;
    /// Preimage in a subfield, if every coefficient descends.
    std::optional<Poly> descend(const Field& sub) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();

    const Field* f_;
    std::vector<code_t> c_;
};

Poly gcd(Poly a, Poly b);
/// base^e mod m
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
/// base^(p^s) mod m, computed as s successive p-th powers.
Poly powmod_frobenius(const Poly& base, std::uint64_t s, const Poly& m);
bool is_squarefree(const Poly& f);

}  // namespace hyperquot::ff

#endif
