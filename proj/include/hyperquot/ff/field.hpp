#ifndef HYPERQUOT_FF_FIELD_HPP
#define HYPERQUOT_FF_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperquot::ff {

class Elem;

/// Raised for arithmetic that mixes elements of different fields.
class FieldMismatch : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Finite field F_{p^k} presented as F_p[X]/(modulus), p odd.
///
/// Elements are encoded as integers: the coefficient vector over F_p, read
/// as base-p digits little-endian by degree. This encoding is also the fixed
/// element ordering used wherever a canonical choice is needed (smallest
/// root, designated generator, default modulus).
///
/// Fields are interned: `Field::get` and `Field::with_modulus` return
/// references that stay valid for the lifetime of the process, so elements
/// may hold a plain pointer to their field and field identity is address
/// identity.
///
/// Fields with at most 2^22 elements carry discrete-log / Zech tables and
/// perform every operation by lookup. Larger fields fall back to polynomial
/// arithmetic on the digit vectors.
class Field {
  public:
    using code_t = std::uint32_t;

    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

    /// F_{p^k} with the smallest monic irreducible modulus (code order).
    static const Field& get(std::uint32_t p, unsigned k);
    /// F_p[X]/(modulus); modulus is monic, little-endian, degree >= 1.
    static const Field& with_modulus(std::uint32_t p, std::span<const std::uint32_t> modulus);
    /// The field F_{p^m} with default modulus where m = degree() * factor.
    const Field& extension(unsigned factor) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    ~Field();

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }
    std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return exp_ != nullptr; }
    bool is_prime_field() const noexcept { return k_ == 1; }
    /// True when F_{p^degree()} is a subfield of `other`.
    bool divides(const Field& other) const noexcept
    {
        return other.p_ == p_ && other.k_ % k_ == 0;
    }

    Elem zero() const;
    Elem one() const;
    Elem element(code_t code) const;
    Elem from_int(std::int64_t v) const;
    Elem from_coeffs(std::span<const std::int64_t> coeffs) const;
    /// The designated generator: smallest element of multiplicative order q-1.
    Elem generator() const;

    // Raw kernels on codes.
    code_t add(code_t a, code_t b) const;
    code_t sub(code_t a, code_t b) const { return add(a, neg(b)); }
    code_t neg(code_t a) const;
    code_t mul(code_t a, code_t b) const;
    code_t inv(code_t a) const;
    code_t pow(code_t a, std::uint64_t e) const;
    /// a^(p^s): the s-th power of the absolute Frobenius.
    code_t frobenius(code_t a, std::uint64_t s) const;
    code_t from_int_code(std::int64_t v) const;

    /// Discrete log base the designated generator; a must be nonzero.
    std::uint64_t log(code_t a) const;
    code_t exp(std::uint64_t e) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(code_t a) const;
    bool is_square(code_t a) const;
    /// A square root, the one with the smaller code, if it exists in this field.
    std::optional<code_t> sqrt(code_t a) const;

    std::vector<std::uint32_t> digits(code_t a) const;
    code_t from_digits(std::span<const std::uint32_t> digits) const;

    std::string name() const;

  private:
    Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

    code_t mul_slow(code_t a, code_t b) const;
    code_t add_slow(code_t a, code_t b) const;
    void build_tables();
    void find_generator();

    std::uint32_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> place_;  // p^i
    std::vector<std::uint64_t> order_factors_;  // prime factors of q-1
    code_t generator_ = 0;

    // log/exp/zech tables, present iff q <= kTableLimit.
    std::unique_ptr<code_t[]> exp_;   // length 2(q-1)
    std::unique_ptr<code_t[]> log_;   // length q
    std::unique_ptr<code_t[]> zech_;  // length q-1, zech[n] = log(1 + g^n) or kNone
    static constexpr code_t kNone = 0xffffffffu;

    friend class Elem;
};

/// An element of an interned finite field.
class Elem {
  public:
    using code_t = Field::code_t;

    Elem() = default;
    Elem(const Field& f, code_t code) : f_(&f), v_(code) {}

    const Field& field() const { return *f_; }
    const Field* field_ptr() const noexcept { return f_; }
    code_t code() const noexcept { return v_; }
    bool valid() const noexcept { return f_ != nullptr; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const;

    Elem operator-() const { return {*f_, f_->neg(v_)}; }
    friend Elem operator+(const Elem& a, const Elem& b)
    {
        check(a, b);
        return {*a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend Elem operator-(const Elem& a, const Elem& b)
    {
        check(a, b);
        return {*a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend Elem operator*(const Elem& a, const Elem& b)
    {
        check(a, b);
        return {*a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend Elem operator/(const Elem& a, const Elem& b)
    {
        check(a, b);
        return {*a.f_, a.f_->mul(a.v_, a.f_->inv(b.v_))};
    }
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }
    Elem& operator/=(const Elem& o) { return *this = *this / o; }

    Elem inv() const { return {*f_, f_->inv(v_)}; }
    /// Integer power; negative exponents invert.
    Elem pow(std::int64_t e) const;
    Elem pow_u(std::uint64_t e) const { return {*f_, f_->pow(v_, e)}; }
    Elem frobenius(std::uint64_t s = 1) const { return {*f_, f_->frobenius(v_, s)}; }
    std::optional<Elem> sqrt() const;
    bool is_square() const { return f_->is_square(v_); }

    friend bool operator==(const Elem& a, const Elem& b)
    {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Elem& a, const Elem& b)
    {
        check(a, b);
        return a.v_ <=> b.v_;
    }

    std::vector<std::uint32_t> digits() const { return f_->digits(v_); }
    /// "[c0,c1,...]" for extension fields, the residue for prime fields.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.to_string(); }

  private:
    static void check(const Elem& a, const Elem& b)
    {
        if (a.f_ != b.f_) {
            throw FieldMismatch("arithmetic on elements of different fields");
        }
    }

    const Field* f_ = nullptr;
    code_t v_ = 0;
};

/// Field constructor with validation: p an odd prime, k >= 1, and, if given,
/// a monic irreducible modulus of degree k (little-endian coefficients).
const Field& make_field(std::uint32_t p, unsigned k,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Primality by trial division; inputs are below 2^32.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Canonical embedding F_{p^k} -> F_{p^m} (k | m): sends the class of X to
/// the smallest root of the source modulus in the target.
Elem embed(const Elem& x, const Field& target);
/// Inverse of `embed` on its image; nullopt if x does not lie in the subfield.
std::optional<Elem> descend(const Elem& x, const Field& sub);

}  // namespace hyperquot::ff

#endif
