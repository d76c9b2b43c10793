#ifndef HYPERQUOT_FROB_FROB_HPP
#define HYPERQUOT_FROB_FROB_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperquot/quotient/quotient.hpp"

namespace hyperquot::frob {

using curve::CurvePoint;
using curve::HyperellipticCurve;
using ff::Elem;
using ff::Field;
using group::AutoGroup;
using quotient::QuotientResult;

/// X -> a X^q + b, Y -> d Y^q with a, d nonzero and q a power of p.
struct FrobMorphism {
    Elem a, b, d;
    std::uint64_t q = 0;

    /// X -> X^q, Y -> Y^q with q = |F| unless given.
    static FrobMorphism standard(const Field& F, std::uint64_t q = 0);

    /// Composition: (*this)(other(P)).
    FrobMorphism after(const FrobMorphism& other) const;
    /// The i-th iterate, i >= 1. Throws std::overflow_error if q^i exceeds 2^62.
    FrobMorphism iterate(unsigned i) const;
    /// log_p q
    unsigned q_exponent() const;

    std::string to_string() const;
};

/// d^2 (c f)^(q) (X^q) == c f(a X^q + b), i.e. d^2 (c f(X))^q = c f(a X^q + b).
/// Throws std::invalid_argument if a or d is zero, q is not a power of p, or
/// the coefficients are not in the base field of C.
bool validate_frob(const HyperellipticCurve& C, const FrobMorphism& phi);

/// Image of a point (coordinates stay in the field of P).
CurvePoint apply(const HyperellipticCurve& C, const FrobMorphism& phi, const CurvePoint& P);

struct Normalization {
    bool ok = false;
    /// witness[g] = g' with g phi = phi g' (element indices); empty unless ok.
    std::vector<std::size_t> witness;
};
Normalization normalizes(const FrobMorphism& phi, const AutoGroup& G);

struct Descent {
    FrobMorphism psi;
    /// Points of C on which push(phi P) = psi(push P) was checked.
    std::size_t points_checked = 0;
};
/// The map induced by phi on the quotient model Q of C/G. Throws
/// std::invalid_argument if G contains the hyperelliptic involution or phi
/// does not normalise G, and std::logic_error if the induced map fails to be
/// a morphism of the quotient or the commuting square fails on a test point.
Descent descend(const FrobMorphism& phi, const AutoGroup& G, const QuotientResult& Q);

struct CountOptions {
    /// Cap on enumeration, in bits: at most 2^max_field_bits fixed x are
    /// enumerated per iterate.
    unsigned max_field_bits = 24;
    /// Recount by the gcd method (Q <= 1024) and by scanning the whole
    /// extension (<= 2^20 elements) where affordable, and compare.
    bool cross_check = false;
};

enum class CountMethod { enumeration, gcd };

struct FixedCount {
    std::uint64_t total = 0;
    std::uint64_t at_infinity = 0;
    CountMethod method = CountMethod::gcd;
    bool cross_checked = false;
};

/// Number of points of C over the algebraic closure fixed by phi^i,
/// infinity included. The fixed x are the Q roots of A X^Q + B - X. They
/// form an affine F_p-subspace of an extension GF(p^k), which is solved for
/// and enumerated when GF(p^k) has at most 2^32 elements; otherwise the
/// count comes from gcds modulo A X^Q + B - X (Q <= 4096). Throws
/// std::length_error if neither fits, and std::logic_error if a
/// cross-check disagrees.
FixedCount count_fixed(const HyperellipticCurve& C, const FrobMorphism& phi, unsigned i, const CountOptions& opt = {});
/// count_fixed for i = 1..n.
std::vector<std::uint64_t> fixed_counts(const HyperellipticCurve& C, const FrobMorphism& phi, unsigned n,
                                        const CountOptions& opt = {});

/// det(1 - phi^-1 T | H^1), little-endian integer coefficients.
struct CharPoly {
    std::vector<std::int64_t> coeffs;
    std::uint64_t q = 0;
    /// c_{2g-i} = q^(g-i) c_i for all i; reported, not enforced.
    bool functional_equation = true;
    std::string warning;

    unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
    /// "1 + 5*T^2 + 15*T^4 + 27*T^6"
    std::string to_string(const std::string& var = "T") const;
    /// "1/(1+3^{1-2s})", the Euler factor 1/P(q^-s).
    std::string euler_factor() const;
    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs && a.q == b.q; }
};

/// exp(sum (a_i - 1 - q^i) T^i / i) truncated at degree 2g. counts must
/// cover i = 1..2g; any further counts are checked against the result.
/// Throws std::invalid_argument for too few counts and std::domain_error for
/// non-integral coefficients or inconsistent extra counts.
CharPoly charpoly_from_counts(unsigned genus, std::uint64_t q, std::span<const std::uint64_t> counts);
CharPoly charpoly_h1(const HyperellipticCurve& C, const FrobMorphism& phi, std::span<const std::uint64_t> counts);
CharPoly charpoly_h1(const HyperellipticCurve& C, const FrobMorphism& phi, const CountOptions& opt = {});

/// a_i = 1 + q^i - (sum of i-th powers of the inverse roots of P), i = 1..n.
std::vector<std::int64_t> counts_from_charpoly(const CharPoly& P, unsigned n);

/// Exact division over Z; throws std::domain_error if b does not divide a.
CharPoly divide_exact(const CharPoly& a, const CharPoly& b);

struct IsotypicFactor {
    std::string label;
    CharPoly poly;
};
struct ZetaData {
    std::vector<std::uint64_t> counts;
    CharPoly full;
    FrobMorphism psi;
    std::vector<std::uint64_t> quotient_counts;
    /// invariants factor first ("triv"), then the cofactor ("eta" when |G| = 2,
    /// "complement" otherwise).
    std::vector<IsotypicFactor> factors;
};
/// Charpolys of phi on C and of the descended map on C/G, and the split of
/// the former by the latter. Pre: G abelian without the hyperelliptic
/// involution, phi normalises G.
ZetaData isotypic_split(const AutoGroup& G, const FrobMorphism& phi, const CountOptions& opt = {});

/// dim H^1 - dim H^1^I for inertia group I acting on C. Throws
/// std::domain_error if p divides |I|.
std::int64_t tame_conductor_exponent(const AutoGroup& inertia);

}  // namespace hyperquot::frob

#endif
