#include "hyperquot/frob/frob.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperquot/frob/power_series.hpp"
#include "hyperquot/repn/character.hpp"

namespace hyperquot::frob {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using ff::Poly;

namespace {

// Above this degree of A X^Q + B - X the gcd method is not attempted.
constexpr std::uint64_t kGcdMaxDegree = 4096;
// Cross-checks enumerate at most this many elements.
constexpr std::uint64_t kCrossCheckLimit = std::uint64_t{1} << 20;
// Commuting squares are checked over extensions up to this size.
constexpr std::uint64_t kSquareFieldLimit = std::uint64_t{1} << 14;

unsigned log_p(std::uint64_t q, std::uint32_t p)
{
    if (q < p) throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of " + std::to_string(p));
    unsigned s = 0;
    while (q > 1) {
        if (q % p != 0) throw std::invalid_argument("q is not a power of the characteristic " + std::to_string(p));
        q /= p;
        ++s;
    }
    return s;
}

Elem to_field(const Elem& x, const Field& F, const char* what)
{
    if (!x.valid()) throw std::invalid_argument(std::string("missing coefficient ") + what);
    if (x.field_ptr() == &F) return x;
    if (auto y = ff::descend(x, F)) return *y;
    throw std::invalid_argument(std::string("coefficient ") + what + " is not in " + F.name());
}

// Inverse of x -> x^(p^s) on F.
Elem qth_root(const Elem& x, unsigned s)
{
    const unsigned k = x.field().degree();
    return x.frobenius((k - s % k) % k);
}

std::uint64_t checked_pow(std::uint64_t q, unsigned i)
{
    std::uint64_t r = 1;
    for (unsigned j = 0; j < i; ++j) {
        if (r > (std::uint64_t{1} << 62) / q) throw std::overflow_error("q^i exceeds 2^62");
        r *= q;
    }
    return r;
}

struct Affine {
    Elem A, B;
};

// The x-part of the iterate: x -> A x^Q + B with Q = p^s.
Affine compose_x(const Affine& outer, const Affine& inner, unsigned s)
{
    return {outer.A * inner.A.frobenius(s), outer.A * inner.B.frobenius(s) + outer.B};
}

std::uint64_t infinity_fixed(const HyperellipticCurve& C, const FrobMorphism& it)
{
    const unsigned n = C.degree();
    if (n % 2 == 1) return 1;
    // v -> D v^Q / A^(n/2) on v^2 = c: both points fixed or neither.
    const Elem lhs = it.d * C.c().pow_u((it.q - 1) / 2);
    return lhs == it.a.pow_u(n / 2) ? 2 : 0;
}

// Over each fixed x, y^2 = w gives 1 fixed point if w = 0 and 2 if
// D w^((Q-1)/2) = 1.
std::uint64_t points_over_x(const Elem& w, const Elem& D, std::uint64_t half)
{
    if (w.is_zero()) return 1;
    return (D * w.pow_u(half)).is_one() ? 2 : 0;
}

// Every element of E tested against x = A x^Q + B.
std::uint64_t affine_by_scan(const HyperellipticCurve& C, const FrobMorphism& it, const Field& E)
{
    const unsigned s = it.q_exponent();
    const Elem A = ff::embed(it.a, E), B = ff::embed(it.b, E), D = ff::embed(it.d, E);
    const Poly g = C.rhs().embed(E);
    const std::uint64_t half = (it.q - 1) / 2;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < E.order(); ++code) {
        const Elem x = E.element(static_cast<Field::code_t>(code));
        if (A * x.frobenius(s) + B != x) continue;
        count += points_over_x(g(x), D, half);
    }
    return count;
}

// x -> A x^Q - x is F_p-linear on E, so the fixed x form an affine subspace:
// solve for it by elimination over F_p and enumerate its points.
std::uint64_t affine_by_subspace(const HyperellipticCurve& C, const FrobMorphism& it, const Field& E)
{
    const unsigned s = it.q_exponent();
    const std::uint32_t p = E.characteristic();
    const unsigned K = E.degree();
    const Elem A = ff::embed(it.a, E), B = ff::embed(it.b, E), D = ff::embed(it.d, E);
    const Poly g = C.rhs().embed(E);
    const std::uint64_t half = (it.q - 1) / 2;

    // Augmented K x (K+1) system M t = -B over F_p, columns = images of the power basis.
    std::vector<std::vector<std::int64_t>> M(K, std::vector<std::int64_t>(K + 1, 0));
    Elem basis = E.one();
    const Elem X = E.element(static_cast<Field::code_t>(K > 1 ? p : 0));
    for (unsigned j = 0; j < K; ++j) {
        const auto col = (A * basis.frobenius(s) - basis).digits();
        for (unsigned r = 0; r < K; ++r) M[r][j] = col[r];
        if (K > 1) basis *= X;
    }
    const auto rhs = (-B).digits();
    for (unsigned r = 0; r < K; ++r) M[r][K] = rhs[r];

    const auto inv_mod = [p](std::int64_t a) {
        std::int64_t r = 1, b = a, e = p - 2;
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    std::vector<int> pivot_col;
    unsigned row = 0;
    for (unsigned c = 0; c < K && row < K; ++c) {
        unsigned piv = row;
        while (piv < K && M[piv][c] == 0) ++piv;
        if (piv == K) continue;
        std::swap(M[piv], M[row]);
        const auto inv = inv_mod(M[row][c]);
        for (auto& v : M[row]) v = v * inv % p;
        for (unsigned r = 0; r < K; ++r) {
            if (r == row || M[r][c] == 0) continue;
            const auto f = M[r][c];
            for (unsigned k = 0; k <= K; ++k) M[r][k] = ((M[r][k] - f * M[row][k]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    for (unsigned r = row; r < K; ++r)
        if (M[r][K] != 0) return 0;  // no fixed x at all

    const auto to_elem = [&](const std::vector<std::uint32_t>& t) { return E.element(E.from_digits(t)); };
    std::vector<std::uint32_t> t0(K, 0);
    for (unsigned r = 0; r < row; ++r) t0[static_cast<unsigned>(pivot_col[r])] = static_cast<std::uint32_t>(M[r][K]);
    std::vector<Elem> kernel;
    std::vector<bool> is_pivot(K, false);
    for (int c : pivot_col) is_pivot[static_cast<unsigned>(c)] = true;
    for (unsigned fc = 0; fc < K; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<std::uint32_t> t(K, 0);
        t[fc] = 1;
        for (unsigned r = 0; r < row; ++r)
            t[static_cast<unsigned>(pivot_col[r])] = static_cast<std::uint32_t>((p - M[r][fc]) % p);
        kernel.push_back(to_elem(t));
    }

    // Odometer over the kernel coordinates; a digit wrapping from p-1 to 0
    // is one more addition of its vector since p v = 0.
    Elem x = to_elem(t0);
    std::vector<std::uint32_t> digit(kernel.size(), 0);
    std::uint64_t count = 0;
    for (;;) {
        count += points_over_x(g(x), D, half);
        std::size_t i = 0;
        for (; i < kernel.size(); ++i) {
            x += kernel[i];
            if (++digit[i] < p) break;
            digit[i] = 0;
        }
        if (i == kernel.size()) break;
    }
    return count;
}

std::uint64_t affine_by_gcd(const HyperellipticCurve& C, const FrobMorphism& it)
{
    const Field& F = C.base_field();
    // Fixed x are the (simple) roots of P; over each, y^2 = w is fixed iff
    // D w^((Q-1)/2) = 1.
    const Poly P = Poly::monomial(it.a, static_cast<std::size_t>(it.q)) + Poly::constant(it.b) - Poly::x(F);
    const Poly g1 = gcd(P, C.f());
    const Poly H = it.d * powmod(C.rhs() % P, (it.q - 1) / 2, P) - Poly::constant(F.one());
    const Poly g2 = gcd(P, H);
    return static_cast<std::uint64_t>(g1.degree()) + 2 * static_cast<std::uint64_t>(g2.degree());
}

std::string int_term(std::int64_t c, std::size_t k, const std::string& var)
{
    std::string s;
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) s += std::to_string(a);
    if (k > 0) {
        if (a != 1) s += "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

}  // namespace

FrobMorphism FrobMorphism::standard(const Field& F, std::uint64_t q)
{
    return {F.one(), F.zero(), F.one(), q ? q : F.order()};
}

unsigned FrobMorphism::q_exponent() const { return log_p(q, a.field().characteristic()); }

FrobMorphism FrobMorphism::after(const FrobMorphism& other) const
{
    const unsigned s = q_exponent();
    if (q > 0 && other.q > (std::uint64_t{1} << 62) / q) throw std::overflow_error("composite q exceeds 2^62");
    return {a * other.a.frobenius(s), a * other.b.frobenius(s) + b, d * other.d.frobenius(s), q * other.q};
}

FrobMorphism FrobMorphism::iterate(unsigned i) const
{
    if (i == 0) throw std::invalid_argument("iterate index must be positive");
    checked_pow(q, i);
    FrobMorphism r = *this;
    for (unsigned j = 1; j < i; ++j) r = after(r);
    return r;
}

std::string FrobMorphism::to_string() const
{
    std::ostringstream os;
    os << "(x, y) -> (" << a << "*x^" << q << " + " << b << ", " << d << "*y^" << q << ")";
    return os.str();
}

bool validate_frob(const HyperellipticCurve& C, const FrobMorphism& phi)
{
    const Field& F = C.base_field();
    const Elem a = to_field(phi.a, F, "a"), b = to_field(phi.b, F, "b"), d = to_field(phi.d, F, "d");
    if (a.is_zero() || d.is_zero()) throw std::invalid_argument("a and d must be nonzero");
    const unsigned s = log_p(phi.q, F.characteristic());
    // With Z = X^q: d^2 (c f)^(q)(Z) = c f(a Z + b).
    const Poly lhs = (d * d) * C.rhs().frobenius_coeffs(s);
    const Poly rhs = C.c() * C.f().compose_linear(a, b);
    return lhs == rhs;
}

CurvePoint apply(const HyperellipticCurve& C, const FrobMorphism& phi, const CurvePoint& P)
{
    const unsigned s = phi.q_exponent();
    if (P.is_affine()) {
        const Field& E = P.x.field();
        return CurvePoint::affine(ff::embed(phi.a, E) * P.x.frobenius(s) + ff::embed(phi.b, E),
                                  ff::embed(phi.d, E) * P.y.frobenius(s));
    }
    if (C.degree() % 2 == 1) return P;
    const Field& E = P.v.field();
    const Elem v = ff::embed(phi.d, E) * P.v.frobenius(s) / ff::embed(phi.a, E).pow_u(C.degree() / 2);
    for (const auto& R : C.infinity_points_over(E))
        if (R.v == v) return R;
    throw std::logic_error("image of a point at infinity is off the curve");
}

Normalization normalizes(const FrobMorphism& phi, const AutoGroup& G)
{
    const unsigned s = phi.q_exponent();
    Normalization out;
    out.witness.reserve(G.order());
    for (std::size_t i = 0; i < G.order(); ++i) {
        const auto& g = G[i];
        // g phi = phi g': alpha'^q = alpha, a beta'^q + b = alpha b + beta, gamma'^q = gamma.
        const group::AffineAutomorphism h{qth_root(g.alpha, s), qth_root((g.alpha * phi.b + g.beta - phi.b) / phi.a, s),
                                          qth_root(g.gamma, s)};
        const auto j = G.index_of(h);
        if (!j) return {};
        out.witness.push_back(*j);
    }
    out.ok = true;
    return out;
}

Descent descend(const FrobMorphism& phi, const AutoGroup& G, const QuotientResult& Q)
{
    if (G.has_kappa() || !Q.curve) throw std::invalid_argument("G contains the hyperelliptic involution");
    if (!normalizes(phi, G).ok) throw std::invalid_argument("the morphism does not normalise G");
    const auto& C = G.curve();
    const auto order = static_cast<std::int64_t>(G.order());
    Descent out;
    out.psi.q = phi.q;
    out.psi.a = phi.a.pow(order);
    out.psi.b = Q.I(phi.b);
    out.psi.d = phi.d;
    if (Q.kind == quotient::QuotientCase::nontrivial_gamma) {
        const auto m = static_cast<std::int64_t>(Q.m);
        out.psi.d = phi.a.pow((m / 2) * (order / m)) * phi.d;
    }
    const auto& D = *Q.curve;
    if (!validate_frob(D, out.psi)) throw std::logic_error("descended map " + out.psi.to_string() + " is not a morphism");
    const Field& F = C.base_field();
    std::uint64_t size = 1;
    for (unsigned k = 1; k <= 4; ++k) {
        size *= F.order();
        if (size > kSquareFieldLimit && k > 1) break;
        const Field& E = F.extension(k);
        for (const auto& P : C.points_over(E)) {
            if (!P.is_affine()) continue;
            const auto lhs = quotient::push_point(Q, apply(C, phi, P));
            const auto rhs = apply(D, out.psi, quotient::push_point(Q, P));
            if (!(lhs == rhs)) {
                throw std::logic_error("commuting square fails at " + P.to_string() + ": " + lhs.to_string() +
                                       " vs " + rhs.to_string());
            }
            ++out.points_checked;
        }
    }
    return out;
}

FixedCount count_fixed(const HyperellipticCurve& C, const FrobMorphism& phi, unsigned i, const CountOptions& opt)
{
    const Field& F = C.base_field();
    const FrobMorphism it = phi.iterate(i);
    const unsigned s = it.q_exponent();
    FixedCount out;
    out.at_infinity = infinity_fixed(C, it);

    // Smallest j with (x -> A x^Q + B)^j = x -> x^(Q^j): the fixed x then
    // lie in GF(Q^j), so in the extension of F of degree lcm(e_F, s j).
    // Past 64 bits of extension degree enumeration is hopeless anyway.
    const Affine sigma{it.a, it.b};
    Affine cur = sigma;
    std::uint64_t j = 1;
    while (!(cur.A.is_one() && cur.B.is_zero()) && s * (j + 1) <= 64) {
        cur = compose_x(sigma, cur, s);
        ++j;
    }
    const bool periodic = cur.A.is_one() && cur.B.is_zero();
    const std::uint64_t k = periodic ? std::lcm<std::uint64_t>(F.degree(), s * j) : 0;
    // The fixed x are the Q roots of A X^Q + B - X, all in GF(p^k): an
    // enumeration needs that field representable and Q under the cap.
    const bool representable =
        periodic && static_cast<double>(k) * std::log2(static_cast<double>(F.characteristic())) <= 32.0;
    const bool enum_ok = representable && it.q <= (std::uint64_t{1} << opt.max_field_bits);
    const bool gcd_ok = it.q <= kGcdMaxDegree;
    if (!enum_ok && !gcd_ok) {
        throw std::length_error("fixed points of the iterate " + std::to_string(i) + " need an extension of degree " +
                                (periodic ? std::to_string(k) : std::string("> 64")) + " or degree " +
                                std::to_string(it.q) + " gcds; both exceed the limits");
    }
    const auto ext = [&]() -> const Field& { return F.extension(static_cast<unsigned>(k / F.degree())); };
    const auto disagree = [](const char* a, std::uint64_t x, const char* b, std::uint64_t y) {
        return std::logic_error(std::string("fixed-point counts disagree: ") + a + " " + std::to_string(x) + ", " +
                                b + " " + std::to_string(y));
    };
    std::uint64_t affine = 0;
    if (enum_ok) {
        const Field& E = ext();
        affine = affine_by_subspace(C, it, E);
        out.method = CountMethod::enumeration;
        if (opt.cross_check && it.q <= 1024) {
            if (const auto other = affine_by_gcd(C, it); other != affine) throw disagree("enumeration", affine, "gcd", other);
            out.cross_checked = true;
        }
        if (opt.cross_check && E.order() <= kCrossCheckLimit) {
            if (const auto other = affine_by_scan(C, it, E); other != affine) throw disagree("enumeration", affine, "scan", other);
            out.cross_checked = true;
        }
    } else {
        affine = affine_by_gcd(C, it);
        out.method = CountMethod::gcd;
    }
    out.total = affine + out.at_infinity;
    return out;
}

std::vector<std::uint64_t> fixed_counts(const HyperellipticCurve& C, const FrobMorphism& phi, unsigned n,
                                        const CountOptions& opt)
{
    std::vector<std::uint64_t> out;
    for (unsigned i = 1; i <= n; ++i) out.push_back(count_fixed(C, phi, i, opt).total);
    return out;
}

CharPoly charpoly_from_counts(unsigned genus, std::uint64_t q, std::span<const std::uint64_t> counts)
{
    const std::size_t n = 2 * static_cast<std::size_t>(genus);
    if (counts.size() < n) {
        throw std::invalid_argument("need " + std::to_string(n) + " fixed-point counts, got " +
                                    std::to_string(counts.size()));
    }
    std::vector<BigRational> L(n + 1, BigRational(0));
    BigInt qi = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        qi *= q;
        L[i] = BigRational(BigInt(counts[i - 1]) - 1 - qi) / BigRational(static_cast<long long>(i));
    }
    const auto E = series_exp(L, n + 1);
    CharPoly P;
    P.q = q;
    for (const auto& c : E) {
        if (denominator(c) != 1) {
            throw std::domain_error("non-integral coefficient " + c.str() + " in the characteristic polynomial");
        }
        const BigInt v = numerator(c);
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
            throw std::overflow_error("characteristic polynomial coefficient exceeds 64 bits");
        }
        P.coeffs.push_back(v.convert_to<std::int64_t>());
    }
    if (counts.size() > n) {
        const auto back = counts_from_charpoly(P, static_cast<unsigned>(counts.size()));
        for (std::size_t i = n; i < counts.size(); ++i) {
            if (back[i] != static_cast<std::int64_t>(counts[i])) {
                throw std::domain_error("count a_" + std::to_string(i + 1) + " = " + std::to_string(counts[i]) +
                                        " disagrees with the characteristic polynomial (" + std::to_string(back[i]) +
                                        ")");
            }
        }
    }
    // c_{2g-i} = q^(g-i) c_i
    BigInt qp = 1;
    for (std::size_t i = genus + 1; i-- > 0;) {
        if (BigInt(P.coeffs[n - i]) != qp * P.coeffs[i]) {
            P.functional_equation = false;
            P.warning = "functional equation c_" + std::to_string(n - i) + " = q^" + std::to_string(genus - i) +
                        " c_" + std::to_string(i) + " fails";
        }
        if (i > 0) qp *= q;
    }
    return P;
}

CharPoly charpoly_h1(const HyperellipticCurve& C, const FrobMorphism& phi, std::span<const std::uint64_t> counts)
{
    return charpoly_from_counts(C.genus(), phi.q, counts);
}

CharPoly charpoly_h1(const HyperellipticCurve& C, const FrobMorphism& phi, const CountOptions& opt)
{
    const auto counts = fixed_counts(C, phi, 2 * C.genus(), opt);
    return charpoly_h1(C, phi, counts);
}

std::vector<std::int64_t> counts_from_charpoly(const CharPoly& P, unsigned n)
{
    std::vector<BigRational> p;
    for (auto c : P.coeffs) p.emplace_back(c);
    const auto l = series_log(p, n + 1);
    std::vector<std::int64_t> out;
    BigInt qi = 1;
    for (unsigned i = 1; i <= n; ++i) {
        qi *= P.q;
        const BigRational a = BigRational(1 + qi) + BigRational(static_cast<long long>(i)) * l[i];
        if (denominator(a) != 1) throw std::domain_error("non-integral count from a characteristic polynomial");
        out.push_back(numerator(a).convert_to<std::int64_t>());
    }
    return out;
}

CharPoly divide_exact(const CharPoly& a, const CharPoly& b)
{
    if (b.coeffs.empty() || (b.coeffs[0] != 1 && b.coeffs[0] != -1)) {
        throw std::invalid_argument("divisor must have constant term +-1");
    }
    if (a.coeffs.size() < b.coeffs.size()) throw std::domain_error("divisor has larger degree");
    std::vector<BigInt> r(a.coeffs.begin(), a.coeffs.end());
    const std::size_t nq = a.coeffs.size() - b.coeffs.size() + 1;
    CharPoly out;
    out.q = a.q;
    for (std::size_t k = 0; k < nq; ++k) {
        const BigInt c = r[k] * b.coeffs[0];
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[k + j] -= c * b.coeffs[j];
        out.coeffs.push_back(c.convert_to<std::int64_t>());
    }
    for (const auto& x : r)
        if (x != 0) throw std::domain_error(b.to_string() + " does not divide " + a.to_string());
    return out;
}

std::string CharPoly::to_string(const std::string& var) const
{
    std::string s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const auto c = coeffs[k];
        if (c == 0) continue;
        if (s.empty()) {
            s = (c < 0 ? "-" : "") + int_term(c, k, var);
        } else {
            s += (c < 0 ? " - " : " + ") + int_term(c, k, var);
        }
    }
    return s.empty() ? "0" : s;
}

std::string CharPoly::euler_factor() const
{
    if (degree() == 0) return "1";
    const std::string base = std::to_string(q);
    std::string s = "1";
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        std::int64_t c = coeffs[k];
        if (c == 0) continue;
        s += c < 0 ? "-" : "+";
        std::uint64_t u = static_cast<std::uint64_t>(c < 0 ? -c : c);
        unsigned e = 0;
        while (q > 1 && u % q == 0) {
            u /= q;
            ++e;
        }
        if (u != 1) s += std::to_string(u) + "*";
        s += base + "^{";
        if (e) s += std::to_string(e);
        s += "-" + (k == 1 ? std::string() : std::to_string(k)) + "s}";
    }
    return "1/(" + s + ")";
}

ZetaData isotypic_split(const AutoGroup& G, const FrobMorphism& phi, const CountOptions& opt)
{
    if (!G.is_abelian()) throw std::invalid_argument("isotypic split needs an abelian group");
    const auto Q = quotient::quotient_curve(G);
    const auto desc = descend(phi, G, Q);
    const auto& C = G.curve();
    const auto& D = *Q.curve;
    ZetaData z;
    z.psi = desc.psi;
    z.counts = fixed_counts(C, phi, 2 * C.genus(), opt);
    z.full = charpoly_h1(C, phi, z.counts);
    z.quotient_counts = fixed_counts(D, desc.psi, 2 * D.genus(), opt);
    const CharPoly inv = charpoly_h1(D, desc.psi, z.quotient_counts);
    const CharPoly cof = divide_exact(z.full, inv);
    z.factors.push_back({"triv", inv});
    z.factors.push_back({G.order() == 2 ? "eta" : "complement", cof});
    return z;
}

std::int64_t tame_conductor_exponent(const AutoGroup& inertia)
{
    const auto p = inertia.curve().base_field().characteristic();
    if (inertia.order() % p == 0) throw std::domain_error("wild inertia: p divides |I|");
    const auto chi = repn::h1_character(inertia);
    return chi.at(0).to_integer() - repn::dim_invariants(chi, inertia);
}

}  // namespace hyperquot::frob
