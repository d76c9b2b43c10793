#include "hyperquot/ff/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hyperquot::ff {

namespace {

std::vector<Elem> distinct_roots_exhaustive(const Poly& f)
{
    const Field& E = f.field();
    std::vector<Elem> out;
    for (std::uint64_t c = 0; c < E.order(); ++c) {
        const auto code = static_cast<Field::code_t>(c);
        if (f.eval_code(code) == 0) out.emplace_back(E, code);
    }
    return out;
}

// Equal-degree splitting of a squarefree polynomial that splits into
// distinct linear factors over its own field.
void split_linear(const Poly& g, std::vector<Elem>& out)
{
    const Field& E = g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        const Poly m = g.monic();
        out.push_back(-m.coeff(0));
        return;
    }
    const std::uint64_t half = (E.order() - 1) / 2;
    for (std::uint64_t delta = 0; delta < E.order(); ++delta) {
        const Poly shift(E, std::vector<Field::code_t>{static_cast<Field::code_t>(delta), 1});
        Poly h = powmod(shift, half, g) - Poly::constant(E.one());
        Poly d = gcd(g, h);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, out);
            split_linear(g / d, out);
            return;
        }
    }
    throw std::logic_error("equal-degree splitting failed");
}

std::vector<Elem> distinct_roots_gcd(const Poly& f)
{
    const Field& E = f.field();
    const Poly x = Poly::x(E);
    // X^{|E|} mod f, |E| = p^degree
    const Poly xq = powmod_frobenius(x, E.degree(), f);
    Poly g = gcd(f, xq - x);
    std::vector<Elem> out;
    split_linear(g, out);
    return out;
}

struct EmbedCache {
    std::mutex mu;
    std::map<std::pair<const Field*, const Field*>, Field::code_t> root;
};

EmbedCache& embed_cache()
{
    static EmbedCache c;
    return c;
}

// Image of the class of X under the canonical embedding src -> target.
Elem embedding_root(const Field& src, const Field& target)
{
    auto& cache = embed_cache();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.root.find({&src, &target}); it != cache.root.end()) {
            return {target, it->second};
        }
    }
    std::vector<Field::code_t> m;
    for (auto c : src.modulus()) m.push_back(c);
    const Poly mod(target, std::move(m));
    std::vector<Elem> roots = target.order() <= kExhaustiveRootLimit ? distinct_roots_exhaustive(mod)
                                                                     : distinct_roots_gcd(mod);
    if (roots.empty()) {
        throw std::logic_error("modulus has no root in " + target.name());
    }
    const Elem r = *std::min_element(roots.begin(), roots.end());
    std::lock_guard lock(cache.mu);
    cache.root[{&src, &target}] = r.code();
    return r;
}

void require_extension(const Field& sub, const Field& E)
{
    if (sub.characteristic() != E.characteristic()) {
        throw std::invalid_argument("embedding between fields of different characteristic");
    }
    if (E.degree() % sub.degree() != 0) {
        throw std::invalid_argument(sub.name() + " is not a subfield of " + E.name());
    }
}

}  // namespace

Elem embed(const Elem& x, const Field& target)
{
    const Field& src = x.field();
    if (&src == &target) return x;
    require_extension(src, target);
    if (src.is_prime_field()) {
        return target.from_int(x.code());
    }
    const Elem theta = embedding_root(src, target);
    Elem r = target.zero();
    Elem pw = target.one();
    for (auto d : x.digits()) {
        if (d) r += target.from_int(d) * pw;
        pw *= theta;
    }
    return r;
}

std::optional<Elem> descend(const Elem& x, const Field& sub)
{
    const Field& E = x.field();
    if (&sub == &E) return x;
    require_extension(sub, E);
    if (x.frobenius(sub.degree()) != x) return std::nullopt;
    const std::uint32_t p = E.characteristic();
    const unsigned ks = sub.degree();
    const unsigned ke = E.degree();
    // Columns: digits of theta^i; augmented with digits of x.
    std::vector<std::vector<std::int64_t>> a(ke, std::vector<std::int64_t>(ks + 1, 0));
    const Elem theta = sub.is_prime_field() ? E.one() : embedding_root(sub, E);
    Elem pw = E.one();
    for (unsigned j = 0; j < ks; ++j) {
        auto d = pw.digits();
        for (unsigned i = 0; i < ke; ++i) a[i][j] = d[i];
        pw *= theta;
    }
    {
        auto d = x.digits();
        for (unsigned i = 0; i < ke; ++i) a[i][ks] = d[i];
    }
    auto modinv = [p](std::int64_t v) {
        std::int64_t r = 1, b = v % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivot_col;
    unsigned row = 0;
    for (unsigned col = 0; col < ks && row < ke; ++col) {
        unsigned sel = row;
        while (sel < ke && a[sel][col] == 0) ++sel;
        if (sel == ke) continue;
        std::swap(a[sel], a[row]);
        const std::int64_t iv = modinv(a[row][col]);
        for (auto& v : a[row]) v = v * iv % p;
        for (unsigned i = 0; i < ke; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const std::int64_t c = a[i][col];
            for (unsigned j = 0; j <= ks; ++j) a[i][j] = ((a[i][j] - c * a[row][j]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (unsigned i = row; i < ke; ++i) {
        if (a[i][ks] != 0) return std::nullopt;
    }
    std::vector<std::uint32_t> coeffs(ks, 0);
    for (unsigned i = 0; i < row; ++i) coeffs[static_cast<unsigned>(pivot_col[i])] = static_cast<std::uint32_t>(a[i][ks]);
    return Elem(sub, sub.from_digits(coeffs));
}

std::vector<Elem> roots_in(const Poly& f, const Field& E)
{
    require_extension(f.field(), E);
    if (f.is_zero()) {
        throw std::invalid_argument("roots of the zero polynomial");
    }
    const Poly fe = f.embed(E);
    if (fe.degree() <= 0) return {};
    std::vector<Elem> distinct =
        E.order() <= kExhaustiveRootLimit ? distinct_roots_exhaustive(fe) : distinct_roots_gcd(fe);
    std::sort(distinct.begin(), distinct.end());
    std::vector<Elem> out;
    for (const auto& r : distinct) {
        const Poly lin(E, std::vector<Field::code_t>{E.neg(r.code()), 1});
        Poly rest = fe;
        while (true) {
            auto [qq, rr] = Poly::divmod(rest, lin);
            if (!rr.is_zero()) break;
            out.push_back(r);
            rest = std::move(qq);
        }
    }
    return out;
}

std::vector<unsigned> factor_degrees(const Poly& f)
{
    if (f.is_zero()) {
        throw std::invalid_argument("factorisation of the zero polynomial");
    }
    const Field& F = f.field();
    std::vector<unsigned> out;
    Poly rest = f.monic();
    const Poly x = Poly::x(F);
    Poly h = x % f;
    for (unsigned d = 1; rest.degree() > 0; ++d) {
        // h = X^{q^d} mod f
        h = powmod_frobenius(h, F.degree(), f);
        while (rest.degree() > 0) {
            Poly g = gcd(rest, (h - x) % rest);
            if (g.degree() <= 0) break;
            for (int i = 0; i < g.degree() / static_cast<int>(d); ++i) out.push_back(d);
            rest = rest / g;
        }
    }
    return out;
}

unsigned splitting_degree(const Poly& f)
{
    unsigned l = 1;
    for (unsigned d : factor_degrees(f)) l = std::lcm(l, d);
    return l;
}

}  // namespace hyperquot::ff
