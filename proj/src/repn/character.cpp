#include "hyperquot/repn/character.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperquot/quotient/quotient.hpp"

namespace hyperquot::repn {

ClassFunction::ClassFunction(const AutoGroup& G, const std::function<Cyclotomic(std::size_t)>& f)
{
    class_of_.resize(G.order());
    for (std::size_t i = 0; i < G.order(); ++i) class_of_[i] = G.class_of(i);
    for (const auto& cls : G.classes()) {
        const Cyclotomic v = f(cls.front());
        for (std::size_t k = 1; k < cls.size(); ++k) {
            if (!(f(cls[k]) == v)) throw std::logic_error("function is not constant on a conjugacy class");
        }
        values_.push_back(v);
    }
}

void ClassFunction::require_compatible(const ClassFunction& o) const
{
    if (class_of_ != o.class_of_) throw std::invalid_argument("class functions on different groups");
}

ClassFunction operator+(ClassFunction a, const ClassFunction& b)
{
    a.require_compatible(b);
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
    return a;
}

ClassFunction operator-(ClassFunction a, const ClassFunction& b)
{
    a.require_compatible(b);
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] -= b.values_[i];
    return a;
}

ClassFunction operator*(ClassFunction a, const ClassFunction& b)
{
    a.require_compatible(b);
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] *= b.values_[i];
    return a;
}

ClassFunction operator*(std::int64_t s, ClassFunction a)
{
    for (auto& v : a.values_) v *= Cyclotomic(s);
    return a;
}

bool operator==(const ClassFunction& a, const ClassFunction& b)
{
    return a.class_of_ == b.class_of_ && a.values_ == b.values_;
}

ClassFunction ClassFunction::conj() const
{
    ClassFunction r = *this;
    for (auto& v : r.values_) v = v.conj();
    return r;
}

bool ClassFunction::is_rational() const
{
    for (const auto& v : values_)
        if (!v.is_rational()) return false;
    return true;
}

bool ClassFunction::is_integer_valued() const
{
    for (const auto& v : values_)
        if (!v.is_integer()) return false;
    return true;
}

ClassFunction trivial_character(const AutoGroup& G)
{
    return ClassFunction(G, [](std::size_t) { return Cyclotomic(1); });
}

ClassFunction perm_character(const AutoGroup& G, const std::vector<std::vector<std::size_t>>& perms)
{
    if (perms.size() != G.order()) throw std::invalid_argument("one permutation per group element required");
    for (std::size_t i = 0; i < G.order(); ++i)
        for (std::size_t j = 0; j < G.order(); ++j) {
            const auto& a = perms[i];
            const auto& b = perms[j];
            const auto& ab = perms[G.mul(i, j)];
            for (std::size_t x = 0; x < a.size(); ++x)
                if (b[x] >= a.size() || a[b[x]] != ab[x]) throw std::invalid_argument("permutations do not define an action");
        }
    return ClassFunction(G, [&](std::size_t i) {
        std::int64_t n = 0;
        for (std::size_t x = 0; x < perms[i].size(); ++x) n += perms[i][x] == x;
        return Cyclotomic(n);
    });
}

ClassFunction root_character(const AutoGroup& G)
{
    return ClassFunction(G, [&](std::size_t i) { return Cyclotomic(static_cast<std::int64_t>(G.fixed_roots(i))); });
}

ClassFunction infinity_character(const AutoGroup& G) { return perm_character(G, group::infinity_action(G)); }

namespace {

// zeta_d^(e u) where x = omega^(e (q-1)/d) and d is the order of the
// subgroup generated by all values.
ClassFunction lift_values(const AutoGroup& G, const std::function<ff::Elem(std::size_t)>& value, std::int64_t u)
{
    const auto& F = G.curve().base_field();
    const std::uint64_t q1 = F.order() - 1;
    if (std::gcd(static_cast<std::uint64_t>(((u % static_cast<std::int64_t>(q1)) + q1) % q1), q1) != 1) {
        throw std::invalid_argument("embedding parameter must be a unit modulo q-1");
    }
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < G.order(); ++i) d = std::lcm(d, F.element_order(value(i).code()));
    const std::uint64_t step = q1 / d;
    return ClassFunction(G, [&](std::size_t i) {
        const std::uint64_t e = F.log(value(i).code()) / step;
        return Cyclotomic::zeta(static_cast<unsigned>(std::max<std::uint64_t>(d, 1)),
                                static_cast<std::int64_t>((e * static_cast<std::uint64_t>(((u % static_cast<std::int64_t>(d)) + d) % d)) % d));
    });
}

}  // namespace

ClassFunction gamma_tilde(const AutoGroup& G, std::int64_t u)
{
    return lift_values(G, [&](std::size_t i) { return G[i].gamma; }, u);
}

ClassFunction alpha_tilde(const AutoGroup& G, std::int64_t u)
{
    return lift_values(G, [&](std::size_t i) { return G[i].alpha; }, u);
}

ClassFunction v_character(const AutoGroup& G, std::int64_t u)
{
    return gamma_tilde(G, u) * (root_character(G) - trivial_character(G));
}

ClassFunction det_v(const AutoGroup& G, std::int64_t u)
{
    const auto gt = gamma_tilde(G, u);
    const unsigned n = G.curve().degree();
    return ClassFunction(G, [&](std::size_t i) { return gt.at(i).pow(n - 1) * Cyclotomic(G.root_sign(i)); });
}

ClassFunction h1_character(const AutoGroup& G, std::int64_t u)
{
    const auto V = v_character(G, u);
    if (G.curve().degree() % 2 == 1) return V;
    return V - det_v(G, u);
}

EpsilonPair epsilon_character(const AutoGroup& G, std::int64_t u)
{
    const unsigned n = G.curve().degree();
    if (n % 2 == 1) throw std::invalid_argument("epsilon is zero for odd degree");
    const auto at = alpha_tilde(G, u);
    const auto gt = gamma_tilde(G, u);
    EpsilonPair e{det_v(G, u), ClassFunction(G, [&](std::size_t i) { return at.at(i).pow(n / 2) * gt.at(i).conj(); })};
    if (!(e.det == e.from_alpha)) throw std::logic_error("the two constructions of epsilon disagree");
    if (!(trivial_character(G) + e.det == infinity_character(G))) {
        throw std::logic_error("triv + epsilon differs from the permutation character at infinity");
    }
    return e;
}

Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi)
{
    Cyclotomic s;
    for (std::size_t i = 0; i < chi.group_order(); ++i) s += chi.at(i) * psi.at(i).conj();
    return s.scaled(Rational(1, static_cast<std::int64_t>(chi.group_order())));
}

std::int64_t dim_invariants(const ClassFunction& chi, const AutoGroup& H)
{
    Cyclotomic s;
    const auto& idx = H.parent_indices();
    if (idx.empty() && H.order() != chi.group_order()) {
        throw std::invalid_argument("subgroup without parent indices");
    }
    for (std::size_t i = 0; i < H.order(); ++i) s += chi.at(idx.empty() ? i : idx[i]);
    const Cyclotomic avg = s.scaled(Rational(1, static_cast<std::int64_t>(H.order())));
    if (!avg.is_integer()) throw std::domain_error("invariant dimension " + avg.to_string() + " is not an integer");
    return avg.to_integer();
}

std::vector<LabelledCharacter> abelian_characters(const AutoGroup& G)
{
    if (!G.is_abelian()) throw std::invalid_argument("irreducible decomposition is implemented for abelian groups only");
    const std::size_t n = G.order();
    std::size_t e = 1;
    for (std::size_t i = 0; i < n; ++i) e = std::lcm(e, G.element_order(i));
    // Characters as exponent tables: chi(g) = zeta_e^k[g]; -1 marks "not yet in H".
    std::vector<std::size_t> H{0};
    std::vector<bool> inH(n, false);
    inH[0] = true;
    std::vector<std::vector<std::int64_t>> chars{std::vector<std::int64_t>(n, -1)};
    chars[0][0] = 0;
    for (std::size_t g = 0; g < n; ++g) {
        if (inH[g]) continue;
        std::size_t r = 1, gr = g;
        while (!inH[gr]) {
            gr = G.mul(gr, g);
            ++r;
        }
        // g^j h for j < r, h in H
        std::vector<std::size_t> newH;
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& psi : chars) {
            const std::int64_t a = psi[gr];
            for (std::size_t t = 0; t < r; ++t) {
                const std::int64_t num = a + static_cast<std::int64_t>(e * t);
                if (num % static_cast<std::int64_t>(r) != 0) continue;
                const std::int64_t b = num / static_cast<std::int64_t>(r);
                std::vector<std::int64_t> chi(n, -1);
                std::size_t gj = 0;
                for (std::size_t j = 0; j < r; ++j) {
                    for (auto h : H) {
                        const std::size_t x = G.mul(gj, h);
                        chi[x] = (psi[h] + b * static_cast<std::int64_t>(j)) % static_cast<std::int64_t>(e);
                    }
                    gj = G.mul(gj, g);
                }
                next.push_back(std::move(chi));
            }
        }
        std::size_t gj = 0;
        for (std::size_t j = 0; j < r; ++j) {
            for (auto h : H) newH.push_back(G.mul(gj, h));
            gj = G.mul(gj, g);
        }
        H = std::move(newH);
        for (auto x : H) inH[x] = true;
        chars = std::move(next);
    }
    if (chars.size() != n) throw std::logic_error("character construction produced the wrong count");

    auto order_of = [&](const std::vector<std::int64_t>& k) {
        std::int64_t g = static_cast<std::int64_t>(e);
        for (auto v : k) g = std::gcd(g, v);
        return static_cast<std::int64_t>(e) / g;
    };
    std::size_t order2 = 0;
    for (const auto& k : chars) order2 += order_of(k) == 2;

    std::vector<LabelledCharacter> out;
    std::size_t counter = 0;
    for (const auto& k : chars) {
        std::string label;
        const auto o = order_of(k);
        if (o == 1) {
            label = "triv";
        } else if (o == 2 && order2 == 1) {
            label = "eta";
        } else {
            label = "chi" + std::to_string(++counter);
        }
        out.push_back({label, ClassFunction(G, [&](std::size_t i) {
                           return Cyclotomic::zeta(static_cast<unsigned>(e), k[i]);
                       })});
    }
    return out;
}

std::vector<Component> abelian_decomposition(const ClassFunction& chi, const AutoGroup& G)
{
    std::vector<Component> out;
    for (const auto& irr : abelian_characters(G)) {
        const Cyclotomic m = inner_product(chi, irr.chi);
        if (!m.is_integer()) throw std::domain_error("non-integral multiplicity " + m.to_string() + " of " + irr.label);
        if (m.to_integer() != 0) out.push_back({irr.label, m.to_integer()});
    }
    return out;
}

std::string decomposition_string(const std::vector<Component>& parts)
{
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& c : parts) {
        std::int64_t m = c.multiplicity;
        if (!first) os << (m < 0 ? " - " : " + ");
        else if (m < 0) os << "-";
        first = false;
        if (m < 0) m = -m;
        os << c.label;
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

void H1Report::add(std::string name, bool pass, std::string detail)
{
    ok = ok && pass;
    checks.push_back({std::move(name), pass, std::move(detail)});
}

H1Report verify_h1(const AutoGroup& G, bool all_subgroups)
{
    H1Report rep;
    const auto chi = h1_character(G);
    const auto& C = G.curve();
    rep.add("degree", chi.at(0) == Cyclotomic(2 * static_cast<std::int64_t>(C.genus())),
            "chi(id) = " + chi.at(0).to_string() + ", 2g = " + std::to_string(2 * C.genus()));
    for (std::size_t c = 0; c < chi.num_classes(); ++c) {
        if (!chi.on_class(c).is_integer()) {
            rep.add("integrality", false, "class " + std::to_string(c) + ": " + chi.on_class(c).to_string());
        }
    }
    if (chi.is_integer_valued()) rep.add("integrality", true, "all values are rational integers");

    bool traces_ok = true;
    for (std::size_t i = 1; i < G.order(); ++i) {
        const auto fix = group::lefschetz_fixed_count(C, G[i]);
        const bool pass = chi.at(i) == Cyclotomic(2 - fix);
        if (!pass) {
            traces_ok = false;
            rep.add("lefschetz", false,
                    G[i].to_string() + ": chi = " + chi.at(i).to_string() + ", 2 - #Fix = " + std::to_string(2 - fix));
        }
    }
    if (traces_ok) rep.add("lefschetz", true, "chi(g) = 2 - #Fix(g) checked for " + std::to_string(G.order() - 1) + " elements");

    const auto subs = all_subgroups ? G.all_subgroups() : G.cyclic_subgroups();
    for (const auto& H : subs) {
        std::ostringstream name;
        name << "subgroup of order " << H.order() << " [";
        for (std::size_t i = 0; i < H.order(); ++i) name << (i ? "," : "") << H.parent_indices()[i];
        name << "]";
        try {
            const auto d = dim_invariants(chi, H);
            const auto g2 = 2 * static_cast<std::int64_t>(quotient::quotient_genus(H));
            rep.add("invariants", d == g2, name.str() + ": dim = " + std::to_string(d) + ", 2 genus = " + std::to_string(g2));
        } catch (const std::exception& ex) {
            rep.add("invariants", false, name.str() + ": " + ex.what());
        }
    }
    if (C.degree() % 2 == 0) {
        try {
            epsilon_character(G);
            rep.add("epsilon", true, "det V equals alpha~^(n/2) gamma~^-1 and matches the action at infinity");
        } catch (const std::exception& ex) {
            rep.add("epsilon", false, ex.what());
        }
    }
    return rep;
}

}  // namespace hyperquot::repn
