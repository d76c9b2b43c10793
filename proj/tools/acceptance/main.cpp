// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all pass.
//
//   acceptance [--instances N] [--seed S] [--only K]

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "checks.hpp"
#include "config.hpp"
#include "report.hpp"
#include "instances.hpp"
#include "hyperquot/frob/frob.hpp"
#include "hyperquot/quotient/quotient.hpp"
#include "hyperquot/repn/character.hpp"

using namespace hyperquot;
using curve::CurvePoint;
using ff::Elem;
using ff::Field;
using ff::Poly;
using group::AffineAutomorphism;
using group::AutoGroup;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

const Field& F9() { return Field::get(3, 2); }

curve::HyperellipticCurve genus3_curve()
{
    const std::vector<std::int64_t> f{-1, 0, 0, 0, 0, 0, 0, 0, 1};
    return {F9().one(), Poly::from_ints(F9(), f)};
}

AutoGroup genus3_group() { return AutoGroup::closure(genus3_curve(), {{-F9().one(), F9().zero(), F9().one()}}); }

frob::FrobMorphism genus3_phi()
{
    return {F9().generator().pow(-1), F9().zero(), -F9().one(), 3};
}

std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

const std::vector<std::int64_t> kInvariantFactor{1, 0, 3};
const std::vector<std::int64_t> kEtaFactor{1, 0, 2, 0, 9};

void criterion1(Verdict& v)
{
    const auto Q = quotient::quotient_curve(genus3_group());
    v.expect(Q.kind == quotient::QuotientCase::trivial_gamma, "case 2");
    v.expect(Q.curve.has_value(), "quotient curve present");
    if (!Q.curve) return;
    const std::vector<std::int64_t> expected{-1, 0, 0, 0, 1};
    v.expect(Q.curve->c().is_one() && Q.curve->f() == Poly::from_ints(F9(), expected), "y^2 = x^4 - 1");
    bool prime = true;
    for (int i = 0; i <= Q.curve->f().degree(); ++i) {
        const auto c = Q.curve->f().coeff(static_cast<std::size_t>(i));
        prime = prime && c.frobenius() == c;
    }
    v.expect(prime, "coefficients in F_3");
    v.detail << " y^2 = " << cli::poly_text(Q.curve->f());
}

void criterion2(Verdict& v)
{
    const auto G = genus3_group();
    const auto chi = repn::h1_character(G);
    v.expect(chi.at(0) == repn::Cyclotomic(6), "chi(id) = 6");
    v.expect(chi.at(1) == repn::Cyclotomic(-2), "chi(g) = -2");
    const auto parts = repn::abelian_decomposition(chi, G);
    const auto text = repn::decomposition_string(parts);
    v.expect(text == "triv^2 + eta^4", "triv^2 + eta^4");
    v.expect(repn::dim_invariants(chi, G) == 2, "dim invariants = 2");
    v.detail << " chi = (" << chi.at(0).to_string() << ", " << chi.at(1).to_string() << "), " << text;
}

/// Image of a point at infinity of C on the quotient model in case 2 with
/// deg f = |G| deg f': x = I(X) ~ l X^|G|, so y/x^(n'/2) = l^(-n'/2) Y/X^(n/2).
std::optional<CurvePoint> push_infinity(const quotient::QuotientResult& Q, const CurvePoint& P)
{
    const auto& D = *Q.curve;
    const Field& E = *P.field();
    const Elem l = ff::embed(Q.I.leading(), E);
    const Elem v = P.v * l.pow(-static_cast<std::int64_t>(D.degree() / 2));
    for (const auto& R : D.infinity_points_over(E))
        if (R.v == v) return R;
    return std::nullopt;
}

void criterion3(Verdict& v)
{
    const auto G = genus3_group();
    const auto phi = genus3_phi();
    const auto Q = quotient::quotient_curve(G);
    const auto desc = frob::descend(phi, G, Q);
    const auto w = F9().generator();
    v.expect(desc.psi.a == -w.pow(2) && desc.psi.b.is_zero() && desc.psi.d == -F9().one() && desc.psi.q == 3,
             "psi = (-w^2 x^3, -y^3)");
    const auto& C = G.curve();
    const auto& D = *Q.curve;
    std::size_t checked = 0, bad = 0;
    for (const Field* E : {&F9(), &Field::get(3, 4)}) {
        for (const auto& P : C.points_over(*E)) {
            const auto image = frob::apply(C, phi, P);
            std::optional<CurvePoint> lhs, rhs;
            if (P.is_affine()) {
                lhs = quotient::push_point(Q, image);
                rhs = frob::apply(D, desc.psi, quotient::push_point(Q, P));
            } else {
                lhs = push_infinity(Q, image);
                const auto down = push_infinity(Q, P);
                if (down) rhs = frob::apply(D, desc.psi, *down);
            }
            ++checked;
            if (!lhs || !rhs || !(*lhs == *rhs)) ++bad;
        }
    }
    v.expect(bad == 0, "commuting square on C(F_9) and C(F_81)");
    v.detail << " psi " << cli::frob_text(desc.psi) << "; square on " << checked
             << " points, " << bad << " failures";
}

void criterion4(Verdict& v)
{
    const auto G = genus3_group();
    const auto phi = genus3_phi();
    const auto Q = quotient::quotient_curve(G);
    const auto desc = frob::descend(phi, G, Q);
    frob::CountOptions opt;
    opt.cross_check = true;
    const auto psi_fixed = frob::count_fixed(*Q.curve, desc.psi, 1, opt).total;
    v.expect(psi_fixed == 4, "4 fixed points of psi");
    const auto inv = frob::charpoly_h1(*Q.curve, desc.psi, opt);
    v.expect(inv.coeffs == kInvariantFactor, "1 + 3T^2");
    std::vector<std::uint64_t> counts;
    std::size_t enumerated = 0;
    for (unsigned i = 1; i <= 6; ++i) {
        const auto fc = frob::count_fixed(G.curve(), phi, i, opt);
        counts.push_back(fc.total);
        if (fc.method == frob::CountMethod::enumeration || fc.cross_checked) ++enumerated;
    }
    v.expect(counts == std::vector<std::uint64_t>{4, 20, 28, 92, 244, 692}, "(4,20,28,92,244,692)");
    const auto full = frob::charpoly_h1(G.curve(), phi, counts);
    v.expect(full.coeffs == multiply(kInvariantFactor, kEtaFactor), "(1+3T^2)(1+2T^2+9T^4)");
    v.expect(inv.euler_factor() == "1/(1+3^{1-2s})", "Euler factor 1/(1+3^{1-2s})");
    const auto cond = frob::tame_conductor_exponent(G);
    v.expect(cond == 4, "conductor exponent 4");
    v.detail << " counts (";
    for (std::size_t i = 0; i < counts.size(); ++i) v.detail << (i ? "," : "") << counts[i];
    v.detail << "), " << enumerated << "/6 confirmed by enumeration, P = " << full.to_string() << ", "
             << inv.euler_factor() << ", conductor " << cond;
}

void criterion5(Verdict& v)
{
    const auto& F3 = Field::get(3, 1);
    const std::vector<std::int64_t> f{1, 0, 0, 0, 0, 0, 0, 0, 1};
    const curve::HyperellipticCurve C(F3.one(), Poly::from_ints(F3, f));
    frob::CountOptions opt;
    opt.cross_check = true;
    const auto P = frob::charpoly_h1(C, frob::FrobMorphism::standard(F3), opt);
    v.expect(P.coeffs == multiply(kInvariantFactor, kEtaFactor), "(1+3T^2)(1+2T^2+9T^4)");
    // Independent oracle: plain point counts over F_{3^i} give the same
    // polynomial for the standard Frobenius.
    std::vector<std::uint64_t> pts;
    for (unsigned i = 1; i <= 6; ++i) pts.push_back(C.count_points(F3.extension(i)));
    v.expect(frob::charpoly_from_counts(3, 3, pts).coeffs == P.coeffs, "point-count oracle");
    v.detail << " P = " << P.to_string();
}

struct PropertyTally {
    std::size_t evaluated = 0, failed = 0;
};

void criterion6(Verdict& v, std::size_t n, std::uint64_t seed)
{
    // Property letters and the check names that witness them.
    const std::map<std::string, std::string> letter{
        {"h1: invariants", "a"},
        {"h1: lefschetz", "b"},
        {"quotient: quotient map is G-invariant", "c"},
        {"quotient: I is G-invariant", "c"},
        {"quotient: genus formula", "d"},
        {"quotient: regular orbit identity", "e"},
        {"quotient: irregular orbit identity", "e"},
        {"h1: epsilon", "f"},
        {"frobenius: quotient charpoly divides", "g"},
    };
    std::map<std::string, PropertyTally> tally;
    std::map<std::string, std::size_t> shapes;
    std::mt19937_64 rng(seed);
    std::size_t instances_failed = 0, max_group = 0, max_degree = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const auto inst = acceptance::random_instance(rng);
        ++shapes[inst.shape];
        cli::CheckList checks;
        try {
            const auto G = AutoGroup::closure(inst.curve, inst.generators);
            max_group = std::max(max_group, G.order());
            max_degree = std::max<std::size_t>(max_degree, inst.curve.degree());
            checks.append(repn::verify_h1(G).checks, "h1: ");
            checks.append(cli::verify_quotient(G).items, "quotient: ");
            checks.append(cli::verify_frobenius(G, inst.phi).items, "frobenius: ");
        } catch (const std::exception& e) {
            checks.add("exception", false, e.what());
        }
        for (const auto& c : checks.items) {
            const auto it = letter.find(c.name);
            const std::string key = it == letter.end() ? "other" : it->second;
            auto& tl = tally[key];
            if (!c.ok) {
                ++tl.failed;
                std::cerr << "  instance " << t << " (" << inst.shape << ", " << inst.curve.to_string()
                          << "): " << c.name << ": " << c.detail << "\n";
            }
            ++tl.evaluated;
        }
        if (!checks.ok()) ++instances_failed;
    }
    v.expect(n >= 50, "at least 50 instances");
    v.expect(instances_failed == 0, "all properties hold");
    for (const char* l : {"a", "b", "c", "d", "e", "f", "g"}) v.expect(tally[l].evaluated > 0, std::string("(") + l + ") exercised");
    v.detail << " " << n << " instances, max |G| " << max_group << ", max deg f " << max_degree << "; checks";
    for (const char* l : {"a", "b", "c", "d", "e", "f", "g"})
        v.detail << " (" << l << ") " << tally[l].evaluated - tally[l].failed << "/" << tally[l].evaluated;
    v.detail << "; shapes";
    for (const auto& [s, c] : shapes) v.detail << " " << s << ":" << c;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::size_t instances = 100;
    std::uint64_t seed = 20240601;
    int only = 0;
    app.add_option("--instances", instances, "Random instances for the property suite");
    app.add_option("--seed", seed, "Seed of the instance generator");
    app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 6));
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<void(Verdict&)> run;
    };
    const std::vector<Criterion> all{
        {1, "quotient of y^2 = x^8 - 1 by x -> -x", 1, criterion1},
        {2, "H1 character of the genus-3 example", 1, criterion2},
        {3, "descended Frobenius and commuting square", 10, criterion3},
        {4, "fixed-point counts, charpolys, Euler factor, conductor", 300, criterion4},
        {5, "standard Frobenius on y^2 = x^8 + 1 over F_3", 300, criterion5},
        {6, "randomised property suite", 600, [&](Verdict& v) { criterion6(v, instances, seed); }},
    };
    bool all_ok = true;
    for (const auto& c : all) {
        if (only && c.id != only) continue;
        Verdict v;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit_s) {
            v.ok = false;
            v.detail << " [over the " << c.limit_s << " s limit]";
        }
        all_ok = all_ok && v.ok;
        std::cout << "criterion " << c.id << ": " << (v.ok ? "PASS" : "FAIL") << " (" << std::fixed
                  << std::setprecision(3) << secs << " s) " << c.name << ":" << v.detail.str() << std::endl;
    }
    return all_ok ? 0 : 1;
}
