#include "report.hpp"

#include <functional>
#include <sstream>

#include "checks.hpp"
#include "hyperquot/quotient/quotient.hpp"
#include "hyperquot/repn/character.hpp"

namespace hyperquot::cli {

using ff::Elem;
using ff::Poly;
using group::AffineAutomorphism;
using group::AutoGroup;

namespace {

constexpr int kSchema = 1;

std::string term(const Elem& coeff, const std::string& mono)
{
    const std::string c = format_element(coeff);
    if (mono.empty()) return c;
    if (c == "1") return mono;
    if (c == "-1") return "-" + mono;
    return c + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& terms)
{
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (t.front() == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out;
}

Json elem_json(const Elem& e) { return format_element(e); }

Json poly_json(const Poly& f)
{
    Json coeffs = Json::array();
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(format_element(f.coeff(static_cast<std::size_t>(i))));
    return Json{{"text", poly_text(f)}, {"coeffs", coeffs}};
}

Json curve_json(const curve::HyperellipticCurve& C)
{
    const auto rhs = C.c().is_one() ? poly_text(C.f()) : format_element(C.c()) + "*(" + poly_text(C.f()) + ")";
    return Json{{"equation", "y^2 = " + rhs},
                {"c", elem_json(C.c())},
                {"f", poly_json(C.f())["coeffs"]},
                {"degree", C.degree()},
                {"genus", C.genus()}};
}

Json auto_json(const AffineAutomorphism& g)
{
    return Json::array({elem_json(g.alpha), elem_json(g.beta), elem_json(g.gamma)});
}

Json frob_json(const frob::FrobMorphism& phi)
{
    return Json{{"a", elem_json(phi.a)},
                {"b", elem_json(phi.b)},
                {"d", elem_json(phi.d)},
                {"q", phi.q},
                {"map", frob_text(phi)}};
}

Json charpoly_json(const frob::CharPoly& P)
{
    Json j{{"text", P.to_string()}, {"coeffs", P.coeffs}, {"euler_factor", P.euler_factor()},
           {"functional_equation", P.functional_equation}};
    if (!P.warning.empty()) j["warning"] = P.warning;
    return j;
}

Json checks_json(const CheckList& checks)
{
    Json arr = Json::array();
    for (const auto& c : checks.items) {
        Json j{{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

AutoGroup closure_or_config_error(const JobConfig& cfg, const std::vector<AffineAutomorphism>& gens, const char* key)
{
    try {
        return AutoGroup::closure(*cfg.curve, gens);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(cfg.source + ": " + key + ": " + e.what());
    }
}

AutoGroup build_group(const JobConfig& cfg) { return closure_or_config_error(cfg, cfg.generators, "group.generators"); }

const frob::FrobMorphism& require_frobenius(const JobConfig& cfg, Command cmd)
{
    if (!cfg.frobenius) {
        throw ConfigError(cfg.source + ": frobenius: missing (required by '" + command_name(cmd) + "')");
    }
    return *cfg.frobenius;
}

Json input_json(const JobConfig& cfg, const AutoGroup& G)
{
    const auto& F = *cfg.field;
    Json modulus = Json::array();
    for (auto m : F.modulus()) modulus.push_back(m);
    Json gens = Json::array(), elems = Json::array();
    for (const auto& g : cfg.generators) gens.push_back(auto_json(g));
    for (const auto& g : G.elements()) elems.push_back(auto_text(g));
    return Json{{"field", {{"name", F.name()}, {"p", F.characteristic()}, {"k", F.degree()}, {"modulus", modulus},
                           {"w", F.generator().to_string()}}},
                {"curve", curve_json(*cfg.curve)},
                {"group",
                 {{"order", G.order()},
                  {"generators", gens},
                  {"elements", elems},
                  {"abelian", G.is_abelian()},
                  {"contains_hyperelliptic_involution", G.has_kappa()}}}};
}

Json quotient_section(const AutoGroup& G)
{
    const auto Q = quotient::quotient_curve(G);
    Json j{{"case", static_cast<int>(Q.kind)},
           {"case_name", quotient::to_string(Q.kind)},
           {"I", poly_json(Q.I)},
           {"I_T", poly_json(Q.I_T)},
           {"lambda", Q.lambda ? Json(elem_json(*Q.lambda)) : Json(nullptr)},
           {"mu", Q.mu ? Json(elem_json(*Q.mu)) : Json(nullptr)},
           {"m", Q.m},
           {"orbits", Q.orbits},
           {"regular_orbits", Q.regular_orbits},
           {"sign_exponent", Q.sign_exponent},
           {"y_factor", poly_json(Q.y_factor)},
           {"genus_formula", quotient::quotient_genus(G)}};
    j["curve"] = Q.curve ? curve_json(*Q.curve) : Json(nullptr);
    return j;
}

Outcome run_quotient(const JobConfig& cfg)
{
    const auto G = build_group(cfg);
    Outcome out;
    out.report = input_json(cfg, G);
    out.report["quotient"] = quotient_section(G);
    return out;
}

Outcome run_cohomology(const JobConfig& cfg)
{
    const auto G = build_group(cfg);
    Outcome out;
    out.report = input_json(cfg, G);
    const auto chi = repn::h1_character(G);
    const auto V = repn::v_character(G);
    const bool even = cfg.curve->degree() % 2 == 0;
    Json classes = Json::array();
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
        const auto rep = G.classes()[c].front();
        Json row{{"representative", auto_text(G[rep])},
                 {"size", G.classes()[c].size()},
                 {"order", G.element_order(rep)},
                 {"h1", chi.on_class(c).to_string()},
                 {"V", V.on_class(c).to_string()}};
        if (rep != 0) row["lefschetz_fixed_count"] = group::lefschetz_fixed_count(G.curve(), G[rep]);
        classes.push_back(std::move(row));
    }
    Json h1{{"dimension", chi.at(0).to_integer()},
            {"epsilon", even ? "det V" : "0"},
            {"classes", classes},
            {"dim_invariants", repn::dim_invariants(chi, G)}};
    if (G.is_abelian()) {
        const auto parts = repn::abelian_decomposition(chi, G);
        Json comps = Json::array();
        for (const auto& p : parts) comps.push_back({{"label", p.label}, {"multiplicity", p.multiplicity}});
        h1["decomposition"] = {{"text", repn::decomposition_string(parts)}, {"components", comps}};
    } else {
        h1["decomposition"] = nullptr;
    }
    const auto rep = repn::verify_h1(G, cfg.subgroups == SubgroupScope::all);
    CheckList checks;
    checks.append(rep.checks);
    h1["verify"] = {{"ok", checks.ok()}, {"checks", checks_json(checks)}};
    out.report["h1"] = std::move(h1);
    out.ok = checks.ok();
    return out;
}

Outcome run_frobenius(const JobConfig& cfg)
{
    const auto& phi = require_frobenius(cfg, Command::frobenius);
    const auto G = build_group(cfg);
    Outcome out;
    out.report = input_json(cfg, G);
    Json j{{"phi", frob_json(phi)}};
    const bool valid = frob::validate_frob(*cfg.curve, phi);
    j["valid"] = valid;
    out.ok = valid;
    if (valid) {
        const auto norm = frob::normalizes(phi, G);
        j["normalizes_group"] = norm.ok;
        out.ok = norm.ok;
        if (norm.ok && !G.has_kappa()) {
            const auto Q = quotient::quotient_curve(G);
            const auto desc = frob::descend(phi, G, Q);
            j["quotient_curve"] = curve_json(*Q.curve);
            j["psi"] = frob_json(desc.psi);
            j["commuting_square_points"] = desc.points_checked;
        } else if (norm.ok) {
            j["psi"] = nullptr;
            j["note"] = "the quotient is the projective line";
        }
    }
    out.report["frobenius"] = std::move(j);
    return out;
}

Outcome run_zeta(const JobConfig& cfg)
{
    const auto& phi = require_frobenius(cfg, Command::zeta);
    const auto G = build_group(cfg);
    const frob::CountOptions opt{cfg.max_field_bits, false};
    Outcome out;
    out.report = input_json(cfg, G);
    if (!frob::validate_frob(*cfg.curve, phi)) {
        throw ConfigError(cfg.source + ": frobenius: " + frob_text(phi) + " is not a morphism of the curve");
    }
    Json j{{"phi", frob_json(phi)}};
    const bool split = G.order() > 1 && G.is_abelian() && !G.has_kappa() && frob::normalizes(phi, G).ok;
    if (split) {
        const auto z = frob::isotypic_split(G, phi, opt);
        j["counts"] = z.counts;
        j["charpoly"] = charpoly_json(z.full);
        j["quotient"] = {{"psi", frob_json(z.psi)},
                         {"counts", z.quotient_counts},
                         {"charpoly", charpoly_json(z.factors.front().poly)}};
        Json factors = Json::array();
        for (const auto& f : z.factors) factors.push_back({{"label", f.label}, {"charpoly", charpoly_json(f.poly)}});
        j["factors"] = factors;
    } else {
        const auto counts = frob::fixed_counts(*cfg.curve, phi, 2 * cfg.curve->genus(), opt);
        j["counts"] = counts;
        j["charpoly"] = charpoly_json(frob::charpoly_h1(*cfg.curve, phi, counts));
        j["factors"] = Json::array();
    }
    const auto inertia = cfg.inertia ? closure_or_config_error(cfg, *cfg.inertia, "group.inertia") : G;
    try {
        j["conductor_exponent"] = frob::tame_conductor_exponent(inertia);
    } catch (const std::domain_error& e) {
        j["conductor_exponent"] = nullptr;
        j["conductor_note"] = e.what();
    }
    out.report["zeta"] = std::move(j);
    return out;
}

Outcome run_verify(const JobConfig& cfg)
{
    const auto G = build_group(cfg);
    Outcome out;
    out.report = input_json(cfg, G);
    CheckList checks;
    checks.append(repn::verify_h1(G, cfg.subgroups == SubgroupScope::all).checks, "h1: ");
    checks.append(verify_quotient(G).items, "quotient: ");
    if (cfg.frobenius) {
        const frob::CountOptions opt{cfg.max_field_bits, false};
        checks.append(verify_frobenius(G, *cfg.frobenius, opt).items, "frobenius: ");
    }
    out.ok = checks.ok();
    out.report["verify"] = {{"ok", out.ok}, {"checks", checks_json(checks)}};
    return out;
}

void render(const Json& j, const std::string& indent, std::ostringstream& os)
{
    const std::function<std::string(const Json&)> scalar = [&](const Json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (!v.is_array()) return v.dump();
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
        return out + "]";
    };
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            os << indent << key << ":\n";
            render(v, indent + "  ", os);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << indent << key << ":\n";
            for (const auto& item : v) {
                os << indent << "  -\n";
                render(item, indent + "    ", os);
            }
        } else if (v.is_array()) {
            os << indent << key << ": " << scalar(v) << "\n";
        } else {
            os << indent << key << ": " << scalar(v) << "\n";
        }
    }
}

}  // namespace

std::string auto_text(const AffineAutomorphism& g)
{
    std::vector<std::string> t{term(g.alpha, "x")};
    if (!g.beta.is_zero()) t.push_back(term(g.beta, ""));
    return "(x, y) -> (" + join_terms(t) + ", " + term(g.gamma, "y") + ")";
}

std::string frob_text(const frob::FrobMorphism& phi)
{
    std::vector<std::string> t{term(phi.a, "x^" + std::to_string(phi.q))};
    if (!phi.b.is_zero()) t.push_back(term(phi.b, ""));
    return "(x, y) -> (" + join_terms(t) + ", " + term(phi.d, "y^" + std::to_string(phi.q)) + ")";
}

std::string poly_text(const Poly& f, const std::string& var)
{
    std::vector<std::string> terms;
    for (int i = f.degree(); i >= 0; --i) {
        const Elem c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        const std::string mono = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
        terms.push_back(term(c, mono));
    }
    return join_terms(terms);
}

std::optional<Command> parse_command(const std::string& name)
{
    for (auto c : {Command::quotient, Command::cohomology, Command::frobenius, Command::zeta, Command::verify}) {
        if (name == command_name(c)) return c;
    }
    return std::nullopt;
}

const char* command_name(Command c)
{
    switch (c) {
        case Command::quotient: return "quotient";
        case Command::cohomology: return "cohomology";
        case Command::frobenius: return "frobenius";
        case Command::zeta: return "zeta";
        case Command::verify: return "verify";
    }
    return "?";
}

Outcome run(Command cmd, const JobConfig& cfg)
{
    Outcome out;
    switch (cmd) {
        case Command::quotient: out = run_quotient(cfg); break;
        case Command::cohomology: out = run_cohomology(cfg); break;
        case Command::frobenius: out = run_frobenius(cfg); break;
        case Command::zeta: out = run_zeta(cfg); break;
        case Command::verify: out = run_verify(cfg); break;
    }
    Json head{{"schema", kSchema}, {"command", command_name(cmd)}, {"ok", out.ok}};
    head.update(out.report);
    out.report = std::move(head);
    return out;
}

std::string render_text(const Json& report)
{
    std::ostringstream os;
    render(report, "", os);
    return os.str();
}

}  // namespace hyperquot::cli
