#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace hyperquot::cli {

using ff::Elem;
using ff::Field;

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& s)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("'" + s + "' is not an integer");
    return v;
}

class Reader {
  public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& n, const std::string& path, const std::string& msg) const
    {
        std::ostringstream os;
        os << source_;
        if (n.IsDefined() && n.Mark().line >= 0) os << ":" << n.Mark().line + 1;
        os << ": " << path << ": " << msg;
        throw ConfigError(os.str());
    }

    const YAML::Node require(const YAML::Node& parent, const std::string& key, const std::string& path) const
    {
        const YAML::Node n = parent[key];
        if (!n.IsDefined() || n.IsNull()) fail(parent, path + key, "missing");
        return n;
    }

    std::int64_t integer(const YAML::Node& n, const std::string& path) const
    {
        if (!n.IsScalar()) fail(n, path, "expected an integer");
        try {
            return parse_int(trim(n.Scalar()));
        } catch (const std::invalid_argument& e) {
            fail(n, path, e.what());
        }
    }

    Elem element(const YAML::Node& n, const Field& F, const std::string& path) const
    {
        try {
            if (n.IsSequence()) {
                std::vector<std::int64_t> c;
                for (std::size_t i = 0; i < n.size(); ++i) c.push_back(integer(n[i], path + "[" + std::to_string(i) + "]"));
                return F.from_coeffs(c);
            }
            if (!n.IsScalar()) fail(n, path, "expected a field element");
            return parse_element(n.Scalar(), F);
        } catch (const std::invalid_argument& e) {
            fail(n, path, e.what());
        }
    }

    std::vector<Elem> elements(const YAML::Node& n, const Field& F, const std::string& path) const
    {
        if (!n.IsSequence()) fail(n, path, "expected a list");
        std::vector<Elem> out;
        for (std::size_t i = 0; i < n.size(); ++i) out.push_back(element(n[i], F, path + "[" + std::to_string(i) + "]"));
        return out;
    }

    group::AffineAutomorphism automorphism(const YAML::Node& n, const Field& F, const std::string& path) const
    {
        if (n.IsSequence()) {
            if (n.size() != 3) fail(n, path, "expected [alpha, beta, gamma]");
            return {element(n[0], F, path + "[0]"), element(n[1], F, path + "[1]"), element(n[2], F, path + "[2]")};
        }
        if (n.IsMap()) {
            return {element(require(n, "alpha", path + "."), F, path + ".alpha"),
                    element(require(n, "beta", path + "."), F, path + ".beta"),
                    element(require(n, "gamma", path + "."), F, path + ".gamma")};
        }
        fail(n, path, "expected [alpha, beta, gamma] or a map with alpha, beta, gamma");
    }

    std::vector<group::AffineAutomorphism> automorphisms(const YAML::Node& n, const Field& F,
                                                         const std::string& path) const
    {
        std::vector<group::AffineAutomorphism> out;
        if (!n.IsDefined() || n.IsNull()) return out;
        if (!n.IsSequence()) fail(n, path, "expected a list of generators");
        for (std::size_t i = 0; i < n.size(); ++i)
            out.push_back(automorphism(n[i], F, path + "[" + std::to_string(i) + "]"));
        return out;
    }

  private:
    std::string source_;
};

}  // namespace

Elem parse_element(const std::string& text, const Field& F)
{
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty field element");
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated coefficient list '" + s + "'");
        std::vector<std::int64_t> c;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) c.push_back(parse_int(trim(item)));
        return F.from_coeffs(c);
    }
    bool negate = false;
    if (s.front() == '-' && s.find('w') != std::string::npos) {
        negate = true;
        s = trim(s.substr(1));
    }
    const auto wpos = s.find('w');
    if (wpos == std::string::npos) return F.from_int(parse_int(s));
    Elem scale = F.one();
    if (wpos > 0) {
        const std::string head = trim(s.substr(0, wpos));
        if (head.empty() || head.back() != '*') throw std::invalid_argument("cannot parse '" + text + "'");
        scale = F.from_int(parse_int(trim(head.substr(0, head.size() - 1))));
    }
    std::string tail = trim(s.substr(wpos + 1));
    std::int64_t k = 1;
    if (!tail.empty()) {
        if (tail.front() != '^') throw std::invalid_argument("cannot parse '" + text + "'");
        k = parse_int(trim(tail.substr(1)));
    }
    Elem e = scale * F.generator().pow(k);
    return negate ? -e : e;
}

std::string format_element(const Elem& e)
{
    const Field& F = e.field();
    const std::uint32_t p = F.characteristic();
    if (e.pow(p) == e) {
        const std::int64_t v = F.digits(e.code())[0];
        return std::to_string(2 * v > static_cast<std::int64_t>(p) ? v - static_cast<std::int64_t>(p) : v);
    }
    if (!F.has_tables() && F.order() > (std::uint64_t{1} << 26)) return e.to_string();
    const std::uint64_t half = (F.order() - 1) / 2;
    auto k = F.log(e.code());
    const bool neg = k >= half;
    if (neg) k -= half;
    return std::string(neg ? "-" : "") + (k == 1 ? "w" : "w^" + std::to_string(k));
}

JobConfig parse_config(const std::string& text, const std::string& source)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    const Reader r(source);
    if (!root.IsMap()) r.fail(root, "<root>", "expected a mapping with field, curve, group");
    JobConfig cfg;
    cfg.source = source;

    const auto field = r.require(root, "field", "");
    const auto p = r.integer(r.require(field, "p", "field."), "field.p");
    const auto k = field["k"].IsDefined() ? r.integer(field["k"], "field.k") : 1;
    if (p < 3 || p > 65535 || !ff::is_prime(static_cast<std::uint64_t>(p))) r.fail(field["p"], "field.p", "expected an odd prime");
    if (k < 1 || k > 32) r.fail(field["k"], "field.k", "expected a degree between 1 and 32");
    try {
        if (field["modulus"].IsDefined()) {
            const auto m = field["modulus"];
            if (!m.IsSequence()) r.fail(m, "field.modulus", "expected a coefficient list, constant term first");
            std::vector<std::uint32_t> mod;
            for (std::size_t i = 0; i < m.size(); ++i) {
                const auto c = r.integer(m[i], "field.modulus[" + std::to_string(i) + "]");
                mod.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
            }
            if (mod.size() != static_cast<std::size_t>(k) + 1) {
                r.fail(m, "field.modulus", "expected " + std::to_string(k + 1) + " coefficients");
            }
            cfg.field = &Field::with_modulus(static_cast<std::uint32_t>(p), mod);
        } else {
            cfg.field = &Field::get(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
        }
    } catch (const std::invalid_argument& e) {
        r.fail(field, "field", e.what());
    }
    const Field& F = *cfg.field;

    const auto curve = r.require(root, "curve", "");
    const Elem c = curve["c"].IsDefined() ? r.element(curve["c"], F, "curve.c") : F.one();
    const auto fc = r.elements(r.require(curve, "f", "curve."), F, "curve.f");
    try {
        cfg.curve.emplace(c, ff::Poly(F, fc));
    } catch (const std::exception& e) {
        r.fail(curve, "curve", e.what());
    }

    if (const auto g = root["group"]; g.IsDefined() && !g.IsNull()) {
        cfg.generators = r.automorphisms(g["generators"], F, "group.generators");
        if (g["inertia"].IsDefined()) cfg.inertia = r.automorphisms(g["inertia"], F, "group.inertia");
    }

    if (const auto fr = root["frobenius"]; fr.IsDefined() && !fr.IsNull()) {
        frob::FrobMorphism phi;
        phi.a = fr["a"].IsDefined() ? r.element(fr["a"], F, "frobenius.a") : F.one();
        phi.b = fr["b"].IsDefined() ? r.element(fr["b"], F, "frobenius.b") : F.zero();
        phi.d = fr["d"].IsDefined() ? r.element(fr["d"], F, "frobenius.d") : F.one();
        const auto q = fr["q"].IsDefined() ? r.integer(fr["q"], "frobenius.q") : static_cast<std::int64_t>(F.order());
        if (q < 3) r.fail(fr["q"], "frobenius.q", "expected a power of the characteristic");
        phi.q = static_cast<std::uint64_t>(q);
        try {
            phi.q_exponent();
        } catch (const std::invalid_argument& e) {
            r.fail(fr["q"], "frobenius.q", e.what());
        }
        cfg.frobenius = phi;
    }

    if (const auto o = root["options"]; o.IsDefined() && !o.IsNull()) {
        if (o["subgroups"].IsDefined()) {
            const auto s = o["subgroups"].Scalar();
            if (s == "cyclic") cfg.subgroups = SubgroupScope::cyclic;
            else if (s == "all") cfg.subgroups = SubgroupScope::all;
            else r.fail(o["subgroups"], "options.subgroups", "expected cyclic or all");
        }
        if (o["max_field_bits"].IsDefined()) {
            const auto b = r.integer(o["max_field_bits"], "options.max_field_bits");
            if (b < 1 || b > 32) r.fail(o["max_field_bits"], "options.max_field_bits", "expected 1..32");
            cfg.max_field_bits = static_cast<unsigned>(b);
        }
    }
    return cfg;
}

JobConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace hyperquot::cli
