// hyperquot: quotients, H^1 characters and zeta data of hyperelliptic curves
// with affine automorphism groups over finite fields.
//
// Exit status: 0 ok, 1 a check failed, 2 usage or config error,
// 3 computation error.

#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kComputation = 3;

}  // namespace

int main(int argc, char** argv)
{
    using namespace hyperquot::cli;

    CLI::App app{"Quotients, H^1 characters and zeta data of hyperelliptic curves over finite fields"};
    app.require_subcommand(1, 1);
    std::string config_path;
    unsigned max_field_bits = 24;
    std::string subgroups;
    bool json = false;
    app.add_option("--config", config_path, "Job config file (YAML)")->required();
    app.add_option("--max-field-bits", max_field_bits, "Largest extension enumerated, in bits of field order")
        ->check(CLI::Range(1u, 32u));
    app.add_option("--subgroups", subgroups, "Subgroups checked by cohomology/verify")
        ->check(CLI::IsMember({"cyclic", "all"}));
    app.add_flag("--json", json, "Print the JSON report");
    // Options may appear after the subcommand too; subcommands inherit this.
    app.fallthrough();
    const std::pair<Command, const char*> subcommands[] = {
        {Command::quotient, "Quotient curve C/G and orbit data"},
        {Command::cohomology, "Character of G on H^1 and its checks"},
        {Command::frobenius, "Frobenius morphism and its descent to C/G"},
        {Command::zeta, "Fixed-point counts, charpolys, Euler factor, conductor"},
        {Command::verify, "Run every check; exit 1 if any fails"},
    };
    for (const auto& [c, help] : subcommands) app.add_subcommand(command_name(c), help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const auto cmd = parse_command(app.get_subcommands().front()->get_name());
    try {
        JobConfig cfg = load_config(config_path);
        if (app.count("--max-field-bits")) cfg.max_field_bits = max_field_bits;
        if (!subgroups.empty()) cfg.subgroups = subgroups == "all" ? SubgroupScope::all : SubgroupScope::cyclic;
        const Outcome out = run(*cmd, cfg);
        std::cout << (json ? out.report.dump(2) + "\n" : render_text(out.report));
        return out.ok ? kOk : kCheckFailed;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << command_name(*cmd) << ": " << e.what() << "\n";
        return kComputation;
    }
}
