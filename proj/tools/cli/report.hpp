#ifndef HYPERQUOT_CLI_REPORT_HPP
#define HYPERQUOT_CLI_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "config.hpp"

namespace hyperquot::cli {

using Json = nlohmann::ordered_json;

enum class Command { quotient, cohomology, frobenius, zeta, verify };

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

struct Outcome {
    Json report;
    /// False when a requested check failed.
    bool ok = true;
};

/// Runs one subcommand. Module errors propagate; a subcommand that needs
/// data missing from the config throws ConfigError.
Outcome run(Command cmd, const JobConfig& cfg);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

std::string poly_text(const ff::Poly& f, const std::string& var = "x");
/// "(x, y) -> (-x + 1, y)"
std::string auto_text(const group::AffineAutomorphism& g);
/// "(x, y) -> (-w^2*x^3, -y^3)"
std::string frob_text(const frob::FrobMorphism& phi);

}  // namespace hyperquot::cli

#endif
