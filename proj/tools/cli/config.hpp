#ifndef HYPERQUOT_CLI_CONFIG_HPP
#define HYPERQUOT_CLI_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperquot/frob/frob.hpp"
#include "hyperquot/group/group.hpp"

namespace hyperquot::cli {

/// Parse failure; the message names the file, key path and line.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SubgroupScope { cyclic, all };

struct JobConfig {
    std::string source;
    const ff::Field* field = nullptr;
    std::optional<curve::HyperellipticCurve> curve;
    std::vector<group::AffineAutomorphism> generators;
    std::optional<frob::FrobMorphism> frobenius;
    /// Generators of the inertia subgroup; absent means all of G.
    std::optional<std::vector<group::AffineAutomorphism>> inertia;
    SubgroupScope subgroups = SubgroupScope::cyclic;
    unsigned max_field_bits = 24;
};

/// Field element syntax: an integer ("-1"), a generator power ("w", "w^3",
/// "-w^-1", "2*w^5"), or a coefficient list "[c0, c1, ...]" in the power
/// basis of the field's modulus. Throws std::invalid_argument.
ff::Elem parse_element(const std::string& text, const ff::Field& F);

/// Prime subfield elements as signed integers ("0", "-1"), others as
/// "w^k" or "-w^k" with 0 < k < (q-1)/2.
std::string format_element(const ff::Elem& e);

JobConfig parse_config(const std::string& text, const std::string& source = "<string>");
JobConfig load_config(const std::string& path);

}  // namespace hyperquot::cli

#endif
