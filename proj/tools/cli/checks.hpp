#ifndef HYPERQUOT_CLI_CHECKS_HPP
#define HYPERQUOT_CLI_CHECKS_HPP

#include <string>
#include <vector>

#include "hyperquot/frob/frob.hpp"
#include "hyperquot/repn/character.hpp"

namespace hyperquot::cli {

using repn::Check;

struct CheckList {
    std::vector<Check> items;

    void add(std::string name, bool ok, std::string detail = {});
    void append(const std::vector<Check>& more, const std::string& prefix = {});
    bool ok() const;
};

/// Quotient-side invariants of G acting on its curve:
///  - the orbit polynomial identities for I and I_T over the splitting field,
///  - the genus formula against the degree of the quotient model,
///  - invariance of the quotient map under G on every affine point over the
///    base field and its quadratic extension (when that has <= 2^14 elements).
/// Throws what quotient_curve throws.
CheckList verify_quotient(const group::AutoGroup& G);

/// Frobenius-side checks for phi normalising G (G without the hyperelliptic
/// involution): descent with its commuting square, fixed-point counts by both
/// methods where both are affordable, and divisibility of the charpoly of phi
/// by that of the descended map.
CheckList verify_frobenius(const group::AutoGroup& G, const frob::FrobMorphism& phi,
                           const frob::CountOptions& opt = {});

}  // namespace hyperquot::cli

#endif
