#ifndef HYPERQUOT_FF_ROOTS_HPP
#define HYPERQUOT_FF_ROOTS_HPP

#include <cstdint>
#include <vector>

#include "hyperquot/ff/poly.hpp"

namespace hyperquot::ff {

/// Fields up to this size are searched exhaustively for roots.
inline constexpr std::uint64_t kExhaustiveRootLimit = std::uint64_t{1} << 20;

/// All roots of f lying in E (an extension of f's field), with multiplicity,
/// sorted by code.
std::vector<Elem> roots_in(const Poly& f, const Field& E);

/// Minimal d such that f splits into linear factors over F_{q^d}, q the size
/// of f's coefficient field. Throws on the zero polynomial.
unsigned splitting_degree(const Poly& f);

/// Degrees of the irreducible factors found by distinct-degree factorisation,
/// one entry per factor (repeated factors are listed once per multiplicity).
std::vector<unsigned> factor_degrees(const Poly& f);

}  // namespace hyperquot::ff

#endif
