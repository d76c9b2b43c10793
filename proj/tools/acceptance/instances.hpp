#ifndef HYPERQUOT_ACCEPTANCE_INSTANCES_HPP
#define HYPERQUOT_ACCEPTANCE_INSTANCES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperquot/frob/frob.hpp"

namespace hyperquot::acceptance {

/// A random curve with a group of affine automorphisms and a Frobenius
/// twisted by a group element.
struct Instance {
    curve::HyperellipticCurve curve;
    std::vector<group::AffineAutomorphism> generators;
    frob::FrobMorphism phi;
    std::string shape;  // how the X-action was drawn
};

struct InstanceLimits {
    unsigned max_degree = 10;
    std::size_t max_group = 12;
    /// Bound on q^(2g), the size of the largest point count the checks need.
    double max_points = 1 << 20;
};

/// Draws until an instance satisfies the limits: p in {3, 5, 7} over F_3,
/// F_5, F_7 or F_9, f invariant under the X-action (a product of the
/// translates of a random polynomial, optionally times the polynomial of
/// rotation centres), lifts of the X-maps with random sign, sometimes the
/// hyperelliptic involution, and phi = h o Frob for a random h in G.
/// Draws whose Frobenius iterates cannot all be counted are rejected.
/// Deterministic for a given generator state.
Instance random_instance(std::mt19937_64& rng, const InstanceLimits& lim = {});

}  // namespace hyperquot::acceptance

#endif
