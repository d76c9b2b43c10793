#ifndef HYPERQUOT_TESTS_HELPERS_HPP
#define HYPERQUOT_TESTS_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "hyperquot/curve/curve.hpp"
#include "hyperquot/ff/poly.hpp"

namespace testutil {

using namespace hyperquot;

inline ff::Poly P(const ff::Field& F, std::initializer_list<std::int64_t> c)
{
    std::vector<std::int64_t> v(c);
    return ff::Poly::from_ints(F, v);
}

inline curve::HyperellipticCurve curve_of(const ff::Field& F, std::int64_t c, std::initializer_list<std::int64_t> f)
{
    return {F.from_int(c), P(F, f)};
}

// X^8 - 1 over F_9
inline curve::HyperellipticCurve genus3_curve()
{
    return curve_of(ff::Field::get(3, 2), 1, {-1, 0, 0, 0, 0, 0, 0, 0, 1});
}

}  // namespace testutil

#endif
