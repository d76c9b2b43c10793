#ifndef HYPERQUOT_FROB_POWER_SERIES_HPP
#define HYPERQUOT_FROB_POWER_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperquot::frob {

/// Truncated power series over a field R (exact rationals in practice),
/// coefficients little-endian, all arithmetic modulo T^n.
template <class R>
std::vector<R> series_truncate(std::vector<R> a, std::size_t n)
{
    a.resize(n, R(0));
    return a;
}

template <class R>
std::vector<R> series_mul(const std::vector<R>& a, const std::vector<R>& b, std::size_t n)
{
    std::vector<R> c(n, R(0));
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == R(0)) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

/// exp(a) mod T^n for a with zero constant term, via n e_n = sum k a_k e_{n-k}.
template <class R>
std::vector<R> series_exp(const std::vector<R>& a, std::size_t n)
{
    if (!a.empty() && a[0] != R(0)) throw std::invalid_argument("exp of a series with nonzero constant term");
    std::vector<R> e(n, R(0));
    if (n == 0) return e;
    e[0] = R(1);
    for (std::size_t m = 1; m < n; ++m) {
        R s(0);
        for (std::size_t k = 1; k <= m && k < a.size(); ++k) s += R(static_cast<long long>(k)) * a[k] * e[m - k];
        e[m] = s / R(static_cast<long long>(m));
    }
    return e;
}

/// log(p) mod T^n for p with constant term 1, via n l_n = n p_n - sum k l_k p_{n-k}.
template <class R>
std::vector<R> series_log(const std::vector<R>& p, std::size_t n)
{
    if (p.empty() || p[0] != R(1)) throw std::invalid_argument("log of a series with constant term other than 1");
    const auto at = [&](std::size_t i) { return i < p.size() ? p[i] : R(0); };
    std::vector<R> l(n, R(0));
    for (std::size_t m = 1; m < n; ++m) {
        R s = R(static_cast<long long>(m)) * at(m);
        for (std::size_t k = 1; k < m; ++k) s -= R(static_cast<long long>(k)) * l[k] * at(m - k);
        l[m] = s / R(static_cast<long long>(m));
    }
    return l;
}

}  // namespace hyperquot::frob

#endif
