#ifndef HYPERQUOT_REPN_CYCLOTOMIC_HPP
#define HYPERQUOT_REPN_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hyperquot::repn {

using Rational = boost::rational<std::int64_t>;

/// Exact element of Q(zeta_N), stored in the power basis
/// 1, z, ..., z^(phi(N)-1) after reduction modulo the N-th cyclotomic
/// polynomial. Values with different conductors are combined in the
/// field of the lcm.
class Cyclotomic {
  public:
    Cyclotomic() : Cyclotomic(0) {}
    Cyclotomic(std::int64_t v, unsigned N = 1);  // NOLINT: integers convert implicitly
    static Cyclotomic rational(Rational v, unsigned N = 1);
    /// zeta_N^k
    static Cyclotomic zeta(unsigned N, std::int64_t k);

    unsigned conductor() const { return N_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    /// The same number written in Q(zeta_M); N must divide M.
    Cyclotomic lift(unsigned M) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic pow(unsigned e) const;
    /// Complex conjugate (z -> z^-1).
    Cyclotomic conj() const;
    Cyclotomic scaled(Rational s) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    /// Throws std::domain_error if not rational / not an integer.
    Rational to_rational() const;
    std::int64_t to_integer() const;

    /// "2", "-1 + z8^2", ... with zN the primitive root exp(2 pi i / N).
    std::string to_string() const;

  private:
    void reduce();

    unsigned N_;
    std::vector<Rational> c_;
};

/// Coefficients of the N-th cyclotomic polynomial, little-endian.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned N);

}  // namespace hyperquot::repn

#endif
