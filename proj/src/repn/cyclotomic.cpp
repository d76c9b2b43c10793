#include "hyperquot/repn/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperquot::repn {

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned N)
{
    static std::mutex mu;
    static std::map<unsigned, std::vector<std::int64_t>> cache;
    if (N == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(N); it != cache.end()) return it->second;
    }
    // X^N - 1 divided by Phi_d for every proper divisor d.
    std::vector<std::int64_t> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (unsigned d = 1; d < N; ++d) {
        if (N % d) continue;
        const auto& den = cyclotomic_polynomial(d);
        const std::size_t dd = den.size() - 1;
        std::vector<std::int64_t> q(num.size() - dd, 0);
        for (std::size_t i = num.size(); i-- > dd;) {
            const std::int64_t c = num[i];
            q[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(q);
    }
    std::lock_guard lock(mu);
    return cache.emplace(N, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic(std::int64_t v, unsigned N) : N_(N), c_{Rational(v)}
{
    if (N == 0) throw std::invalid_argument("conductor must be positive");
    reduce();
}

Cyclotomic Cyclotomic::rational(Rational v, unsigned N)
{
    Cyclotomic r(0, N);
    r.c_.assign(1, v);
    r.reduce();
    return r;
}

Cyclotomic Cyclotomic::zeta(unsigned N, std::int64_t k)
{
    Cyclotomic r(0, N);
    const auto e = static_cast<std::size_t>(((k % static_cast<std::int64_t>(N)) + N) % N);
    r.c_.assign(e + 1, Rational(0));
    r.c_[e] = 1;
    r.reduce();
    return r;
}

void Cyclotomic::reduce()
{
    const auto& phi = cyclotomic_polynomial(N_);
    const std::size_t d = phi.size() - 1;
    // X^N = 1 first, then division by the monic Phi_N.
    if (c_.size() > N_) {
        for (std::size_t i = N_; i < c_.size(); ++i) c_[i % N_] += c_[i];
        c_.resize(N_);
    }
    for (std::size_t i = c_.size(); i-- > d;) {
        const Rational c = c_[i];
        if (c.numerator() == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) c_[i - d + j] -= c * phi[j];
    }
    c_.resize(d, Rational(0));
}

Cyclotomic Cyclotomic::lift(unsigned M) const
{
    if (M % N_ != 0) throw std::invalid_argument("lift to a conductor that is not a multiple");
    if (M == N_) return *this;
    Cyclotomic r(0, M);
    const unsigned s = M / N_;
    r.c_.assign((c_.size() ? (c_.size() - 1) * s : 0) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * s] = c_[i];
    r.reduce();
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b)
{
    const unsigned M = std::lcm(a.N_, b.N_);
    Cyclotomic x = a.lift(M), y = b.lift(M);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    const unsigned M = std::lcm(a.N_, b.N_);
    const Cyclotomic x = a.lift(M), y = b.lift(M);
    Cyclotomic r(0, M);
    r.c_.assign(x.c_.size() + y.c_.size(), Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].numerator() == 0) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
    }
    r.reduce();
    return r;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::pow(unsigned e) const
{
    Cyclotomic r(1, N_), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Cyclotomic Cyclotomic::conj() const
{
    Cyclotomic r(0, N_);
    r.c_.assign(N_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[(N_ - i) % N_] += c_[i];
    r.reduce();
    return r;
}

Cyclotomic Cyclotomic::scaled(Rational s) const
{
    Cyclotomic r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

bool Cyclotomic::is_zero() const
{
    for (const auto& c : c_)
        if (c.numerator() != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i].numerator() != 0) return false;
    return true;
}

bool Cyclotomic::is_integer() const { return is_rational() && to_rational().denominator() == 1; }

Rational Cyclotomic::to_rational() const
{
    if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

std::int64_t Cyclotomic::to_integer() const
{
    const Rational r = to_rational();
    if (r.denominator() != 1) throw std::domain_error("cyclotomic value " + to_string() + " is not an integer");
    return r.numerator();
}

std::string Cyclotomic::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rational c = c_[i];
        if (c.numerator() == 0) continue;
        if (!first) {
            os << (c.numerator() < 0 ? " - " : " + ");
            if (c.numerator() < 0) c = -c;
        } else if (c.numerator() < 0 && i > 0) {
            os << "-";
            c = -c;
        }
        first = false;
        const bool unit = c == Rational(1);
        if (i == 0 || !unit) {
            os << c.numerator();
            if (c.denominator() != 1) os << "/" << c.denominator();
        }
        if (i > 0) {
            if (!unit) os << "*";
            os << "z" << N_;
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace hyperquot::repn
