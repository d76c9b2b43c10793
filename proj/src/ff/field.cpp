#include "hyperquot/ff/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace hyperquot::ff {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

// Dense polynomial helpers over F_p, used only to test moduli for
// irreducibility before a Field exists.
void trim(Vec& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Vec mod_poly(Vec a, const Vec& m, u64 p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 inv_lead = [&] {
        u64 r = 1, b = m.back() % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() > dm) {
        const u64 c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) {
            a[shift + j] = (a[shift + j] + p - c * m[j] % p) % p;
        }
        trim(a);
    }
    return a;
}

Vec mul_mod(const Vec& a, const Vec& b, const Vec& m, u64 p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return mod_poly(std::move(r), m, p);
}

Vec pow_mod(Vec base, u64 e, const Vec& m, u64 p)
{
    Vec r{1};
    base = mod_poly(std::move(base), m, p);
    while (e) {
        if (e & 1) r = mul_mod(r, base, m, p);
        base = mul_mod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Vec gcd_poly(Vec a, Vec b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = mod_poly(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// X^(p^j) mod m by repeated p-th powering.
Vec x_pow_p_iter(unsigned j, const Vec& m, u64 p)
{
    Vec x = mod_poly(Vec{0, 1}, m, p);
    for (unsigned i = 0; i < j; ++i) {
        x = pow_mod(x, p, m, p);
    }
    return x;
}

Vec sub_x(Vec a, u64 p)
{
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& modulus, u64 p)
{
    const unsigned k = static_cast<unsigned>(modulus.size() - 1);
    if (k == 1) {
        return true;
    }
    Vec m(modulus.begin(), modulus.end());
    // X^(p^k) == X mod m
    if (!sub_x(x_pow_p_iter(k, m, p), p).empty()) {
        return false;
    }
    for (u64 r : prime_factors(k)) {
        Vec g = gcd_poly(m, sub_x(x_pow_p_iter(k / static_cast<unsigned>(r), m, p), p), p);
        if (g.size() > 1) {
            return false;
        }
    }
    return true;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<Field>> fields;
    std::map<std::pair<std::uint32_t, unsigned>, const Field*> defaults;
};

Registry& registry()
{
    static Registry r;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// -- Field construction ------------------------------------------------------

const Field& make_field(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus)
{
    if (!modulus) {
        return Field::get(p, k);
    }
    if (modulus->size() != k + 1) {
        throw std::invalid_argument("modulus degree " + std::to_string(modulus->size() - 1) +
                                    " does not match k = " + std::to_string(k));
    }
    return Field::with_modulus(p, *modulus);
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus))
{
    for (unsigned i = 0; i < k_; ++i) {
        place_.push_back(q_);
        q_ *= p_;
    }
    order_factors_ = prime_factors(q_ - 1);
    find_generator();
    if (q_ <= kTableLimit) {
        build_tables();
    }
}

Field::~Field() = default;

const Field& Field::with_modulus(std::uint32_t p, std::span<const std::uint32_t> modulus)
{
    if (p % 2 == 0) {
        throw std::invalid_argument("characteristic must be odd, got " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
    }
    if (modulus.size() < 2) {
        throw std::invalid_argument("modulus must have degree >= 1");
    }
    if (modulus.back() != 1) {
        throw std::invalid_argument("modulus must be monic");
    }
    std::vector<std::uint32_t> m(modulus.begin(), modulus.end());
    for (auto c : m) {
        if (c >= p) {
            throw std::invalid_argument("modulus coefficients must be reduced mod p");
        }
    }
    {
        double bits = static_cast<double>(m.size() - 1) * std::log2(static_cast<double>(p));
        if (bits > 32.0) {
            throw std::invalid_argument("field too large: more than 2^32 elements");
        }
    }
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    auto key = std::make_pair(p, m);
    if (auto it = reg.fields.find(key); it != reg.fields.end()) {
        return *it->second;
    }
    if (!is_irreducible(m, p)) {
        throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    }
    auto f = std::unique_ptr<Field>(new Field(p, m));
    const Field& ref = *f;
    reg.fields.emplace(std::move(key), std::move(f));
    return ref;
}

const Field& Field::get(std::uint32_t p, unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("field degree must be positive");
    }
    if (p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("characteristic must be an odd prime, got " + std::to_string(p));
    }
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mu);
        if (auto it = reg.defaults.find({p, k}); it != reg.defaults.end()) {
            return *it->second;
        }
    }
    // Smallest monic irreducible in code order.
    std::vector<std::uint32_t> m(k + 1, 0);
    m[k] = 1;
    u64 count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    const Field* found = nullptr;
    for (u64 n = 0; n < count; ++n) {
        u64 t = n;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (is_irreducible(m, p)) {
            found = &with_modulus(p, m);
            break;
        }
    }
    std::lock_guard lock(reg.mu);
    reg.defaults[{p, k}] = found;
    return *found;
}

const Field& Field::extension(unsigned factor) const
{
    if (factor == 1) {
        return *this;
    }
    return get(p_, k_ * factor);
}

void Field::find_generator()
{
    if (q_ == 3) {
        generator_ = 2;
        return;
    }
    for (code_t c = 2; c < q_; ++c) {
        bool ok = true;
        for (u64 r : order_factors_) {
            if (pow(c, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = c;
            return;
        }
    }
    throw std::logic_error("no primitive element found");
}

void Field::build_tables()
{
    const u64 n = q_ - 1;
    exp_.reset(new code_t[2 * n]);
    log_.reset(new code_t[q_]);
    zech_.reset(new code_t[n]);
    code_t x = 1;
    for (u64 i = 0; i < n; ++i) {
        exp_[i] = x;
        exp_[i + n] = x;
        log_[x] = static_cast<code_t>(i);
        x = mul_slow(x, generator_);
    }
    log_[0] = kNone;
    for (u64 i = 0; i < n; ++i) {
        const code_t s = add_slow(1, exp_[i]);
        zech_[i] = s == 0 ? kNone : log_[s];
    }
}

// -- Kernels -----------------------------------------------------------------

Field::code_t Field::add_slow(code_t a, code_t b) const
{
    code_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const u64 da = (a / place_[i]) % p_;
        const u64 db = (b / place_[i]) % p_;
        r += static_cast<code_t>(((da + db) % p_) * place_[i]);
    }
    return r;
}

Field::code_t Field::mul_slow(code_t a, code_t b) const
{
    if (k_ == 1) {
        return static_cast<code_t>(static_cast<u64>(a) * b % p_);
    }
    std::vector<u64> da(k_), db(k_), t(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = (a / place_[i]) % p_;
        db[i] = (b / place_[i]) % p_;
    }
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) {
            t[i + j] = (t[i + j] + da[i] * db[j]) % p_;
        }
    }
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
        const u64 c = t[i];
        if (c == 0) continue;
        t[i] = 0;
        for (unsigned j = 0; j < k_; ++j) {
            t[i - k_ + j] = (t[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
        }
    }
    code_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        r += static_cast<code_t>(t[i] * place_[i]);
    }
    return r;
}

Field::code_t Field::add(code_t a, code_t b) const
{
    if (k_ == 1) {
        const u64 s = static_cast<u64>(a) + b;
        return static_cast<code_t>(s >= p_ ? s - p_ : s);
    }
    if (!exp_) {
        return add_slow(a, b);
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const u64 n = q_ - 1;
    const code_t la = log_[a];
    const code_t lb = log_[b];
    const u64 d = lb >= la ? lb - la : lb + n - la;
    const code_t z = zech_[d];
    if (z == kNone) return 0;
    return exp_[la + z];
}

Field::code_t Field::neg(code_t a) const
{
    if (a == 0) return 0;
    if (k_ == 1) return p_ - a;
    if (exp_) {
        return exp_[log_[a] + (q_ - 1) / 2];
    }
    code_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const u64 d = (a / place_[i]) % p_;
        r += static_cast<code_t>(((p_ - d) % p_) * place_[i]);
    }
    return r;
}

Field::code_t Field::mul(code_t a, code_t b) const
{
    if (a == 0 || b == 0) return 0;
    if (exp_) {
        return exp_[static_cast<u64>(log_[a]) + log_[b]];
    }
    return mul_slow(a, b);
}

Field::code_t Field::inv(code_t a) const
{
    if (a == 0) {
        throw std::domain_error("inverse of zero in " + name());
    }
    if (exp_) {
        const code_t l = log_[a];
        return l == 0 ? 1 : exp_[q_ - 1 - l];
    }
    return pow(a, q_ - 2);
}

Field::code_t Field::pow(code_t a, std::uint64_t e) const
{
    if (e == 0) return 1;
    if (a == 0) return 0;
    const u64 n = q_ - 1;
    e %= n;
    if (exp_) {
        return exp_[(static_cast<u64>(log_[a]) * e) % n];
    }
    code_t r = 1;
    code_t b = a;
    while (e) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1;
    }
    return r;
}

Field::code_t Field::frobenius(code_t a, std::uint64_t s) const
{
    s %= k_;
    if (s == 0 || a == 0 || k_ == 1) return a;
    u64 e = 1;
    for (u64 i = 0; i < s; ++i) e *= p_;
    return pow(a, e);
}

Field::code_t Field::from_int_code(std::int64_t v) const
{
    const std::int64_t p = p_;
    return static_cast<code_t>(((v % p) + p) % p);
}

std::uint64_t Field::log(code_t a) const
{
    if (a == 0) {
        throw std::domain_error("log of zero");
    }
    if (exp_) {
        return log_[a];
    }
    if (q_ > (u64{1} << 26)) {
        throw std::runtime_error("discrete log unsupported in " + name());
    }
    code_t x = 1;
    for (u64 i = 0; i < q_ - 1; ++i) {
        if (x == a) return i;
        x = mul_slow(x, generator_);
    }
    throw std::logic_error("discrete log failed");
}

Field::code_t Field::exp(std::uint64_t e) const
{
    e %= (q_ - 1);
    if (exp_) return exp_[e];
    return pow(generator_, e);
}

std::uint64_t Field::element_order(code_t a) const
{
    if (a == 0) {
        throw std::domain_error("order of zero");
    }
    u64 ord = q_ - 1;
    for (u64 r : order_factors_) {
        while (ord % r == 0 && pow(a, ord / r) == 1) {
            ord /= r;
        }
    }
    return ord;
}

bool Field::is_square(code_t a) const
{
    if (a == 0) return true;
    if (exp_) return log_[a] % 2 == 0;
    return pow(a, (q_ - 1) / 2) == 1;
}

std::optional<Field::code_t> Field::sqrt(code_t a) const
{
    if (a == 0) return code_t{0};
    if (!is_square(a)) return std::nullopt;
    code_t r;
    if (exp_) {
        r = exp_[log_[a] / 2];
    } else {
        // Tonelli-Shanks with the primitive element as non-residue.
        u64 t = q_ - 1;
        unsigned s = 0;
        while (t % 2 == 0) {
            t /= 2;
            ++s;
        }
        code_t z = pow(generator_, t);
        code_t x = pow(a, (t + 1) / 2);
        code_t b = pow(a, t);
        unsigned m = s;
        while (b != 1) {
            unsigned i = 0;
            code_t bb = b;
            while (bb != 1) {
                bb = mul(bb, bb);
                ++i;
            }
            code_t w = z;
            for (unsigned j = 0; j + i + 1 < m; ++j) w = mul(w, w);
            x = mul(x, w);
            z = mul(w, w);
            b = mul(b, z);
            m = i;
        }
        r = x;
    }
    const code_t other = neg(r);
    return std::min(r, other);
}

std::vector<std::uint32_t> Field::digits(code_t a) const
{
    std::vector<std::uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = static_cast<std::uint32_t>((a / place_[i]) % p_);
    }
    return d;
}

Field::code_t Field::from_digits(std::span<const std::uint32_t> digits) const
{
    if (digits.size() > k_) {
        throw std::invalid_argument("too many coefficients for " + name());
    }
    code_t r = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        r += static_cast<code_t>((digits[i] % p_) * place_[i]);
    }
    return r;
}

std::string Field::name() const
{
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

Elem Field::zero() const { return {*this, 0}; }
Elem Field::one() const { return {*this, 1}; }

Elem Field::element(code_t code) const
{
    if (code >= q_) {
        throw std::out_of_range("element code out of range for " + name());
    }
    return {*this, code};
}

Elem Field::from_int(std::int64_t v) const { return {*this, from_int_code(v)}; }

Elem Field::from_coeffs(std::span<const std::int64_t> coeffs) const
{
    if (coeffs.size() > k_) {
        throw std::invalid_argument("too many coefficients for " + name());
    }
    std::vector<std::uint32_t> d;
    for (auto c : coeffs) d.push_back(from_int_code(c));
    return {*this, from_digits(d)};
}

Elem Field::generator() const { return {*this, generator_}; }

// -- Elem ----------------------------------------------------------------------

bool Elem::is_one() const { return v_ == 1; }

Elem Elem::pow(std::int64_t e) const
{
    if (e >= 0) return {*f_, f_->pow(v_, static_cast<std::uint64_t>(e))};
    return {*f_, f_->pow(f_->inv(v_), static_cast<std::uint64_t>(-e))};
}

std::optional<Elem> Elem::sqrt() const
{
    auto r = f_->sqrt(v_);
    if (!r) return std::nullopt;
    return Elem{*f_, *r};
}

std::string Elem::to_string() const
{
    if (!f_) return "<invalid>";
    if (f_->is_prime_field()) return std::to_string(v_);
    std::ostringstream os;
    os << '[';
    auto d = digits();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ',';
        os << d[i];
    }
    os << ']';
    return os.str();
}

}  // namespace hyperquot::ff
