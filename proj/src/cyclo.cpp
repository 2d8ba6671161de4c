#include "qsl2/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

namespace qsl2 {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact division of a by the monic polynomial b; the remainder must vanish.
IntPoly divide_monic(IntPoly a, const IntPoly& b)
{
    const std::size_t db = b.size() - 1;
    IntPoly quot(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        if (c == 0)
            continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    return quot;
}

// (quotient, remainder) of polynomial division over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size())
        return {RatPoly{}, a};
    RatPoly quot(a.size() - db, 0);
    const Rational lead_inv = 1 / b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0)
            continue;
        Rational c = a[i] * lead_inv;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    a.resize(db);
    trim(a);
    return {quot, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    RatPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

long mod_floor(long k, long n)
{
    long r = k % n;
    return r < 0 ? r + n : r;
}

}  // namespace

RootSpec make_root_spec(int l, std::optional<int> zeta_exponent)
{
    if (l < 2)
        throw DomainError("l must be at least 2 (l = " + std::to_string(l) + ")");
    RootSpec spec;
    spec.l = l;
    spec.parity = (l % 2 == 1) ? Parity::odd : Parity::even;
    spec.order = (l % 2 == 1) ? l : 2 * l;
    spec.zeta_exponent = zeta_exponent.value_or(1);
    spec.zeta_exponent = static_cast<int>(mod_floor(spec.zeta_exponent, spec.order));
    if (std::gcd(spec.zeta_exponent, spec.order) != 1)
        throw DomainError("zeta exponent " + std::to_string(zeta_exponent.value_or(1))
                          + " is not coprime to the order " + std::to_string(spec.order));
    return spec;
}

RootSpec diagnostic_root_spec(int l, int order, int zeta_exponent)
{
    if (l < 2)
        throw DomainError("l must be at least 2");
    const bool admissible = (l % 2 == 1 && (order == l || order == 2 * l))
                            || (l % 2 == 0 && order == 2 * l);
    if (!admissible)
        throw DomainError("inconsistent (l, N) = (" + std::to_string(l) + ", "
                          + std::to_string(order) + ")");
    RootSpec spec;
    spec.l = l;
    spec.parity = (l % 2 == 1) ? Parity::odd : Parity::even;
    spec.order = order;
    spec.zeta_exponent = static_cast<int>(mod_floor(zeta_exponent, order));
    if (std::gcd(spec.zeta_exponent, order) != 1)
        throw DomainError("zeta exponent is not coprime to the order");
    return spec;
}

std::vector<Integer> cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw DomainError("cyclotomic polynomial index must be positive");
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = divide_monic(std::move(p), cyclotomic_polynomial(d));
    return p;
}

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

// ---------------------------------------------------------------------------

const CycloField& CycloField::get(int order)
{
    if (order < 1)
        throw DomainError("field order must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CycloField>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[order];
    if (!slot)
        slot.reset(new CycloField(order));
    return *slot;
}

CycloField::CycloField(int order) : order_(order), degree_(euler_phi(order))
{
    for (const auto& c : cyclotomic_polynomial(order))
        modulus_.push_back(c.get_si());
}

void CycloField::reduce(std::vector<Rational>& poly) const
{
    const std::size_t deg = static_cast<std::size_t>(degree_);
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0)
            continue;
        const Rational c = poly[i];
        for (std::size_t j = 0; j < deg; ++j)
            if (modulus_[j] != 0)
                poly[i - deg + j] -= c * modulus_[j];
        poly[i] = 0;
    }
    poly.resize(deg, 0);
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(const CycloField& field, const Rational& value)
    : field_(&field), coeffs_(static_cast<std::size_t>(field.degree()), 0)
{
    coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(const CycloField& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    field_->reduce(coeffs_);
}

Cyclotomic Cyclotomic::zeta_power(const CycloField& field, long k)
{
    const long e = mod_floor(k, field.order());
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, 0);
    poly[static_cast<std::size_t>(e)] = 1;
    return {field, std::move(poly)};
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Cyclotomic::is_one() const
{
    if (coeffs_[0] != 1)
        return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return std::nullopt;
    return coeffs_[0];
}

void Cyclotomic::check_same_field(const Cyclotomic& other) const
{
    if (field_ != other.field_)
        throw DomainError("cyclotomic operands of different orders ("
                          + std::to_string(order()) + " vs " + std::to_string(other.order())
                          + ")");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other)
{
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (other.coeffs_[i] != 0)
            coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other)
{
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (other.coeffs_[i] != 0)
            coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y)
{
    x.check_same_field(y);
    if (auto r = y.as_rational())
        return x * *r;
    if (auto r = x.as_rational())
        return y * *r;
    std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
            if (y.coeffs_[j] != 0)
                prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    x.field_->reduce(prod);
    Cyclotomic out = Cyclotomic::zero(*x.field_);
    out.coeffs_ = std::move(prod);
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other)
{
    *this = *this * other;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r)
{
    if (r == 1)
        return *this;
    for (auto& c : coeffs_)
        if (c != 0)
            c *= r;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    if (auto r = as_rational())
        return {*field_, Rational(1 / *r)};

    // Extended Euclid on (Phi_N, x): track s with s * x = r (mod Phi_N).
    RatPoly r0;
    for (long c : field_->modulus())
        r0.emplace_back(c);
    RatPoly r1 = coeffs_;
    trim(r1);
    RatPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [quot, rem] = divmod(r0, r1);
        RatPoly s2 = poly_sub(s0, poly_mul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because Phi_N is irreducible.
    const Rational scale = 1 / r1[0];
    for (auto& c : s1)
        c *= scale;
    return {*field_, std::move(s1)};
}

Cyclotomic Cyclotomic::galois(int k) const
{
    const int n = order();
    if (std::gcd(mod_floor(k, n), static_cast<long>(n)) != 1)
        throw DomainError("Galois exponent must be coprime to the order");
    std::vector<Rational> poly(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            poly[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * k, n))] += coeffs_[i];
    return {*field_, std::move(poly)};
}

bool operator==(const Cyclotomic& x, const Cyclotomic& y)
{
    return x.field_ == y.field_ && x.coeffs_ == y.coeffs_;
}

std::complex<double> Cyclotomic::approx() const
{
    const double two_pi = 2.0 * std::acos(-1.0);
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const double angle = two_pi * static_cast<double>(i) / order();
        sum += coeffs_[i].get_d() * std::polar(1.0, angle);
    }
    return sum;
}

Cyclotomic add(const Cyclotomic& x, const Cyclotomic& y) { return x + y; }
Cyclotomic mul(const Cyclotomic& x, const Cyclotomic& y) { return x * y; }
Cyclotomic neg(const Cyclotomic& x) { return -x; }
Cyclotomic inv(const Cyclotomic& x) { return x.inverse(); }
bool equals(const Cyclotomic& x, const Cyclotomic& y)
{
    if (x.order() != y.order())
        throw DomainError("comparison of cyclotomics of different orders");
    return x == y;
}

Cyclotomic zeta_pow(const RootSpec& spec, long k)
{
    const long n = spec.order;
    return Cyclotomic::zeta_power(CycloField::get(spec.order),
                                  mod_floor(mod_floor(k, n) * spec.zeta_exponent, n));
}

Cyclotomic p_coeff(const RootSpec& spec, int k, int j)
{
    if (j < 0 || j > k || k > spec.l)
        throw DomainError("p_coeff requires 0 <= j <= k <= l (k = " + std::to_string(k)
                          + ", j = " + std::to_string(j) + ")");
    const auto& field = CycloField::get(spec.order);
    const Cyclotomic one = Cyclotomic::one(field);

    // The factors (q^{2r} - 1) shared by prod_{r=j+1}^{k} and prod_{s=1}^{k-j}
    // cancel formally; what remains has nonvanishing denominators.
    Cyclotomic value = zeta_pow(spec, static_cast<long>(j) * j);
    for (int r = std::max(j + 1, k - j + 1); r <= k; ++r)
        value *= zeta_pow(spec, 2L * r) - one;
    if (value.is_zero())
        return value;
    Cyclotomic denom = one;
    for (int s = 1; s <= std::min(j, k - j); ++s)
        denom *= zeta_pow(spec, 2L * s) - one;
    return value * denom.inverse();
}

Cyclotomic gauss_binomial(int n, int k, const Cyclotomic& t)
{
    if (k < 0 || k > n)
        throw DomainError("gauss_binomial requires 0 <= k <= n");
    const Cyclotomic one = Cyclotomic::one(t.field());
    auto t_pow = [&](int e) {
        Cyclotomic out = one;
        for (int i = 0; i < e; ++i)
            out *= t;
        return out;
    };
    Cyclotomic num = one;
    Cyclotomic den = one;
    for (int i = 1; i <= k; ++i) {
        Cyclotomic d = one - t_pow(i);
        if (d.is_zero())
            throw DomainError("gauss_binomial: q-integer [" + std::to_string(i)
                              + "] vanishes at t");
        den *= d;
        num *= one - t_pow(n - k + i);
    }
    return num * den.inverse();
}

std::complex<double> approx_complex(const Cyclotomic& x) { return x.approx(); }

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw DomainError("malformed rational '" + text + "'");
    if (r.get_den() == 0)
        throw DomainError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace qsl2
