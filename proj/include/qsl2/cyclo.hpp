#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N) = Q[x]/Phi_N(x).

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qsl2 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument lies outside an operation's domain
/// (mixed field orders, inverse of zero, out-of-range indices, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Parity { odd, even };

/// Selects the root of unity q.  For odd l, q has order l; for even l,
/// order 2l.  q = zeta_N^zeta_exponent.
struct RootSpec {
    int l = 0;
    Parity parity = Parity::odd;
    int order = 0;          // N
    int zeta_exponent = 1;  // coprime to N

    friend bool operator==(const RootSpec&, const RootSpec&) = default;
};

RootSpec make_root_spec(int l, std::optional<int> zeta_exponent = std::nullopt);

/// Root spec for the closure diagnostic.  Besides the two admissible
/// cases it accepts odd l with q of order 2l, which make_root_spec rejects.
RootSpec diagnostic_root_spec(int l, int order, int zeta_exponent = 1);

std::vector<Integer> cyclotomic_polynomial(int n);

int euler_phi(int n);

/// The field Q(zeta_N).  Instances are interned and live for the whole
/// program, so elements refer to them by pointer.
class CycloField {
public:
    static const CycloField& get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }
    const std::vector<long>& modulus() const { return modulus_; }

    /// Reduces a polynomial of arbitrary degree modulo Phi_N in place and
    /// truncates it to degree() coefficients.
    void reduce(std::vector<Rational>& poly) const;

private:
    explicit CycloField(int order);

    int order_;
    int degree_;
    std::vector<long> modulus_;  // Phi_N, low degree first, monic
};

class Cyclotomic {
public:
    Cyclotomic(const CycloField& field, const Rational& value);
    Cyclotomic(const CycloField& field, std::vector<Rational> coeffs);

    static Cyclotomic zero(const CycloField& field) { return {field, Rational(0)}; }
    static Cyclotomic one(const CycloField& field) { return {field, Rational(1)}; }
    /// zeta_N^k with k reduced mod N.
    static Cyclotomic zeta_power(const CycloField& field, long k);

    const CycloField& field() const { return *field_; }
    int order() const { return field_->order(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// The rational value if this element lies in Q.
    std::optional<Rational> as_rational() const;

    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Rational& r);

    friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
    friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
    friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
    friend Cyclotomic operator*(Cyclotomic x, const Rational& r) { return x *= r; }
    friend Cyclotomic operator*(const Rational& r, Cyclotomic x) { return x *= r; }
    Cyclotomic operator-() const;

    /// Multiplicative inverse via the extended Euclidean algorithm over Q.
    Cyclotomic inverse() const;

    /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
    Cyclotomic galois(int k) const;

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);

    std::complex<double> approx() const;

private:
    void check_same_field(const Cyclotomic& other) const;

    const CycloField* field_;
    std::vector<Rational> coeffs_;
};

Cyclotomic add(const Cyclotomic& x, const Cyclotomic& y);
Cyclotomic mul(const Cyclotomic& x, const Cyclotomic& y);
Cyclotomic neg(const Cyclotomic& x);
Cyclotomic inv(const Cyclotomic& x);
bool equals(const Cyclotomic& x, const Cyclotomic& y);

/// q^k for the root selected by spec.
Cyclotomic zeta_pow(const RootSpec& spec, long k);

/// Coefficient of (bc)^j in prod_{r=1..k} (1 + q^{2r-1} bc), evaluated
/// through the closed q-binomial formula.  Requires 0 <= j <= k <= l.
Cyclotomic p_coeff(const RootSpec& spec, int k, int j);

/// Gaussian binomial [n choose k]_t.
Cyclotomic gauss_binomial(int n, int k, const Cyclotomic& t);

std::complex<double> approx_complex(const Cyclotomic& x);

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& text);

}  // namespace qsl2
