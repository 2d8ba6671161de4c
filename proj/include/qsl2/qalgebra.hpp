#pragma once

// PBW normal forms for A(SL_q(2)) and A(SL(2)), and the Hopf structure maps.
//
// Quantum elements are stored on the basis {a^i b^j c^k d^m : min(i, m) = 0};
// classical elements on {alpha^i beta^j gamma^k delta^m : min(i, m) = 0}.

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsl2/cyclo.hpp"

namespace qsl2 {

struct QMonomial {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    int degree() const { return a + b + c + d; }
    bool is_reduced() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0 && (a == 0 || d == 0); }

    friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

struct ClassicalMonomial {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    int delta = 0;

    int degree() const { return alpha + beta + gamma + delta; }
    bool is_reduced() const
    {
        return alpha >= 0 && beta >= 0 && gamma >= 0 && delta >= 0 && (alpha == 0 || delta == 0);
    }

    friend auto operator<=>(const ClassicalMonomial&, const ClassicalMonomial&) = default;
};

/// Graded lexicographic order: total degree first, then larger exponent
/// tuples first (so a precedes b precedes c precedes d).  This is the
/// canonical term order.
struct GradedLex {
    bool operator()(const QMonomial& x, const QMonomial& y) const
    {
        if (x.degree() != y.degree())
            return x.degree() < y.degree();
        return x > y;
    }
    bool operator()(const ClassicalMonomial& x, const ClassicalMonomial& y) const
    {
        if (x.degree() != y.degree())
            return x.degree() < y.degree();
        return x > y;
    }
};

/// Shared per-root context: the coefficient field, a table of powers of q
/// and memoized product expansions.  Interned, so rings compare by address.
class QRing {
public:
    static const QRing& get(const RootSpec& spec);

    const RootSpec& spec() const { return spec_; }
    const CycloField& field() const { return *field_; }
    int l() const { return spec_.l; }

    /// q^k, any integer k.
    const Cyclotomic& q_pow(long k) const;
    Cyclotomic zero() const { return Cyclotomic::zero(*field_); }
    Cyclotomic one() const { return Cyclotomic::one(*field_); }

    /// Coefficients of prod_{j=1}^{s} (1 + q^{sign*(2j-1)} x), low degree
    /// first.  sign = +1 expands a^s d^s, sign = -1 expands d^s a^s.
    const std::vector<Cyclotomic>& bc_product(int s, int sign) const;

    friend bool operator==(const QRing& x, const QRing& y) { return &x == &y; }

private:
    explicit QRing(const RootSpec& spec);

    RootSpec spec_;
    const CycloField* field_;
    std::vector<Cyclotomic> q_powers_;
    struct Memo;
    std::unique_ptr<Memo> memo_;

public:
    ~QRing();
};

class QElement {
public:
    using Terms = std::map<QMonomial, Cyclotomic, GradedLex>;

    explicit QElement(const QRing& ring) : ring_(&ring) {}

    static QElement scalar(const QRing& ring, const Cyclotomic& value);
    static QElement monomial(const QRing& ring, const QMonomial& m);
    static QElement monomial(const QRing& ring, const QMonomial& m, const Cyclotomic& coeff);
    /// One of 'a', 'b', 'c', 'd'.
    static QElement generator(const QRing& ring, char letter);

    const QRing& ring() const { return *ring_; }
    const RootSpec& spec() const { return ring_->spec(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a reduced monomial (zero if absent).
    Cyclotomic coefficient(const QMonomial& m) const;

    /// Adds coeff * m; m must be reduced.
    void add_term(const QMonomial& m, const Cyclotomic& coeff);

    QElement& operator+=(const QElement& other);
    QElement& operator-=(const QElement& other);
    QElement& operator*=(const Cyclotomic& s);

    friend QElement operator+(QElement x, const QElement& y) { return x += y; }
    friend QElement operator-(QElement x, const QElement& y) { return x -= y; }
    friend QElement operator*(QElement x, const Cyclotomic& s) { return x *= s; }
    friend QElement operator*(const Cyclotomic& s, QElement x) { return x *= s; }
    friend QElement operator*(const QElement& x, const QElement& y);
    QElement operator-() const;

    friend bool operator==(const QElement& x, const QElement& y)
    {
        return x.ring_ == y.ring_ && x.terms_ == y.terms_;
    }

private:
    void check_ring(const QElement& other) const;

    const QRing* ring_;
    Terms terms_;
};

/// A free-algebra word with a scalar prefactor.
struct Word {
    Cyclotomic prefactor;
    std::string letters;
};

/// Rewrites a word to PBW normal form with the ordering rules
///   ba -> q^-1 ab, ca -> q^-1 ac, cb -> bc, db -> q^-1 bd, dc -> q^-1 cd,
///   da -> 1 + q^-1 bc, ad -> 1 + q bc.
QElement straighten(const Word& word, const QRing& ring);
QElement straighten(const std::string& letters, const QRing& ring);

/// Product of two normal monomials, accumulated as coeff * (x * y) into out.
void accumulate_product(const QRing& ring, const QMonomial& x, const QMonomial& y,
                        const Cyclotomic& coeff, QElement::Terms& out);

QElement qmul(const QElement& x, const QElement& y);
QElement power(const QElement& x, int n);

// ---------------------------------------------------------------------------
// Classical coordinate ring

class ClassicalElement {
public:
    using Terms = std::map<ClassicalMonomial, Cyclotomic, GradedLex>;

    explicit ClassicalElement(const QRing& ring) : ring_(&ring) {}

    static ClassicalElement scalar(const QRing& ring, const Cyclotomic& value);
    static ClassicalElement monomial(const QRing& ring, const ClassicalMonomial& m);
    /// Any monomial, reduced through alpha*delta = 1 + beta*gamma.
    static ClassicalElement normalize(const QRing& ring, const ClassicalMonomial& m,
                                      const Cyclotomic& coeff);

    const QRing& ring() const { return *ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;
    /// The scalar value if this element is a constant.
    std::optional<Cyclotomic> as_scalar() const;

    void add_term(const ClassicalMonomial& m, const Cyclotomic& coeff);

    ClassicalElement& operator+=(const ClassicalElement& other);
    ClassicalElement& operator-=(const ClassicalElement& other);
    ClassicalElement& operator*=(const Cyclotomic& s);

    friend ClassicalElement operator+(ClassicalElement x, const ClassicalElement& y) { return x += y; }
    friend ClassicalElement operator-(ClassicalElement x, const ClassicalElement& y) { return x -= y; }
    friend ClassicalElement operator*(ClassicalElement x, const Cyclotomic& s) { return x *= s; }
    friend ClassicalElement operator*(const ClassicalElement& x, const ClassicalElement& y);
    ClassicalElement operator-() const;

    friend bool operator==(const ClassicalElement& x, const ClassicalElement& y)
    {
        return x.ring_ == y.ring_ && x.terms_ == y.terms_;
    }

private:
    const QRing* ring_;
    Terms terms_;
};

ClassicalElement classical_mul(const ClassicalElement& x, const ClassicalElement& y);
ClassicalElement classical_normalize(const QRing& ring, const ClassicalMonomial& m,
                                     const Cyclotomic& coeff);
ClassicalElement classical_power(const ClassicalElement& x, int n);

// ---------------------------------------------------------------------------
// Hopf structure

class TensorElement {
public:
    using Key = std::pair<QMonomial, QMonomial>;
    struct KeyOrder {
        bool operator()(const Key& x, const Key& y) const
        {
            GradedLex lt;
            if (lt(x.first, y.first))
                return true;
            if (lt(y.first, x.first))
                return false;
            return lt(x.second, y.second);
        }
    };
    using Terms = std::map<Key, Cyclotomic, KeyOrder>;

    explicit TensorElement(const QRing& ring) : ring_(&ring) {}

    static TensorElement pure(const QElement& left, const QElement& right);

    const QRing& ring() const { return *ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const QMonomial& left, const QMonomial& right, const Cyclotomic& coeff);

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
    friend TensorElement operator-(TensorElement x, const TensorElement& y) { return x -= y; }

    friend bool operator==(const TensorElement& x, const TensorElement& y)
    {
        return x.ring_ == y.ring_ && x.terms_ == y.terms_;
    }

private:
    const QRing* ring_;
    Terms terms_;
};

/// Leg-wise product (x (x) y)(x' (x) y') = xx' (x) yy'.
TensorElement tensor_mul(const TensorElement& u, const TensorElement& v);

/// Matrix coproduct: Da = a(x)a + b(x)c, Db = a(x)b + b(x)d,
/// Dc = c(x)a + d(x)c, Dd = c(x)b + d(x)d.
TensorElement coproduct(const QElement& x);
Cyclotomic counit(const QElement& x);
/// Anti-multiplicative, S(a) = d, S(b) = -q^-1 b, S(c) = -q c, S(d) = a.
QElement antipode(const QElement& x);

/// Multiplies the legs of a tensor: sum c * (left * right).
QElement multiply_legs(const TensorElement& t);

}  // namespace qsl2
