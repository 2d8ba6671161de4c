#pragma once

// Free-module basis of A(SL_q(2)) over A(SL(2)): the l^3 generators
//   a^m b^n c^s   (1 <= m <= l-1, 0 <= n <= l-1, m <= s <= l-1)
//   b^n c^s d^r   (0 <= n, r <= l-1, 0 <= s <= l-r-1)
// decomposition by elimination, localization on the charts alpha != 0 and
// beta != 0, and an exact linear-algebra oracle.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsl2/frobenius.hpp"

namespace qsl2 {

enum class Family { A, D };

struct BasisIndex {
    Family family = Family::D;
    int m = 0;  // family A only
    int n = 0;
    int s = 0;
    int r = 0;  // family D only

    static BasisIndex family_a(int m, int n, int s) { return {Family::A, m, n, s, 0}; }
    static BasisIndex family_d(int n, int s, int r) { return {Family::D, 0, n, s, r}; }

    bool is_valid(int l) const;
    QMonomial monomial() const;

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Thrown when the elimination or the oracle meets a condition that would
/// mean the module is not free or indicates a bug.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Decomposition {
public:
    using Coefficients = std::map<BasisIndex, ClassicalElement>;

    Decomposition(const QRing& ring, Side side) : ring_(&ring), side_(side) {}

    const QRing& ring() const { return *ring_; }
    Side side() const { return side_; }
    const Coefficients& coefficients() const { return coefficients_; }
    bool empty() const { return coefficients_.empty(); }

    void add(const BasisIndex& index, const ClassicalElement& coeff);

    friend bool operator==(const Decomposition& x, const Decomposition& y)
    {
        return x.ring_ == y.ring_ && x.side_ == y.side_ && x.coefficients_ == y.coefficients_;
    }

private:
    const QRing* ring_;
    Side side_;
    Coefficients coefficients_;
};

std::vector<BasisIndex> enumerate_basis(int l);

/// The generator matching a residual monomial, if it is one.
std::optional<BasisIndex> is_basis_monomial(const QMonomial& m, int l);

/// One rewrite of b^n c^s d^r (s + r >= l, r >= 1) through
/// delta * a^k b^n c^s with k = l - r.
ModuleElement eliminate_d_family(int n, int s, int r, const QRing& ring, Side side = Side::left);

/// One rewrite of a^m b^n c^s (s < m) through alpha * b^n c^s d^k with
/// k = l - m.
ModuleElement eliminate_a_family(int m, int n, int s, const QRing& ring, Side side = Side::left);

Decomposition decompose(const QElement& x, Side side);
QElement recompose(const Decomposition& d);

// ---------------------------------------------------------------------------
// Localization

enum class LocalChart { U_alpha, U_beta };

/// Exponents of a chart monomial: a^x b^y c^z on U_alpha, a^x b^y d^z on U_beta.
struct ChartMonomial {
    int x = 0;
    int y = 0;
    int z = 0;
    friend auto operator<=>(const ChartMonomial&, const ChartMonomial&) = default;
};

/// numerator / alpha^k (U_alpha) or numerator / beta^k (U_beta).
struct LocalCoefficient {
    ClassicalElement numerator;
    int k = 0;
};

struct LocalizedElement {
    LocalChart chart;
    const QRing* ring;
    std::map<ChartMonomial, LocalCoefficient> terms;
};

LocalizedElement localize(const QElement& x, LocalChart chart);

/// Multiplies through by the common denominator rho^K and evaluates in the
/// quantum algebra, returning (rho^K * x, K) where rho is alpha or beta.
std::pair<QElement, int> clear_denominators(const LocalizedElement& loc);

/// Exact division by alpha (resp. beta) in A(SL(2)), if it is exact.
std::optional<ClassicalElement> divide_by_alpha(const ClassicalElement& f);
std::optional<ClassicalElement> divide_by_beta(const ClassicalElement& f);

// ---------------------------------------------------------------------------
// Oracle

/// Reduced classical monomials of total degree <= bound.
std::vector<ClassicalMonomial> classical_monomials_up_to(int bound);

int default_degree_bound(const QElement& x);

/// Solves for the coefficients directly as an exact linear system whose
/// unknowns are the classical monomial coefficients (degree <= bound) of
/// every generator.  Throws VerificationError if the system is
/// inconsistent (bound too small) or has more than one solution.
Decomposition oracle_decompose(const QElement& x, Side side, std::optional<int> degree_bound = std::nullopt);

struct FreenessReport {
    int monomials_checked = 0;
    int kernel_dimension = 0;
    bool all_decomposed = false;
    int columns = 0;
};

FreenessReport verify_freeness(const RootSpec& spec, Side side, int degree_bound);
FreenessReport verify_freeness(int l, Side side, int degree_bound);

}  // namespace qsl2
