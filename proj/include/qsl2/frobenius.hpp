#pragma once

// The subalgebra of l-th powers alpha = a^l, beta = b^l, gamma = c^l,
// delta = d^l and module presentations with classical coefficients.

#include <map>

#include "qsl2/qalgebra.hpp"

namespace qsl2 {

enum class Side { left, right };

/// Residual monomials (all exponents < l, min(a, d) = 0) with classical
/// coefficients acting on the recorded side.
class ModuleElement {
public:
    using Terms = std::map<QMonomial, ClassicalElement, GradedLex>;

    ModuleElement(const QRing& ring, Side side) : ring_(&ring), side_(side) {}

    const QRing& ring() const { return *ring_; }
    Side side() const { return side_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff on key; key must satisfy the residual exponent bounds.
    void add_term(const QMonomial& key, const ClassicalElement& coeff);
    /// Removes and returns the coefficient stored on key.
    ClassicalElement take(const QMonomial& key);

    friend bool operator==(const ModuleElement& x, const ModuleElement& y)
    {
        return x.ring_ == y.ring_ && x.side_ == y.side_ && x.terms_ == y.terms_;
    }

private:
    const QRing* ring_;
    Side side_;
    Terms terms_;
};

bool is_residual(const QMonomial& m, int l);

/// alpha -> a^l, beta -> b^l, gamma -> c^l, delta -> d^l, monomial-wise.
QElement lift(const ClassicalElement& g);

/// Splits every PBW monomial into an l-th power block and a residual,
/// moving the block to the requested side.  The sign picked up by the move
/// is read off from an engine product, never hard-coded.
ModuleElement central_reduce(const QElement& x, Side side);

/// sum lift(coeff) * key (left) or key * lift(coeff) (right).
QElement module_recompose(const ModuleElement& m);

/// x commutes with a, b, c and d.
bool is_central(const QElement& x);

struct ClosureReport {
    RootSpec spec;
    /// Exponent p of the powers whose closure is examined: l in the two
    /// admissible cases, 2l for odd l with q of order 2l.
    int power = 0;
    bool powers_commute = false;
    /// a^l d^l, expanded.
    QElement determinant_relation;
    /// a^l d^l == 1 + b^l c^l.
    bool determinant_matches = false;
    /// a^p d^p, expanded.
    QElement power_determinant;
    /// a^p d^p == 1 + b^p c^p.
    bool determinant_closes = false;
    /// D(a^p) - (a^p (x) a^p + b^p (x) c^p).
    TensorElement coproduct_defect;
    bool coproduct_closes = false;
};

ClosureReport closure_diagnostic(int l, int order, int zeta_exponent = 1);

}  // namespace qsl2
