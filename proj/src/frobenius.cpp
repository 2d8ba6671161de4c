#include "qsl2/frobenius.hpp"

#include <stdexcept>

namespace qsl2 {

bool is_residual(const QMonomial& m, int l)
{
    return m.is_reduced() && m.a < l && m.b < l && m.c < l && m.d < l;
}

void ModuleElement::add_term(const QMonomial& key, const ClassicalElement& coeff)
{
    if (!is_residual(key, ring_->l()))
        throw DomainError("module key violates the residual exponent bounds");
    if (coeff.is_zero())
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

ClassicalElement ModuleElement::take(const QMonomial& key)
{
    auto it = terms_.find(key);
    if (it == terms_.end())
        return ClassicalElement(*ring_);
    ClassicalElement out = std::move(it->second);
    terms_.erase(it);
    return out;
}

QElement lift(const ClassicalElement& g)
{
    const QRing& ring = g.ring();
    const int l = ring.l();
    QElement out(ring);
    for (const auto& [m, c] : g.terms())
        out.add_term({l * m.alpha, l * m.beta, l * m.gamma, l * m.delta}, c);
    return out;
}

ModuleElement central_reduce(const QElement& x, Side side)
{
    const QRing& ring = x.ring();
    const int l = ring.l();
    ModuleElement out(ring, side);
    for (const auto& [m, c] : x.terms()) {
        const QMonomial block{l * (m.a / l), l * (m.b / l), l * (m.c / l), l * (m.d / l)};
        const QMonomial residual{m.a % l, m.b % l, m.c % l, m.d % l};

        QElement::Terms product;
        if (side == Side::left)
            accumulate_product(ring, block, residual, ring.one(), product);
        else
            accumulate_product(ring, residual, block, ring.one(), product);
        if (product.size() != 1 || product.begin()->first != m)
            throw std::logic_error("central_reduce: block move did not yield a single monomial");
        const Cyclotomic sigma = product.begin()->second.inverse();

        ClassicalElement coeff = ClassicalElement::normalize(
            ring, {m.a / l, m.b / l, m.c / l, m.d / l}, c * sigma);
        out.add_term(residual, coeff);
    }
    return out;
}

QElement module_recompose(const ModuleElement& m)
{
    const QRing& ring = m.ring();
    QElement::Terms terms;
    for (const auto& [key, coeff] : m.terms()) {
        for (const auto& [cm, cc] : coeff.terms()) {
            const int l = ring.l();
            const QMonomial block{l * cm.alpha, l * cm.beta, l * cm.gamma, l * cm.delta};
            if (m.side() == Side::left)
                accumulate_product(ring, block, key, cc, terms);
            else
                accumulate_product(ring, key, block, cc, terms);
        }
    }
    QElement out(ring);
    for (const auto& [mono, c] : terms)
        out.add_term(mono, c);
    return out;
}

bool is_central(const QElement& x)
{
    for (char g : {'a', 'b', 'c', 'd'}) {
        const QElement gen = QElement::generator(x.ring(), g);
        if (!(qmul(x, gen) == qmul(gen, x)))
            return false;
    }
    return true;
}

ClosureReport closure_diagnostic(int l, int order, int zeta_exponent)
{
    const RootSpec spec = diagnostic_root_spec(l, order, zeta_exponent);
    const QRing& ring = QRing::get(spec);
    const int p = (l % 2 == 1 && order == 2 * l) ? 2 * l : l;

    auto mono = [&](int a, int b, int c, int d) { return QElement::monomial(ring, {a, b, c, d}); };
    const QElement one = QElement::scalar(ring, ring.one());

    ClosureReport report{spec, p, false, QElement(ring), false, QElement(ring), false,
                         TensorElement(ring), false};

    const QElement powers[4] = {mono(p, 0, 0, 0), mono(0, p, 0, 0), mono(0, 0, p, 0),
                                mono(0, 0, 0, p)};
    report.powers_commute = true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(qmul(powers[i], powers[j]) == qmul(powers[j], powers[i])))
                report.powers_commute = false;

    report.determinant_relation = qmul(mono(l, 0, 0, 0), mono(0, 0, 0, l));
    report.determinant_matches = report.determinant_relation == one + mono(0, l, l, 0);

    report.power_determinant = qmul(powers[0], powers[3]);
    report.determinant_closes = report.power_determinant == one + mono(0, p, p, 0);

    report.coproduct_defect = coproduct(powers[0]) - TensorElement::pure(powers[0], powers[0])
                              - TensorElement::pure(powers[1], powers[2]);
    report.coproduct_closes = report.coproduct_defect.is_zero();
    return report;
}

}  // namespace qsl2
