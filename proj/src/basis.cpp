#include "qsl2/basis.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "qsl2/exactla.hpp"

namespace qsl2 {

bool BasisIndex::is_valid(int l) const
{
    if (family == Family::A)
        return 1 <= m && m <= l - 1 && 0 <= n && n <= l - 1 && m <= s && s <= l - 1;
    return 0 <= n && n <= l - 1 && 0 <= r && r <= l - 1 && 0 <= s && s <= l - r - 1;
}

QMonomial BasisIndex::monomial() const
{
    if (family == Family::A)
        return {m, n, s, 0};
    return {0, n, s, r};
}

void Decomposition::add(const BasisIndex& index, const ClassicalElement& coeff)
{
    if (!index.is_valid(ring_->l()))
        throw DomainError("decomposition key violates the generator bounds");
    if (coeff.is_zero())
        return;
    auto it = coefficients_.find(index);
    if (it == coefficients_.end()) {
        coefficients_.emplace(index, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        coefficients_.erase(it);
}

std::vector<BasisIndex> enumerate_basis(int l)
{
    if (l < 2)
        throw DomainError("enumerate_basis: l must be at least 2");
    std::vector<BasisIndex> out;
    for (int m = 1; m <= l - 1; ++m)
        for (int n = 0; n <= l - 1; ++n)
            for (int s = m; s <= l - 1; ++s)
                out.push_back(BasisIndex::family_a(m, n, s));
    for (int n = 0; n <= l - 1; ++n)
        for (int r = 0; r <= l - 1; ++r)
            for (int s = 0; s <= l - r - 1; ++s)
                out.push_back(BasisIndex::family_d(n, s, r));
    return out;
}

std::optional<BasisIndex> is_basis_monomial(const QMonomial& m, int l)
{
    if (!is_residual(m, l))
        throw DomainError("is_basis_monomial: monomial is not residual-reduced");
    BasisIndex index = m.a > 0 ? BasisIndex::family_a(m.a, m.b, m.c)
                               : BasisIndex::family_d(m.b, m.c, m.d);
    if (index.is_valid(l))
        return index;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

struct RelationCache {
    std::mutex mutex;
    std::map<std::tuple<const QRing*, Side, QMonomial>, ModuleElement> relations;
};

RelationCache& relation_cache()
{
    static RelationCache cache;
    return cache;
}

// Rewrites target through rho * partner where rho = lift(block), using
// the engine expansion
//   rho * partner = c0 * target + rest   =>   target = c0^-1 (rho * partner - rest).
ModuleElement relation_through(const QRing& ring, Side side, const QMonomial& target,
                               const QMonomial& partner, const ClassicalMonomial& block)
{
    const ClassicalElement rho = ClassicalElement::monomial(ring, block);
    const QElement lifted = lift(rho);
    const QElement partner_el = QElement::monomial(ring, partner);
    const QElement expanded = side == Side::left ? qmul(lifted, partner_el) : qmul(partner_el, lifted);

    ModuleElement rest = central_reduce(expanded, side);
    const ClassicalElement lead = rest.take(target);
    const std::optional<Cyclotomic> c0 = lead.as_scalar();
    if (!c0 || c0->is_zero())
        throw VerificationError("elimination: target monomial has no invertible scalar coefficient");
    const Cyclotomic inv = c0->inverse();

    ModuleElement out(ring, side);
    out.add_term(partner, rho * inv);
    for (const auto& [key, coeff] : rest.terms())
        out.add_term(key, -(coeff * inv));

    if (!(module_recompose(out) == QElement::monomial(ring, target)))
        throw VerificationError("elimination relation failed engine validation");
    return out;
}

ModuleElement cached_relation(const QRing& ring, Side side, const QMonomial& target,
                              ModuleElement (*build)(const QRing&, Side, const QMonomial&))
{
    auto& cache = relation_cache();
    const auto key = std::make_tuple(&ring, side, target);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.relations.find(key);
        if (it != cache.relations.end())
            return it->second;
    }
    ModuleElement rel = build(ring, side, target);
    std::lock_guard lock(cache.mutex);
    cache.relations.emplace(key, rel);
    return rel;
}

ModuleElement build_d_relation(const QRing& ring, Side side, const QMonomial& target)
{
    const int l = ring.l();
    const int k = l - target.d;
    const QMonomial partner{k, target.b, target.c, 0};
    ModuleElement rel = relation_through(ring, side, target, partner, {0, 0, 0, 1});
    // Termination: every other term is a generator or a family-D violation
    // with a strictly larger c exponent.
    for (const auto& [key, coeff] : rel.terms()) {
        if (key == partner) {
            if (!is_basis_monomial(key, l))
                throw VerificationError("d-elimination: delta term is not a generator");
            continue;
        }
        if (is_basis_monomial(key, l))
            continue;
        if (key.a != 0 || key.d != target.d || key.c <= target.c)
            throw VerificationError("d-elimination: termination measure violated");
    }
    return rel;
}

ModuleElement build_a_relation(const QRing& ring, Side side, const QMonomial& target)
{
    const int l = ring.l();
    const int k = l - target.a;
    const QMonomial partner{0, target.b, target.c, k};
    ModuleElement rel = relation_through(ring, side, target, partner, {1, 0, 0, 0});
    for (const auto& [key, coeff] : rel.terms()) {
        if (key == partner) {
            if (!is_basis_monomial(key, l))
                throw VerificationError("a-elimination: alpha term is not a generator");
            continue;
        }
        // c never wraps and strictly increases.
        if (key.a != target.a || key.c <= target.c)
            throw VerificationError("a-elimination: termination measure violated");
    }
    return rel;
}

}  // namespace

ModuleElement eliminate_d_family(int n, int s, int r, const QRing& ring, Side side)
{
    const int l = ring.l();
    const QMonomial target{0, n, s, r};
    if (!is_residual(target, l) || r < 1 || s + r < l)
        throw DomainError("eliminate_d_family: b^n c^s d^r is not a family-D violation");
    return cached_relation(ring, side, target, &build_d_relation);
}

ModuleElement eliminate_a_family(int m, int n, int s, const QRing& ring, Side side)
{
    const int l = ring.l();
    const QMonomial target{m, n, s, 0};
    if (!is_residual(target, l) || m < 1 || s >= m)
        throw DomainError("eliminate_a_family: a^m b^n c^s is not a family-A violation");
    return cached_relation(ring, side, target, &build_a_relation);
}

Decomposition decompose(const QElement& x, Side side)
{
    const QRing& ring = x.ring();
    const int l = ring.l();
    ModuleElement module = central_reduce(x, side);

    // Rewrites only create violations with a larger c exponent in the same
    // family, so taking the smallest c first visits each key at most once.
    const long ceiling = 2L * l * l * l * l;
    long steps = 0;
    for (;;) {
        std::optional<QMonomial> next;
        for (const auto& [key, coeff] : module.terms()) {
            if (is_basis_monomial(key, l))
                continue;
            if (!next || key.c < next->c)
                next = key;
        }
        if (!next)
            break;
        if (++steps > ceiling)
            throw VerificationError("decompose: elimination did not terminate");
        const ClassicalElement coeff = module.take(*next);
        const ModuleElement rel = next->a > 0
                                      ? eliminate_a_family(next->a, next->b, next->c, ring, side)
                                      : eliminate_d_family(next->b, next->c, next->d, ring, side);
        for (const auto& [key, g] : rel.terms())
            module.add_term(key, classical_mul(coeff, g));
    }

    Decomposition out(ring, side);
    for (const auto& [key, coeff] : module.terms())
        out.add(*is_basis_monomial(key, l), coeff);
    return out;
}

QElement recompose(const Decomposition& d)
{
    ModuleElement module(d.ring(), d.side());
    for (const auto& [index, coeff] : d.coefficients())
        module.add_term(index.monomial(), coeff);
    return module_recompose(module);
}

// ---------------------------------------------------------------------------
// Localization

namespace {

using ChartTerms = std::map<ChartMonomial, Cyclotomic>;

void chart_add(ChartTerms& terms, const ChartMonomial& m, const Cyclotomic& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

ChartTerms chart_combine(ChartTerms x, const ChartTerms& y, const Cyclotomic& scale)
{
    for (const auto& [m, c] : y)
        chart_add(x, m, c * scale);
    return x;
}

// Right multiplication by one letter in the chart algebra.
//   U_alpha: generators a^{+-1}, b, c (A = a^-1); d = a^-1 (1 + q bc).
//   U_beta:  generators a, b^{+-1}, d (B = b^-1); c = q^-1 b^-1 (ad - 1).
ChartTerms chart_mul_letter(const QRing& ring, LocalChart chart, const ChartTerms& in, char letter)
{
    ChartTerms out;
    if (chart == LocalChart::U_alpha) {
        switch (letter) {
        case 'a':
        case 'A': {
            const int e = letter == 'a' ? 1 : -1;
            for (const auto& [m, c] : in)
                chart_add(out, {m.x + e, m.y, m.z}, c * ring.q_pow(-static_cast<long>(e) * (m.y + m.z)));
            return out;
        }
        case 'b':
            for (const auto& [m, c] : in)
                chart_add(out, {m.x, m.y + 1, m.z}, c);
            return out;
        case 'c':
            for (const auto& [m, c] : in)
                chart_add(out, {m.x, m.y, m.z + 1}, c);
            return out;
        case 'd': {
            const ChartTerms t = chart_mul_letter(ring, chart, in, 'A');
            const ChartTerms tbc = chart_mul_letter(ring, chart, chart_mul_letter(ring, chart, t, 'b'), 'c');
            return chart_combine(t, tbc, ring.q_pow(1));
        }
        }
    } else {
        switch (letter) {
        case 'a':
            // a^x b^y d^z a = q^{-2z-y} a^{x+1} b^y d^z + (1 - q^{-2z}) a^x b^y d^{z-1}
            for (const auto& [m, c] : in) {
                chart_add(out, {m.x + 1, m.y, m.z}, c * ring.q_pow(-2L * m.z - m.y));
                if (m.z > 0)
                    chart_add(out, {m.x, m.y, m.z - 1}, c * (ring.one() - ring.q_pow(-2L * m.z)));
            }
            return out;
        case 'b':
        case 'B': {
            const int e = letter == 'b' ? 1 : -1;
            for (const auto& [m, c] : in)
                chart_add(out, {m.x, m.y + e, m.z}, c * ring.q_pow(-static_cast<long>(e) * m.z));
            return out;
        }
        case 'd':
            for (const auto& [m, c] : in)
                chart_add(out, {m.x, m.y, m.z + 1}, c);
            return out;
        case 'c': {
            const ChartTerms t = chart_mul_letter(ring, chart, in, 'B');
            const ChartTerms tad = chart_mul_letter(ring, chart, chart_mul_letter(ring, chart, t, 'a'), 'd');
            return chart_combine(chart_combine(ChartTerms{}, tad, ring.q_pow(-1)), t, -ring.q_pow(-1));
        }
        }
    }
    throw std::logic_error("chart_mul_letter: unsupported letter");
}

ChartTerms chart_mul_power(const QRing& ring, LocalChart chart, ChartTerms terms, char letter, int count)
{
    const char inverse = letter == 'a' ? 'A' : 'B';
    for (int i = 0; i < std::abs(count); ++i)
        terms = chart_mul_letter(ring, chart, terms, count > 0 ? letter : inverse);
    return terms;
}

// The chart word of a chart monomial as a product in the chart algebra.
ChartTerms chart_product(const QRing& ring, LocalChart chart, const ChartMonomial& left,
                         const ChartMonomial& right)
{
    ChartTerms terms{{left, ring.one()}};
    terms = chart_mul_power(ring, chart, terms, 'a', right.x);
    if (chart == LocalChart::U_alpha) {
        terms = chart_mul_power(ring, chart, terms, 'b', right.y);
        for (int i = 0; i < right.z; ++i)
            terms = chart_mul_letter(ring, chart, terms, 'c');
    } else {
        terms = chart_mul_power(ring, chart, terms, 'b', right.y);
        for (int i = 0; i < right.z; ++i)
            terms = chart_mul_letter(ring, chart, terms, 'd');
    }
    return terms;
}

int floor_div(int x, int l) { return x >= 0 ? x / l : -((-x + l - 1) / l); }

ClassicalElement rho_power(const QRing& ring, LocalChart chart, int k)
{
    return chart == LocalChart::U_alpha ? ClassicalElement::monomial(ring, {k, 0, 0, 0})
                                        : ClassicalElement::monomial(ring, {0, k, 0, 0});
}

}  // namespace

std::optional<ClassicalElement> divide_by_alpha(const ClassicalElement& f)
{
    const QRing& ring = f.ring();
    ClassicalElement quotient(ring);
    ClassicalElement remainder(ring);
    for (const auto& [m, c] : f.terms()) {
        if (m.alpha > 0) {
            quotient.add_term({m.alpha - 1, m.beta, m.gamma, m.delta}, c);
            continue;
        }
        // beta^j gamma^k = beta^{j-t} gamma^{k-t} (alpha delta - 1)^t, t = min(j, k)
        const int t = std::min(m.beta, m.gamma);
        Integer binom = 1;
        for (int u = 0; u <= t; ++u) {
            Cyclotomic coeff = c * Rational(binom);
            if ((t - u) % 2 == 1)
                coeff = -coeff;
            const ClassicalMonomial rest{0, m.beta - t, m.gamma - t, m.delta};
            if (u == 0)
                remainder.add_term(rest, coeff);
            else
                quotient += ClassicalElement::normalize(
                    ring, {u - 1, rest.beta, rest.gamma, rest.delta + u}, coeff);
            binom = binom * (t - u) / (u + 1);
        }
    }
    if (!remainder.is_zero())
        return std::nullopt;
    return quotient;
}

std::optional<ClassicalElement> divide_by_beta(const ClassicalElement& f)
{
    ClassicalElement quotient(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m.beta == 0)
            return std::nullopt;
        quotient.add_term({m.alpha, m.beta - 1, m.gamma, m.delta}, c);
    }
    return quotient;
}

LocalizedElement localize(const QElement& x, LocalChart chart)
{
    const QRing& ring = x.ring();
    const int l = ring.l();

    ChartTerms chart_form;
    for (const auto& [m, c] : x.terms()) {
        ChartTerms t{{ChartMonomial{}, c}};
        t = chart_mul_power(ring, chart, t, 'a', m.a);
        t = chart_mul_power(ring, chart, t, 'b', m.b);
        for (int i = 0; i < m.c; ++i)
            t = chart_mul_letter(ring, chart, t, 'c');
        for (int i = 0; i < m.d; ++i)
            t = chart_mul_letter(ring, chart, t, 'd');
        chart_form = chart_combine(std::move(chart_form), t, ring.one());
    }

    LocalizedElement out{chart, &ring, {}};
    for (const auto& [m, c] : chart_form) {
        const int X = floor_div(m.x, l);
        const int Y = floor_div(m.y, l);
        const int Z = floor_div(m.z, l);
        const ChartMonomial block{l * X, l * Y, l * Z};
        const ChartMonomial residual{m.x - l * X, m.y - l * Y, m.z - l * Z};
        const ChartTerms moved = chart_product(ring, chart, block, residual);
        if (moved.size() != 1 || moved.begin()->first != m)
            throw std::logic_error("localize: block move did not yield a single chart monomial");
        const Cyclotomic coeff = c * moved.begin()->second.inverse();

        ClassicalElement numerator(ring);
        int k = 0;
        if (chart == LocalChart::U_alpha) {
            numerator = ClassicalElement::normalize(ring, {std::max(X, 0), Y, Z, 0}, coeff);
            k = std::max(-X, 0);
        } else {
            numerator = ClassicalElement::normalize(ring, {X, std::max(Y, 0), 0, Z}, coeff);
            k = std::max(-Y, 0);
        }

        auto it = out.terms.find(residual);
        if (it == out.terms.end()) {
            out.terms.emplace(residual, LocalCoefficient{numerator, k});
            continue;
        }
        LocalCoefficient& acc = it->second;
        const int K = std::max(acc.k, k);
        acc.numerator = classical_mul(acc.numerator, rho_power(ring, chart, K - acc.k))
                        + classical_mul(numerator, rho_power(ring, chart, K - k));
        acc.k = K;
    }

    for (auto it = out.terms.begin(); it != out.terms.end();) {
        LocalCoefficient& lc = it->second;
        if (lc.numerator.is_zero()) {
            it = out.terms.erase(it);
            continue;
        }
        while (lc.k > 0) {
            auto q = chart == LocalChart::U_alpha ? divide_by_alpha(lc.numerator)
                                                  : divide_by_beta(lc.numerator);
            if (!q)
                break;
            lc.numerator = std::move(*q);
            --lc.k;
        }
        ++it;
    }
    return out;
}

std::pair<QElement, int> clear_denominators(const LocalizedElement& loc)
{
    const QRing& ring = *loc.ring;
    int K = 0;
    for (const auto& [m, lc] : loc.terms)
        K = std::max(K, lc.k);
    QElement total(ring);
    for (const auto& [m, lc] : loc.terms) {
        const ClassicalElement num = classical_mul(lc.numerator, rho_power(ring, loc.chart, K - lc.k));
        const QMonomial word = loc.chart == LocalChart::U_alpha ? QMonomial{m.x, m.y, m.z, 0}
                                                                : QMonomial{m.x, m.y, 0, m.z};
        total += qmul(lift(num), QElement::monomial(ring, word));
    }
    return {total, K};
}

// ---------------------------------------------------------------------------
// Oracle

std::vector<ClassicalMonomial> classical_monomials_up_to(int bound)
{
    std::vector<ClassicalMonomial> out;
    for (int deg = 0; deg <= bound; ++deg)
        for (int al = 0; al <= deg; ++al)
            for (int be = 0; al + be <= deg; ++be)
                for (int ga = 0; al + be + ga <= deg; ++ga) {
                    const int de = deg - al - be - ga;
                    if (al > 0 && de > 0)
                        continue;
                    out.push_back({al, be, ga, de});
                }
    return out;
}

int default_degree_bound(const QElement& x)
{
    int top = 0;
    for (const auto& [m, c] : x.terms())
        top = std::max({top, m.a, m.b, m.c, m.d});
    return top / x.ring().l() + 2;
}

namespace {

using Grade = std::pair<int, int>;

// (a - d, b - c) is preserved by every defining relation.
Grade grade_of(const QMonomial& m) { return {m.a - m.d, m.b - m.c}; }

struct Column {
    BasisIndex generator;
    ClassicalMonomial coefficient;
    QElement value;
};

std::map<Grade, std::vector<Column>> build_columns(const QRing& ring, Side side, int bound)
{
    const int l = ring.l();
    std::map<Grade, std::vector<Column>> blocks;
    for (const BasisIndex& g : enumerate_basis(l)) {
        const QMonomial gm = g.monomial();
        const QElement gen = QElement::monomial(ring, gm);
        for (const ClassicalMonomial& mu : classical_monomials_up_to(bound)) {
            const QElement lifted = lift(ClassicalElement::monomial(ring, mu));
            QElement value = side == Side::left ? qmul(lifted, gen) : qmul(gen, lifted);
            const Grade grade{gm.a - gm.d + l * (mu.alpha - mu.delta), gm.b - gm.c + l * (mu.beta - mu.gamma)};
            blocks[grade].push_back({g, mu, std::move(value)});
        }
    }
    return blocks;
}

struct BlockSystem {
    ExactMatrix matrix;
    std::map<QMonomial, std::size_t, GradedLex> rows;
};

BlockSystem build_block(const QRing& ring, const std::vector<Column>& columns,
                        const std::vector<QMonomial>& extra_rows, std::size_t extra_cols)
{
    std::map<QMonomial, std::size_t, GradedLex> rows;
    for (const auto& col : columns)
        for (const auto& [m, c] : col.value.terms())
            rows.emplace(m, 0);
    for (const auto& m : extra_rows)
        rows.emplace(m, 0);
    std::size_t idx = 0;
    for (auto& [m, i] : rows)
        i = idx++;
    ExactMatrix matrix(ring.field(), rows.size(), columns.size() + extra_cols);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].value.terms())
            matrix.at(rows.at(m), j) = c;
    return {std::move(matrix), std::move(rows)};
}

}  // namespace

Decomposition oracle_decompose(const QElement& x, Side side, std::optional<int> degree_bound)
{
    const QRing& ring = x.ring();
    Decomposition out(ring, side);
    if (x.is_zero())
        return out;
    const int bound = degree_bound.value_or(default_degree_bound(x));

    std::map<Grade, std::vector<std::pair<QMonomial, Cyclotomic>>> parts;
    for (const auto& [m, c] : x.terms())
        parts[grade_of(m)].emplace_back(m, c);

    const auto blocks = build_columns(ring, side, bound);
    for (const auto& [grade, part] : parts) {
        auto it = blocks.find(grade);
        if (it == blocks.end())
            throw VerificationError("oracle: no generator column in the grade of the input; "
                                    "degree bound " + std::to_string(bound) + " too small");
        const auto& columns = it->second;
        std::vector<QMonomial> targets;
        for (const auto& [m, c] : part)
            targets.push_back(m);
        BlockSystem sys = build_block(ring, columns, targets, 0);
        std::vector<Cyclotomic> rhs(sys.matrix.rows(), ring.zero());
        for (const auto& [m, c] : part)
            rhs[sys.rows.at(m)] = c;

        const auto solution = solve(sys.matrix, rhs);
        if (!solution)
            throw VerificationError("oracle: inconsistent system, degree bound "
                                    + std::to_string(bound) + " too small");
        if (!nullspace(sys.matrix).empty())
            throw VerificationError("oracle: multiple solutions at degree bound "
                                    + std::to_string(bound));
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if ((*solution)[j].is_zero())
                continue;
            ClassicalElement coeff(ring);
            coeff.add_term(columns[j].coefficient, (*solution)[j]);
            out.add(columns[j].generator, coeff);
        }
    }
    return out;
}

FreenessReport verify_freeness(const RootSpec& spec, Side side, int degree_bound)
{
    const QRing& ring = QRing::get(spec);
    const int l = spec.l;

    std::map<Grade, std::vector<QMonomial>> targets;
    int checked = 0;
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b)
            for (int c = 0; c < l; ++c)
                for (int d = 0; d < l; ++d) {
                    const QMonomial m{a, b, c, d};
                    if (!m.is_reduced())
                        continue;
                    targets[grade_of(m)].push_back(m);
                    ++checked;
                }

    FreenessReport report;
    report.monomials_checked = checked;
    report.all_decomposed = true;

    const auto blocks = build_columns(ring, side, degree_bound);
    for (const auto& [grade, columns] : blocks) {
        report.columns += static_cast<int>(columns.size());
        const auto tit = targets.find(grade);
        const std::vector<QMonomial> block_targets = tit == targets.end() ? std::vector<QMonomial>{} : tit->second;
        BlockSystem sys = build_block(ring, columns, block_targets, block_targets.size());
        for (std::size_t t = 0; t < block_targets.size(); ++t)
            sys.matrix.at(sys.rows.at(block_targets[t]), columns.size() + t) = ring.one();

        const RrefResult red = rref(std::move(sys.matrix), columns.size());
        report.kernel_dimension += static_cast<int>(columns.size() - red.rank());
        for (std::size_t t = 0; t < block_targets.size(); ++t)
            for (std::size_t r = red.rank(); r < red.matrix.rows(); ++r)
                if (!red.matrix.at(r, columns.size() + t).is_zero())
                    report.all_decomposed = false;
    }
    for (const auto& [grade, list] : targets)
        if (!blocks.contains(grade))
            report.all_decomposed = false;
    return report;
}

FreenessReport verify_freeness(int l, Side side, int degree_bound)
{
    return verify_freeness(make_root_spec(l), side, degree_bound);
}

}  // namespace qsl2
