#include "qsl2/qalgebra.hpp"

#include <mutex>
#include <tuple>

namespace qsl2 {

namespace {

void accumulate(QElement::Terms& terms, const QMonomial& m, const Cyclotomic& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

void accumulate(ClassicalElement::Terms& terms, const ClassicalMonomial& m, const Cyclotomic& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

long mod_floor(long k, long n)
{
    long r = k % n;
    return r < 0 ? r + n : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// QRing

struct QRing::Memo {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::vector<Cyclotomic>> bc_products;
};

const QRing& QRing::get(const RootSpec& spec)
{
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<QRing>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[{spec.l, spec.order, spec.zeta_exponent}];
    if (!slot)
        slot.reset(new QRing(spec));
    return *slot;
}

QRing::QRing(const RootSpec& spec)
    : spec_(spec), field_(&CycloField::get(spec.order)), memo_(std::make_unique<Memo>())
{
    for (int k = 0; k < spec.order; ++k)
        q_powers_.push_back(zeta_pow(spec, k));
}

QRing::~QRing() = default;

const Cyclotomic& QRing::q_pow(long k) const
{
    return q_powers_[static_cast<std::size_t>(mod_floor(k, spec_.order))];
}

const std::vector<Cyclotomic>& QRing::bc_product(int s, int sign) const
{
    std::lock_guard lock(memo_->mutex);
    auto& slot = memo_->bc_products[{s, sign}];
    if (slot.empty()) {
        std::vector<Cyclotomic> poly{one()};
        for (int j = 1; j <= s; ++j) {
            const Cyclotomic& root = q_pow(static_cast<long>(sign) * (2 * j - 1));
            poly.push_back(zero());
            for (std::size_t t = poly.size() - 1; t > 0; --t)
                poly[t] += root * poly[t - 1];
        }
        slot = std::move(poly);
    }
    return slot;
}

// ---------------------------------------------------------------------------
// QElement

QElement QElement::scalar(const QRing& ring, const Cyclotomic& value)
{
    return monomial(ring, QMonomial{}, value);
}

QElement QElement::monomial(const QRing& ring, const QMonomial& m)
{
    return monomial(ring, m, ring.one());
}

QElement QElement::monomial(const QRing& ring, const QMonomial& m, const Cyclotomic& coeff)
{
    QElement out(ring);
    if (m.is_reduced()) {
        out.add_term(m, coeff);
        return out;
    }
    QElement::Terms terms;
    QMonomial left{m.a, m.b, m.c, 0};
    QMonomial right{0, 0, 0, m.d};
    accumulate_product(ring, left, right, coeff, terms);
    out.terms_ = std::move(terms);
    return out;
}

QElement QElement::generator(const QRing& ring, char letter)
{
    switch (letter) {
    case 'a': return monomial(ring, {1, 0, 0, 0});
    case 'b': return monomial(ring, {0, 1, 0, 0});
    case 'c': return monomial(ring, {0, 0, 1, 0});
    case 'd': return monomial(ring, {0, 0, 0, 1});
    default: throw DomainError(std::string("unknown generator '") + letter + "'");
    }
}

Cyclotomic QElement::coefficient(const QMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_->zero() : it->second;
}

void QElement::add_term(const QMonomial& m, const Cyclotomic& coeff)
{
    if (!m.is_reduced())
        throw DomainError("add_term: monomial is not PBW-reduced");
    if (coeff.order() != ring_->spec().order)
        throw DomainError("add_term: coefficient from a different field");
    accumulate(terms_, m, coeff);
}

void QElement::check_ring(const QElement& other) const
{
    if (ring_ != other.ring_)
        throw DomainError("quantum elements over different roots of unity");
}

QElement& QElement::operator+=(const QElement& other)
{
    check_ring(other);
    for (const auto& [m, c] : other.terms_)
        accumulate(terms_, m, c);
    return *this;
}

QElement& QElement::operator-=(const QElement& other)
{
    check_ring(other);
    for (const auto& [m, c] : other.terms_)
        accumulate(terms_, m, -c);
    return *this;
}

QElement& QElement::operator*=(const Cyclotomic& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

QElement QElement::operator-() const
{
    QElement out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

QElement operator*(const QElement& x, const QElement& y) { return qmul(x, y); }

// ---------------------------------------------------------------------------
// Monomial products

namespace {

// coeff * q^{qexp} * a^I b^J c^K d^M, contracting a^s d^s = P_s(bc) when
// both a and d occur: a^s b^J c^K = q^{s(J+K)} b^J c^K a^s.
void add_mixed(const QRing& ring, int I, int J, int K, int M, long qexp, const Cyclotomic& coeff,
               QElement::Terms& out)
{
    const int s = std::min(I, M);
    if (s == 0) {
        accumulate(out, {I, J, K, M}, coeff * ring.q_pow(qexp));
        return;
    }
    const auto& poly = ring.bc_product(s, +1);
    const Cyclotomic base = coeff * ring.q_pow(qexp + static_cast<long>(s) * (J + K));
    for (int u = 0; u <= s; ++u) {
        if (poly[static_cast<std::size_t>(u)].is_zero())
            continue;
        accumulate(out, {I - s, J + u, K + u, M - s}, base * poly[static_cast<std::size_t>(u)]);
    }
}

}  // namespace

void accumulate_product(const QRing& ring, const QMonomial& x, const QMonomial& y,
                        const Cyclotomic& coeff, QElement::Terms& out)
{
    // x * y = a^i b^j c^k [d^m a^n] b^j' c^k' d^m'
    const int m = x.d;
    const int n = y.a;
    if (m == 0 || n == 0) {
        // a^i b^j c^k a^n = q^{-n(j+k)} a^{i+n} b^j c^k
        // d^m b^j' c^k' = q^{-m(j'+k')} b^j' c^k' d^m
        const long qexp = -static_cast<long>(n) * (x.b + x.c) - static_cast<long>(m) * (y.b + y.c);
        add_mixed(ring, x.a + n, x.b + y.b, x.c + y.c, m + y.d, qexp, coeff, out);
        return;
    }
    // d^m a^n = sum_t f_t (bc)^t times a^{n-m} (n > m) or d^{m-n} (m >= n),
    // with f the coefficients of d^s a^s = prod_{j=1}^{s} (1 + q^{-(2j-1)} bc).
    const int s = std::min(m, n);
    const auto& poly = ring.bc_product(s, -1);
    const int p = n - s;  // leftover a
    const int r = m - s;  // leftover d
    for (int t = 0; t <= s; ++t) {
        const Cyclotomic& f = poly[static_cast<std::size_t>(t)];
        if (f.is_zero())
            continue;
        // (bc)^t moves left past a^p or right past d^r: q^{-2t p} resp. q^{-2t r}.
        long qexp = -2L * t * (p + r);
        qexp += -static_cast<long>(p) * (x.b + x.c) - static_cast<long>(r) * (y.b + y.c);
        add_mixed(ring, x.a + p, x.b + t + y.b, x.c + t + y.c, r + y.d, qexp, coeff * f, out);
    }
}

QElement qmul(const QElement& x, const QElement& y)
{
    if (!(x.ring() == y.ring()))
        throw DomainError("qmul: operands over different roots of unity");
    const QRing& ring = x.ring();
    QElement::Terms terms;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            accumulate_product(ring, mx, my, cx * cy, terms);
    QElement out(ring);
    for (const auto& [m, c] : terms)
        out.add_term(m, c);
    return out;
}

QElement power(const QElement& x, int n)
{
    if (n < 0)
        throw DomainError("power: negative exponent");
    QElement result = QElement::scalar(x.ring(), x.ring().one());
    for (int i = 0; i < n; ++i)
        result = qmul(result, x);
    return result;
}

// ---------------------------------------------------------------------------
// Word rewriting

QElement straighten(const Word& word, const QRing& ring)
{
    for (char ch : word.letters)
        if (ch < 'a' || ch > 'd')
            throw DomainError(std::string("straighten: unknown letter '") + ch + "'");

    std::map<std::string, Cyclotomic> pending;
    pending.emplace(word.letters, word.prefactor);
    QElement result(ring);

    auto push = [&](std::string w, const Cyclotomic& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = pending.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                pending.erase(it);
        }
    };

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string w = std::move(node.key());
        const Cyclotomic coeff = std::move(node.mapped());

        // First adjacent inversion, if any.
        std::size_t pos = w.size();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                pos = i;
                break;
            }
        }
        if (pos < w.size()) {
            const std::string head = w.substr(0, pos);
            const std::string tail = w.substr(pos + 2);
            const char x = w[pos];
            const char y = w[pos + 1];
            if (x == 'd' && y == 'a') {
                push(head + tail, coeff);
                push(head + "bc" + tail, coeff * ring.q_pow(-1));
            } else if (x == 'c' && y == 'b') {
                push(head + "bc" + tail, coeff);
            } else {
                // ba, ca, db, dc: each swap costs q^-1
                push(head + y + x + tail, coeff * ring.q_pow(-1));
            }
            continue;
        }

        QMonomial mono;
        for (char ch : w) {
            switch (ch) {
            case 'a': ++mono.a; break;
            case 'b': ++mono.b; break;
            case 'c': ++mono.c; break;
            default: ++mono.d; break;
            }
        }
        if (mono.a == 0 || mono.d == 0) {
            result.add_term(mono, coeff);
            continue;
        }
        // Sorted but mixed: move the last a rightward across b^j c^k
        // (ab -> q ba, ac -> q ca), then ad -> 1 + q bc.
        const std::string head(static_cast<std::size_t>(mono.a - 1), 'a');
        const std::string mid = std::string(static_cast<std::size_t>(mono.b), 'b')
                                + std::string(static_cast<std::size_t>(mono.c), 'c');
        const std::string tail(static_cast<std::size_t>(mono.d - 1), 'd');
        const Cyclotomic moved = coeff * ring.q_pow(mono.b + mono.c);
        push(head + mid + tail, moved);
        push(head + mid + "bc" + tail, moved * ring.q_pow(1));
    }
    return result;
}

QElement straighten(const std::string& letters, const QRing& ring)
{
    return straighten(Word{ring.one(), letters}, ring);
}

// ---------------------------------------------------------------------------
// ClassicalElement

ClassicalElement ClassicalElement::scalar(const QRing& ring, const Cyclotomic& value)
{
    ClassicalElement out(ring);
    accumulate(out.terms_, ClassicalMonomial{}, value);
    return out;
}

ClassicalElement ClassicalElement::monomial(const QRing& ring, const ClassicalMonomial& m)
{
    return normalize(ring, m, ring.one());
}

ClassicalElement ClassicalElement::normalize(const QRing& ring, const ClassicalMonomial& m,
                                             const Cyclotomic& coeff)
{
    if (m.alpha < 0 || m.beta < 0 || m.gamma < 0 || m.delta < 0)
        throw DomainError("classical monomial with negative exponent");
    ClassicalElement out(ring);
    const int s = std::min(m.alpha, m.delta);
    // (alpha delta)^s = (1 + beta gamma)^s
    Integer binom = 1;
    for (int u = 0; u <= s; ++u) {
        accumulate(out.terms_, {m.alpha - s, m.beta + u, m.gamma + u, m.delta - s},
                   coeff * Rational(binom));
        binom = binom * (s - u) / (u + 1);
    }
    return out;
}

int ClassicalElement::max_degree() const
{
    int deg = 0;
    for (const auto& [m, c] : terms_)
        deg = std::max(deg, m.degree());
    return deg;
}

std::optional<Cyclotomic> ClassicalElement::as_scalar() const
{
    if (terms_.empty())
        return ring_->zero();
    if (terms_.size() == 1 && terms_.begin()->first == ClassicalMonomial{})
        return terms_.begin()->second;
    return std::nullopt;
}

void ClassicalElement::add_term(const ClassicalMonomial& m, const Cyclotomic& coeff)
{
    if (!m.is_reduced())
        throw DomainError("classical add_term: monomial is not reduced");
    accumulate(terms_, m, coeff);
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& other)
{
    if (ring_ != other.ring_)
        throw DomainError("classical elements over different roots of unity");
    for (const auto& [m, c] : other.terms_)
        accumulate(terms_, m, c);
    return *this;
}

ClassicalElement& ClassicalElement::operator-=(const ClassicalElement& other)
{
    if (ring_ != other.ring_)
        throw DomainError("classical elements over different roots of unity");
    for (const auto& [m, c] : other.terms_)
        accumulate(terms_, m, -c);
    return *this;
}

ClassicalElement& ClassicalElement::operator*=(const Cyclotomic& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

ClassicalElement ClassicalElement::operator-() const
{
    ClassicalElement out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

ClassicalElement operator*(const ClassicalElement& x, const ClassicalElement& y)
{
    return classical_mul(x, y);
}

ClassicalElement classical_mul(const ClassicalElement& x, const ClassicalElement& y)
{
    if (!(x.ring() == y.ring()))
        throw DomainError("classical_mul: operands over different roots of unity");
    ClassicalElement out(x.ring());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            out += ClassicalElement::normalize(
                x.ring(),
                {mx.alpha + my.alpha, mx.beta + my.beta, mx.gamma + my.gamma, mx.delta + my.delta},
                cx * cy);
    return out;
}

ClassicalElement classical_normalize(const QRing& ring, const ClassicalMonomial& m,
                                     const Cyclotomic& coeff)
{
    return ClassicalElement::normalize(ring, m, coeff);
}

ClassicalElement classical_power(const ClassicalElement& x, int n)
{
    if (n < 0)
        throw DomainError("classical_power: negative exponent");
    ClassicalElement result = ClassicalElement::scalar(x.ring(), x.ring().one());
    for (int i = 0; i < n; ++i)
        result = classical_mul(result, x);
    return result;
}

// ---------------------------------------------------------------------------
// Tensors and Hopf maps

TensorElement TensorElement::pure(const QElement& left, const QElement& right)
{
    if (!(left.ring() == right.ring()))
        throw DomainError("tensor legs over different roots of unity");
    TensorElement out(left.ring());
    for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms())
            out.add_term(ml, mr, cl * cr);
    return out;
}

void TensorElement::add_term(const QMonomial& left, const QMonomial& right, const Cyclotomic& coeff)
{
    if (!left.is_reduced() || !right.is_reduced())
        throw DomainError("tensor add_term: leg is not PBW-reduced");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace({left, right}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other)
{
    for (const auto& [k, c] : other.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other)
{
    for (const auto& [k, c] : other.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

TensorElement tensor_mul(const TensorElement& u, const TensorElement& v)
{
    if (!(u.ring() == v.ring()))
        throw DomainError("tensor_mul: operands over different roots of unity");
    const QRing& ring = u.ring();
    TensorElement out(ring);
    for (const auto& [ku, cu] : u.terms()) {
        for (const auto& [kv, cv] : v.terms()) {
            QElement::Terms left;
            QElement::Terms right;
            accumulate_product(ring, ku.first, kv.first, ring.one(), left);
            accumulate_product(ring, ku.second, kv.second, ring.one(), right);
            const Cyclotomic c = cu * cv;
            for (const auto& [ml, cl] : left)
                for (const auto& [mr, cr] : right)
                    out.add_term(ml, mr, c * cl * cr);
        }
    }
    return out;
}

namespace {

TensorElement generator_coproduct(const QRing& ring, char letter)
{
    auto g = [&](char ch) { return QElement::generator(ring, ch); };
    switch (letter) {
    case 'a': return TensorElement::pure(g('a'), g('a')) + TensorElement::pure(g('b'), g('c'));
    case 'b': return TensorElement::pure(g('a'), g('b')) + TensorElement::pure(g('b'), g('d'));
    case 'c': return TensorElement::pure(g('c'), g('a')) + TensorElement::pure(g('d'), g('c'));
    default: return TensorElement::pure(g('c'), g('b')) + TensorElement::pure(g('d'), g('d'));
    }
}

}  // namespace

TensorElement coproduct(const QElement& x)
{
    const QRing& ring = x.ring();
    const TensorElement unit = TensorElement::pure(QElement::scalar(ring, ring.one()),
                                                   QElement::scalar(ring, ring.one()));
    // Powers of the generator coproducts, built lazily.
    std::map<char, std::vector<TensorElement>> powers;
    auto gen_power = [&](char letter, int n) -> const TensorElement& {
        auto& list = powers[letter];
        if (list.empty())
            list.push_back(unit);
        while (static_cast<int>(list.size()) <= n)
            list.push_back(tensor_mul(list.back(), generator_coproduct(ring, letter)));
        return list[static_cast<std::size_t>(n)];
    };

    TensorElement out(ring);
    for (const auto& [m, c] : x.terms()) {
        TensorElement t = gen_power('a', m.a);
        t = tensor_mul(t, gen_power('b', m.b));
        t = tensor_mul(t, gen_power('c', m.c));
        t = tensor_mul(t, gen_power('d', m.d));
        for (const auto& [k, ct] : t.terms())
            out.add_term(k.first, k.second, c * ct);
    }
    return out;
}

Cyclotomic counit(const QElement& x)
{
    Cyclotomic sum = x.ring().zero();
    for (const auto& [m, c] : x.terms())
        if (m.b == 0 && m.c == 0)
            sum += c;
    return sum;
}

QElement antipode(const QElement& x)
{
    const QRing& ring = x.ring();
    QElement::Terms terms;
    for (const auto& [m, c] : x.terms()) {
        // S(a^i b^j c^k d^m) = a^m (-q c)^k (-q^-1 b)^j d^i
        Cyclotomic coeff = c * ring.q_pow(m.c - m.b);
        if ((m.b + m.c) % 2 == 1)
            coeff = -coeff;
        accumulate_product(ring, {m.d, m.b, m.c, 0}, {0, 0, 0, m.a}, coeff, terms);
    }
    QElement out(ring);
    for (const auto& [m, c] : terms)
        out.add_term(m, c);
    return out;
}

QElement multiply_legs(const TensorElement& t)
{
    const QRing& ring = t.ring();
    QElement::Terms terms;
    for (const auto& [k, c] : t.terms())
        accumulate_product(ring, k.first, k.second, c, terms);
    QElement out(ring);
    for (const auto& [m, c] : terms)
        out.add_term(m, c);
    return out;
}

}  // namespace qsl2
