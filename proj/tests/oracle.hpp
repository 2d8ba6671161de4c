#pragma once

// Reference implementations used only by the tests.  They share nothing
// with the library beyond field arithmetic: products are computed by naive
// rewriting of letter strings, and normal forms of sorted words are reached
// by moving the first d leftwards (the library moves a rightwards).

#include <array>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include "qsl2/qalgebra.hpp"

namespace oracle {

using qsl2::Cyclotomic;
using qsl2::QElement;
using qsl2::QMonomial;
using qsl2::QRing;

class NaiveAlgebra {
public:
    explicit NaiveAlgebra(const QRing& ring) : ring_(ring) {}

    QElement reduce(const std::string& word)
    {
        QElement out(ring_);
        for (const auto& [w, c] : normal(word))
            out.add_term(to_monomial(w), c);
        return out;
    }

    QElement multiply(const QElement& x, const QElement& y)
    {
        QElement out(ring_);
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms())
                for (const auto& [w, c] : normal(to_word(mx) + to_word(my)))
                    out.add_term(to_monomial(w), c * cx * cy);
        return out;
    }

    QElement power(const QElement& x, int n)
    {
        QElement acc = QElement::scalar(ring_, ring_.one());
        for (int i = 0; i < n; ++i)
            acc = multiply(acc, x);
        return acc;
    }

    static std::string to_word(const QMonomial& m)
    {
        return std::string(m.a, 'a') + std::string(m.b, 'b') + std::string(m.c, 'c') + std::string(m.d, 'd');
    }

private:
    using Sum = std::map<std::string, Cyclotomic>;

    static QMonomial to_monomial(const std::string& w)
    {
        QMonomial m;
        for (char ch : w) {
            switch (ch) {
            case 'a': ++m.a; break;
            case 'b': ++m.b; break;
            case 'c': ++m.c; break;
            default: ++m.d; break;
            }
        }
        return m;
    }

    static void add(Sum& s, const std::string& w, const Cyclotomic& c)
    {
        auto it = s.find(w);
        if (it == s.end()) {
            s.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            s.erase(it);
    }

    Cyclotomic q(long k) const { return ring_.q_pow(k); }

    const Sum& normal(const std::string& word)
    {
        auto it = memo_.find(word);
        if (it != memo_.end())
            return it->second;
        Sum out;
        std::size_t i = 0;
        while (i + 1 < word.size() && word[i] <= word[i + 1])
            ++i;
        if (i + 1 < word.size()) {
            const std::string pre = word.substr(0, i);
            const std::string post = word.substr(i + 2);
            const char x = word[i];
            const char y = word[i + 1];
            auto swap_with = [&](const Cyclotomic& f) {
                for (const auto& [w, c] : normal(pre + y + x + post))
                    add(out, w, c * f);
            };
            if (x == 'c' && y == 'b')
                swap_with(q(0));
            else if (x == 'd' && y == 'a') {
                for (const auto& [w, c] : normal(pre + post))
                    add(out, w, c);
                for (const auto& [w, c] : normal(pre + "bc" + post))
                    add(out, w, c * q(-1));
            } else
                swap_with(q(-1));  // ba, ca, db, dc
        } else {
            const auto d = word.find('d');
            if (word.empty() || word[0] != 'a' || d == std::string::npos) {
                add(out, word, q(0));
            } else {
                // a^i (b^j c^k) d ... = q^{j+k} a^{i-1} (ad) (b^j c^k) ..., using x d = q d x
                const auto last_a = word.find_last_of('a');
                const std::string pre = word.substr(0, last_a);
                const std::string middle = word.substr(last_a + 1, d - last_a - 1);
                const std::string post = word.substr(d + 1);
                const Cyclotomic f = q(static_cast<long>(middle.size()));
                for (const auto& [w, c] : normal(pre + middle + post))
                    add(out, w, c * f);
                for (const auto& [w, c] : normal(pre + "bc" + middle + post))
                    add(out, w, c * f * q(1));
            }
        }
        return memo_.emplace(word, std::move(out)).first->second;
    }

    const QRing& ring_;
    std::map<std::string, Sum> memo_;
};

/// Triple-free tensor of two quantum elements, with naive leg products.
using PairKey = std::pair<QMonomial, QMonomial>;
using NaiveTensor = std::map<PairKey, Cyclotomic>;

inline void tensor_add(NaiveTensor& t, const PairKey& k, const Cyclotomic& c)
{
    auto it = t.find(k);
    if (it == t.end()) {
        if (!c.is_zero())
            t.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        t.erase(it);
}

inline NaiveTensor tensor_multiply(NaiveAlgebra& alg, const QRing& ring, const NaiveTensor& u,
                                   const NaiveTensor& v)
{
    NaiveTensor out;
    for (const auto& [ku, cu] : u)
        for (const auto& [kv, cv] : v) {
            const QElement left = alg.multiply(QElement::monomial(ring, ku.first), QElement::monomial(ring, kv.first));
            const QElement right =
                alg.multiply(QElement::monomial(ring, ku.second), QElement::monomial(ring, kv.second));
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms())
                    tensor_add(out, {ml, mr}, cu * cv * cl * cr);
        }
    return out;
}

/// Matrix coproduct of a single letter.
inline NaiveTensor letter_coproduct(const QRing& ring, char letter)
{
    const QMonomial a{1, 0, 0, 0}, b{0, 1, 0, 0}, c{0, 0, 1, 0}, d{0, 0, 0, 1};
    NaiveTensor t;
    switch (letter) {
    case 'a': tensor_add(t, {a, a}, ring.one()); tensor_add(t, {b, c}, ring.one()); break;
    case 'b': tensor_add(t, {a, b}, ring.one()); tensor_add(t, {b, d}, ring.one()); break;
    case 'c': tensor_add(t, {c, a}, ring.one()); tensor_add(t, {d, c}, ring.one()); break;
    default: tensor_add(t, {c, b}, ring.one()); tensor_add(t, {d, d}, ring.one()); break;
    }
    return t;
}

/// Coproduct of a word, multiplied out letter by letter.
inline NaiveTensor word_coproduct(NaiveAlgebra& alg, const QRing& ring, const std::string& word)
{
    NaiveTensor acc;
    tensor_add(acc, {QMonomial{}, QMonomial{}}, ring.one());
    for (char ch : word)
        acc = tensor_multiply(alg, ring, acc, letter_coproduct(ring, ch));
    return acc;
}

inline NaiveTensor to_naive(const qsl2::TensorElement& t)
{
    NaiveTensor out;
    for (const auto& [k, c] : t.terms())
        tensor_add(out, k, c);
    return out;
}

/// Coefficients of prod_{r=1..k} (1 + q^{2r-1} t), low degree first.
inline std::vector<Cyclotomic> product_expansion(const QRing& ring, int k)
{
    std::vector<Cyclotomic> poly{ring.one()};
    for (int r = 1; r <= k; ++r) {
        std::vector<Cyclotomic> next(poly.size() + 1, ring.zero());
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j] += poly[j];
            next[j + 1] += poly[j] * ring.q_pow(2 * r - 1);
        }
        poly = std::move(next);
    }
    return poly;
}

// ---------------------------------------------------------------------------
// Hand-rolled generators

using Rng = std::mt19937_64;

inline Cyclotomic gen_scalar(const qsl2::CycloField& field, Rng& rng)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    std::vector<qsl2::Rational> coeffs(field.degree());
    for (auto& c : coeffs) {
        c = qsl2::Rational(num(rng), den(rng));
        c.canonicalize();
    }
    return {field, coeffs};
}

inline QMonomial gen_monomial(Rng& rng, int max_exponent)
{
    std::uniform_int_distribution<int> e(0, max_exponent);
    QMonomial m{e(rng), e(rng), e(rng), e(rng)};
    (rng() % 2 ? m.a : m.d) = 0;
    return m;
}

inline QElement gen_element(const QRing& ring, Rng& rng, int max_exponent, int max_terms)
{
    std::uniform_int_distribution<int> n(1, max_terms);
    QElement x(ring);
    for (int i = n(rng); i > 0; --i)
        x.add_term(gen_monomial(rng, max_exponent), gen_scalar(ring.field(), rng));
    return x;
}

inline qsl2::ClassicalElement gen_classical(const QRing& ring, Rng& rng, int max_exponent, int max_terms)
{
    std::uniform_int_distribution<int> n(1, max_terms), e(0, max_exponent);
    qsl2::ClassicalElement g(ring);
    for (int i = n(rng); i > 0; --i) {
        qsl2::ClassicalMonomial m{e(rng), e(rng), e(rng), e(rng)};
        (rng() % 2 ? m.alpha : m.delta) = 0;
        g.add_term(m, gen_scalar(ring.field(), rng));
    }
    return g;
}

inline std::string gen_word(Rng& rng, int max_length)
{
    std::uniform_int_distribution<int> len(0, max_length);
    std::string w(len(rng), 'a');
    for (auto& ch : w)
        ch = "abcd"[rng() % 4];
    return w;
}

}  // namespace oracle
