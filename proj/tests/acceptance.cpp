// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "qsl2/basis.hpp"
#include "qsl2/expression.hpp"
#include "qsl2/selftest.hpp"

using namespace qsl2;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            if (!ok)
                note << "; ";
            ok = false;
            note << what;
        }
    }
};

const QRing& ring_for(int l) { return QRing::get(make_root_spec(l)); }

void rank(Outcome& o)
{
    o.expect(enumerate_basis(2).size() == 8, "8 generators at l=2");
    o.expect(enumerate_basis(3).size() == 27, "27 generators at l=3");
    o.expect(enumerate_basis(5).size() == 125, "125 generators at l=5");
    for (int l : {2, 3}) {
        const FreenessReport left = verify_freeness(l, Side::left, 2);
        o.expect(left.kernel_dimension == 0, "left kernel at l=" + std::to_string(l));
        o.expect(left.all_decomposed, "left spanning at l=" + std::to_string(l));
        const FreenessReport right = verify_freeness(l, Side::right, 2);
        o.expect(right.kernel_dimension == 0, "right kernel at l=" + std::to_string(l));
    }
}

void oracle_equivalence(Outcome& o)
{
    int checked = 0;
    for (int l : {2, 3}) {
        const QRing& r = ring_for(l);
        for (Side side : {Side::left, Side::right})
            for (int a = 0; a < l; ++a)
                for (int b = 0; b < l; ++b)
                    for (int c = 0; c < l; ++c)
                        for (int d = 0; d < l; ++d) {
                            if (a != 0 && d != 0)
                                continue;
                            const QElement x = QElement::monomial(r, {a, b, c, d});
                            ++checked;
                            o.expect(decompose(x, side) == oracle_decompose(x, side),
                                     format_monomial({a, b, c, d}) + " at l=" + std::to_string(l));
                        }
    }
    o.expect(checked == 2 * (12 + 45), "monomial count");
}

void roundtrip(Outcome& o)
{
    oracle::Rng rng(2024);
    for (int l : {2, 3, 5}) {
        const QRing& r = ring_for(l);
        for (int i = 0; i < 200; ++i) {
            const QElement x = oracle::gen_element(r, rng, 2 * l, 4);
            for (Side side : {Side::left, Side::right})
                o.expect(recompose(decompose(x, side)) == x,
                         std::string(side_name(side)) + " l=" + std::to_string(l) + ": " + format_element(x));
        }
    }
}

void p_coefficients(Outcome& o)
{
    for (int l : {2, 3, 5, 7}) {
        const RootSpec spec = make_root_spec(l);
        const QRing& r = QRing::get(spec);
        for (int k = 0; k <= l; ++k) {
            const auto brute = oracle::product_expansion(r, k);
            for (int j = 0; j <= k; ++j)
                o.expect(p_coeff(spec, k, j) == brute[j], "l=" + std::to_string(l) + " k=" + std::to_string(k)
                                                             + " j=" + std::to_string(j));
            o.expect(p_coeff(spec, k, 0).is_one(), "p_{k,0} = 1");
        }
        for (int j = 1; j < l; ++j)
            o.expect(p_coeff(spec, l, j).is_zero(), "p_{l,j} = 0 at l=" + std::to_string(l));
    }
}

void frobenius_subalgebra(Outcome& o)
{
    for (int l : {3, 5}) {
        const QRing& r = ring_for(l);
        oracle::NaiveAlgebra naive(r);
        oracle::NaiveTensor expanded;
        oracle::tensor_add(expanded, {QMonomial{}, QMonomial{}}, r.one());
        const oracle::NaiveTensor delta_a = oracle::letter_coproduct(r, 'a');
        for (int i = 0; i < l; ++i)
            expanded = oracle::tensor_multiply(naive, r, expanded, delta_a);
        oracle::NaiveTensor expected;
        oracle::tensor_add(expected, {QMonomial{l, 0, 0, 0}, QMonomial{l, 0, 0, 0}}, r.one());
        oracle::tensor_add(expected, {QMonomial{0, l, 0, 0}, QMonomial{0, 0, l, 0}}, r.one());
        o.expect(expanded == expected, "coproduct of a^l by expansion at l=" + std::to_string(l));
        o.expect(oracle::to_naive(coproduct(QElement::monomial(r, {l, 0, 0, 0}))) == expected,
                 "library coproduct of a^l at l=" + std::to_string(l));
        const ClassicalElement det = ClassicalElement::normalize(r, {1, 0, 0, 1}, r.one())
                                     - ClassicalElement::monomial(r, {0, 1, 1, 0});
        const QElement one = QElement::scalar(r, r.one());
        o.expect(lift(det) == one, "lift of the determinant at l=" + std::to_string(l));
        const QElement naive_det = naive.multiply(QElement::monomial(r, {l, 0, 0, 0}), QElement::monomial(r, {0, 0, 0, l}))
                                   - naive.multiply(QElement::monomial(r, {0, l, 0, 0}), QElement::monomial(r, {0, 0, l, 0}));
        o.expect(naive_det == one, "a^l d^l - b^l c^l by rewriting at l=" + std::to_string(l));
    }
}

void hopf_axioms(Outcome& o)
{
    oracle::Rng rng(77);
    for (int l : {2, 3}) {
        const QRing& r = ring_for(l);
        std::vector<std::string> words{"a", "b", "c", "d"};
        for (int i = 0; i < 50; ++i)
            words.push_back(oracle::gen_word(rng, 4));
        for (const auto& w : words) {
            const QElement x = straighten(w, r);
            const std::string at = "'" + w + "' at l=" + std::to_string(l);
            o.expect(coassociative(x), "coassociativity on " + at);
            o.expect(counit_axiom(x), "counit on " + at);
            o.expect(antipode_axiom(x), "antipode on " + at);
        }
    }
}

void closure_cases(Outcome& o)
{
    const ClosureReport bad = closure_diagnostic(3, 6);
    const QRing& r6 = QRing::get(diagnostic_root_spec(3, 6));
    o.expect(bad.determinant_relation == parse_element("1 - b^3*c^3", r6), "a^3 d^3 at N=6");
    o.expect(!bad.determinant_matches, "determinant mismatch at N=6");
    o.expect(!bad.coproduct_closes, "coproduct non-closure at N=6");
    for (auto [l, n] : {std::pair{3, 3}, std::pair{2, 4}}) {
        const ClosureReport good = closure_diagnostic(l, n);
        const QRing& r = QRing::get(diagnostic_root_spec(l, n));
        const QElement expected = QElement::scalar(r, r.one()) + QElement::monomial(r, {0, l, l, 0});
        o.expect(good.determinant_relation == expected && good.determinant_matches,
                 "closed determinant at (" + std::to_string(l) + "," + std::to_string(n) + ")");
        o.expect(good.coproduct_closes, "closed coproduct at (" + std::to_string(l) + "," + std::to_string(n) + ")");
    }
}

void localization(Outcome& o)
{
    oracle::Rng rng(88);
    const int l = 3;
    const QRing& r = ring_for(l);
    for (int i = 0; i < 50; ++i) {
        const QElement x = oracle::gen_element(r, rng, 2 * l, 4);
        for (LocalChart chart : {LocalChart::U_alpha, LocalChart::U_beta}) {
            const QElement rho = QElement::monomial(
                r, chart == LocalChart::U_alpha ? QMonomial{l, 0, 0, 0} : QMonomial{0, l, 0, 0});
            const auto [cleared, k] = clear_denominators(localize(x, chart));
            o.expect(cleared == qmul(power(rho, k), x), format_element(x));
        }
    }
}

void even_signs(Outcome& o)
{
    const QRing& r = ring_for(2);
    const QElement a = parse_element("a", r), b = parse_element("b", r);
    const QElement a2 = power(a, 2);
    o.expect(qmul(a2, b) == -qmul(b, a2), "a^2 b = -b a^2");

    const Decomposition d = decompose(a, Side::left);
    Decomposition expected(r, Side::left);
    expected.add(BasisIndex::family_d(0, 0, 1), ClassicalElement::monomial(r, {1, 0, 0, 0}));
    expected.add(BasisIndex::family_a(1, 1, 1), ClassicalElement::scalar(r, -r.q_pow(1)));
    o.expect(r.q_pow(1) == Cyclotomic::zeta_power(CycloField::get(4), 1), "q = i");
    o.expect(d == expected, "decompose(a) = alpha*d - i*abc");
    o.expect(recompose(d) == a, "decompose(a) recomposes");

    const QElement ab = qmul(a, b);
    const Decomposition left = decompose(ab, Side::left);
    const Decomposition right = decompose(ab, Side::right);
    o.expect(!(left.coefficients() == right.coefficients()), "left and right sign patterns differ");
    o.expect(recompose(left) == ab && recompose(right) == ab, "both sides roundtrip");
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const Criterion criteria[] = {
        {1, "rank l^3: generator counts, kernel 0 and spanning at bound 2", rank},
        {2, "decompose agrees with the linear-system oracle on all residual monomials", oracle_equivalence},
        {3, "recompose(decompose(x)) = x for 200 random elements at l = 2, 3, 5", roundtrip},
        {4, "p-coefficient closed form equals the product expansion", p_coefficients},
        {5, "l-th powers span a Hopf subalgebra at l = 3, 5", frobenius_subalgebra},
        {6, "coassociativity, counit and antipode axioms at l = 2, 3", hopf_axioms},
        {7, "closure diagnostic at (3,6), (3,3), (2,4)", closure_cases},
        {8, "localization clears to rho^k x on both charts", localization},
        {9, "even-l signs at l = 2", even_signs},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s  %s  (%.2f s)\n", c.id, o.ok ? "PASS" : "FAIL", c.name, seconds);
        if (!o.ok) {
            std::printf("    %s\n", o.note.str().c_str());
            ++failures;
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
