#include <doctest.h>

#include "oracle.hpp"
#include "qsl2/expression.hpp"
#include "qsl2/frobenius.hpp"

using namespace qsl2;

namespace {

const QRing& ring_for(int l, int e = 1) { return QRing::get(make_root_spec(l, e)); }
QElement E(const QRing& r, const char* text) { return parse_element(text, r); }
ClassicalElement C(const QRing& r, int al, int be, int ga, int de)
{
    return ClassicalElement::monomial(r, {al, be, ga, de});
}
ClassicalElement one_c(const QRing& r) { return ClassicalElement::scalar(r, r.one()); }

}  // namespace

TEST_SUITE("frobenius") {

TEST_CASE("lift")
{
    const auto& r = ring_for(3);
    CHECK(lift(C(r, 1, 0, 0, 0)) == E(r, "a^3"));
    CHECK(lift(classical_mul(C(r, 1, 0, 0, 0), C(r, 0, 0, 0, 1)) - C(r, 0, 1, 1, 0))
          == QElement::scalar(r, r.one()));
    CHECK(lift(one_c(r)) == QElement::scalar(r, r.one()));
}

TEST_CASE("lift is an algebra morphism onto a commutative subalgebra")
{
    oracle::Rng rng(21);
    for (int l : {2, 3, 4, 5}) {
        const auto& r = ring_for(l);
        oracle::NaiveAlgebra naive(r);
        for (int i = 0; i < 10; ++i) {
            const auto f = oracle::gen_classical(r, rng, 2, 2);
            const auto g = oracle::gen_classical(r, rng, 2, 2);
            CHECK(lift(classical_mul(f, g)) == naive.multiply(lift(f), lift(g)));
            CHECK(qmul(lift(f), lift(g)) == qmul(lift(g), lift(f)));
        }
    }
}

TEST_CASE("central reduction examples")
{
    const auto& r = ring_for(3);
    ModuleElement m = central_reduce(E(r, "a^3"), Side::left);
    CHECK(m.terms().size() == 1);
    CHECK(m.take({0, 0, 0, 0}) == C(r, 1, 0, 0, 0));

    m = central_reduce(E(r, "a^4*b"), Side::left);
    CHECK(m.terms().size() == 1);
    CHECK(m.take({1, 1, 0, 0}) == C(r, 1, 0, 0, 0));

    const auto& r2 = ring_for(2);
    ModuleElement left = central_reduce(E(r2, "a^2*b"), Side::left);
    CHECK(left.take({0, 1, 0, 0}) == C(r2, 1, 0, 0, 0));
    ModuleElement right = central_reduce(E(r2, "a^2*b"), Side::right);
    CHECK(right.take({0, 1, 0, 0}) == C(r2, 1, 0, 0, 0) * (-r2.one()));
}

TEST_CASE("module recomposition")
{
    const auto& r = ring_for(3);
    ModuleElement m(r, Side::left);
    m.add_term({0, 0, 0, 0}, C(r, 1, 0, 0, 0));
    CHECK(module_recompose(m) == E(r, "a^3"));

    ModuleElement n(r, Side::left);
    n.add_term({1, 1, 0, 0}, C(r, 0, 1, 0, 0));
    CHECK(module_recompose(n) == E(r, "a*b^4"));

    const QElement x = E(r, "a^7*b^5*c^2");
    CHECK(module_recompose(central_reduce(x, Side::left)) == x);
    CHECK(module_recompose(central_reduce(x, Side::right)) == x);

    CHECK_THROWS_AS(m.add_term({3, 0, 0, 0}, one_c(r)), DomainError);
    CHECK_THROWS_AS(m.add_term({1, 0, 0, 1}, one_c(r)), DomainError);
}

TEST_CASE("central reduction roundtrips on random elements")
{
    oracle::Rng rng(22);
    for (int l : {2, 3, 4, 5}) {
        for (int e : {1, -1}) {
            const auto& r = ring_for(l, e);
            for (Side side : {Side::left, Side::right})
                for (int i = 0; i < 15; ++i) {
                    const QElement x = oracle::gen_element(r, rng, 3 * l, 4);
                    const ModuleElement m = central_reduce(x, side);
                    for (const auto& [key, coeff] : m.terms())
                        CHECK(is_residual(key, l));
                    CHECK(module_recompose(m) == x);
                }
        }
    }
}

TEST_CASE("centrality")
{
    const auto& r = ring_for(3);
    CHECK(is_central(E(r, "a^3")));
    CHECK_FALSE(is_central(E(r, "a")));
    const auto& r2 = ring_for(2);
    CHECK_FALSE(is_central(E(r2, "a^2")));
    CHECK(E(r2, "a^2*b") == -E(r2, "b*a^2"));
    CHECK(is_central(E(r2, "a^4")));
    for (int l : {3, 5, 7})
        for (const char* g : {"a", "b", "c", "d"}) {
            const auto& rl = ring_for(l);
            CHECK(is_central(power(E(rl, g), l)));
        }
}

TEST_CASE("closure diagnostics")
{
    const ClosureReport odd = closure_diagnostic(3, 3);
    CHECK(odd.power == 3);
    CHECK(odd.determinant_relation == E(ring_for(3), "1 + b^3*c^3"));
    CHECK(odd.determinant_matches);
    CHECK(odd.coproduct_closes);
    CHECK(odd.powers_commute);

    const ClosureReport even = closure_diagnostic(2, 4);
    CHECK(even.determinant_relation == E(ring_for(2), "1 + b^2*c^2"));
    CHECK(even.determinant_matches);
    CHECK(even.coproduct_closes);

    const ClosureReport bad = closure_diagnostic(3, 6);
    const auto& r6 = QRing::get(diagnostic_root_spec(3, 6));
    CHECK(bad.determinant_relation == E(r6, "1 - b^3*c^3"));
    CHECK_FALSE(bad.determinant_matches);
    CHECK_FALSE(bad.coproduct_closes);
    CHECK_FALSE(bad.determinant_closes);

    CHECK_THROWS_AS(closure_diagnostic(3, 9), DomainError);
    CHECK_THROWS_AS(closure_diagnostic(2, 2), DomainError);
}

}
