#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "oracle.hpp"
#include "qsl2/cyclo.hpp"

using namespace qsl2;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

Cyclotomic z(int order, long k) { return Cyclotomic::zeta_power(CycloField::get(order), k); }
Cyclotomic r(int order, long v) { return {CycloField::get(order), Rational(v)}; }

}  // namespace

TEST_SUITE("cyclo") {

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), DomainError);
}

TEST_CASE("cyclotomic polynomials vanish exactly at primitive roots")
{
    for (int n = 1; n <= 36; ++n) {
        const auto phi = cyclotomic_polynomial(n);
        CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(n));
        for (int k = 0; k < n; ++k) {
            const std::complex<double> root = std::polar(1.0, 2 * std::numbers::pi * k / n);
            std::complex<double> value = 0;
            for (std::size_t i = phi.size(); i-- > 0;)
                value = value * root + phi[i].get_d();
            if (std::gcd(k, n) == 1)
                CHECK(std::abs(value) < 1e-8);
            else
                CHECK(std::abs(value) > 1e-8);
        }
    }
}

TEST_CASE("root specs")
{
    CHECK(make_root_spec(3).order == 3);
    CHECK(make_root_spec(3).parity == Parity::odd);
    CHECK(make_root_spec(2).order == 4);
    CHECK(make_root_spec(2).parity == Parity::even);
    CHECK(make_root_spec(2, 3).zeta_exponent == 3);
    CHECK_THROWS_AS(make_root_spec(1), DomainError);
    CHECK_THROWS_AS(make_root_spec(4, 2), DomainError);
    CHECK(diagnostic_root_spec(3, 6).order == 6);
    CHECK_THROWS_AS(diagnostic_root_spec(4, 4), DomainError);
    CHECK_THROWS_AS(diagnostic_root_spec(3, 9), DomainError);
}

TEST_CASE("field arithmetic examples")
{
    CHECK(z(3, 1) + z(3, 2) == r(3, -1));
    CHECK(inv(r(5, 1)) == r(5, 1));
    CHECK(z(4, 1) * z(4, 1) == r(4, -1));
    CHECK(z(4, 1).inverse() == z(4, 3));
    CHECK_THROWS_AS(r(3, 0).inverse(), DomainError);
    CHECK_THROWS_AS(z(3, 1) + z(4, 1), DomainError);
}

TEST_CASE("powers of q")
{
    CHECK(zeta_pow(make_root_spec(3), 0) == r(3, 1));
    CHECK(zeta_pow(make_root_spec(3), 3) == r(3, 1));
    CHECK(zeta_pow(make_root_spec(2), 2) == r(4, -1));
    CHECK(zeta_pow(make_root_spec(2, 3), 1) == z(4, 3));
    CHECK(zeta_pow(make_root_spec(5), -7) == z(5, 3));
}

TEST_CASE("field axioms on random elements")
{
    oracle::Rng rng(11);
    for (int order : {3, 4, 5, 7, 8, 9, 12, 14}) {
        const auto& f = CycloField::get(order);
        for (int i = 0; i < 20; ++i) {
            const auto x = oracle::gen_scalar(f, rng);
            const auto y = oracle::gen_scalar(f, rng);
            const auto w = oracle::gen_scalar(f, rng);
            CHECK((x * y) * w == x * (y * w));
            CHECK(x * (y + w) == x * y + x * w);
            CHECK(x * y == y * x);
            if (!x.is_zero())
                CHECK((x * x.inverse()).is_one());
            for (int k = 1; k < order; ++k)
                if (std::gcd(k, order) == 1)
                    CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
            CHECK(std::abs((x * y).approx() - x.approx() * y.approx()) < 1e-9);
        }
    }
}

TEST_CASE("complex approximation")
{
    CHECK(std::abs(approx_complex(r(3, 1)) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(approx_complex(z(4, 1)) - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(approx_complex(z(3, 1) + z(3, 2)) - std::complex<double>(-1, 0)) < 1e-12);
}

TEST_CASE("p coefficients")
{
    for (int l : {2, 3, 4, 5})
        for (int k = 0; k <= l; ++k)
            CHECK(p_coeff(make_root_spec(l), k, 0).is_one());
    const auto s3 = make_root_spec(3);
    CHECK(p_coeff(s3, 2, 1) == r(3, 1) + zeta_pow(s3, 1));
    CHECK(p_coeff(s3, 3, 1).is_zero());
    CHECK_THROWS_AS(p_coeff(s3, 4, 1), DomainError);
    CHECK_THROWS_AS(p_coeff(s3, 2, 3), DomainError);
}

TEST_CASE("p coefficients agree with the multiplied-out product")
{
    for (int l : {2, 3, 4, 5, 6, 7}) {
        for (int e : {1, -1}) {
            const auto spec = make_root_spec(l, e);
            const auto& ring = QRing::get(spec);
            for (int k = 0; k <= l; ++k) {
                const auto brute = oracle::product_expansion(ring, k);
                for (int j = 0; j <= k; ++j)
                    CHECK(p_coeff(spec, k, j) == brute[j]);
            }
            for (int j = 1; j < l; ++j)
                CHECK(p_coeff(spec, l, j).is_zero());
        }
    }
}

TEST_CASE("gaussian binomials")
{
    const auto& f = CycloField::get(5);
    const auto t = z(5, 2);
    for (int n = 0; n <= 4; ++n)
        CHECK(gauss_binomial(n, 0, t).is_one());
    CHECK(gauss_binomial(2, 1, t) == r(5, 1) + t);
    const auto s3 = make_root_spec(3);
    CHECK(gauss_binomial(3, 1, zeta_pow(s3, 2)).is_zero());
    CHECK_THROWS_AS(gauss_binomial(3, 3, zeta_pow(s3, 2)), DomainError);
    // Pascal rule [n,k] = [n-1,k-1] + t^k [n-1,k]
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(gauss_binomial(n, k, t)
                  == gauss_binomial(n - 1, k - 1, t) + Cyclotomic::zeta_power(f, 2L * k) * gauss_binomial(n - 1, k, t));
}

TEST_CASE("rational strings")
{
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_from_string("6/8") == Rational(3, 4));
    CHECK(rational_from_string("-2") == Rational(-2));
    CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);
    CHECK_THROWS_AS(rational_from_string("x"), DomainError);
}

}
