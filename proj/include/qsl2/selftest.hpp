#pragma once

// Randomized invariant suites and the verification drivers used by the CLI.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsl2/io.hpp"

namespace qsl2 {

using Rng = std::mt19937_64;

/// Small random rational coefficients in every slot of the power basis.
Cyclotomic random_cyclotomic(const CycloField& field, Rng& rng, int height = 3);
/// Random reduced element with up to `terms` monomials, exponents <= max_exponent.
QElement random_element(const QRing& ring, Rng& rng, int max_exponent, int terms);
ClassicalElement random_classical(const QRing& ring, Rng& rng, int max_exponent, int terms);
/// Random word over {a, b, c, d} of length in [0, max_length].
std::string random_word(Rng& rng, int max_length);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// (Delta (x) id) Delta x == (id (x) Delta) Delta x.
bool coassociative(const QElement& x);
/// (eps (x) id) Delta x == x == (id (x) eps) Delta x.
bool counit_axiom(const QElement& x);
/// m (S (x) id) Delta x == eps(x) 1 == m (id (x) S) Delta x.
bool antipode_axiom(const QElement& x);

/// Freeness of the basis up to the bound plus decompose-vs-oracle agreement
/// on every residual monomial.
struct BasisCheck {
    FreenessReport freeness;
    int oracle_checked = 0;
    int oracle_agreed = 0;
    std::vector<std::string> disagreements;
    bool passed() const;
};
BasisCheck check_basis(const RootSpec& spec, Side side, int degree_bound);

/// One JSON object per line: {"l", "input": <element>, "expected": <decomposition>}.
struct FixtureReport {
    int lines = 0;
    int passed = 0;
    std::vector<std::string> failures;
    bool ok() const { return lines > 0 && passed == lines; }
};
FixtureReport verify_fixture_file(const std::string& path);

/// Invariant suites at l in {2, 3}.
SuiteReport run_selftest(std::uint64_t seed = 20240601);

std::string format_suite(const SuiteReport& report);
Json suite_to_json(const SuiteReport& report);
std::string format_basis_check(const BasisCheck& check, Side side);
Json basis_check_to_json(const BasisCheck& check, Side side);
std::string format_fixture_report(const FixtureReport& report);
Json fixture_report_to_json(const FixtureReport& report);

}  // namespace qsl2
