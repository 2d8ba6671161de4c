#include "qsl2/selftest.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "qsl2/expression.hpp"

namespace qsl2 {

Cyclotomic random_cyclotomic(const CycloField& field, Rng& rng, int height)
{
    std::uniform_int_distribution<int> num(-height, height);
    std::uniform_int_distribution<int> den(1, height);
    std::vector<Rational> coeffs(field.degree());
    for (auto& c : coeffs) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
    }
    return {field, std::move(coeffs)};
}

QElement random_element(const QRing& ring, Rng& rng, int max_exponent, int terms)
{
    std::uniform_int_distribution<int> e(0, max_exponent);
    QElement out(ring);
    for (int t = 0; t < terms; ++t) {
        QMonomial m{e(rng), e(rng), e(rng), e(rng)};
        if (rng() % 2)
            m.a = 0;
        else
            m.d = 0;
        out.add_term(m, random_cyclotomic(ring.field(), rng));
    }
    return out;
}

ClassicalElement random_classical(const QRing& ring, Rng& rng, int max_exponent, int terms)
{
    std::uniform_int_distribution<int> e(0, max_exponent);
    ClassicalElement out(ring);
    for (int t = 0; t < terms; ++t) {
        ClassicalMonomial m{e(rng), e(rng), e(rng), e(rng)};
        if (rng() % 2)
            m.alpha = 0;
        else
            m.delta = 0;
        out.add_term(m, random_cyclotomic(ring.field(), rng));
    }
    return out;
}

std::string random_word(Rng& rng, int max_length)
{
    static const char letters[] = "abcd";
    std::uniform_int_distribution<int> len(0, max_length);
    std::string w(len(rng), 'a');
    for (auto& ch : w)
        ch = letters[rng() % 4];
    return w;
}

bool SuiteReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return !checks.empty();
}

// ---------------------------------------------------------------------------
// Hopf axioms

namespace {

using Triple = std::tuple<QMonomial, QMonomial, QMonomial>;

struct TripleOrder {
    bool operator()(const Triple& x, const Triple& y) const
    {
        return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x))
               < std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y));
    }
};

using TripleTensor = std::map<Triple, Cyclotomic, TripleOrder>;

void add_triple(TripleTensor& out, const Triple& key, const Cyclotomic& c)
{
    auto it = out.find(key);
    if (it == out.end()) {
        if (!c.is_zero())
            out.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        out.erase(it);
}

TensorElement monomial_coproduct(const QRing& ring, const QMonomial& m)
{
    return coproduct(QElement::monomial(ring, m));
}

Cyclotomic monomial_counit(const QRing& ring, const QMonomial& m)
{
    return counit(QElement::monomial(ring, m));
}

}  // namespace

bool coassociative(const QElement& x)
{
    const QRing& ring = x.ring();
    const TensorElement dx = coproduct(x);
    TripleTensor lhs, rhs;
    for (const auto& [key, c] : dx.terms()) {
        const TensorElement left = monomial_coproduct(ring, key.first);
        const TensorElement right = monomial_coproduct(ring, key.second);
        for (const auto& [k2, c2] : left.terms())
            add_triple(lhs, {k2.first, k2.second, key.second}, c * c2);
        for (const auto& [k2, c2] : right.terms())
            add_triple(rhs, {key.first, k2.first, k2.second}, c * c2);
    }
    return lhs == rhs;
}

bool counit_axiom(const QElement& x)
{
    const QRing& ring = x.ring();
    QElement left(ring), right(ring);
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        left.add_term(key.second, c * monomial_counit(ring, key.first));
        right.add_term(key.first, c * monomial_counit(ring, key.second));
    }
    return left == x && right == x;
}

bool antipode_axiom(const QElement& x)
{
    const QRing& ring = x.ring();
    const QElement expected = QElement::scalar(ring, counit(x));
    QElement left(ring), right(ring);
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const QElement l = QElement::monomial(ring, key.first);
        const QElement r = QElement::monomial(ring, key.second);
        left += qmul(antipode(l), r) * c;
        right += qmul(l, antipode(r)) * c;
    }
    return left == expected && right == expected;
}

// ---------------------------------------------------------------------------
// Basis verification

bool BasisCheck::passed() const
{
    return freeness.kernel_dimension == 0 && freeness.all_decomposed && oracle_checked == oracle_agreed;
}

BasisCheck check_basis(const RootSpec& spec, Side side, int degree_bound)
{
    BasisCheck out;
    out.freeness = verify_freeness(spec, side, degree_bound);
    const QRing& ring = QRing::get(spec);
    const int l = spec.l;
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b)
            for (int c = 0; c < l; ++c)
                for (int d = 0; d < l; ++d) {
                    const QMonomial m{a, b, c, d};
                    if (!m.is_reduced())
                        continue;
                    ++out.oracle_checked;
                    const QElement x = QElement::monomial(ring, m);
                    try {
                        if (decompose(x, side) == oracle_decompose(x, side, degree_bound))
                            ++out.oracle_agreed;
                        else
                            out.disagreements.push_back(format_monomial(m));
                    } catch (const VerificationError& e) {
                        out.disagreements.push_back(format_monomial(m) + ": " + e.what());
                    }
                }
    return out;
}

FixtureReport verify_fixture_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open fixture file '" + path + "'");
    FixtureReport report;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        ++report.lines;
        try {
            const Json j = Json::parse(line);
            const QElement input = element_from_json(j.at("input"));
            if (j.contains("l") && j.at("l").get<int>() != input.spec().l)
                throw DomainError("field l does not match the input element");
            const Decomposition expected = decomposition_from_json(j.at("expected"), input.ring());
            const Decomposition actual = decompose(input, expected.side());
            if (!(actual == expected))
                throw VerificationError("decomposition differs from the expected one");
            if (!(recompose(expected) == input))
                throw VerificationError("expected decomposition does not recompose to the input");
            ++report.passed;
        } catch (const std::exception& e) {
            report.failures.push_back("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

// Coefficients of prod_{r=1..k} (1 + q^{2r-1} t), multiplied out one factor at a time.
std::vector<Cyclotomic> brute_force_product(const QRing& ring, int k)
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

Decomposition scale_left(const Decomposition& d, const ClassicalElement& g)
{
    Decomposition out(d.ring(), d.side());
    for (const auto& [index, coeff] : d.coefficients())
        out.add(index, classical_mul(g, coeff));
    return out;
}

QElement word_product(const std::string& word, const QRing& ring)
{
    QElement acc = QElement::scalar(ring, ring.one());
    for (char ch : word)
        acc = qmul(acc, QElement::generator(ring, ch));
    return acc;
}

CheckResult run_check(const std::string& name, const std::function<std::string()>& body)
{
    CheckResult r{name, false, ""};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

void suite_for(int l, Rng& rng, std::vector<CheckResult>& out)
{
    const RootSpec spec = make_root_spec(l);
    const QRing& ring = QRing::get(spec);
    const std::string tag = "l=" + std::to_string(l) + " ";

    out.push_back(run_check(tag + "basis count", [&]() -> std::string {
        const auto basis = enumerate_basis(l);
        if (static_cast<int>(basis.size()) != l * l * l)
            return "got " + std::to_string(basis.size());
        for (const auto& b : basis)
            if (!b.is_valid(l) || is_basis_monomial(b.monomial(), l) != b)
                return "invalid generator " + format_basis_index(b);
        return "";
    }));

    out.push_back(run_check(tag + "word straightening", [&]() -> std::string {
        for (int i = 0; i < 40; ++i) {
            const std::string w = random_word(rng, 7);
            if (!(straighten(w, ring) == word_product(w, ring)))
                return "word " + w;
        }
        return "";
    }));

    out.push_back(run_check(tag + "associativity", [&]() -> std::string {
        for (int i = 0; i < 15; ++i) {
            const QElement x = random_element(ring, rng, l + 1, 2);
            const QElement y = random_element(ring, rng, l + 1, 2);
            const QElement z = random_element(ring, rng, l + 1, 2);
            if (!(qmul(qmul(x, y), z) == qmul(x, qmul(y, z))))
                return "triple " + std::to_string(i);
        }
        return "";
    }));

    out.push_back(run_check(tag + "hopf axioms", [&]() -> std::string {
        std::vector<std::string> words{"a", "b", "c", "d"};
        for (int i = 0; i < 20; ++i)
            words.push_back(random_word(rng, 4));
        for (const auto& w : words) {
            const QElement x = straighten(w, ring);
            if (!coassociative(x))
                return "coassociativity on '" + w + "'";
            if (!counit_axiom(x))
                return "counit on '" + w + "'";
            if (!antipode_axiom(x))
                return "antipode on '" + w + "'";
        }
        return "";
    }));

    out.push_back(run_check(tag + "structure maps are (anti)multiplicative", [&]() -> std::string {
        for (int i = 0; i < 10; ++i) {
            const QElement x = straighten(random_word(rng, 3), ring);
            const QElement y = straighten(random_word(rng, 3), ring);
            if (!(coproduct(qmul(x, y)) == tensor_mul(coproduct(x), coproduct(y))))
                return "coproduct";
            if (!(antipode(qmul(x, y)) == qmul(antipode(y), antipode(x))))
                return "antipode";
            if (!(counit(qmul(x, y)) == counit(x) * counit(y)))
                return "counit";
        }
        return "";
    }));

    out.push_back(run_check(tag + "p-coefficients", [&]() -> std::string {
        for (int k = 0; k <= l; ++k) {
            const auto brute = brute_force_product(ring, k);
            for (int j = 0; j <= k; ++j)
                if (!(p_coeff(spec, k, j) == brute[j]))
                    return "k=" + std::to_string(k) + " j=" + std::to_string(j);
        }
        return "";
    }));

    out.push_back(run_check(tag + "frobenius closure", [&]() -> std::string {
        const ClosureReport rep = closure_diagnostic(l, spec.order, spec.zeta_exponent);
        if (!rep.powers_commute || !rep.determinant_matches || !rep.coproduct_closes)
            return "closure report not closed";
        if (l % 2 == 1)
            for (const QMonomial m : {QMonomial{l, 0, 0, 0}, QMonomial{0, l, 0, 0}, QMonomial{0, 0, l, 0},
                                      QMonomial{0, 0, 0, l}})
                if (!is_central(QElement::monomial(ring, m)))
                    return "l-th power not central: " + format_monomial(m);
        return "";
    }));

    out.push_back(run_check(tag + "decomposition roundtrip", [&]() -> std::string {
        for (Side side : {Side::left, Side::right})
            for (int i = 0; i < 15; ++i) {
                const QElement x = random_element(ring, rng, 2 * l, 3);
                const Decomposition d = decompose(x, side);
                if (!(recompose(d) == x))
                    return std::string(side_name(side)) + ": " + format_element(x);
                Decomposition e(ring, side);
                for (const auto& index : enumerate_basis(l))
                    if (rng() % 4 == 0)
                        e.add(index, random_classical(ring, rng, 2, 2));
                if (!(decompose(recompose(e), side) == e))
                    return std::string(side_name(side)) + ": random decomposition";
            }
        return "";
    }));

    out.push_back(run_check(tag + "left linearity", [&]() -> std::string {
        for (int i = 0; i < 10; ++i) {
            const QElement x = random_element(ring, rng, 2 * l, 2);
            const ClassicalElement g = random_classical(ring, rng, 1, 2);
            if (!(decompose(qmul(lift(g), x), Side::left) == scale_left(decompose(x, Side::left), g)))
                return format_element(x);
        }
        return "";
    }));

    out.push_back(run_check(tag + "oracle agreement and freeness", [&]() -> std::string {
        for (Side side : {Side::left, Side::right}) {
            const BasisCheck check = check_basis(spec, side, 2);
            if (!check.passed())
                return std::string(side_name(side)) + ": kernel " + std::to_string(check.freeness.kernel_dimension)
                       + ", " + std::to_string(check.oracle_agreed) + "/" + std::to_string(check.oracle_checked)
                       + " agree";
        }
        return "";
    }));

    out.push_back(run_check(tag + "localization", [&]() -> std::string {
        for (LocalChart chart : {LocalChart::U_alpha, LocalChart::U_beta}) {
            const QElement rho = QElement::monomial(
                ring, chart == LocalChart::U_alpha ? QMonomial{l, 0, 0, 0} : QMonomial{0, l, 0, 0});
            for (int i = 0; i < 10; ++i) {
                const QElement x = random_element(ring, rng, 2 * l, 3);
                const auto [cleared, k] = clear_denominators(localize(x, chart));
                if (!(cleared == qmul(power(rho, k), x)))
                    return format_element(x);
            }
        }
        return "";
    }));

    out.push_back(run_check(tag + "print/parse roundtrip", [&]() -> std::string {
        for (int i = 0; i < 25; ++i) {
            const QElement x = random_element(ring, rng, 2 * l, 4);
            if (!(parse_element(format_element(x), ring) == x))
                return format_element(x);
            if (!(element_from_json(element_to_json(x)) == x))
                return "json: " + format_element(x);
        }
        return "";
    }));
}

}  // namespace

SuiteReport run_selftest(std::uint64_t seed)
{
    Rng rng(seed);
    SuiteReport report;
    for (int l : {2, 3})
        suite_for(l, rng, report.checks);
    return report;
}

std::string format_suite(const SuiteReport& report)
{
    std::ostringstream out;
    int passed = 0;
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed)
            out << " (" << c.detail << ")";
        out << "\n";
        passed += c.passed;
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
    return out.str();
}

Json suite_to_json(const SuiteReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"passed", report.passed()}, {"checks", checks}};
}

std::string format_basis_check(const BasisCheck& check, Side side)
{
    std::ostringstream out;
    out << "side: " << side_name(side) << "\n"
        << "columns: " << check.freeness.columns << "\n"
        << "kernel dimension: " << check.freeness.kernel_dimension << "\n"
        << "residual monomials spanned: " << (check.freeness.all_decomposed ? "all" : "not all") << " of "
        << check.freeness.monomials_checked << "\n"
        << "decompose agrees with oracle: " << check.oracle_agreed << "/" << check.oracle_checked << "\n";
    for (const auto& d : check.disagreements)
        out << "  disagreement: " << d << "\n";
    out << (check.passed() ? "basis verified" : "basis verification FAILED") << "\n";
    return out.str();
}

Json basis_check_to_json(const BasisCheck& check, Side side)
{
    Json j = freeness_to_json(check.freeness);
    j["side"] = side_name(side);
    j["oracle_checked"] = check.oracle_checked;
    j["oracle_agreed"] = check.oracle_agreed;
    j["disagreements"] = check.disagreements;
    j["passed"] = check.passed();
    return j;
}

std::string format_fixture_report(const FixtureReport& report)
{
    std::ostringstream out;
    for (const auto& f : report.failures)
        out << "FAIL " << f << "\n";
    out << report.passed << "/" << report.lines << " fixtures passed\n";
    return out.str();
}

Json fixture_report_to_json(const FixtureReport& report)
{
    return Json{{"lines", report.lines}, {"passed", report.passed}, {"failures", report.failures},
                {"ok", report.ok()}};
}

}  // namespace qsl2
