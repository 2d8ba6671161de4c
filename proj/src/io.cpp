#include "qsl2/io.hpp"

#include <numeric>
#include <sstream>

namespace qsl2 {

namespace {

struct ScalarForm {
    bool single = false;
    Rational factor;              // single: x = factor * q^power
    long power = 0;
    std::vector<Rational> poly;   // otherwise: x = sum poly[i] q^i
};

long inverse_mod(long e, long n)
{
    for (long k = 1; k < n; ++k)
        if ((e * k) % n == 1)
            return k;
    return 1;
}

ScalarForm scalar_form(const Cyclotomic& x, const RootSpec& spec)
{
    ScalarForm form;
    const long n = spec.order;
    for (long step = 0; step <= n / 2; ++step) {
        for (long k : {step, -step}) {
            if (auto r = (x * zeta_pow(spec, -k)).as_rational()) {
                form.single = true;
                form.factor = *r;
                form.power = k;
                return form;
            }
            if (step == 0)
                break;
        }
    }
    form.poly = x.galois(static_cast<int>(inverse_mod(spec.zeta_exponent, n))).coeffs();
    return form;
}

std::string q_power_text(long k)
{
    if (k == 0)
        return "";
    if (k == 1)
        return "q";
    return "q^" + std::to_string(k);
}

std::string poly_text(const std::vector<Rational>& poly)
{
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Rational& c = poly[i];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string body = i == 0 ? mag.get_str() : (mag == 1 ? "" : mag.get_str() + "*") + q_power_text(static_cast<long>(i));
        out += body;
    }
    return out.empty() ? "0" : out;
}

// One signed summand: (is_negative, text without sign).
std::pair<bool, std::string> term_text(const Cyclotomic& coeff, const std::string& mono,
                                       const RootSpec& spec, bool parenthesize_constant)
{
    ScalarForm form = scalar_form(coeff, spec);
    if (form.single) {
        const bool negative = form.factor < 0;
        const Rational mag = negative ? Rational(-form.factor) : form.factor;
        std::vector<std::string> parts;
        if (mag != 1 || (form.power == 0 && mono.empty()))
            parts.push_back(mag.get_str());
        if (form.power != 0)
            parts.push_back(q_power_text(form.power));
        if (!mono.empty())
            parts.push_back(mono);
        std::string text;
        for (std::size_t i = 0; i < parts.size(); ++i)
            text += (i ? "*" : "") + parts[i];
        return {negative, text};
    }
    bool negative = true;
    for (const auto& c : form.poly)
        if (c > 0)
            negative = false;
    if (negative)
        for (auto& c : form.poly)
            c = -c;
    const std::string inner = poly_text(form.poly);
    if (mono.empty())
        return {negative, parenthesize_constant ? "(" + inner + ")" : inner};
    return {negative, "(" + inner + ")*" + mono};
}

std::string power_text(const char* name, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return name;
    return std::string(name) + "^" + std::to_string(e);
}

std::string join_factors(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (p.empty())
            continue;
        if (!out.empty())
            out += "*";
        out += p;
    }
    return out;
}

std::string classical_monomial_text(const ClassicalMonomial& m)
{
    return join_factors({power_text("alpha", m.alpha), power_text("beta", m.beta),
                         power_text("gamma", m.gamma), power_text("delta", m.delta)});
}

template <class Terms, class MonoText>
std::string format_sum(const Terms& terms, const RootSpec& spec, MonoText mono_text)
{
    if (terms.empty())
        return "0";
    std::string out;
    const bool several = terms.size() > 1;
    for (const auto& [m, c] : terms) {
        auto [negative, text] = term_text(c, mono_text(m), spec, several);
        if (out.empty())
            out += negative ? "-" + text : text;
        else
            out += (negative ? " - " : " + ") + text;
    }
    return out;
}

const char* chart_name(LocalChart chart) { return chart == LocalChart::U_alpha ? "alpha" : "beta"; }

}  // namespace

std::string format_scalar(const Cyclotomic& x, const RootSpec& spec)
{
    auto [negative, text] = term_text(x, "", spec, false);
    return negative ? "-" + text : text;
}

std::string format_monomial(const QMonomial& m)
{
    const std::string s = join_factors({power_text("a", m.a), power_text("b", m.b),
                                        power_text("c", m.c), power_text("d", m.d)});
    return s.empty() ? "1" : s;
}

std::string format_element(const QElement& x)
{
    return format_sum(x.terms(), x.spec(), [](const QMonomial& m) {
        return join_factors({power_text("a", m.a), power_text("b", m.b), power_text("c", m.c),
                             power_text("d", m.d)});
    });
}

std::string format_classical(const ClassicalElement& x)
{
    return format_sum(x.terms(), x.ring().spec(), classical_monomial_text);
}

std::string format_tensor(const TensorElement& t)
{
    return format_sum(t.terms(), t.ring().spec(), [](const TensorElement::Key& k) {
        return format_monomial(k.first) + " (x) " + format_monomial(k.second);
    });
}

std::string format_module(const ModuleElement& m)
{
    std::ostringstream out;
    out << "side: " << side_name(m.side()) << "\n";
    for (const auto& [key, coeff] : m.terms())
        out << "  " << format_monomial(key) << " : " << format_classical(coeff) << "\n";
    return out.str();
}

std::string format_basis_index(const BasisIndex& index)
{
    std::ostringstream out;
    if (index.family == Family::A)
        out << "A(m=" << index.m << ",n=" << index.n << ",s=" << index.s << ")";
    else
        out << "D(n=" << index.n << ",s=" << index.s << ",r=" << index.r << ")";
    return out.str();
}

std::string format_decomposition(const Decomposition& d)
{
    std::ostringstream out;
    out << "side: " << side_name(d.side()) << ", " << d.coefficients().size() << " generator(s)\n";
    for (const auto& [index, coeff] : d.coefficients())
        out << "  " << format_basis_index(index) << " " << format_monomial(index.monomial()) << " : "
            << format_classical(coeff) << "\n";
    return out.str();
}

std::string format_localized(const LocalizedElement& loc)
{
    std::ostringstream out;
    out << "chart: U_" << chart_name(loc.chart) << "\n";
    for (const auto& [m, lc] : loc.terms) {
        const QMonomial word = loc.chart == LocalChart::U_alpha ? QMonomial{m.x, m.y, m.z, 0}
                                                                : QMonomial{m.x, m.y, 0, m.z};
        out << "  " << format_monomial(word) << " : " << format_classical(lc.numerator);
        if (lc.k > 0)
            out << " / " << chart_name(loc.chart) << (lc.k > 1 ? "^" + std::to_string(lc.k) : "");
        out << "\n";
    }
    return out.str();
}

std::string format_closure(const ClosureReport& r)
{
    std::ostringstream out;
    const int l = r.spec.l;
    const int p = r.power;
    out << "a^" << l << " d^" << l << " = " << format_element(r.determinant_relation) << "; coproduct "
        << (r.coproduct_closes ? "closes" : "does not close") << "\n";
    out << "l = " << l << ", order = " << r.spec.order << ", examined power p = " << p << "\n";
    out << "determinant relation alpha*delta - beta*gamma = 1 holds for l-th powers: "
        << (r.determinant_matches ? "yes" : "no") << "\n";
    out << "a^" << p << " d^" << p << " = " << format_element(r.power_determinant) << "\n";
    out << "determinant relation closes on p-th powers: " << (r.determinant_closes ? "yes" : "no") << "\n";
    out << "p-th powers commute: " << (r.powers_commute ? "yes" : "no") << "\n";
    out << "coproduct closes on p-th powers: " << (r.coproduct_closes ? "yes" : "no") << "\n";
    if (!r.coproduct_closes)
        out << "  defect: " << format_tensor(r.coproduct_defect) << "\n";
    return out.str();
}

const char* side_name(Side side) { return side == Side::left ? "left" : "right"; }

Side parse_side(const std::string& text)
{
    if (text == "left")
        return Side::left;
    if (text == "right")
        return Side::right;
    throw DomainError("side must be 'left' or 'right', got '" + text + "'");
}

// ---------------------------------------------------------------------------
// JSON

Json spec_to_json(const RootSpec& spec)
{
    return Json{{"l", spec.l}, {"N", spec.order}, {"zeta_exponent", spec.zeta_exponent}};
}

RootSpec spec_from_json(const Json& j)
{
    const int l = j.at("l").get<int>();
    const int zeta = j.value("zeta_exponent", 1);
    const int order = j.contains("N") ? j.at("N").get<int>() : make_root_spec(l).order;
    return diagnostic_root_spec(l, order, zeta);
}

Json cyclotomic_to_json(const Cyclotomic& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(rational_to_string(c));
    return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j, const CycloField& field)
{
    if (j.at("order").get<int>() != field.order())
        throw DomainError("cyclotomic JSON has order " + std::to_string(j.at("order").get<int>())
                          + ", expected " + std::to_string(field.order()));
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || static_cast<int>(arr.size()) != field.degree())
        throw DomainError("cyclotomic JSON must carry phi(N) coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : arr) {
        if (c.is_number_integer())
            coeffs.emplace_back(c.get<long>());
        else
            coeffs.push_back(rational_from_string(c.get<std::string>()));
    }
    return {field, std::move(coeffs)};
}

Json monomial_to_json(const QMonomial& m)
{
    return Json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

QMonomial monomial_from_json(const Json& j)
{
    return {j.value("a", 0), j.value("b", 0), j.value("c", 0), j.value("d", 0)};
}

Json element_to_json(const QElement& x)
{
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json t = monomial_to_json(m);
        t["coeff"] = cyclotomic_to_json(c);
        terms.push_back(std::move(t));
    }
    return Json{{"spec", spec_to_json(x.spec())}, {"terms", terms}};
}

QElement element_from_json(const Json& j)
{
    const QRing& ring = QRing::get(spec_from_json(j.at("spec")));
    QElement out(ring);
    for (const auto& t : j.at("terms")) {
        const QMonomial m = monomial_from_json(t);
        const Cyclotomic c = cyclotomic_from_json(t.at("coeff"), ring.field());
        out += QElement::monomial(ring, m, c);
    }
    return out;
}

Json classical_to_json(const ClassicalElement& x)
{
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back(Json{{"alpha", m.alpha},
                             {"beta", m.beta},
                             {"gamma", m.gamma},
                             {"delta", m.delta},
                             {"coeff", cyclotomic_to_json(c)}});
    return Json{{"spec", spec_to_json(x.ring().spec())}, {"terms", terms}};
}

ClassicalElement classical_from_json(const Json& j, const QRing& ring)
{
    ClassicalElement out(ring);
    for (const auto& t : j.at("terms")) {
        const ClassicalMonomial m{t.value("alpha", 0), t.value("beta", 0), t.value("gamma", 0),
                                  t.value("delta", 0)};
        out += ClassicalElement::normalize(ring, m, cyclotomic_from_json(t.at("coeff"), ring.field()));
    }
    return out;
}

Json tensor_to_json(const TensorElement& t)
{
    Json terms = Json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back(Json{{"left", monomial_to_json(k.first)},
                             {"right", monomial_to_json(k.second)},
                             {"coeff", cyclotomic_to_json(c)}});
    return Json{{"spec", spec_to_json(t.ring().spec())}, {"terms", terms}};
}

Json module_to_json(const ModuleElement& m)
{
    Json terms = Json::array();
    for (const auto& [key, coeff] : m.terms())
        terms.push_back(Json{{"monomial", monomial_to_json(key)}, {"coeff", classical_to_json(coeff)}});
    return Json{{"side", side_name(m.side())}, {"terms", terms}};
}

Json decomposition_to_json(const Decomposition& d)
{
    Json entries = Json::array();
    for (const auto& [index, coeff] : d.coefficients()) {
        Json e;
        if (index.family == Family::A) {
            e["family"] = "A";
            e["m"] = index.m;
        } else {
            e["family"] = "D";
            e["r"] = index.r;
        }
        e["n"] = index.n;
        e["s"] = index.s;
        e["coeff"] = classical_to_json(coeff);
        entries.push_back(std::move(e));
    }
    return Json{{"side", side_name(d.side())}, {"entries", entries}};
}

Decomposition decomposition_from_json(const Json& j, const QRing& ring)
{
    Decomposition out(ring, parse_side(j.at("side").get<std::string>()));
    for (const auto& e : j.at("entries")) {
        const std::string family = e.at("family").get<std::string>();
        BasisIndex index;
        if (family == "A")
            index = BasisIndex::family_a(e.at("m").get<int>(), e.at("n").get<int>(), e.at("s").get<int>());
        else if (family == "D")
            index = BasisIndex::family_d(e.at("n").get<int>(), e.at("s").get<int>(), e.at("r").get<int>());
        else
            throw DomainError("decomposition entry has unknown family '" + family + "'");
        out.add(index, classical_from_json(e.at("coeff"), ring));
    }
    return out;
}

Json localized_to_json(const LocalizedElement& loc)
{
    Json terms = Json::array();
    for (const auto& [m, lc] : loc.terms) {
        const QMonomial word = loc.chart == LocalChart::U_alpha ? QMonomial{m.x, m.y, m.z, 0}
                                                                : QMonomial{m.x, m.y, 0, m.z};
        terms.push_back(Json{{"monomial", monomial_to_json(word)},
                             {"numerator", classical_to_json(lc.numerator)},
                             {"k", lc.k}});
    }
    return Json{{"chart", chart_name(loc.chart)}, {"spec", spec_to_json(loc.ring->spec())}, {"terms", terms}};
}

Json closure_to_json(const ClosureReport& r)
{
    return Json{{"l", r.spec.l},
                {"N", r.spec.order},
                {"power", r.power},
                {"powers_commute", r.powers_commute},
                {"determinant_relation", element_to_json(r.determinant_relation)},
                {"determinant_text", format_element(r.determinant_relation)},
                {"determinant_matches", r.determinant_matches},
                {"power_determinant", element_to_json(r.power_determinant)},
                {"determinant_closes", r.determinant_closes},
                {"coproduct_closes", r.coproduct_closes},
                {"coproduct_defect", tensor_to_json(r.coproduct_defect)}};
}

Json freeness_to_json(const FreenessReport& r)
{
    return Json{{"monomials_checked", r.monomials_checked},
                {"kernel_dimension", r.kernel_dimension},
                {"all_decomposed", r.all_decomposed},
                {"columns", r.columns}};
}

}  // namespace qsl2
