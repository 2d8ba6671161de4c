#include "qsl2/qsl2.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "qsl2/expression.hpp"
#include "qsl2/selftest.hpp"

struct qsl2_context {
    const qsl2::QRing* ring;
};

struct qsl2_element {
    qsl2::QElement value;
};

namespace {

thread_local std::string last_error;

class MathFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class F>
qsl2_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return QSL2_OK;
    } catch (const qsl2::ParseError& e) {
        last_error = e.what();
        return QSL2_ERR_PARSE;
    } catch (const qsl2::Json::exception& e) {
        last_error = std::string("json: ") + e.what();
        return QSL2_ERR_PARSE;
    } catch (const qsl2::VerificationError& e) {
        last_error = e.what();
        return QSL2_ERR_MATH;
    } catch (const MathFailure& e) {
        last_error = e.what();
        return QSL2_ERR_MATH;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return QSL2_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return QSL2_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return QSL2_ERR_INTERNAL;
    }
}

void require(bool condition, const char* message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, qsl2_format format, const std::string& text, const qsl2::Json& json)
{
    *out = copy_string(format == QSL2_FORMAT_JSON ? json.dump(2) + "\n" : text);
}

qsl2::Side to_side(qsl2_side side)
{
    require(side == QSL2_SIDE_LEFT || side == QSL2_SIDE_RIGHT, "invalid side");
    return side == QSL2_SIDE_LEFT ? qsl2::Side::left : qsl2::Side::right;
}

qsl2_element* wrap(qsl2::QElement x) { return new qsl2_element{std::move(x)}; }

}  // namespace

extern "C" {

const char* qsl2_version(void) { return "0.1.0"; }

const char* qsl2_last_error(void) { return last_error.c_str(); }

void qsl2_string_free(char* s) { std::free(s); }

qsl2_status qsl2_context_create(int l, int zeta_exponent, qsl2_context** out)
{
    return guarded([&] {
        require(out, "null output pointer");
        const auto spec = qsl2::make_root_spec(
            l, zeta_exponent > 0 ? std::optional<int>(zeta_exponent) : std::nullopt);
        *out = new qsl2_context{&qsl2::QRing::get(spec)};
    });
}

void qsl2_context_destroy(qsl2_context* ctx) { delete ctx; }

qsl2_status qsl2_context_describe(const qsl2_context* ctx, int* l, int* order, int* zeta_exponent)
{
    return guarded([&] {
        require(ctx, "null context");
        const auto& spec = ctx->ring->spec();
        if (l)
            *l = spec.l;
        if (order)
            *order = spec.order;
        if (zeta_exponent)
            *zeta_exponent = spec.zeta_exponent;
    });
}

qsl2_status qsl2_element_parse(const qsl2_context* ctx, const char* text, qsl2_element** out)
{
    return guarded([&] {
        require(ctx && text && out, "null argument");
        *out = wrap(qsl2::parse_element(text, *ctx->ring));
    });
}

qsl2_status qsl2_element_from_json(const qsl2_context* ctx, const char* json, qsl2_element** out)
{
    return guarded([&] {
        require(ctx && json && out, "null argument");
        qsl2::QElement x = qsl2::element_from_json(qsl2::Json::parse(json));
        require(x.ring() == *ctx->ring, "element JSON belongs to a different root of unity");
        *out = wrap(std::move(x));
    });
}

void qsl2_element_destroy(qsl2_element* x) { delete x; }

qsl2_status qsl2_element_mul(const qsl2_element* x, const qsl2_element* y, qsl2_element** out)
{
    return guarded([&] {
        require(x && y && out, "null argument");
        *out = wrap(qsl2::qmul(x->value, y->value));
    });
}

qsl2_status qsl2_element_equal(const qsl2_element* x, const qsl2_element* y, int* out)
{
    return guarded([&] {
        require(x && y && out, "null argument");
        *out = x->value == y->value ? 1 : 0;
    });
}

qsl2_status qsl2_element_format(const qsl2_element* x, qsl2_format format, char** out)
{
    return guarded([&] {
        require(x && out, "null argument");
        emit(out, format, qsl2::format_element(x->value) + "\n", qsl2::element_to_json(x->value));
    });
}

qsl2_status qsl2_coproduct(const qsl2_element* x, qsl2_format format, char** out)
{
    return guarded([&] {
        require(x && out, "null argument");
        const auto t = qsl2::coproduct(x->value);
        emit(out, format, qsl2::format_tensor(t) + "\n", qsl2::tensor_to_json(t));
    });
}

qsl2_status qsl2_antipode(const qsl2_element* x, qsl2_element** out)
{
    return guarded([&] {
        require(x && out, "null argument");
        *out = wrap(qsl2::antipode(x->value));
    });
}

qsl2_status qsl2_counit(const qsl2_element* x, qsl2_format format, char** out)
{
    return guarded([&] {
        require(x && out, "null argument");
        const auto e = qsl2::counit(x->value);
        emit(out, format, qsl2::format_scalar(e, x->value.spec()) + "\n", qsl2::cyclotomic_to_json(e));
    });
}

qsl2_status qsl2_decompose(const qsl2_element* x, qsl2_side side, qsl2_format format, char** out)
{
    return guarded([&] {
        require(x && out, "null argument");
        const auto d = qsl2::decompose(x->value, to_side(side));
        emit(out, format, qsl2::format_decomposition(d), qsl2::decomposition_to_json(d));
    });
}

qsl2_status qsl2_recompose(const qsl2_context* ctx, const char* json, qsl2_element** out)
{
    return guarded([&] {
        require(ctx && json && out, "null argument");
        const auto d = qsl2::decomposition_from_json(qsl2::Json::parse(json), *ctx->ring);
        *out = wrap(qsl2::recompose(d));
    });
}

qsl2_status qsl2_localize(const qsl2_element* x, qsl2_chart chart, qsl2_format format, char** out)
{
    return guarded([&] {
        require(x && out, "null argument");
        require(chart == QSL2_CHART_ALPHA || chart == QSL2_CHART_BETA, "invalid chart");
        const auto loc = qsl2::localize(
            x->value, chart == QSL2_CHART_ALPHA ? qsl2::LocalChart::U_alpha : qsl2::LocalChart::U_beta);
        emit(out, format, qsl2::format_localized(loc), qsl2::localized_to_json(loc));
    });
}

qsl2_status qsl2_ptable(const qsl2_context* ctx, int k, qsl2_format format, char** out)
{
    return guarded([&] {
        require(ctx && out, "null argument");
        const auto& spec = ctx->ring->spec();
        require(k >= 0 && k <= spec.l, "k must satisfy 0 <= k <= l");
        std::ostringstream text;
        qsl2::Json rows = qsl2::Json::array();
        for (int j = 0; j <= k; ++j) {
            const auto p = qsl2::p_coeff(spec, k, j);
            text << "p_{" << k << "," << j << "} = " << qsl2::format_scalar(p, spec) << "\n";
            rows.push_back(qsl2::Json{{"k", k}, {"j", j}, {"value", qsl2::cyclotomic_to_json(p)},
                                      {"text", qsl2::format_scalar(p, spec)}});
        }
        emit(out, format, text.str(), qsl2::Json{{"spec", qsl2::spec_to_json(spec)}, {"entries", rows}});
    });
}

qsl2_status qsl2_closure(int l, int order, int zeta_exponent, qsl2_format format, char** out)
{
    return guarded([&] {
        require(out, "null output pointer");
        const auto r = qsl2::closure_diagnostic(l, order, zeta_exponent > 0 ? zeta_exponent : 1);
        emit(out, format, qsl2::format_closure(r), qsl2::closure_to_json(r));
    });
}

qsl2_status qsl2_verify_basis(const qsl2_context* ctx, qsl2_side side, int degree_bound, qsl2_format format,
                              char** out)
{
    return guarded([&] {
        require(ctx && out, "null argument");
        const auto s = to_side(side);
        const auto check = qsl2::check_basis(ctx->ring->spec(), s, degree_bound > 0 ? degree_bound : 2);
        emit(out, format, qsl2::format_basis_check(check, s), qsl2::basis_check_to_json(check, s));
        if (!check.passed())
            throw MathFailure("basis verification failed");
    });
}

qsl2_status qsl2_verify_fixtures(const char* path, qsl2_format format, char** out)
{
    return guarded([&] {
        require(path && out, "null argument");
        const auto report = qsl2::verify_fixture_file(path);
        emit(out, format, qsl2::format_fixture_report(report), qsl2::fixture_report_to_json(report));
        if (!report.ok())
            throw MathFailure("fixture verification failed");
    });
}

qsl2_status qsl2_selftest(qsl2_format format, char** out)
{
    return guarded([&] {
        require(out, "null output pointer");
        const auto report = qsl2::run_selftest();
        emit(out, format, qsl2::format_suite(report), qsl2::suite_to_json(report));
        if (!report.passed())
            throw MathFailure("selftest failed");
    });
}

}  // extern "C"
