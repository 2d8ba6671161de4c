#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "qsl2/qsl2.h"

namespace {

struct Context {
    qsl2_context* ptr = nullptr;
    explicit Context(int l, int e = 0) { REQUIRE(qsl2_context_create(l, e, &ptr) == QSL2_OK); }
    ~Context() { qsl2_context_destroy(ptr); }
};

struct Element {
    qsl2_element* ptr = nullptr;
    Element() = default;
    Element(const Context& ctx, const char* text) { REQUIRE(qsl2_element_parse(ctx.ptr, text, &ptr) == QSL2_OK); }
    ~Element() { qsl2_element_destroy(ptr); }
    Element(const Element&) = delete;
    Element& operator=(const Element&) = delete;
};

std::string take(char* s)
{
    std::string out = s ? s : "";
    qsl2_string_free(s);
    return out;
}

std::string text_of(const qsl2_element* x)
{
    char* out = nullptr;
    REQUIRE(qsl2_element_format(x, QSL2_FORMAT_TEXT, &out) == QSL2_OK);
    return take(out);
}

}  // namespace

TEST_CASE("contexts")
{
    Context ctx(2);
    int l = 0, order = 0, e = 0;
    CHECK(qsl2_context_describe(ctx.ptr, &l, &order, &e) == QSL2_OK);
    CHECK(l == 2);
    CHECK(order == 4);
    CHECK(e == 1);

    qsl2_context* bad = nullptr;
    CHECK(qsl2_context_create(1, 0, &bad) == QSL2_ERR_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
    CHECK(std::string(qsl2_last_error()).find("l must be at least 2") != std::string::npos);
    CHECK(qsl2_context_create(4, 2, &bad) == QSL2_ERR_INVALID_ARGUMENT);
    CHECK(qsl2_context_create(3, 0, nullptr) == QSL2_ERR_INVALID_ARGUMENT);
    CHECK(std::string(qsl2_version()) == "0.1.0");
}

TEST_CASE("elements")
{
    Context ctx(3);
    Element x(ctx, "d*a");
    CHECK(text_of(x.ptr) == "1 + q^-1*b*c\n");

    Element a(ctx, "a"), d(ctx, "d"), expected(ctx, "1 + q*b*c");
    Element prod;
    REQUIRE(qsl2_element_mul(a.ptr, d.ptr, &prod.ptr) == QSL2_OK);
    int eq = 0;
    CHECK(qsl2_element_equal(prod.ptr, expected.ptr, &eq) == QSL2_OK);
    CHECK(eq == 1);

    qsl2_element* bad = nullptr;
    CHECK(qsl2_element_parse(ctx.ptr, "a^(2", &bad) == QSL2_ERR_PARSE);
    CHECK(std::string(qsl2_last_error()).find("position 4") != std::string::npos);
    CHECK(qsl2_element_parse(ctx.ptr, nullptr, &bad) == QSL2_ERR_INVALID_ARGUMENT);

    char* json = nullptr;
    REQUIRE(qsl2_element_format(x.ptr, QSL2_FORMAT_JSON, &json) == QSL2_OK);
    Element back;
    REQUIRE(qsl2_element_from_json(ctx.ptr, take(json).c_str(), &back.ptr) == QSL2_OK);
    CHECK(qsl2_element_equal(back.ptr, x.ptr, &eq) == QSL2_OK);
    CHECK(eq == 1);

    Context other(5);
    Element y(other, "a");
    CHECK(qsl2_element_mul(a.ptr, y.ptr, &bad) == QSL2_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hopf maps")
{
    Context ctx(3);
    Element ab(ctx, "a*b"), expected(ctx, "-q^-1*b*d");
    Element s;
    REQUIRE(qsl2_antipode(ab.ptr, &s.ptr) == QSL2_OK);
    int eq = 0;
    qsl2_element_equal(s.ptr, expected.ptr, &eq);
    CHECK(eq == 1);

    char* out = nullptr;
    Element a(ctx, "a");
    REQUIRE(qsl2_coproduct(a.ptr, QSL2_FORMAT_TEXT, &out) == QSL2_OK);
    CHECK(take(out) == "a (x) a + b (x) c\n");
    Element u(ctx, "a^2 + 3*b");
    REQUIRE(qsl2_counit(u.ptr, QSL2_FORMAT_TEXT, &out) == QSL2_OK);
    CHECK(take(out) == "1\n");
}

TEST_CASE("decompose and recompose")
{
    Context ctx(3);
    Element a(ctx, "a");
    char* out = nullptr;
    REQUIRE(qsl2_decompose(a.ptr, QSL2_SIDE_LEFT, QSL2_FORMAT_JSON, &out) == QSL2_OK);
    const std::string json = take(out);
    const auto doc = nlohmann::json::parse(json);
    CHECK(doc.at("side") == "left");
    CHECK(doc.at("entries").size() == 3);

    Element back;
    REQUIRE(qsl2_recompose(ctx.ptr, json.c_str(), &back.ptr) == QSL2_OK);
    int eq = 0;
    qsl2_element_equal(back.ptr, a.ptr, &eq);
    CHECK(eq == 1);

    qsl2_element* bad = nullptr;
    CHECK(qsl2_recompose(ctx.ptr, "{not json", &bad) == QSL2_ERR_PARSE);
    CHECK(qsl2_decompose(a.ptr, static_cast<qsl2_side>(7), QSL2_FORMAT_TEXT, &out) == QSL2_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reports")
{
    Context ctx(3);
    char* out = nullptr;
    REQUIRE(qsl2_closure(3, 6, 0, QSL2_FORMAT_TEXT, &out) == QSL2_OK);
    CHECK(take(out).rfind("a^3 d^3 = 1 - b^3*c^3; coproduct does not close", 0) == 0);
    CHECK(qsl2_closure(3, 5, 0, QSL2_FORMAT_TEXT, &out) == QSL2_ERR_INVALID_ARGUMENT);

    REQUIRE(qsl2_ptable(ctx.ptr, 3, QSL2_FORMAT_TEXT, &out) == QSL2_OK);
    CHECK(take(out) == "p_{3,0} = 1\np_{3,1} = 0\np_{3,2} = 0\np_{3,3} = 1\n");
    CHECK(qsl2_ptable(ctx.ptr, 4, QSL2_FORMAT_TEXT, &out) == QSL2_ERR_INVALID_ARGUMENT);

    Element d(ctx, "d");
    REQUIRE(qsl2_localize(d.ptr, QSL2_CHART_ALPHA, QSL2_FORMAT_JSON, &out) == QSL2_OK);
    CHECK(nlohmann::json::parse(take(out)).at("terms").size() == 2);

    out = nullptr;
    REQUIRE(qsl2_verify_basis(ctx.ptr, QSL2_SIDE_RIGHT, 2, QSL2_FORMAT_JSON, &out) == QSL2_OK);
    const auto rep = nlohmann::json::parse(take(out));
    CHECK(rep.at("kernel_dimension") == 0);
    CHECK(rep.at("oracle_agreed") == 45);

    out = nullptr;
    CHECK(qsl2_verify_basis(ctx.ptr, QSL2_SIDE_LEFT, 1, QSL2_FORMAT_TEXT, &out) == QSL2_ERR_MATH);
    CHECK(take(out).find("FAILED") != std::string::npos);

    out = nullptr;
    CHECK(qsl2_verify_fixtures("/nonexistent/fixtures.jsonl", QSL2_FORMAT_TEXT, &out) == QSL2_ERR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
}
