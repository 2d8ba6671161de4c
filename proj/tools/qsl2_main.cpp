// qsl2 command-line tool.  Talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qsl2/qsl2.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_usage = 2;

struct Options {
    std::optional<int> l;
    int zeta_exp = 0;
    std::string side = "left";
    std::string format = "text";
    std::string fixtures;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Failure {
    qsl2_status status;
};

using ContextPtr = std::unique_ptr<qsl2_context, decltype(&qsl2_context_destroy)>;
using ElementPtr = std::unique_ptr<qsl2_element, decltype(&qsl2_element_destroy)>;

void check(qsl2_status status)
{
    if (status != QSL2_OK)
        throw Failure{status};
}

std::string read_stream(std::istream& in)
{
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    return s;
}

std::string resolve_input(const std::string& arg)
{
    if (arg == "-")
        return read_stream(std::cin);
    return arg;
}

std::string resolve_json(const std::string& arg)
{
    if (arg == "-")
        return read_stream(std::cin);
    if (!arg.empty() && arg.front() != '{') {
        std::ifstream in(arg);
        if (in)
            return read_stream(in);
    }
    return arg;
}

qsl2_format format_of(const Options& o) { return o.format == "json" ? QSL2_FORMAT_JSON : QSL2_FORMAT_TEXT; }
qsl2_side side_of(const std::string& s) { return s == "right" ? QSL2_SIDE_RIGHT : QSL2_SIDE_LEFT; }

ContextPtr make_context(const Options& o)
{
    if (!o.l)
        throw Usage("--l is required");
    qsl2_context* ctx = nullptr;
    check(qsl2_context_create(*o.l, o.zeta_exp, &ctx));
    return ContextPtr(ctx, &qsl2_context_destroy);
}

ElementPtr parse(const qsl2_context* ctx, const std::string& text)
{
    qsl2_element* x = nullptr;
    check(qsl2_element_parse(ctx, resolve_input(text).c_str(), &x));
    return ElementPtr(x, &qsl2_element_destroy);
}

void print(char* s)
{
    std::fputs(s, stdout);
    qsl2_string_free(s);
}

// Runs a report-producing call; the report is printed even when the call
// signals a mathematical failure.
void report(qsl2_status status, char* out)
{
    if (out)
        print(out);
    check(status);
}

void print_element(const qsl2_element* x, const Options& o)
{
    char* out = nullptr;
    check(qsl2_element_format(x, format_of(o), &out));
    print(out);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in the quantum coordinate ring at roots of unity"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--l", o.l, "Order parameter l (q has order l for odd l, 2l for even l)");
    app.add_option("--zeta-exp", o.zeta_exp, "q = zeta_N^e, e coprime to N (default 1)");
    app.add_option("--side", o.side, "Module side")->check(CLI::IsMember({"left", "right"}));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fixtures", o.fixtures, "JSON-lines fixture file checked by verify-basis")
        ->check(CLI::ExistingFile);

    std::string expr, expr2, json, chart = "alpha";
    int k = 0;
    std::optional<int> closure_l, degree_bound;
    int order = 0;
    std::optional<std::string> verify_side;

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
    normalize->add_option("expr", expr, "Expression, or - for stdin")->required();
    auto* mul = app.add_subcommand("mul", "Multiply two expressions");
    mul->add_option("x", expr, "Left factor")->required();
    mul->add_option("y", expr2, "Right factor")->required();
    auto* copro = app.add_subcommand("coproduct", "Coproduct");
    copro->add_option("expr", expr)->required();
    auto* anti = app.add_subcommand("antipode", "Antipode");
    anti->add_option("expr", expr)->required();
    auto* cou = app.add_subcommand("counit", "Counit");
    cou->add_option("expr", expr)->required();
    auto* dec = app.add_subcommand("decompose", "Coefficients on the l^3 module generators");
    dec->add_option("expr", expr)->required();
    auto* rec = app.add_subcommand("recompose", "Rebuild an element from a decomposition");
    rec->add_option("json", json, "Decomposition JSON, a file holding it, or -")->required();
    auto* loc = app.add_subcommand("localize", "Localize on the chart alpha != 0 or beta != 0");
    loc->add_option("expr", expr)->required();
    loc->add_option("--chart", chart)->check(CLI::IsMember({"alpha", "beta"}));
    auto* ptable = app.add_subcommand("ptable", "Coefficients p_{k,j}");
    ptable->add_option("--k", k)->required();
    auto* closure = app.add_subcommand("closure", "Closure of the l-th (or 2l-th) powers");
    closure->add_option("--l", closure_l);
    closure->add_option("--order", order, "Order N of q")->required();
    auto* verify = app.add_subcommand("verify-basis", "Check freeness, spanning and oracle agreement");
    verify->add_option("--degree-bound", degree_bound);
    verify->add_option("--side", verify_side)->check(CLI::IsMember({"left", "right"}));
    auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    const qsl2_format fmt = format_of(o);
    try {
        if (selftest->parsed()) {
            char* out = nullptr;
            const qsl2_status status = qsl2_selftest(fmt, &out);
            report(status, out);
            return exit_ok;
        }
        if (closure->parsed()) {
            const std::optional<int> l = closure_l ? closure_l : o.l;
            if (!l)
                throw Usage("--l is required");
            char* out = nullptr;
            check(qsl2_closure(*l, order, o.zeta_exp, fmt, &out));
            print(out);
            return exit_ok;
        }

        ContextPtr ctx = make_context(o);
        if (normalize->parsed()) {
            print_element(parse(ctx.get(), expr).get(), o);
        } else if (mul->parsed()) {
            ElementPtr x = parse(ctx.get(), expr);
            ElementPtr y = parse(ctx.get(), expr2);
            qsl2_element* z = nullptr;
            check(qsl2_element_mul(x.get(), y.get(), &z));
            ElementPtr owned(z, &qsl2_element_destroy);
            print_element(z, o);
        } else if (copro->parsed()) {
            char* out = nullptr;
            check(qsl2_coproduct(parse(ctx.get(), expr).get(), fmt, &out));
            print(out);
        } else if (anti->parsed()) {
            qsl2_element* z = nullptr;
            check(qsl2_antipode(parse(ctx.get(), expr).get(), &z));
            ElementPtr owned(z, &qsl2_element_destroy);
            print_element(z, o);
        } else if (cou->parsed()) {
            char* out = nullptr;
            check(qsl2_counit(parse(ctx.get(), expr).get(), fmt, &out));
            print(out);
        } else if (dec->parsed()) {
            char* out = nullptr;
            check(qsl2_decompose(parse(ctx.get(), expr).get(), side_of(o.side), fmt, &out));
            print(out);
        } else if (rec->parsed()) {
            qsl2_element* z = nullptr;
            check(qsl2_recompose(ctx.get(), resolve_json(json).c_str(), &z));
            ElementPtr owned(z, &qsl2_element_destroy);
            print_element(z, o);
        } else if (loc->parsed()) {
            char* out = nullptr;
            check(qsl2_localize(parse(ctx.get(), expr).get(),
                                chart == "beta" ? QSL2_CHART_BETA : QSL2_CHART_ALPHA, fmt, &out));
            print(out);
        } else if (ptable->parsed()) {
            char* out = nullptr;
            check(qsl2_ptable(ctx.get(), k, fmt, &out));
            print(out);
        } else if (verify->parsed()) {
            const qsl2_side side = side_of(verify_side ? *verify_side : o.side);
            char* out = nullptr;
            const qsl2_status basis = qsl2_verify_basis(ctx.get(), side, degree_bound.value_or(2), fmt, &out);
            if (out)
                print(out);
            qsl2_status fixtures = QSL2_OK;
            if (!o.fixtures.empty()) {
                char* fout = nullptr;
                fixtures = qsl2_verify_fixtures(o.fixtures.c_str(), fmt, &fout);
                if (fout)
                    print(fout);
            }
            check(basis);
            check(fixtures);
        }
        return exit_ok;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Failure& f) {
        std::cerr << "error: " << qsl2_last_error() << "\n";
        switch (f.status) {
        case QSL2_ERR_PARSE:
        case QSL2_ERR_INVALID_ARGUMENT:
            return exit_usage;
        default:
            return exit_math;
        }
    }
}
