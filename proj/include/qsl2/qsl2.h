#ifndef QSL2_H
#define QSL2_H

/* C interface to the qsl2 library.
 *
 * Every call returns a qsl2_status; on failure qsl2_last_error() holds a
 * message for the calling thread.  Strings returned through char** are
 * owned by the caller and released with qsl2_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QSL2_BUILDING_LIBRARY)
#define QSL2_API __attribute__((visibility("default")))
#else
#define QSL2_API
#endif

typedef enum {
    QSL2_OK = 0,
    QSL2_ERR_INVALID_ARGUMENT = 1,
    QSL2_ERR_PARSE = 2,
    QSL2_ERR_MATH = 3,
    QSL2_ERR_INTERNAL = 4
} qsl2_status;

typedef enum { QSL2_FORMAT_TEXT = 0, QSL2_FORMAT_JSON = 1 } qsl2_format;
typedef enum { QSL2_SIDE_LEFT = 0, QSL2_SIDE_RIGHT = 1 } qsl2_side;
typedef enum { QSL2_CHART_ALPHA = 0, QSL2_CHART_BETA = 1 } qsl2_chart;

/* A root of unity setting: l and the chosen primitive root q. */
typedef struct qsl2_context qsl2_context;
/* An element of the quantum coordinate ring, bound to a context. */
typedef struct qsl2_element qsl2_element;

QSL2_API const char* qsl2_version(void);
QSL2_API const char* qsl2_last_error(void);
QSL2_API void qsl2_string_free(char* s);

/* zeta_exponent <= 0 selects the default root. */
QSL2_API qsl2_status qsl2_context_create(int l, int zeta_exponent, qsl2_context** out);
QSL2_API void qsl2_context_destroy(qsl2_context* ctx);
QSL2_API qsl2_status qsl2_context_describe(const qsl2_context* ctx, int* l, int* order, int* zeta_exponent);

QSL2_API qsl2_status qsl2_element_parse(const qsl2_context* ctx, const char* text, qsl2_element** out);
QSL2_API qsl2_status qsl2_element_from_json(const qsl2_context* ctx, const char* json, qsl2_element** out);
QSL2_API void qsl2_element_destroy(qsl2_element* x);
QSL2_API qsl2_status qsl2_element_mul(const qsl2_element* x, const qsl2_element* y, qsl2_element** out);
QSL2_API qsl2_status qsl2_element_equal(const qsl2_element* x, const qsl2_element* y, int* out);
QSL2_API qsl2_status qsl2_element_format(const qsl2_element* x, qsl2_format format, char** out);

QSL2_API qsl2_status qsl2_coproduct(const qsl2_element* x, qsl2_format format, char** out);
QSL2_API qsl2_status qsl2_antipode(const qsl2_element* x, qsl2_element** out);
QSL2_API qsl2_status qsl2_counit(const qsl2_element* x, qsl2_format format, char** out);

QSL2_API qsl2_status qsl2_decompose(const qsl2_element* x, qsl2_side side, qsl2_format format, char** out);
/* Rebuilds the element from a decomposition JSON document. */
QSL2_API qsl2_status qsl2_recompose(const qsl2_context* ctx, const char* json, qsl2_element** out);
QSL2_API qsl2_status qsl2_localize(const qsl2_element* x, qsl2_chart chart, qsl2_format format, char** out);

/* Table of p_{k,j}, 0 <= j <= k <= l. */
QSL2_API qsl2_status qsl2_ptable(const qsl2_context* ctx, int k, qsl2_format format, char** out);
/* zeta_exponent <= 0 selects 1. */
QSL2_API qsl2_status qsl2_closure(int l, int order, int zeta_exponent, qsl2_format format, char** out);

/* QSL2_ERR_MATH when the kernel is nonzero, a residual monomial is not
 * spanned, or decompose disagrees with the oracle.  The report is written
 * to *out in every case where it could be produced.  degree_bound <= 0
 * selects 2. */
QSL2_API qsl2_status qsl2_verify_basis(const qsl2_context* ctx, qsl2_side side, int degree_bound,
                                       qsl2_format format, char** out);
QSL2_API qsl2_status qsl2_verify_fixtures(const char* path, qsl2_format format, char** out);
QSL2_API qsl2_status qsl2_selftest(qsl2_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
