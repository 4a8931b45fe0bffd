/*
 * twofold.h - C interface of the twofold library.
 *
 * A twofold number is passed as two scalars, value x0 and error x1. Scalar
 * operations return the result value and store the result error through the
 * last pointer argument, e.g.
 *
 *     double z1;
 *     double z0 = tf_tadd(x0, x1, y0, y1, &z1);   (z0+z1) ~ (x0+x1) + (y0+y1)
 *
 * Arity suffixes: none = both operands shaped, 1 = second operand dotted,
 * 2 = first operand dotted, 0 = both dotted. A trailing "f" selects binary32.
 * "t" operations are twofold (fast, unnormalized); "p" operations are coupled
 * (inputs must be renormalized, |x1| <= ulp(x0)/2, which is not checked).
 *
 * Functions that can fail return tf_status; the message of the last failure
 * on the calling thread is available from tf_last_error().
 */
#ifndef TWOFOLD_TWOFOLD_H
#define TWOFOLD_TWOFOLD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TWOFOLD_BUILDING)
#    define TF_API __declspec(dllexport)
#  else
#    define TF_API __declspec(dllimport)
#  endif
#else
#  define TF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
    TF_OK = 0,
    TF_EINVAL = 1,     /* invalid argument or configuration */
    TF_ELENGTH = 2,    /* array lengths differ */
    TF_EPARSE = 3,     /* malformed text */
    TF_ENOMEM = 4,     /* allocation failed */
    TF_ESINGULAR = 5,  /* singular matrix */
    TF_EENV = 6,       /* floating-point environment unsuitable */
    TF_EINTERNAL = 7
} tf_status;

TF_API const char* tf_status_string(tf_status s);
/* Message of the last failing call on this thread; "" if none. */
TF_API const char* tf_last_error(void);
TF_API const char* tf_version(void);

/* Checks rounding mode, fma and the absence of value-changing optimizations. */
TF_API tf_status tf_selfcheck(void);

/* ---- error-free transformations: return hi, store lo ---- */
TF_API double tf_two_sum(double a, double b, double* lo);
TF_API double tf_fast_two_sum(double a, double b, double* lo); /* |a| >= |b| */
TF_API double tf_two_prod(double a, double b, double* lo);
TF_API float tf_two_sumf(float a, float b, float* lo);
TF_API float tf_fast_two_sumf(float a, float b, float* lo);
TF_API float tf_two_prodf(float a, float b, float* lo);

/* ---- arithmetic families ----
 * For each OP in add, sub, mul, div and each prefix t, p:
 *   z0 = tf_<t|p><OP> (x0,x1, y0,y1, &z1)
 *   z0 = tf_<t|p><OP>1(x0,x1, y,     &z1)
 *   z0 = tf_<t|p><OP>2(x,     y0,y1, &z1)
 *   z0 = tf_<t|p><OP>0(x,     y,     &z1)
 * plus the same names with an "f" suffix over float.
 */
#define TF_DECLARE_BINARY(name, T, S)                                         \
    TF_API T tf_##name##S(T x0, T x1, T y0, T y1, T* z1);                     \
    TF_API T tf_##name##1##S(T x0, T x1, T y, T* z1);                         \
    TF_API T tf_##name##2##S(T x, T y0, T y1, T* z1);                         \
    TF_API T tf_##name##0##S(T x, T y, T* z1);
#define TF_DECLARE_WIDTHS(name) TF_DECLARE_BINARY(name, double, ) TF_DECLARE_BINARY(name, float, f)

TF_DECLARE_WIDTHS(tadd)
TF_DECLARE_WIDTHS(tsub)
TF_DECLARE_WIDTHS(tmul)
TF_DECLARE_WIDTHS(tdiv)
TF_DECLARE_WIDTHS(padd)
TF_DECLARE_WIDTHS(psub)
TF_DECLARE_WIDTHS(pmul)
TF_DECLARE_WIDTHS(pdiv)

#undef TF_DECLARE_WIDTHS
#undef TF_DECLARE_BINARY

TF_API double tf_tsqrt(double x0, double x1, double* z1);
TF_API double tf_tsqrt0(double x, double* z1);
TF_API double tf_psqrt(double x0, double x1, double* z1);
TF_API double tf_psqrt0(double x, double* z1);
TF_API float tf_tsqrtf(float x0, float x1, float* z1);
TF_API float tf_tsqrt0f(float x, float* z1);
TF_API float tf_psqrtf(float x0, float x1, float* z1);
TF_API float tf_psqrt0f(float x, float* z1);

/* Twofold results from coupled operands, cheaper than tmul/tdiv/tsqrt. */
TF_API double tf_tmulp(double x0, double x1, double y0, double y1, double* z1);
TF_API double tf_tdivp(double x0, double x1, double y0, double y1, double* z1);
TF_API double tf_tsqrtp(double x0, double x1, double* z1);
TF_API float tf_tmulpf(float x0, float x1, float y0, float y1, float* z1);
TF_API float tf_tdivpf(float x0, float x1, float y0, float y1, float* z1);
TF_API float tf_tsqrtpf(float x0, float x1, float* z1);

/* Renormalization: any twofold to coupled, value+error preserved exactly.
 * fast_renorm requires |x1| <= |x0|; fast_add0/fast_sub0 require |x| >= |y|. */
TF_API double tf_renormalize(double x0, double x1, double* z1);
TF_API double tf_fast_renorm(double x0, double x1, double* z1);
TF_API double tf_fast_add0(double x, double y, double* z1);
TF_API double tf_fast_sub0(double x, double y, double* z1);
TF_API float tf_renormalizef(float x0, float x1, float* z1);
TF_API float tf_fast_renormf(float x0, float x1, float* z1);
TF_API float tf_fast_add0f(float x, float y, float* z1);
TF_API float tf_fast_sub0f(float x, float y, float* z1);

/* ---- service ---- */
TF_API double tf_tneg(double x0, double x1, double* z1);
TF_API double tf_tabs(double x0, double x1, double* z1);
TF_API int tf_tisnan(double x0, double x1);
TF_API int tf_tisinf(double x0, double x1);
TF_API float tf_tnegf(float x0, float x1, float* z1);
TF_API float tf_tabsf(float x0, float x1, float* z1);
TF_API int tf_tisnanf(float x0, float x1);
TF_API int tf_tisinff(float x0, float x1);

/* ---- comparisons ----
 * tf_t<cmp>: value parts only (IEEE semantics; tne is true when a NaN is involved).
 * tf_p<cmp>: coupled, lexicographic on (value, error); pne = !peq.
 * cmp in lt, le, gt, ge, eq, ne.
 */
#define TF_DECLARE_CMP(name)                                              \
    TF_API int tf_##name(double x0, double x1, double y0, double y1);     \
    TF_API int tf_##name##f(float x0, float x1, float y0, float y1);
TF_DECLARE_CMP(tlt) TF_DECLARE_CMP(tle) TF_DECLARE_CMP(tgt)
TF_DECLARE_CMP(tge) TF_DECLARE_CMP(teq) TF_DECLARE_CMP(tne)
TF_DECLARE_CMP(plt) TF_DECLARE_CMP(ple) TF_DECLARE_CMP(pgt)
TF_DECLARE_CMP(pge) TF_DECLARE_CMP(peq) TF_DECLARE_CMP(pne)
#undef TF_DECLARE_CMP

/* ---- reductions ----
 * Strict left-to-right sums; the value lane equals the plain loop
 * (s += x[i], or s += x[i]*y[i] with the product rounded first).
 * The _chunked variants split the input into `chunks` threads; the result
 * then differs from the sequential one but is reproducible per chunk count.
 */
TF_API tf_status tf_tsum(const double* x, size_t n, double* z0, double* z1);
TF_API tf_status tf_tdot(const double* x, const double* y, size_t n, double* z0, double* z1);
TF_API tf_status tf_tsum_chunked(const double* x, size_t n, size_t chunks, double* z0, double* z1);
TF_API tf_status tf_tdot_chunked(const double* x, const double* y, size_t n, size_t chunks,
                                 double* z0, double* z1);
TF_API tf_status tf_tsumf(const float* x, size_t n, float* z0, float* z1);
TF_API tf_status tf_tdotf(const float* x, const float* y, size_t n, float* z0, float* z1);
TF_API tf_status tf_tsum_chunkedf(const float* x, size_t n, size_t chunks, float* z0, float* z1);
TF_API tf_status tf_tdot_chunkedf(const float* x, const float* y, size_t n, size_t chunks,
                                  float* z0, float* z1);

/* Batches of twofolds as separate value and error arrays of length n. */
typedef struct tf_soa { const double* value; const double* error; size_t n; } tf_soa;
typedef struct tf_soa_out { double* value; double* error; size_t n; } tf_soa_out;
typedef struct tf_soaf { const float* value; const float* error; size_t n; } tf_soaf;
typedef struct tf_soa_outf { float* value; float* error; size_t n; } tf_soa_outf;

/* Elementwise, bitwise equal to the scalar operation; TF_ELENGTH if sizes differ. */
TF_API tf_status tf_tadd_slice(tf_soa x, tf_soa y, tf_soa_out z);
TF_API tf_status tf_tsub_slice(tf_soa x, tf_soa y, tf_soa_out z);
TF_API tf_status tf_tmul_slice(tf_soa x, tf_soa y, tf_soa_out z);
TF_API tf_status tf_tdiv_slice(tf_soa x, tf_soa y, tf_soa_out z);
TF_API tf_status tf_tsqrt_slice(tf_soa x, tf_soa_out z);
TF_API tf_status tf_tadd_slicef(tf_soaf x, tf_soaf y, tf_soa_outf z);
TF_API tf_status tf_tsub_slicef(tf_soaf x, tf_soaf y, tf_soa_outf z);
TF_API tf_status tf_tmul_slicef(tf_soaf x, tf_soaf y, tf_soa_outf z);
TF_API tf_status tf_tdiv_slicef(tf_soaf x, tf_soaf y, tf_soa_outf z);
TF_API tf_status tf_tsqrt_slicef(tf_soaf x, tf_soa_outf z);

/* ---- text ----
 * "VALUE[ERROR]". hex != 0 writes hexadecimal float lanes (bit exact);
 * otherwise `digits` significant digits (6 if digits <= 0).
 * Writes at most cap bytes including the terminator; *needed (optional)
 * receives the full length without terminator. Truncation is TF_EINVAL.
 */
TF_API tf_status tf_format(double x0, double x1, int hex, int digits, char* buf, size_t cap, size_t* needed);
TF_API tf_status tf_formatf(float x0, float x1, int hex, int digits, char* buf, size_t cap, size_t* needed);
/* Accepts "VALUE[ERROR]" or a bare "VALUE" (error 0). */
TF_API tf_status tf_parse(const char* text, double* x0, double* x1);
TF_API tf_status tf_parsef(const char* text, float* x0, float* x1);

/* Releases strings returned by the render functions. */
TF_API void tf_free(void* p);

/* ---- accuracy lab ---- */
typedef enum tf_kind {
    TF_DOTTED32, TF_DOTTED64, TF_TWOFOLD32, TF_TWOFOLD64, TF_COUPLED32, TF_COUPLED64
} tf_kind;

typedef enum tf_render { TF_RENDER_TEXT = 0, TF_RENDER_RECORDS = 1 } tf_render;

typedef struct tf_report tf_report;

TF_API tf_status tf_kind_parse(const char* name, tf_kind* kind);
TF_API const char* tf_kind_name(tf_kind kind);

/* hours in [0, 1e5]. */
TF_API tf_status tf_lab_summation(tf_kind kind, double hours, tf_report** out);
/* a = 1, b = 2; c is "A", "A+B" or "A-B", evaluated in binary64. */
TF_API tf_status tf_lab_quadratic(tf_kind kind, const char* c, tf_report** out);
/* order: "literal" or "grouped". */
TF_API tf_status tf_lab_rump(tf_kind kind, const char* order, tf_report** out);
/* lambda = 1/integer; variant: "integer", "normalized" or "truncated". */
TF_API tf_status tf_lab_jordan(tf_kind kind, double lambda, const char* variant, tf_report** out);

TF_API size_t tf_report_size(const tf_report* r);
/* *verdict: 1 pass, 0 fail, -1 unchecked. Pointers may be NULL. The name
 * stays valid until tf_report_free. */
TF_API tf_status tf_report_quantity(const tf_report* r, size_t i, const char** name,
                                    double* value, double* error, int* verdict);
TF_API size_t tf_report_failures(const tf_report* r);
/* text mode uses `digits` significant digits (6 if <= 0). *out: release with tf_free. */
TF_API tf_status tf_report_render(const tf_report* r, tf_render mode, int digits, char** out);
TF_API void tf_report_free(tf_report* r);

/* ---- throughput ---- */
typedef struct tf_bench tf_bench;

/* kernels: comma separated subset of sum,dot,tsum,tdot,ops. bytes per array;
 * width 32 or 64; min_seconds per timed loop (0.2 if <= 0). */
TF_API tf_status tf_bench_run(const char* kernels, size_t bytes, int width, uint64_t seed,
                              double min_seconds, tf_bench** out);
TF_API size_t tf_bench_size(const tf_bench* b);
TF_API tf_status tf_bench_row(const tf_bench* b, size_t i, const char** name,
                              double* ops_per_sec, double* ratio);
TF_API tf_status tf_bench_render(const tf_bench* b, tf_render mode, char** out);
TF_API void tf_bench_free(tf_bench* b);

#ifdef __cplusplus
}
#endif

#endif /* TWOFOLD_TWOFOLD_H */
