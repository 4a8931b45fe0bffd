#include "twofold/twofold.h"

#include "twofold/bench.hpp"
#include "twofold/coupled.hpp"
#include "twofold/format.hpp"
#include "twofold/lab/lu.hpp"
#include "twofold/lab/scenarios.hpp"
#include "twofold/reduce.hpp"
#include "twofold/selfcheck.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

using namespace twofold;

struct tf_report {
    lab::Report report;
};

struct tf_bench {
    std::vector<BenchRow> rows;
};

namespace {

thread_local std::string g_last_error;

tf_status fail(tf_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

// Runs f, mapping exceptions to status codes; nothing escapes into C.
template <typename F>
tf_status guard(F&& f) noexcept {
    try {
        f();
        return TF_OK;
    } catch (const lab::SingularMatrixError& e) {
        return fail(TF_ESINGULAR, e.what());
    } catch (const ParseError& e) {
        return fail(TF_EPARSE, e.what());
    } catch (const LengthError& e) {
        return fail(TF_ELENGTH, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TF_EINVAL, e.what());
    } catch (const BenchError& e) {
        return fail(TF_EINVAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TF_ENOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(TF_EINTERNAL, e.what());
    } catch (...) {
        return fail(TF_EINTERNAL, "unknown error");
    }
}

tf_status require(const void* p, const char* what) {
    if (p == nullptr) return fail(TF_EINVAL, std::string(what) + " is NULL");
    return TF_OK;
}

template <typename T>
T put(const Twofold<T>& z, T* z1) {
    if (z1) *z1 = z.error;
    return z.value;
}

template <typename T>
T put(const EftPair<T>& z, T* lo) {
    if (lo) *lo = z.lo;
    return z.hi;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p == nullptr) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

lab::Kind to_kind(tf_kind k) {
    if (k < TF_DOTTED32 || k > TF_COUPLED64) throw std::invalid_argument("invalid kind");
    return lab::all_kinds[k];
}

template <typename T>
tf_status format_impl(T x0, T x1, int hex, int digits, char* buf, size_t cap, size_t* needed) {
    return guard([&] {
        const FormatOptions opts{hex ? Notation::hex : Notation::general, digits > 0 ? digits : 6};
        const std::string s = format(Twofold<T>(x0, x1), opts);
        if (needed) *needed = s.size();
        if (buf == nullptr || cap <= s.size()) {
            if (buf != nullptr && cap > 0) buf[0] = '\0';
            throw std::invalid_argument("buffer too small: need " + std::to_string(s.size() + 1) + " bytes");
        }
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

template <typename T>
tf_status parse_impl(const char* text, T* x0, T* x1) {
    if (tf_status s = require(text, "text")) return s;
    return guard([&] {
        const Twofold<T> z = parse<T>(text);
        if (x0) *x0 = z.value;
        if (x1) *x1 = z.error;
    });
}

template <typename T>
tf_status store(const Twofold<T>& z, T* z0, T* z1) {
    if (z0) *z0 = z.value;
    if (z1) *z1 = z.error;
    return TF_OK;
}

template <typename T>
tf_status tsum_impl(const T* x, size_t n, size_t chunks, bool chunked, T* z0, T* z1) {
    if (n > 0)
        if (tf_status s = require(x, "x")) return s;
    return guard([&] {
        const std::span<const T> xs(x, n);
        store(chunked ? tsum_chunked(xs, chunks) : tsum(xs), z0, z1);
    });
}

template <typename T>
tf_status tdot_impl(const T* x, const T* y, size_t n, size_t chunks, bool chunked, T* z0, T* z1) {
    if (n > 0) {
        if (tf_status s = require(x, "x")) return s;
        if (tf_status s = require(y, "y")) return s;
    }
    return guard([&] {
        const std::span<const T> xs(x, n), ys(y, n);
        store(chunked ? tdot_chunked(xs, ys, chunks) : tdot(xs, ys), z0, z1);
    });
}

template <typename In>
auto view(const In& a) {
    using T = std::remove_cv_t<std::remove_pointer_t<decltype(a.value)>>;
    if (a.n > 0 && (a.value == nullptr || a.error == nullptr))
        throw std::invalid_argument("slice array is NULL");
    return SoaView<T>{{a.value, a.n}, {a.error, a.n}};
}

template <typename Out>
auto span_of(const Out& a) {
    using T = std::remove_pointer_t<decltype(a.value)>;
    if (a.n > 0 && (a.value == nullptr || a.error == nullptr))
        throw std::invalid_argument("slice array is NULL");
    return SoaSpan<T>{{a.value, a.n}, {a.error, a.n}};
}

tf_status make_report(tf_report** out, auto&& run) {
    if (tf_status s = require(out, "out")) return s;
    *out = nullptr;
    return guard([&] { *out = new tf_report{run()}; });
}

}  // namespace

extern "C" {

const char* tf_status_string(tf_status s) {
    switch (s) {
    case TF_OK: return "ok";
    case TF_EINVAL: return "invalid argument";
    case TF_ELENGTH: return "length mismatch";
    case TF_EPARSE: return "parse error";
    case TF_ENOMEM: return "out of memory";
    case TF_ESINGULAR: return "singular matrix";
    case TF_EENV: return "unsuitable floating-point environment";
    case TF_EINTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tf_last_error(void) { return g_last_error.c_str(); }

const char* tf_version(void) { return "1.0.0"; }

tf_status tf_selfcheck(void) {
    const SelfCheckResult r = self_check();
    return r.ok ? TF_OK : fail(TF_EENV, r.message);
}

double tf_two_sum(double a, double b, double* lo) { return put(two_sum(a, b), lo); }
double tf_fast_two_sum(double a, double b, double* lo) { return put(fast_two_sum(a, b), lo); }
double tf_two_prod(double a, double b, double* lo) { return put(two_prod(a, b), lo); }
float tf_two_sumf(float a, float b, float* lo) { return put(two_sum(a, b), lo); }
float tf_fast_two_sumf(float a, float b, float* lo) { return put(fast_two_sum(a, b), lo); }
float tf_two_prodf(float a, float b, float* lo) { return put(two_prod(a, b), lo); }

#define TF_DEFINE_T(name, T, S)                                                         \
    T tf_##name##S(T x0, T x1, T y0, T y1, T* z1) {                                     \
        return put(name(Twofold<T>(x0, x1), Twofold<T>(y0, y1)), z1);                   \
    }                                                                                   \
    T tf_##name##1##S(T x0, T x1, T y, T* z1) { return put(name##1(Twofold<T>(x0, x1), y), z1); } \
    T tf_##name##2##S(T x, T y0, T y1, T* z1) { return put(name##2(x, Twofold<T>(y0, y1)), z1); } \
    T tf_##name##0##S(T x, T y, T* z1) { return put(name##0(x, y), z1); }

#define TF_DEFINE_P(name, T, S)                                                         \
    T tf_##name##S(T x0, T x1, T y0, T y1, T* z1) {                                     \
        return put<T>(name(Coupled<T>(x0, x1), Coupled<T>(y0, y1)), z1);                \
    }                                                                                   \
    T tf_##name##1##S(T x0, T x1, T y, T* z1) { return put<T>(name##1(Coupled<T>(x0, x1), y), z1); } \
    T tf_##name##2##S(T x, T y0, T y1, T* z1) { return put<T>(name##2(x, Coupled<T>(y0, y1)), z1); } \
    T tf_##name##0##S(T x, T y, T* z1) { return put<T>(name##0(x, y), z1); }

#define TF_DEFINE_BOTH(macro, name) macro(name, double, ) macro(name, float, f)

TF_DEFINE_BOTH(TF_DEFINE_T, tadd)
TF_DEFINE_BOTH(TF_DEFINE_T, tsub)
TF_DEFINE_BOTH(TF_DEFINE_T, tmul)
TF_DEFINE_BOTH(TF_DEFINE_T, tdiv)
TF_DEFINE_BOTH(TF_DEFINE_P, padd)
TF_DEFINE_BOTH(TF_DEFINE_P, psub)
TF_DEFINE_BOTH(TF_DEFINE_P, pmul)
TF_DEFINE_BOTH(TF_DEFINE_P, pdiv)

double tf_tsqrt(double x0, double x1, double* z1) { return put(tsqrt(Twofold<double>(x0, x1)), z1); }
double tf_tsqrt0(double x, double* z1) { return put(tsqrt0(x), z1); }
double tf_psqrt(double x0, double x1, double* z1) { return put<double>(psqrt(Coupled<double>(x0, x1)), z1); }
double tf_psqrt0(double x, double* z1) { return put<double>(psqrt0(x), z1); }
float tf_tsqrtf(float x0, float x1, float* z1) { return put(tsqrt(Twofold<float>(x0, x1)), z1); }
float tf_tsqrt0f(float x, float* z1) { return put(tsqrt0(x), z1); }
float tf_psqrtf(float x0, float x1, float* z1) { return put<float>(psqrt(Coupled<float>(x0, x1)), z1); }
float tf_psqrt0f(float x, float* z1) { return put<float>(psqrt0(x), z1); }

#define TF_DEFINE_SPECIAL(T, S)                                                                    \
    T tf_tmulp##S(T x0, T x1, T y0, T y1, T* z1) {                                                 \
        return put(tmulp(Coupled<T>(x0, x1), Coupled<T>(y0, y1)), z1);                             \
    }                                                                                              \
    T tf_tdivp##S(T x0, T x1, T y0, T y1, T* z1) {                                                 \
        return put(tdivp(Coupled<T>(x0, x1), Coupled<T>(y0, y1)), z1);                             \
    }                                                                                              \
    T tf_tsqrtp##S(T x0, T x1, T* z1) { return put(tsqrtp(Coupled<T>(x0, x1)), z1); }              \
    T tf_renormalize##S(T x0, T x1, T* z1) { return put<T>(renormalize(Twofold<T>(x0, x1)), z1); } \
    T tf_fast_renorm##S(T x0, T x1, T* z1) { return put<T>(fast_renorm(Twofold<T>(x0, x1)), z1); } \
    T tf_fast_add0##S(T x, T y, T* z1) { return put<T>(fast_add0(x, y), z1); }                     \
    T tf_fast_sub0##S(T x, T y, T* z1) { return put<T>(fast_sub0(x, y), z1); }                     \
    T tf_tneg##S(T x0, T x1, T* z1) { return put(tneg(Twofold<T>(x0, x1)), z1); }                  \
    T tf_tabs##S(T x0, T x1, T* z1) { return put(tabs(Twofold<T>(x0, x1)), z1); }                  \
    int tf_tisnan##S(T x0, T x1) { return tisnan(Twofold<T>(x0, x1)); }                            \
    int tf_tisinf##S(T x0, T x1) { return tisinf(Twofold<T>(x0, x1)); }

TF_DEFINE_SPECIAL(double, )
TF_DEFINE_SPECIAL(float, f)

#define TF_DEFINE_CMP(name, shape)                                                      \
    int tf_##name(double x0, double x1, double y0, double y1) {                         \
        return name(shape<double>(x0, x1), shape<double>(y0, y1));                      \
    }                                                                                   \
    int tf_##name##f(float x0, float x1, float y0, float y1) {                          \
        return name(shape<float>(x0, x1), shape<float>(y0, y1));                        \
    }
TF_DEFINE_CMP(tlt, Twofold)
TF_DEFINE_CMP(tle, Twofold)
TF_DEFINE_CMP(tgt, Twofold)
TF_DEFINE_CMP(tge, Twofold)
TF_DEFINE_CMP(teq, Twofold)
TF_DEFINE_CMP(tne, Twofold)
TF_DEFINE_CMP(plt, Coupled)
TF_DEFINE_CMP(ple, Coupled)
TF_DEFINE_CMP(pgt, Coupled)
TF_DEFINE_CMP(pge, Coupled)
TF_DEFINE_CMP(peq, Coupled)
TF_DEFINE_CMP(pne, Coupled)

tf_status tf_tsum(const double* x, size_t n, double* z0, double* z1) { return tsum_impl(x, n, 1, false, z0, z1); }
tf_status tf_tsumf(const float* x, size_t n, float* z0, float* z1) { return tsum_impl(x, n, 1, false, z0, z1); }
tf_status tf_tsum_chunked(const double* x, size_t n, size_t chunks, double* z0, double* z1) {
    return tsum_impl(x, n, chunks, true, z0, z1);
}
tf_status tf_tsum_chunkedf(const float* x, size_t n, size_t chunks, float* z0, float* z1) {
    return tsum_impl(x, n, chunks, true, z0, z1);
}
tf_status tf_tdot(const double* x, const double* y, size_t n, double* z0, double* z1) {
    return tdot_impl(x, y, n, 1, false, z0, z1);
}
tf_status tf_tdotf(const float* x, const float* y, size_t n, float* z0, float* z1) {
    return tdot_impl(x, y, n, 1, false, z0, z1);
}
tf_status tf_tdot_chunked(const double* x, const double* y, size_t n, size_t chunks, double* z0, double* z1) {
    return tdot_impl(x, y, n, chunks, true, z0, z1);
}
tf_status tf_tdot_chunkedf(const float* x, const float* y, size_t n, size_t chunks, float* z0, float* z1) {
    return tdot_impl(x, y, n, chunks, true, z0, z1);
}

#define TF_DEFINE_SLICES(IN, OUT, S)                                                                         \
    tf_status tf_tadd_slice##S(IN x, IN y, OUT z) { return guard([&] { tadd_slice(view(x), view(y), span_of(z)); }); } \
    tf_status tf_tsub_slice##S(IN x, IN y, OUT z) { return guard([&] { tsub_slice(view(x), view(y), span_of(z)); }); } \
    tf_status tf_tmul_slice##S(IN x, IN y, OUT z) { return guard([&] { tmul_slice(view(x), view(y), span_of(z)); }); } \
    tf_status tf_tdiv_slice##S(IN x, IN y, OUT z) { return guard([&] { tdiv_slice(view(x), view(y), span_of(z)); }); } \
    tf_status tf_tsqrt_slice##S(IN x, OUT z) { return guard([&] { tsqrt_slice(view(x), span_of(z)); }); }
TF_DEFINE_SLICES(tf_soa, tf_soa_out, )
TF_DEFINE_SLICES(tf_soaf, tf_soa_outf, f)

tf_status tf_format(double x0, double x1, int hex, int digits, char* buf, size_t cap, size_t* needed) {
    return format_impl(x0, x1, hex, digits, buf, cap, needed);
}
tf_status tf_formatf(float x0, float x1, int hex, int digits, char* buf, size_t cap, size_t* needed) {
    return format_impl(x0, x1, hex, digits, buf, cap, needed);
}
tf_status tf_parse(const char* text, double* x0, double* x1) { return parse_impl(text, x0, x1); }
tf_status tf_parsef(const char* text, float* x0, float* x1) { return parse_impl(text, x0, x1); }

void tf_free(void* p) { std::free(p); }

tf_status tf_kind_parse(const char* name, tf_kind* kind) {
    if (tf_status s = require(name, "name")) return s;
    if (tf_status s = require(kind, "kind")) return s;
    return guard([&] { *kind = static_cast<tf_kind>(lab::parse_kind(name)); });
}

const char* tf_kind_name(tf_kind kind) {
    if (kind < TF_DOTTED32 || kind > TF_COUPLED64) return "?";
    return lab::kind_name(lab::all_kinds[kind]);
}

tf_status tf_lab_summation(tf_kind kind, double hours, tf_report** out) {
    return make_report(out, [&] { return lab::run_summation(to_kind(kind), {hours}); });
}

tf_status tf_lab_quadratic(tf_kind kind, const char* c, tf_report** out) {
    if (tf_status s = require(c, "c")) return s;
    return make_report(out, [&] {
        return lab::run_quadratic(to_kind(kind), {lab::parse_real_expression(c), c});
    });
}

tf_status tf_lab_rump(tf_kind kind, const char* order, tf_report** out) {
    if (tf_status s = require(order, "order")) return s;
    return make_report(out, [&] { return lab::run_rump(to_kind(kind), lab::parse_rump_order(order)); });
}

tf_status tf_lab_jordan(tf_kind kind, double lambda, const char* variant, tf_report** out) {
    if (tf_status s = require(variant, "variant")) return s;
    return make_report(out, [&] {
        return lab::run_jordan(to_kind(kind), {lab::jordan_scale_from_lambda(lambda),
                                               lab::parse_jordan_variant(variant)});
    });
}

size_t tf_report_size(const tf_report* r) { return r ? r->report.quantities.size() : 0; }

tf_status tf_report_quantity(const tf_report* r, size_t i, const char** name, double* value,
                             double* error, int* verdict) {
    if (tf_status s = require(r, "report")) return s;
    if (i >= r->report.quantities.size()) return fail(TF_EINVAL, "quantity index out of range");
    const lab::Quantity& q = r->report.quantities[i];
    if (name) *name = q.name.c_str();
    if (value) *value = q.value;
    if (error) *error = q.error;
    if (verdict) *verdict = q.checks.empty() ? -1 : q.pass() ? 1 : 0;
    return TF_OK;
}

size_t tf_report_failures(const tf_report* r) { return r ? r->report.failures() : 0; }

tf_status tf_report_render(const tf_report* r, tf_render mode, int digits, char** out) {
    if (tf_status s = require(r, "report")) return s;
    if (tf_status s = require(out, "out")) return s;
    *out = nullptr;
    return guard([&] {
        const FormatOptions opts{Notation::general, digits > 0 ? digits : 6};
        *out = dup_string(mode == TF_RENDER_RECORDS ? lab::render_records(r->report)
                                                    : lab::render_text(r->report, opts));
    });
}

void tf_report_free(tf_report* r) { delete r; }

tf_status tf_bench_run(const char* kernels, size_t bytes, int width, uint64_t seed, double min_seconds,
                       tf_bench** out) {
    if (tf_status s = require(kernels, "kernels")) return s;
    if (tf_status s = require(out, "out")) return s;
    *out = nullptr;
    return guard([&] {
        BenchConfig cfg;
        std::stringstream ss(kernels);
        for (std::string k; std::getline(ss, k, ',');)
            if (!k.empty()) cfg.kernels.push_back(parse_kernel(k));
        if (cfg.kernels.empty()) throw std::invalid_argument("no kernels selected");
        cfg.bytes = bytes;
        cfg.width = width;
        cfg.seed = seed;
        if (min_seconds > 0) cfg.min_seconds = min_seconds;
        *out = new tf_bench{run_bench(cfg)};
    });
}

size_t tf_bench_size(const tf_bench* b) { return b ? b->rows.size() : 0; }

tf_status tf_bench_row(const tf_bench* b, size_t i, const char** name, double* ops_per_sec, double* ratio) {
    if (tf_status s = require(b, "bench")) return s;
    if (i >= b->rows.size()) return fail(TF_EINVAL, "row index out of range");
    if (name) *name = b->rows[i].name.c_str();
    if (ops_per_sec) *ops_per_sec = b->rows[i].ops_per_sec;
    if (ratio) *ratio = b->rows[i].ratio;
    return TF_OK;
}

tf_status tf_bench_render(const tf_bench* b, tf_render mode, char** out) {
    if (tf_status s = require(b, "bench")) return s;
    if (tf_status s = require(out, "out")) return s;
    *out = nullptr;
    return guard([&] {
        *out = dup_string(mode == TF_RENDER_RECORDS ? render_bench_records(b->rows)
                                                    : render_bench_text(b->rows));
    });
}

void tf_bench_free(tf_bench* b) { delete b; }

}  // extern "C"
