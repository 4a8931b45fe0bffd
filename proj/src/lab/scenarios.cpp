#include "twofold/lab/scenarios.hpp"

#include "twofold/lab/lu.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace twofold::lab {

namespace {

struct Value {
    std::string name;
    double value;
    double error;
};
using Values = std::vector<Value>;

template <typename N>
Value val(std::string name, const N& x) {
    return {std::move(name), static_cast<double>(Num<N>::value(x)),
            static_cast<double>(Num<N>::error(x))};
}

std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    for (int p = 6; p < 17; ++p) {
        char s[40];
        std::snprintf(s, sizeof s, "%.*g", p, x);
        if (std::strtod(s, nullptr) == x) return s;
    }
    return buf;
}

// Runs `compute` in kind k; twofold kinds also run the plain kind of the same
// width and must match it bitwise on every value lane.
template <typename Compute>
Report build(std::string scenario, Kind k, std::vector<std::pair<std::string, std::string>> params,
             Compute&& compute) {
    Report r;
    r.scenario = std::move(scenario);
    r.kind = k;
    r.params = std::move(params);
    const Values vs = dispatch(k, compute);
    for (const auto& v : vs) {
        Quantity q;
        q.name = v.name;
        q.shape = kind_shape(k);
        q.width = kind_width(k);
        q.value = v.value;
        q.error = v.error;
        r.quantities.push_back(std::move(q));
    }
    if (kind_shape(k) == Shape::twofold) {
        const Kind plain = dotted_kind(kind_width(k));
        const Values ps = dispatch(plain, compute);
        for (std::size_t i = 0; i < ps.size(); ++i)
            r.quantities[i].expect({Lane::value, Rule::bitwise, ps[i].value, 0,
                                    std::string(kind_name(plain)) + " run"});
    }
    return r;
}

constexpr const char* reference_log = "reference log";

constexpr double coupled64_jordan_tolerance = 1e-15;

void expect(Report& r, const std::string& name, Lane lane, Rule rule, double expected,
            double tolerance, const char* source = reference_log) {
    if (Quantity* q = r.find(name)) q->expect({lane, rule, expected, tolerance, source});
}

// ---- summation ----

template <typename N>
Values summation(long long ticks) {
    using K = Num<N>;
    const N tick = K::from_double(0.1);
    N acc = K::from_double(0);
    for (long long i = 0; i < ticks; ++i) acc = acc + tick;
    return {val("1/10 s", tick), val("result", acc / K::from_double(3600))};
}

// ---- quadratic ----

template <typename N>
Values quadratic(double cval) {
    using K = Num<N>;
    const N a = K::from_double(1), b = K::from_double(2), c = K::from_double(cval);
    const N two = K::from_double(2), four = K::from_double(4);
    const N d = K::sqrt(b * b - four * a * c);
    const N x0 = (-b - d) / (two * a);
    const N x1 = (-b + d) / (two * a);
    return {val("a", a), val("b", b), val("c", c), val("d", d), val("x0", x0), val("x1", x1)};
}

// ---- Rump ----

template <typename N>
Values rump(RumpOrder order) {
    using K = Num<N>;
    auto k = [](double x) { return K::from_double(x); };
    const N a = k(77617), b = k(33096);
    const N t1 = k(21) * b * b;
    const N t2 = k(2) * a * a;
    const N t3 = k(55) * b * b * b * b;
    const N t4 = k(10) * a * a * b * b;
    const N t5 = a / (k(2) * b);
    const N f = order == RumpOrder::literal ? t1 - t2 + t3 - t4 + t5 : (t1 - t2) + (t3 - t4) + t5;
    return {val("f", f)};
}

// ---- Jordan ----

template <typename N>
Values jordan(const JordanConfig& cfg) {
    using K = Num<N>;
    constexpr std::size_t n = 5;
    N lambda, super, f_row, f_last;
    if (cfg.variant == JordanVariant::integer) {
        lambda = K::from_double(1);
        super = K::from_double(static_cast<double>(cfg.scale));
        f_row = K::from_double(static_cast<double>(cfg.scale + 1));
        f_last = K::from_double(1);
    } else {
        lambda = K::ratio(1, cfg.scale);
        super = K::from_double(1);
        f_row = K::ratio(cfg.scale + 1, cfg.scale);
        f_last = lambda;
        if (cfg.variant == JordanVariant::truncated) {
            lambda = K::drop_error(lambda);
            f_row = K::drop_error(f_row);
            f_last = K::drop_error(f_last);
        }
    }
    Matrix<N> a(n);
    std::vector<N> f(n, f_row);
    f[n - 1] = f_last;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = lambda;
        if (i + 1 < n) a(i, i + 1) = super;
    }
    const std::vector<N> x = lu_solve(a, f);
    Values out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(val("x" + std::to_string(i + 1), x[i]));
    return out;
}

}  // namespace

Report run_summation(Kind k, const SummationConfig& cfg) {
    if (!(cfg.hours >= 0 && cfg.hours <= max_hours))
        throw ConfigError("hours must be within [0, " + fmt_g(max_hours) + "]");
    const long long ticks = std::llround(cfg.hours * 36000);
    Report r = build("summation", k, {{"hours", fmt_g(cfg.hours)}},
                     [ticks]<typename N>() { return summation<N>(ticks); });

    if (ticks == 0) {
        expect(r, "result", Lane::value, Rule::absolute, 0, 0, "empty sum");
        expect(r, "result", Lane::error, Rule::absolute, 0, 0, "empty sum");
    }
    if (ticks == 3600000) {
        if (k == Kind::twofold32) {
            expect(r, "1/10 s", Lane::error, Rule::relative, -1.49012e-09, 1e-4);
            expect(r, "result", Lane::value, Rule::relative, 96.3958, 1e-4);
            expect(r, "result", Lane::error, Rule::relative, 3.54008, 1e-4);
        }
        if (k == Kind::dotted64) expect(r, "result", Lane::value, Rule::absolute, 100, 1e-6, "exact 100 h");
    }
    return r;
}

Report run_quadratic(Kind k, const QuadraticConfig& cfg) {
    if (!std::isfinite(cfg.c)) throw ConfigError("c must be finite");
    Report r = build("quadratic", k, {{"c", cfg.label.empty() ? fmt_g(cfg.c) : cfg.label}},
                     [c = cfg.c]<typename N>() { return quadratic<N>(c); });

    const double nan = std::nan("");
    if (cfg.c == 1e-8) {
        if (k == Kind::twofold64) {
            expect(r, "x1", Lane::value, Rule::relative, -5.00000008063495e-09, 1e-14);
            expect(r, "x1", Lane::error, Rule::relative, 1.78873546454856e-17, 1e-6);
        }
        if (k == Kind::twofold32) {
            expect(r, "c", Lane::error, Rule::relative, 6.07747e-17, 1e-4);
            expect(r, "x1", Lane::value, Rule::absolute, 0, 0);
            expect(r, "x1", Lane::error, Rule::relative, 5e-09, 1e-4);
        }
    }
    if (cfg.c == 1 + 1e-8) {
        if (k == Kind::twofold32) {
            expect(r, "c", Lane::error, Rule::relative, 1e-08, 1e-4);
            expect(r, "d", Lane::value, Rule::bitwise, 0.0, 0);
            expect(r, "d", Lane::error, Rule::is_nan, nan, 0);
            for (const char* x : {"x0", "x1"}) {
                expect(r, x, Lane::value, Rule::bitwise, -1.0, 0);
                expect(r, x, Lane::error, Rule::is_nan, nan, 0);
            }
        }
        if (k == Kind::twofold64) {
            for (const char* x : {"d", "x0", "x1"}) {
                expect(r, x, Lane::value, Rule::is_nan, nan, 0);
                expect(r, x, Lane::error, Rule::is_nan, nan, 0);
            }
        }
    }
    return r;
}

Report run_rump(Kind k, RumpOrder order) {
    Report r = build("rump", k, {{"order", rump_order_name(order)}},
                     [order]<typename N>() { return rump<N>(order); });

    if (order == RumpOrder::literal) {
        if (k == Kind::twofold64) {
            expect(r, "f", Lane::value, Rule::relative, 1.1726, 1e-4);
            expect(r, "f", Lane::error, Rule::relative, -2, 1e-6);
        }
        if (k == Kind::twofold32) {
            expect(r, "f", Lane::value, Rule::relative, 1.1726, 1e-4);
            expect(r, "f", Lane::error, Rule::relative, -2.47524e-8, 1e-4);
        }
    } else if (k == Kind::twofold64) {
        expect(r, "f", Lane::value, Rule::relative, 2687.17, 1e-3);
        expect(r, "f", Lane::error, Rule::relative, -2688, 1e-3);
    }
    return r;
}

Report run_jordan(Kind k, const JordanConfig& cfg) {
    if (cfg.scale < 1 || cfg.scale >= (1LL << 24))
        throw ConfigError("1/lambda must be an integer in [1, 2^24)");
    Report r = build("jordan", k,
                     {{"lambda", fmt_g(1.0 / static_cast<double>(cfg.scale))},
                      {"variant", jordan_variant_name(cfg.variant)}},
                     [&cfg]<typename N>() { return jordan<N>(cfg); });

    if (cfg.variant == JordanVariant::integer) {
        for (auto& q : r.quantities) {
            q.expect({Lane::value, Rule::absolute, 1, 0, "exact solution"});
            q.expect({Lane::error, Rule::absolute, 0, 0, "exact solution"});
        }
        return r;
    }
    if (cfg.scale != 10000) return r;

    const bool normalized = cfg.variant == JordanVariant::normalized;
    if (k == Kind::twofold64) {
        expect(r, "x1", Lane::value, Rule::relative, 1.11012, 1e-3);
        expect(r, "x1", Lane::error, Rule::relative, normalized ? -0.110123 : 4.79169e-05, 1e-3);
    }
    if (k == Kind::twofold32) {
        expect(r, "x1", Lane::value, Rule::relative, -1.65923e8, 1e-3);
        expect(r, "x1", Lane::error, Rule::relative, normalized ? 1.65923e8 : -25280.1, 1e-3);
    }
    if (k == Kind::coupled64 && normalized) {
        // lambda carries ~106 bits, so even after the 1e16 amplification in
        // x1 the value+error must recover the all-ones solution.
        for (auto& q : r.quantities)
            q.expect({Lane::sum, Rule::absolute, 1, coupled64_jordan_tolerance, "exact solution"});
    }
    return r;
}

double parse_real_expression(std::string_view text) {
    auto number = [&](std::string_view s) {
        double x = 0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (s.empty() || ec != std::errc() || end != s.data() + s.size())
            throw ConfigError("malformed number '" + std::string(s) + "' in '" + std::string(text) + "'");
        return x;
    };
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    for (std::size_t i = 1; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            const double a = number(text.substr(0, i));
            const double b = number(text.substr(i + 1));
            return c == '+' ? a + b : a - b;
        }
    }
    return number(text);
}

long long jordan_scale_from_lambda(double lambda) {
    if (!(lambda > 0) || !std::isfinite(lambda)) throw ConfigError("lambda must be positive");
    const double s = 1.0 / lambda;
    if (!(s >= 1 && s < 0x1p24)) throw ConfigError("lambda must be within (2^-24, 1]");
    const long long scale = std::llround(s);
    if (std::fabs(s - static_cast<double>(scale)) > 1e-12 * s)
        throw ConfigError("lambda must be 1/integer");
    return scale;
}

RumpOrder parse_rump_order(std::string_view s) {
    if (s == "literal") return RumpOrder::literal;
    if (s == "grouped") return RumpOrder::grouped;
    throw ConfigError("unknown order '" + std::string(s) + "' (literal|grouped)");
}

JordanVariant parse_jordan_variant(std::string_view s) {
    if (s == "integer") return JordanVariant::integer;
    if (s == "normalized") return JordanVariant::normalized;
    if (s == "truncated" || s == "normalized+truncated") return JordanVariant::truncated;
    throw ConfigError("unknown variant '" + std::string(s) + "' (integer|normalized|truncated)");
}

const char* rump_order_name(RumpOrder o) { return o == RumpOrder::literal ? "literal" : "grouped"; }

const char* jordan_variant_name(JordanVariant v) {
    switch (v) {
    case JordanVariant::integer: return "integer";
    case JordanVariant::normalized: return "normalized";
    case JordanVariant::truncated: return "truncated";
    }
    return "?";
}

}  // namespace twofold::lab
