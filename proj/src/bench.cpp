#include "twofold/bench.hpp"

#include "twofold/format.hpp"
#include "twofold/reduce.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <new>
#include <random>
#include <span>

namespace twofold {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps results observable so the timed loops are not removed.
volatile double g_sink = 0;

template <typename F>
double measure(std::size_t ops_per_pass, double min_seconds, F&& pass) {
    std::size_t passes = 0;
    const auto start = Clock::now();
    double elapsed = 0;
    do {
        pass();
        ++passes;
        elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    } while (elapsed < min_seconds);
    return static_cast<double>(ops_per_pass) * static_cast<double>(passes) / elapsed;
}

template <typename T>
std::vector<T> make_data(std::size_t n, std::mt19937_64& rng, T lo, T hi) {
    std::uniform_real_distribution<T> dist(lo, hi);
    std::vector<T> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

template <typename T>
class Runner {
public:
    Runner(const BenchConfig& cfg) : cfg_(cfg), n_(cfg.bytes / sizeof(T)) {
        if (n_ == 0) throw BenchError("size is smaller than one element");
    }

    void run(BenchKernel k, std::vector<BenchRow>& out) {
        switch (k) {
        case BenchKernel::sum: out.push_back(row("sum", plain_sum_rate(), 1.0, plain_sum_result())); break;
        case BenchKernel::dot: out.push_back(row("dot", plain_dot_rate(), 1.0, plain_dot_result())); break;
        case BenchKernel::tsum: {
            const double t = tsum_rate();
            out.push_back(row("tsum", t, t / plain_sum_rate(), tsum(xs())));
            break;
        }
        case BenchKernel::tdot: {
            const double t = tdot_rate();
            out.push_back(row("tdot", t, t / plain_dot_rate(), tdot(xs(), ys())));
            break;
        }
        case BenchKernel::ops: ops(out); break;
        }
    }

private:
    std::span<const T> xs() {
        if (x_.empty()) {
            std::mt19937_64 rng(cfg_.seed);
            x_ = make_data<T>(n_, rng, T(-1), T(1));
        }
        return x_;
    }
    std::span<const T> ys() {
        if (y_.empty()) {
            std::mt19937_64 rng(cfg_.seed ^ 0x9e3779b97f4a7c15ull);
            y_ = make_data<T>(n_, rng, T(-1), T(1));
        }
        return y_;
    }

    BenchRow row(const char* name, double rate, double ratio, Twofold<T> result) const {
        return {name, cfg_.width, cfg_.bytes, rate, ratio, cfg_.seed,
                static_cast<double>(result.value), static_cast<double>(result.error)};
    }

    Twofold<T> plain_sum_result() { return Twofold<T>(plain_sum(xs())); }
    Twofold<T> plain_dot_result() { return Twofold<T>(plain_dot(xs(), ys())); }

    double plain_sum_rate() {
        if (sum_rate_ == 0) {
            auto x = xs();
            sum_rate_ = measure(n_, cfg_.min_seconds, [&] { g_sink = plain_sum(x); });
        }
        return sum_rate_;
    }
    double plain_dot_rate() {
        if (dot_rate_ == 0) {
            auto x = xs();
            auto y = ys();
            dot_rate_ = measure(n_, cfg_.min_seconds, [&] { g_sink = plain_dot(x, y); });
        }
        return dot_rate_;
    }
    double tsum_rate() {
        auto x = xs();
        return measure(n_, cfg_.min_seconds, [&] {
            const auto s = tsum(x);
            g_sink = s.value + s.error;
        });
    }
    double tdot_rate() {
        auto x = xs();
        auto y = ys();
        return measure(n_, cfg_.min_seconds, [&] {
            const auto s = tdot(x, y);
            g_sink = s.value + s.error;
        });
    }

    // Elementwise twofold operations on cache-sized structure-of-arrays
    // batches against the same plain loops.
    void ops(std::vector<BenchRow>& out) {
        std::mt19937_64 rng(cfg_.seed);
        const auto xv = make_data<T>(n_, rng, T(1), T(2));
        const auto yv = make_data<T>(n_, rng, T(1), T(2));
        std::vector<T> xe(n_), ye(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            xe[i] = xv[i] * std::numeric_limits<T>::epsilon() * T(0.25);
            ye[i] = -yv[i] * std::numeric_limits<T>::epsilon() * T(0.25);
        }
        std::vector<T> zv(n_), ze(n_);
        const SoaView<T> x{xv, xe}, y{yv, ye};
        const SoaSpan<T> z{zv, ze};
        const double budget = cfg_.min_seconds;

        auto plain = [&](auto op) {
            return measure(n_, budget, [&] {
                for (std::size_t i = 0; i < n_; ++i) zv[i] = op(xv[i], yv[i]);
                g_sink = zv[n_ - 1];
            });
        };
        auto shaped = [&](auto slice) {
            return measure(n_, budget, [&] {
                slice();
                g_sink = zv[n_ - 1] + ze[n_ - 1];
            });
        };
        auto result = [&] { return Twofold<T>(zv[0], ze[0]); };

        const double add = plain([](T a, T b) { return dadd(a, b); });
        const double mul = plain([](T a, T b) { return dmul(a, b); });
        const double div = plain([](T a, T b) { return ddiv(a, b); });
        const double sq = plain([](T a, T) { return dsqrt(a); });

        const double tadd_r = shaped([&] { tadd_slice(x, y, z); });
        const auto tadd_v = result();
        const double tmul_r = shaped([&] { tmul_slice(x, y, z); });
        const auto tmul_v = result();
        const double tdiv_r = shaped([&] { tdiv_slice(x, y, z); });
        const auto tdiv_v = result();
        const double tsqrt_r = shaped([&] { tsqrt_slice(x, z); });
        const auto tsqrt_v = result();

        out.push_back(row("add", add, 1.0, {}));
        out.push_back(row("tadd", tadd_r, tadd_r / add, tadd_v));
        out.push_back(row("mul", mul, 1.0, {}));
        out.push_back(row("tmul", tmul_r, tmul_r / mul, tmul_v));
        out.push_back(row("div", div, 1.0, {}));
        out.push_back(row("tdiv", tdiv_r, tdiv_r / div, tdiv_v));
        out.push_back(row("sqrt", sq, 1.0, {}));
        out.push_back(row("tsqrt", tsqrt_r, tsqrt_r / sq, tsqrt_v));
    }

    const BenchConfig& cfg_;
    std::size_t n_;
    std::vector<T> x_, y_;
    double sum_rate_ = 0, dot_rate_ = 0;
};

template <typename T>
std::vector<BenchRow> run_width(const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    Runner<T> runner(cfg);
    for (const BenchKernel k : cfg.kernels) runner.run(k, rows);
    return rows;
}

}  // namespace

const char* kernel_name(BenchKernel k) {
    switch (k) {
    case BenchKernel::sum: return "sum";
    case BenchKernel::dot: return "dot";
    case BenchKernel::tsum: return "tsum";
    case BenchKernel::tdot: return "tdot";
    case BenchKernel::ops: return "ops";
    }
    return "?";
}

BenchKernel parse_kernel(const std::string& name) {
    for (const BenchKernel k : {BenchKernel::sum, BenchKernel::dot, BenchKernel::tsum,
                                BenchKernel::tdot, BenchKernel::ops})
        if (name == kernel_name(k)) return k;
    throw std::invalid_argument("unknown kernel '" + name + "'");
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.width != 32 && config.width != 64) throw BenchError("width must be 32 or 64");
    try {
        return config.width == 32 ? run_width<float>(config) : run_width<double>(config);
    } catch (const std::bad_alloc&) {
        throw BenchError("cannot allocate " + std::to_string(config.bytes) + " bytes per array");
    }
}

std::string render_bench_text(const std::vector<BenchRow>& rows) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %5s %12s %14s %8s %20s\n", "kernel", "width", "bytes",
                  "MOPS", "ratio", "seed");
    out += line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-8s %5d %12zu %14.3f %8.3f %20llu\n", r.name.c_str(),
                      r.width, r.bytes, r.ops_per_sec / 1e6, r.ratio,
                      static_cast<unsigned long long>(r.seed));
        out += line;
    }
    return out;
}

std::string render_bench_records(const std::vector<BenchRow>& rows) {
    std::string out;
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["width"] = r.width;
        j["size"] = r.bytes;
        j["ops_per_sec"] = r.ops_per_sec;
        j["ratio"] = r.ratio;
        j["seed"] = r.seed;
        j["value_hex"] = format_lane(r.value, {Notation::hex});
        j["error_hex"] = format_lane(r.error, {Notation::hex});
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace twofold
