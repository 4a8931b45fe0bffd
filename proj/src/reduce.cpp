#include "twofold/reduce.hpp"

#include <thread>
#include <vector>

namespace twofold {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw LengthError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
}

template <typename T>
void check_soa(const SoaView<T>& x, const char* what) {
    require_same(x.value.size(), x.error.size(), what);
}
template <typename T>
void check_soa(const SoaSpan<T>& x, const char* what) {
    require_same(x.value.size(), x.error.size(), what);
}

template <typename T, typename Op>
void binary_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out, Op op, const char* what) {
    check_soa(x, what);
    check_soa(y, what);
    check_soa(out, what);
    require_same(x.size(), y.size(), what);
    require_same(x.size(), out.size(), what);
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Twofold<T> z = op(Twofold<T>(x.value[i], x.error[i]), Twofold<T>(y.value[i], y.error[i]));
        out.value[i] = z.value;
        out.error[i] = z.error;
    }
}

template <typename Reduce>
auto run_chunks(std::size_t n, std::size_t chunks, Reduce reduce) {
    if (chunks == 0) chunks = 1;
    using R = decltype(reduce(std::size_t{}, std::size_t{}));
    std::vector<R> partial(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::size_t i = 0; i < chunks; ++i) {
        const std::size_t lo = i * n / chunks;
        const std::size_t hi = (i + 1) * n / chunks;
        workers.emplace_back([&partial, &reduce, i, lo, hi] { partial[i] = reduce(lo, hi); });
    }
    for (auto& w : workers) w.join();
    R total = partial[0];
    for (std::size_t i = 1; i < chunks; ++i) total = tadd(total, partial[i]);
    return total;
}

}  // namespace

template <std::floating_point T>
T plain_sum(std::span<const T> xs) {
    T s = 0;
    for (const T x : xs) s = dadd(s, x);
    return s;
}

template <std::floating_point T>
T plain_dot(std::span<const T> xs, std::span<const T> ys) {
    require_same(xs.size(), ys.size(), "plain_dot");
    T s = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) s = dadd(s, dmul(xs[i], ys[i]));
    return s;
}

template <std::floating_point T>
Twofold<T> tsum(std::span<const T> xs) {
    Accumulator<T> acc;
    for (const T x : xs) acc.add(x);
    return acc.sum();
}

template <std::floating_point T>
Twofold<T> tdot(std::span<const T> xs, std::span<const T> ys) {
    require_same(xs.size(), ys.size(), "tdot");
    Accumulator<T> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) acc.add_product(xs[i], ys[i]);
    return acc.sum();
}

template <std::floating_point T>
Twofold<T> tsum_chunked(std::span<const T> xs, std::size_t chunks) {
    return run_chunks(xs.size(), chunks,
                      [xs](std::size_t lo, std::size_t hi) { return tsum(xs.subspan(lo, hi - lo)); });
}

template <std::floating_point T>
Twofold<T> tdot_chunked(std::span<const T> xs, std::span<const T> ys, std::size_t chunks) {
    require_same(xs.size(), ys.size(), "tdot_chunked");
    return run_chunks(xs.size(), chunks, [xs, ys](std::size_t lo, std::size_t hi) {
        return tdot(xs.subspan(lo, hi - lo), ys.subspan(lo, hi - lo));
    });
}

template <std::floating_point T>
void tadd_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out) {
    binary_slice(x, y, out, [](const Twofold<T>& a, const Twofold<T>& b) { return tadd(a, b); },
                 "tadd_slice");
}
template <std::floating_point T>
void tsub_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out) {
    binary_slice(x, y, out, [](const Twofold<T>& a, const Twofold<T>& b) { return tsub(a, b); },
                 "tsub_slice");
}
template <std::floating_point T>
void tmul_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out) {
    binary_slice(x, y, out, [](const Twofold<T>& a, const Twofold<T>& b) { return tmul(a, b); },
                 "tmul_slice");
}
template <std::floating_point T>
void tdiv_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out) {
    binary_slice(x, y, out, [](const Twofold<T>& a, const Twofold<T>& b) { return tdiv(a, b); },
                 "tdiv_slice");
}
template <std::floating_point T>
void tsqrt_slice(SoaView<T> x, SoaSpan<T> out) {
    check_soa(x, "tsqrt_slice");
    check_soa(out, "tsqrt_slice");
    require_same(x.size(), out.size(), "tsqrt_slice");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Twofold<T> z = tsqrt(Twofold<T>(x.value[i], x.error[i]));
        out.value[i] = z.value;
        out.error[i] = z.error;
    }
}

#define TWOFOLD_REDUCE_INSTANTIATE(T)                                                        \
    template T plain_sum<T>(std::span<const T>);                                             \
    template T plain_dot<T>(std::span<const T>, std::span<const T>);                         \
    template Twofold<T> tsum<T>(std::span<const T>);                                         \
    template Twofold<T> tdot<T>(std::span<const T>, std::span<const T>);                     \
    template Twofold<T> tsum_chunked<T>(std::span<const T>, std::size_t);                    \
    template Twofold<T> tdot_chunked<T>(std::span<const T>, std::span<const T>, std::size_t); \
    template void tadd_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);                         \
    template void tsub_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);                         \
    template void tmul_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);                         \
    template void tdiv_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);                         \
    template void tsqrt_slice<T>(SoaView<T>, SoaSpan<T>);
TWOFOLD_REDUCE_INSTANTIATE(float)
TWOFOLD_REDUCE_INSTANTIATE(double)

}  // namespace twofold
