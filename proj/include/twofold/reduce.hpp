/* reduce.hpp
 * Strict twofold accumulation (summation, dot product) and elementwise twofold
 * operations over structure-of-arrays batches.
 */
#pragma once
#include "twofold/arith.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace twofold {

/// Operand lengths differ.
class LengthError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Running twofold sum. Adding a dotted term is strict: the two-sum residual is
 * exact, and the value lane stays bitwise equal to the plain running sum.
 */
template <Dotted T>
class Accumulator {
public:
    Accumulator() = default;
    explicit Accumulator(Twofold<T> start) : s_(start) {}

    void add(T x) {
        const auto r = two_sum(s_.value, x);
        s_ = {r.hi, dadd(s_.error, r.lo)};
    }

    /// Adds fl(x*y) to the value lane; both product parts reach the sum.
    void add_product(T x, T y) {
        const auto p = two_prod(x, y);
        const auto r = two_sum(s_.value, p.hi);
        s_ = {r.hi, dadd(s_.error, dadd(r.lo, p.lo))};
    }

    const Twofold<T>& sum() const { return s_; }

private:
    Twofold<T> s_{};
};

/// Reference loops the twofold kernels shadow: left to right, s += x[i] and
/// s += x[i]*y[i] with the product rounded before the add (no FMA contraction).
template <std::floating_point T>
T plain_sum(std::span<const T> xs);
template <std::floating_point T>
T plain_dot(std::span<const T> xs, std::span<const T> ys);

/// Strict left-to-right twofold sum of dotted terms; empty input gives 0[0].
template <std::floating_point T>
Twofold<T> tsum(std::span<const T> xs);

/// Strict twofold dot product. Throws LengthError when sizes differ.
template <std::floating_point T>
Twofold<T> tdot(std::span<const T> xs, std::span<const T> ys);

/**
 * Parallel variants: the input is cut into `chunks` contiguous pieces,
 * piece i = [i*n/chunks, (i+1)*n/chunks), each reduced on its own thread and
 * the partial twofolds combined left to right with tadd. This changes the
 * rounding relative to tsum/tdot but is reproducible for a fixed chunk count.
 * chunks == 0 is treated as 1.
 */
template <std::floating_point T>
Twofold<T> tsum_chunked(std::span<const T> xs, std::size_t chunks);
template <std::floating_point T>
Twofold<T> tdot_chunked(std::span<const T> xs, std::span<const T> ys, std::size_t chunks);

/// Read-only batch of twofolds stored as separate value and error arrays.
template <std::floating_point T>
struct SoaView {
    std::span<const T> value;
    std::span<const T> error;
    std::size_t size() const { return value.size(); }
};

/// Writable batch of twofolds.
template <std::floating_point T>
struct SoaSpan {
    std::span<T> value;
    std::span<T> error;
    std::size_t size() const { return value.size(); }
};

// Elementwise: out[i] = op(x[i], y[i]), bitwise equal to the scalar operation.
// All arrays must have equal lengths (LengthError otherwise).
template <std::floating_point T> void tadd_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out);
template <std::floating_point T> void tsub_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out);
template <std::floating_point T> void tmul_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out);
template <std::floating_point T> void tdiv_slice(SoaView<T> x, SoaView<T> y, SoaSpan<T> out);
template <std::floating_point T> void tsqrt_slice(SoaView<T> x, SoaSpan<T> out);

#define TWOFOLD_REDUCE_EXTERN(T)                                                          \
    extern template T plain_sum<T>(std::span<const T>);                                   \
    extern template T plain_dot<T>(std::span<const T>, std::span<const T>);               \
    extern template Twofold<T> tsum<T>(std::span<const T>);                               \
    extern template Twofold<T> tdot<T>(std::span<const T>, std::span<const T>);           \
    extern template Twofold<T> tsum_chunked<T>(std::span<const T>, std::size_t);          \
    extern template Twofold<T> tdot_chunked<T>(std::span<const T>, std::span<const T>,    \
                                               std::size_t);                              \
    extern template void tadd_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);               \
    extern template void tsub_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);               \
    extern template void tmul_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);               \
    extern template void tdiv_slice<T>(SoaView<T>, SoaView<T>, SoaSpan<T>);               \
    extern template void tsqrt_slice<T>(SoaView<T>, SoaSpan<T>);
TWOFOLD_REDUCE_EXTERN(float)
TWOFOLD_REDUCE_EXTERN(double)
#undef TWOFOLD_REDUCE_EXTERN

}  // namespace twofold
