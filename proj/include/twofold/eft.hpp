/* eft.hpp
 * Dotted primitives and error-free transformations.
 *
 * Everything in the twofold library is built from the handful of functions
 * below. Each dotted primitive performs exactly one IEEE-754 operation with a
 * single rounding; the error-free transformations combine them so that the
 * rounding error of a sum or product is recovered exactly.
 *
 * Requirements on the translation unit:
 *   - no -ffast-math / /fp:fast (checked below),
 *   - no floating-point contraction (-ffp-contract=off; the CMake target
 *     twofold_flags sets it),
 *   - round-to-nearest-even (checked at runtime by twofold::self_check()).
 */
#pragma once
#ifdef __FAST_MATH__
#error fast math enabled (-ffast-math, /fp:fast): error-free transformations would be optimized away.
#endif

#include <cmath>
#include <concepts>
#include <limits>

namespace twofold {

/// Opt-in trait for scalar types usable as the lanes of a twofold.
/// Tests specialize it for instrumented scalar types.
template <typename T>
inline constexpr bool enable_dotted = std::floating_point<T>;

template <typename T>
concept Dotted = enable_dotted<T>;

/// A pair produced by an error-free transformation: hi = fl(op), lo = residual.
template <Dotted T>
struct EftPair {
    T hi;
    T lo;
};

// Dotted primitives. Kept as functions so the sequences in the EFTs below read
// as one rounding per call.

template <Dotted T> constexpr T dadd(T a, T b) { return a + b; }
template <Dotted T> constexpr T dsub(T a, T b) { return a - b; }
template <Dotted T> constexpr T dmul(T a, T b) { return a * b; }
template <Dotted T> constexpr T ddiv(T a, T b) { return a / b; }
template <Dotted T> constexpr T dneg(T a) { return -a; }

template <Dotted T>
inline T dsqrt(T a) {
    using std::sqrt;
    return sqrt(a);
}

/// fl(a*b + c) with a single rounding.
template <Dotted T>
inline T dfma(T a, T b, T c) {
    using std::fma;
    return fma(a, b, c);
}

/**
 * Knuth's branch-free two-sum: hi = fl(a+b), hi + lo = a + b exactly for
 * finite a, b whose sum does not overflow. Six add/sub operations.
 */
template <Dotted T>
inline EftPair<T> two_sum(T a, T b) {
    const T s = dadd(a, b);
    const T t = dsub(s, b);
    const T e1 = dsub(a, t);
    const T t2 = dsub(s, t);
    const T e2 = dsub(b, t2);
    return {s, dadd(e1, e2)};
}

/**
 * two_sum(a, -b) with the high part computed as a - b, so hi is bitwise the
 * plain difference even for NaN operands.
 */
template <Dotted T>
inline EftPair<T> two_diff(T a, T b) {
    const T nb = dneg(b);
    const T s = dsub(a, b);
    const T t = dsub(s, nb);
    const T e1 = dsub(a, t);
    const T t2 = dsub(s, t);
    const T e2 = dsub(nb, t2);
    return {s, dadd(e1, e2)};
}

/**
 * Dekker's fast two-sum. Requires |a| >= |b| or a == 0; the caller is
 * responsible for the ordering. With the precondition met, |lo| <= ulp(hi)/2.
 */
template <Dotted T>
inline EftPair<T> fast_two_sum(T a, T b) {
    const T s = dadd(a, b);
    return {s, dsub(b, dsub(s, a))};
}

/// hi = fl(a*b), lo = fl(fma(a, b, -hi)). Exact unless the product underflows.
template <Dotted T>
inline EftPair<T> two_prod(T a, T b) {
    const T p = dmul(a, b);
    return {p, dfma(a, b, dneg(p))};
}

/// Spacing of T above |x|: 2^(e-p+1) for 2^e <= |x| < 2^(e+1).
template <std::floating_point T>
inline T ulp(T x) {
    const T ax = std::fabs(x);
    if (!std::isfinite(ax)) return std::numeric_limits<T>::quiet_NaN();
    if (ax == std::numeric_limits<T>::max())
        return ax - std::nextafter(ax, T(0));
    return std::nextafter(ax, std::numeric_limits<T>::infinity()) - ax;
}

/// Unit roundoff: half the spacing at 1.
template <std::floating_point T>
constexpr T unit_roundoff() {
    return std::numeric_limits<T>::epsilon() / 2;
}

}  // namespace twofold
