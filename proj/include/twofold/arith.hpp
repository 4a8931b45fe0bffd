/* arith.hpp
 * Twofold ("t") arithmetic: add, sub, mul, div, sqrt in all arity variants,
 * comparisons, service predicates and the operator overloads.
 *
 * Arity suffixes follow the operand shapes:
 *   tadd  twofold + twofold      tadd1 twofold + dotted
 *   tadd2 dotted  + twofold      tadd0 dotted  + dotted
 * The unsuffixed name is overloaded for all four.
 *
 * Value lanes are computed with exactly the operation the plain program would
 * perform, so they stay bitwise identical to it. Error lanes follow the "fast"
 * contract: they may lose a few bits, and no renormalization is done.
 */
#pragma once
#include "twofold/types.hpp"

#include <limits>
#include <type_traits>

namespace twofold {

// ---------------------------------------------------------------- add / sub

/// Eight add/sub operations: six in two_sum plus two for the error lanes.
template <Dotted T>
inline Twofold<T> tadd(const Twofold<T>& x, const Twofold<T>& y) {
    const auto s = two_sum(x.value, y.value);
    return {s.hi, dadd(s.lo, dadd(x.error, y.error))};
}
template <Dotted T>
inline Twofold<T> tadd1(const Twofold<T>& x, T y) {
    const auto s = two_sum(x.value, y);
    return {s.hi, dadd(s.lo, x.error)};
}
template <Dotted T>
inline Twofold<T> tadd2(T x, const Twofold<T>& y) {
    const auto s = two_sum(x, y.value);
    return {s.hi, dadd(s.lo, y.error)};
}
template <Dotted T>
inline Twofold<T> tadd0(T x, T y) {
    const auto s = two_sum(x, y);
    return {s.hi, s.lo};
}

// Subtraction is addition of the negated operand, except that the value lane
// is produced by a native subtraction (identical to the plain program even for
// NaN operands).
template <Dotted T>
inline Twofold<T> tsub(const Twofold<T>& x, const Twofold<T>& y) {
    const auto s = two_diff(x.value, y.value);
    return {s.hi, dadd(s.lo, dadd(x.error, dneg(y.error)))};
}
template <Dotted T>
inline Twofold<T> tsub1(const Twofold<T>& x, T y) {
    const auto s = two_diff(x.value, y);
    return {s.hi, dadd(s.lo, x.error)};
}
template <Dotted T>
inline Twofold<T> tsub2(T x, const Twofold<T>& y) {
    const auto s = two_diff(x, y.value);
    return {s.hi, dadd(s.lo, dneg(y.error))};
}
template <Dotted T>
inline Twofold<T> tsub0(T x, T y) {
    const auto s = two_diff(x, y);
    return {s.hi, s.lo};
}

// ---------------------------------------------------------------- mul

// The second-order term x.error * y.error is dropped.
template <Dotted T>
inline Twofold<T> tmul(const Twofold<T>& x, const Twofold<T>& y) {
    const auto p = two_prod(x.value, y.value);
    return {p.hi, dadd(p.lo, dadd(dmul(x.value, y.error), dmul(x.error, y.value)))};
}
template <Dotted T>
inline Twofold<T> tmul1(const Twofold<T>& x, T y) {
    const auto p = two_prod(x.value, y);
    return {p.hi, dadd(p.lo, dmul(x.error, y))};
}
template <Dotted T>
inline Twofold<T> tmul2(T x, const Twofold<T>& y) {
    const auto p = two_prod(x, y.value);
    return {p.hi, dadd(p.lo, dmul(x, y.error))};
}
template <Dotted T>
inline Twofold<T> tmul0(T x, T y) {
    const auto p = two_prod(x, y);
    return {p.hi, p.lo};
}

// ---------------------------------------------------------------- div

// error = (x - q*y) / y.value with the remainder from one FMA and the input
// errors folded in at first order.
template <Dotted T>
inline Twofold<T> tdiv(const Twofold<T>& x, const Twofold<T>& y) {
    const T q = ddiv(x.value, y.value);
    const T r = dfma(dneg(q), y.value, x.value);
    return {q, ddiv(dsub(dadd(r, x.error), dmul(q, y.error)), y.value)};
}
template <Dotted T>
inline Twofold<T> tdiv1(const Twofold<T>& x, T y) {
    const T q = ddiv(x.value, y);
    const T r = dfma(dneg(q), y, x.value);
    return {q, ddiv(dadd(r, x.error), y)};
}
template <Dotted T>
inline Twofold<T> tdiv2(T x, const Twofold<T>& y) {
    const T q = ddiv(x, y.value);
    const T r = dfma(dneg(q), y.value, x);
    return {q, ddiv(dsub(r, dmul(q, y.error)), y.value)};
}
template <Dotted T>
inline Twofold<T> tdiv0(T x, T y) {
    const T q = ddiv(x, y);
    return {q, ddiv(dfma(dneg(q), y, x), y)};
}

// ---------------------------------------------------------------- sqrt

/**
 * Square root. A negative value lane gives NaN in both lanes. A non-negative
 * value lane whose value + error is negative yields a NaN error lane: the
 * argument is indistinguishable from a negative number.
 */
template <Dotted T>
inline Twofold<T> tsqrt(const Twofold<T>& x) {
    const T nan = std::numeric_limits<T>::quiet_NaN();
    const T z = dsqrt(x.value);
    if (x.value < T(0)) return {z, nan};
    const T s = dadd(x.value, x.error);
    if (s < T(0)) return {z, nan};
    if (z == T(0) && x.error == T(0)) return {z, T(0)};
    const T r = dfma(dneg(z), z, x.value);
    return {z, ddiv(dadd(r, x.error), dadd(z, dsqrt(s)))};
}
template <Dotted T>
inline Twofold<T> tsqrt0(T x) {
    return tsqrt(Twofold<T>(x, T(0)));
}

// Unsuffixed overloads.
template <Dotted T> inline Twofold<T> tadd(const Twofold<T>& x, T y) { return tadd1(x, y); }
template <Dotted T> inline Twofold<T> tadd(T x, const Twofold<T>& y) { return tadd2(x, y); }
template <Dotted T> inline Twofold<T> tadd(T x, T y) { return tadd0(x, y); }
template <Dotted T> inline Twofold<T> tsub(const Twofold<T>& x, T y) { return tsub1(x, y); }
template <Dotted T> inline Twofold<T> tsub(T x, const Twofold<T>& y) { return tsub2(x, y); }
template <Dotted T> inline Twofold<T> tsub(T x, T y) { return tsub0(x, y); }
template <Dotted T> inline Twofold<T> tmul(const Twofold<T>& x, T y) { return tmul1(x, y); }
template <Dotted T> inline Twofold<T> tmul(T x, const Twofold<T>& y) { return tmul2(x, y); }
template <Dotted T> inline Twofold<T> tmul(T x, T y) { return tmul0(x, y); }
template <Dotted T> inline Twofold<T> tdiv(const Twofold<T>& x, T y) { return tdiv1(x, y); }
template <Dotted T> inline Twofold<T> tdiv(T x, const Twofold<T>& y) { return tdiv2(x, y); }
template <Dotted T> inline Twofold<T> tdiv(T x, T y) { return tdiv0(x, y); }
template <Dotted T> inline Twofold<T> tsqrt(T x) { return tsqrt0(x); }

// ---------------------------------------------------------------- service

template <Dotted T>
constexpr Twofold<T> tneg(const Twofold<T>& x) { return {dneg(x.value), dneg(x.error)}; }

template <Dotted T>
constexpr Twofold<T> tabs(const Twofold<T>& x) { return x.value < T(0) ? tneg(x) : x; }

template <Dotted T>
inline bool tisnan(const Twofold<T>& x) { return std::isnan(x.value) || std::isnan(x.error); }

template <Dotted T>
inline bool tisinf(const Twofold<T>& x) { return std::isinf(x.value) || std::isinf(x.error); }

// ---------------------------------------------------------------- comparisons
//
// Twofolds compare by value lanes only, so a program keeps its branching when
// its numbers become twofolds. Disagreement between the value lanes and the
// value + error sums is not reported. NaN follows IEEE (only != is true).

template <Operand X, Operand Y> constexpr bool tlt(const X& x, const Y& y) { return value_of(x) < value_of(y); }
template <Operand X, Operand Y> constexpr bool tle(const X& x, const Y& y) { return value_of(x) <= value_of(y); }
template <Operand X, Operand Y> constexpr bool tgt(const X& x, const Y& y) { return value_of(x) > value_of(y); }
template <Operand X, Operand Y> constexpr bool tge(const X& x, const Y& y) { return value_of(x) >= value_of(y); }
template <Operand X, Operand Y> constexpr bool teq(const X& x, const Y& y) { return value_of(x) == value_of(y); }
template <Operand X, Operand Y> constexpr bool tne(const X& x, const Y& y) { return value_of(x) != value_of(y); }

// ---------------------------------------------------------------- operators

namespace detail {
template <typename X, typename Y>
using common_lane_t = std::common_type_t<lane_t<X>, lane_t<Y>>;

// Bring an operand to lane width C, keeping its shape (coupled becomes twofold).
template <Dotted C, typename X>
constexpr auto lift(const X& x) {
    if constexpr (Shaped<X>) {
        if constexpr (std::same_as<lane_t<X>, C>) return static_cast<const Twofold<C>&>(x);
        else return convert<C>(static_cast<const Twofold<lane_t<X>>&>(x));
    } else {
        return static_cast<C>(x);
    }
}

template <typename X, typename Y>
concept MixedOperands = Operand<X> && Operand<Y> && (Shaped<X> || Shaped<Y>) &&
                        Dotted<common_lane_t<X, Y>>;
}  // namespace detail

// Mixed shapes and widths promote to the wider lane; coupled operands take
// part as twofolds and the result is always a twofold.
template <typename X, typename Y>
    requires detail::MixedOperands<X, Y>
inline auto operator+(const X& x, const Y& y) {
    using C = detail::common_lane_t<X, Y>;
    return tadd(detail::lift<C>(x), detail::lift<C>(y));
}
template <typename X, typename Y>
    requires detail::MixedOperands<X, Y>
inline auto operator-(const X& x, const Y& y) {
    using C = detail::common_lane_t<X, Y>;
    return tsub(detail::lift<C>(x), detail::lift<C>(y));
}
template <typename X, typename Y>
    requires detail::MixedOperands<X, Y>
inline auto operator*(const X& x, const Y& y) {
    using C = detail::common_lane_t<X, Y>;
    return tmul(detail::lift<C>(x), detail::lift<C>(y));
}
template <typename X, typename Y>
    requires detail::MixedOperands<X, Y>
inline auto operator/(const X& x, const Y& y) {
    using C = detail::common_lane_t<X, Y>;
    return tdiv(detail::lift<C>(x), detail::lift<C>(y));
}

template <Dotted T> constexpr Twofold<T> operator-(const Twofold<T>& x) { return tneg(x); }
template <Dotted T> constexpr Twofold<T> operator+(const Twofold<T>& x) { return x; }

template <Dotted T, Operand Y>
inline Twofold<T>& operator+=(Twofold<T>& x, const Y& y) { return x = Twofold<T>(x + y); }
template <Dotted T, Operand Y>
inline Twofold<T>& operator-=(Twofold<T>& x, const Y& y) { return x = Twofold<T>(x - y); }
template <Dotted T, Operand Y>
inline Twofold<T>& operator*=(Twofold<T>& x, const Y& y) { return x = Twofold<T>(x * y); }
template <Dotted T, Operand Y>
inline Twofold<T>& operator/=(Twofold<T>& x, const Y& y) { return x = Twofold<T>(x / y); }

template <typename X, typename Y> requires detail::MixedOperands<X, Y>
constexpr bool operator<(const X& x, const Y& y) { return tlt(x, y); }
template <typename X, typename Y> requires detail::MixedOperands<X, Y>
constexpr bool operator<=(const X& x, const Y& y) { return tle(x, y); }
template <typename X, typename Y> requires detail::MixedOperands<X, Y>
constexpr bool operator>(const X& x, const Y& y) { return tgt(x, y); }
template <typename X, typename Y> requires detail::MixedOperands<X, Y>
constexpr bool operator>=(const X& x, const Y& y) { return tge(x, y); }
template <typename X, typename Y> requires detail::MixedOperands<X, Y>
constexpr bool operator==(const X& x, const Y& y) { return teq(x, y); }
template <typename X, typename Y> requires detail::MixedOperands<X, Y>
constexpr bool operator!=(const X& x, const Y& y) { return tne(x, y); }

// Functions looking like the standard ones (found by ADL).
template <Dotted T> inline Twofold<T> sqrt(const Twofold<T>& x) { return tsqrt(x); }
template <Dotted T> constexpr Twofold<T> fabs(const Twofold<T>& x) { return tabs(x); }
template <Dotted T> constexpr Twofold<T> abs(const Twofold<T>& x) { return tabs(x); }
template <Dotted T> inline bool isnan(const Twofold<T>& x) { return tisnan(x); }
template <Dotted T> inline bool isinf(const Twofold<T>& x) { return tisinf(x); }

}  // namespace twofold
