/* coupled.hpp
 * Coupled-precision ("p") arithmetic on renormalized twofolds, the fast
 * t-variants for coupled arguments, and renormalization.
 *
 * p-operations assume their shaped arguments satisfy |error| <= ulp(value)/2.
 * The assumption is the caller's responsibility; debug builds assert the
 * invariant on every result, release builds check nothing.
 */
#pragma once
#include "twofold/arith.hpp"

#include <cassert>
#include <concepts>
#include <limits>

namespace twofold {

namespace detail {
template <Dotted T>
inline Coupled<T> coupled_result(EftPair<T> r) {
    Coupled<T> z(r.hi, r.lo);
#ifndef NDEBUG
    if constexpr (std::floating_point<T>) assert(is_renormalized(z));
#endif
    return z;
}
}  // namespace detail

// ---------------------------------------------------------------- renormalization

/// Exact for any pair: value + error is preserved.
template <Dotted T>
inline Coupled<T> renormalize(const Twofold<T>& x) {
    return detail::coupled_result(detail::renormalize_lanes(x.value, x.error));
}

/// Requires |x.error| <= |x.value|; then bitwise equal to renormalize(x).
template <Dotted T>
inline Coupled<T> fast_renorm(const Twofold<T>& x) {
    return detail::coupled_result(fast_two_sum(x.value, x.error));
}

/// Coupled a + b for dotted |a| >= |b|.
template <Dotted T>
inline Coupled<T> fast_add0(T a, T b) {
    return detail::coupled_result(fast_two_sum(a, b));
}

/// Coupled a - b for dotted |a| >= |b|.
template <Dotted T>
inline Coupled<T> fast_sub0(T a, T b) {
    return fast_add0(a, dneg(b));
}

// ---------------------------------------------------------------- padd / psub

template <Dotted T>
inline Coupled<T> padd(const Coupled<T>& x, const Coupled<T>& y) {
    auto s = two_sum(x.value, y.value);
    const auto t = two_sum(x.error, y.error);
    s = two_sum(s.hi, dadd(s.lo, t.hi));
    return detail::coupled_result(two_sum(s.hi, dadd(s.lo, t.lo)));
}
template <Dotted T>
inline Coupled<T> padd1(const Coupled<T>& x, T y) {
    const auto s = two_sum(x.value, y);
    return detail::coupled_result(two_sum(s.hi, dadd(s.lo, x.error)));
}
template <Dotted T>
inline Coupled<T> padd2(T x, const Coupled<T>& y) {
    const auto s = two_sum(x, y.value);
    return detail::coupled_result(two_sum(s.hi, dadd(s.lo, y.error)));
}
/// Same computation as tadd0: a two-sum is already renormalized.
template <Dotted T>
inline Coupled<T> padd0(T x, T y) {
    return detail::coupled_result(two_sum(x, y));
}

template <Dotted T>
constexpr Coupled<T> pneg(const Coupled<T>& x) { return {dneg(x.value), dneg(x.error)}; }

template <Dotted T>
inline Coupled<T> psub(const Coupled<T>& x, const Coupled<T>& y) { return padd(x, pneg(y)); }
template <Dotted T>
inline Coupled<T> psub1(const Coupled<T>& x, T y) { return padd1(x, dneg(y)); }
template <Dotted T>
inline Coupled<T> psub2(T x, const Coupled<T>& y) { return padd2(x, pneg(y)); }
template <Dotted T>
inline Coupled<T> psub0(T x, T y) { return padd0(x, dneg(y)); }

// ---------------------------------------------------------------- pmul

template <Dotted T>
inline Coupled<T> pmul(const Coupled<T>& x, const Coupled<T>& y) {
    const auto p = two_prod(x.value, y.value);
    const T cross = dadd(dmul(x.value, y.error), dmul(x.error, y.value));
    return detail::coupled_result(fast_two_sum(p.hi, dadd(p.lo, cross)));
}
template <Dotted T>
inline Coupled<T> pmul1(const Coupled<T>& x, T y) {
    const auto p = two_prod(x.value, y);
    return detail::coupled_result(fast_two_sum(p.hi, dadd(p.lo, dmul(x.error, y))));
}
template <Dotted T>
inline Coupled<T> pmul2(T x, const Coupled<T>& y) {
    const auto p = two_prod(x, y.value);
    return detail::coupled_result(fast_two_sum(p.hi, dadd(p.lo, dmul(x, y.error))));
}
template <Dotted T>
inline Coupled<T> pmul0(T x, T y) {
    return detail::coupled_result(two_prod(x, y));
}

// ---------------------------------------------------------------- pdiv

template <Dotted T>
inline Coupled<T> pdiv(const Coupled<T>& x, const Coupled<T>& y) {
    const T q = ddiv(x.value, y.value);
    const T r = dfma(dneg(q), y.value, x.value);
    const T e = ddiv(dsub(dadd(r, x.error), dmul(q, y.error)), y.value);
    return detail::coupled_result(fast_two_sum(q, e));
}
template <Dotted T>
inline Coupled<T> pdiv1(const Coupled<T>& x, T y) {
    const T q = ddiv(x.value, y);
    const T e = ddiv(dadd(dfma(dneg(q), y, x.value), x.error), y);
    return detail::coupled_result(fast_two_sum(q, e));
}
template <Dotted T>
inline Coupled<T> pdiv2(T x, const Coupled<T>& y) {
    const T q = ddiv(x, y.value);
    const T e = ddiv(dsub(dfma(dneg(q), y.value, x), dmul(q, y.error)), y.value);
    return detail::coupled_result(fast_two_sum(q, e));
}
template <Dotted T>
inline Coupled<T> pdiv0(T x, T y) {
    const T q = ddiv(x, y);
    return detail::coupled_result(fast_two_sum(q, ddiv(dfma(dneg(q), y, x), y)));
}

// ---------------------------------------------------------------- psqrt

template <Dotted T>
inline Coupled<T> psqrt(const Coupled<T>& x) {
    const T z = dsqrt(x.value);
    if (x.value < T(0)) return {z, std::numeric_limits<T>::quiet_NaN()};
    if (z == T(0)) return {z, T(0)};
    const T e = ddiv(dadd(dfma(dneg(z), z, x.value), x.error), dadd(z, z));
    return detail::coupled_result(fast_two_sum(z, e));
}
template <Dotted T>
inline Coupled<T> psqrt0(T x) {
    return psqrt(Coupled<T>(x, T(0)));
}

// Unsuffixed overloads.
template <Dotted T> inline Coupled<T> padd(const Coupled<T>& x, T y) { return padd1(x, y); }
template <Dotted T> inline Coupled<T> padd(T x, const Coupled<T>& y) { return padd2(x, y); }
template <Dotted T> inline Coupled<T> padd(T x, T y) { return padd0(x, y); }
template <Dotted T> inline Coupled<T> psub(const Coupled<T>& x, T y) { return psub1(x, y); }
template <Dotted T> inline Coupled<T> psub(T x, const Coupled<T>& y) { return psub2(x, y); }
template <Dotted T> inline Coupled<T> psub(T x, T y) { return psub0(x, y); }
template <Dotted T> inline Coupled<T> pmul(const Coupled<T>& x, T y) { return pmul1(x, y); }
template <Dotted T> inline Coupled<T> pmul(T x, const Coupled<T>& y) { return pmul2(x, y); }
template <Dotted T> inline Coupled<T> pmul(T x, T y) { return pmul0(x, y); }
template <Dotted T> inline Coupled<T> pdiv(const Coupled<T>& x, T y) { return pdiv1(x, y); }
template <Dotted T> inline Coupled<T> pdiv(T x, const Coupled<T>& y) { return pdiv2(x, y); }
template <Dotted T> inline Coupled<T> pdiv(T x, T y) { return pdiv0(x, y); }
template <Dotted T> inline Coupled<T> psqrt(T x) { return psqrt0(x); }

// ---------------------------------------------------------------- fast t-variants

// Twofold results from coupled arguments; the coupled precondition lets the
// error terms be fused or approximated with fewer operations.

template <Dotted T>
inline Twofold<T> tmulp(const Coupled<T>& x, const Coupled<T>& y) {
    const T z = dmul(x.value, y.value);
    const T r = dfma(x.value, y.value, dneg(z));
    return {z, dadd(r, dfma(x.value, y.error, dmul(x.error, y.value)))};
}

template <Dotted T>
inline Twofold<T> tdivp(const Coupled<T>& x, const Coupled<T>& y) {
    const T q = ddiv(x.value, y.value);
    const T r = dfma(dneg(q), y.error, dfma(dneg(q), y.value, x.value));
    return {q, ddiv(dadd(r, x.error), y.value)};
}

// sqrt(value + error) ~ sqrt(value) makes the denominator 2z and the
// negative-sum detection unnecessary.
template <Dotted T>
inline Twofold<T> tsqrtp(const Coupled<T>& x) {
    const T z = dsqrt(x.value);
    if (x.value < T(0)) return {z, std::numeric_limits<T>::quiet_NaN()};
    if (z == T(0)) return {z, T(0)};
    return {z, ddiv(dadd(dfma(dneg(z), z, x.value), x.error), dadd(z, z))};
}

// ---------------------------------------------------------------- service

template <Dotted T>
constexpr Coupled<T> pabs(const Coupled<T>& x) { return x.value < T(0) ? pneg(x) : x; }
template <Dotted T>
inline bool pisnan(const Coupled<T>& x) { return tisnan(x); }
template <Dotted T>
inline bool pisinf(const Coupled<T>& x) { return tisinf(x); }

template <Dotted T> inline Coupled<T> sqrt(const Coupled<T>& x) { return psqrt(x); }
template <Dotted T> constexpr Coupled<T> fabs(const Coupled<T>& x) { return pabs(x); }
template <Dotted T> constexpr Coupled<T> abs(const Coupled<T>& x) { return pabs(x); }

// ---------------------------------------------------------------- comparisons
//
// Lexicographic: value lanes first, error lanes break ties. Any NaN in a
// deciding comparison makes lt/le/gt/ge/eq false; ne is the negation of eq.

template <Operand X, Operand Y>
constexpr bool plt(const X& x, const Y& y) {
    return value_of(x) < value_of(y) || (value_of(x) == value_of(y) && error_of(x) < error_of(y));
}
template <Operand X, Operand Y>
constexpr bool ple(const X& x, const Y& y) {
    return value_of(x) < value_of(y) || (value_of(x) == value_of(y) && error_of(x) <= error_of(y));
}
template <Operand X, Operand Y>
constexpr bool pgt(const X& x, const Y& y) { return plt(y, x); }
template <Operand X, Operand Y>
constexpr bool pge(const X& x, const Y& y) { return ple(y, x); }
template <Operand X, Operand Y>
constexpr bool peq(const X& x, const Y& y) {
    return value_of(x) == value_of(y) && error_of(x) == error_of(y);
}
template <Operand X, Operand Y>
constexpr bool pne(const X& x, const Y& y) { return !peq(x, y); }

}  // namespace twofold
