/* types.hpp
 * Twofold and coupled number types, shape traits and width conversions.
 */
#pragma once
#include "twofold/eft.hpp"

#include <cmath>
#include <concepts>
#include <cstdint>
#include <type_traits>

namespace twofold {

/**
 * Value plus an estimate of the value's rounding deviation, x = value + error.
 *
 * No magnitude relation between the lanes is required. Through every t-operation
 * the value lane evolves bitwise like the plain floating-point computation.
 */
template <Dotted T>
struct Twofold {
    using lane_type = T;

    T value{};
    T error{};

    constexpr Twofold() = default;
    constexpr Twofold(T v) noexcept : value(v), error(0) {}
    constexpr Twofold(T v, T e) noexcept : value(v), error(e) {}

    /// From a dotted number of another type; the conversion residual goes to
    /// the error lane.
    template <typename U>
        requires(std::is_arithmetic_v<U> && !std::same_as<U, T>)
    constexpr Twofold(U x) noexcept;

    /// Reshape to another lane width (narrowing keeps the residual).
    template <Dotted U>
        requires(!std::same_as<U, T>)
    explicit constexpr Twofold(const Twofold<U>& x) noexcept;
};

/**
 * Renormalized twofold: |error| <= ulp(value)/2, so the mantissas of value and
 * error do not overlap. Every Coupled is a Twofold; the reverse needs
 * renormalization (the explicit constructors perform it).
 *
 * The (value, error) constructor trusts its caller; the invariant is not
 * checked in release builds.
 */
template <Dotted T>
struct Coupled : Twofold<T> {
    constexpr Coupled() = default;
    constexpr Coupled(T v) noexcept : Twofold<T>(v) {}
    constexpr Coupled(T v, T e) noexcept : Twofold<T>(v, e) {}

    template <typename U>
        requires(std::is_arithmetic_v<U> && !std::same_as<U, T>)
    constexpr Coupled(U x) noexcept : Twofold<T>(x) {}

    explicit Coupled(const Twofold<T>& x) noexcept;

    template <Dotted U>
        requires(!std::same_as<U, T>)
    explicit Coupled(const Twofold<U>& x) noexcept : Coupled(Twofold<T>(x)) {}
};

enum class Shape { dotted, twofold, coupled };

namespace detail {
template <typename T> T lane_probe(const Twofold<T>*);
template <typename T> std::true_type coupled_probe(const Coupled<T>*);
std::false_type coupled_probe(...);
template <typename X> struct lane_of { using type = X; };
template <typename X>
    requires requires { lane_probe(static_cast<const X*>(nullptr)); }
struct lane_of<X> {
    using type = decltype(lane_probe(static_cast<const X*>(nullptr)));
};
}  // namespace detail

/// Twofold<T>, Coupled<T>, or anything derived from them.
template <typename X>
concept Shaped = requires { detail::lane_probe(static_cast<const X*>(nullptr)); };

template <typename X>
concept CoupledShaped =
    Shaped<X> && decltype(detail::coupled_probe(static_cast<const X*>(nullptr)))::value;

/// Any value accepted by the generic entry points.
template <typename X>
concept Operand = Shaped<X> || std::is_arithmetic_v<X>;

template <typename X>
using lane_t = typename detail::lane_of<std::remove_cvref_t<X>>::type;

template <typename X>
constexpr Shape shape_of() {
    if constexpr (CoupledShaped<X>) return Shape::coupled;
    else if constexpr (Shaped<X>) return Shape::twofold;
    else return Shape::dotted;
}

// Shape-generic accessors: dotted numbers report a zero error.
template <Dotted T> constexpr T value_of(const Twofold<T>& x) { return x.value; }
template <Dotted T> constexpr T error_of(const Twofold<T>& x) { return x.error; }
template <typename T>
    requires std::is_arithmetic_v<T>
constexpr T value_of(T x) { return x; }
template <typename T>
    requires std::is_arithmetic_v<T>
constexpr T error_of(T) { return T(0); }

/**
 * Round a dotted number of any arithmetic type to width T. The residual
 * x - value, rounded once to T, becomes the error lane; widening is exact.
 */
template <Dotted T, typename U>
    requires std::is_arithmetic_v<U>
constexpr Twofold<T> from_dotted(U x) noexcept {
    if constexpr (std::is_integral_v<U>) {
        const T v = static_cast<T>(x);
        if (!std::isfinite(v)) return {v, T(0)};
        // Residual computed in the integer domain when v fits in int64.
        const long double lv = static_cast<long double>(v);
        if (lv >= -0x1p63L && lv < 0x1p63L) {
            const auto iv = static_cast<std::int64_t>(lv);
            const auto ix = static_cast<std::int64_t>(x);
            return {v, static_cast<T>(ix - iv)};
        }
        return {v, static_cast<T>(static_cast<long double>(x) - lv)};
    } else if constexpr (sizeof(U) > sizeof(T)) {
        const T v = static_cast<T>(x);
        if (!std::isfinite(v)) return {v, T(0)};
        return {v, static_cast<T>(x - static_cast<U>(v))};
    } else {
        return {static_cast<T>(x), T(0)};
    }
}

/**
 * Reshape a twofold to width T. Widening copies both lanes exactly; narrowing
 * rounds the value and folds its residual into the (rounded) error lane.
 */
template <Dotted T, Dotted U>
constexpr Twofold<T> convert(const Twofold<U>& x) noexcept {
    if constexpr (sizeof(U) <= sizeof(T)) {
        return {static_cast<T>(x.value), static_cast<T>(x.error)};
    } else {
        const T v = static_cast<T>(x.value);
        if (!std::isfinite(v)) return {v, static_cast<T>(x.error)};
        const U residual = x.value - static_cast<U>(v);
        return {v, static_cast<T>(residual + x.error)};
    }
}

template <Dotted T>
template <typename U>
    requires(std::is_arithmetic_v<U> && !std::same_as<U, T>)
constexpr Twofold<T>::Twofold(U x) noexcept : Twofold(from_dotted<T>(x)) {}

template <Dotted T>
template <Dotted U>
    requires(!std::same_as<U, T>)
constexpr Twofold<T>::Twofold(const Twofold<U>& x) noexcept : Twofold(convert<T>(x)) {}

namespace detail {
// General renormalization: order the lanes by magnitude, then fast two-sum.
template <Dotted T>
inline EftPair<T> renormalize_lanes(T v, T e) {
    using std::fabs;
    return fabs(v) >= fabs(e) ? fast_two_sum(v, e) : fast_two_sum(e, v);
}
}  // namespace detail

template <Dotted T>
Coupled<T>::Coupled(const Twofold<T>& x) noexcept {
    const auto r = detail::renormalize_lanes(x.value, x.error);
    this->value = r.hi;
    this->error = r.lo;
}

/// True when |error| <= ulp(value)/2 (or a lane is not finite).
template <std::floating_point T>
bool is_renormalized(const Twofold<T>& x) {
    if (!std::isfinite(x.value) || !std::isfinite(x.error)) return true;
    if (x.value == T(0)) return x.error == T(0);
    return std::fabs(x.error) <= ulp(x.value) / 2;
}

using twofold32 = Twofold<float>;
using twofold64 = Twofold<double>;
using coupled32 = Coupled<float>;
using coupled64 = Coupled<double>;

}  // namespace twofold
