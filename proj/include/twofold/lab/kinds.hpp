/* kinds.hpp
 * The six number kinds of the accuracy lab and a uniform arithmetic surface
 * over them, so one scenario body serves dotted, twofold and coupled runs.
 */
#pragma once
#include "twofold/coupled.hpp"

#include <cmath>
#include <string>
#include <string_view>

namespace twofold::lab {

enum class Kind { dotted32, dotted64, twofold32, twofold64, coupled32, coupled64 };

inline constexpr Kind all_kinds[] = {Kind::dotted32,  Kind::dotted64,  Kind::twofold32,
                                     Kind::twofold64, Kind::coupled32, Kind::coupled64};

const char* kind_name(Kind k);
Kind parse_kind(std::string_view name);  ///< throws std::invalid_argument
int kind_width(Kind k);
Shape kind_shape(Kind k);
Kind dotted_kind(int width);

/**
 * Coupled number whose arithmetic operators stay coupled (p-operations).
 * The library's own operators on Coupled deliberately return twofolds.
 */
template <Dotted T>
struct CoupledNum {
    Coupled<T> x;
};

template <Dotted T> inline CoupledNum<T> operator+(CoupledNum<T> a, CoupledNum<T> b) { return {padd(a.x, b.x)}; }
template <Dotted T> inline CoupledNum<T> operator-(CoupledNum<T> a, CoupledNum<T> b) { return {psub(a.x, b.x)}; }
template <Dotted T> inline CoupledNum<T> operator*(CoupledNum<T> a, CoupledNum<T> b) { return {pmul(a.x, b.x)}; }
template <Dotted T> inline CoupledNum<T> operator/(CoupledNum<T> a, CoupledNum<T> b) { return {pdiv(a.x, b.x)}; }
template <Dotted T> inline CoupledNum<T> operator-(CoupledNum<T> a) { return {pneg(a.x)}; }

/**
 * Per-type operations used by scenario code: construction from a double or
 * an exact integer ratio (rounded once, keeping the residual when shaped),
 * lane access, sqrt, abs and the type's own ordering.
 */
template <typename N>
struct Num;

template <std::floating_point T>
struct Num<T> {
    using lane = T;
    static constexpr Shape shape = Shape::dotted;
    static T from_double(double d) { return static_cast<T>(d); }
    static T ratio(long long p, long long q) { return ddiv(static_cast<T>(p), static_cast<T>(q)); }
    static T value(T x) { return x; }
    static T error(T) { return T(0); }
    static T drop_error(T x) { return x; }
    static T sqrt(T x) { return dsqrt(x); }
    static T abs(T x) { return std::fabs(x); }
    static bool less(T a, T b) { return a < b; }
    static bool is_zero(T a) { return a == T(0); }
};

template <Dotted T>
struct Num<Twofold<T>> {
    using lane = T;
    using N = Twofold<T>;
    static constexpr Shape shape = Shape::twofold;
    static N from_double(double d) { return N(d); }
    static N ratio(long long p, long long q) { return tdiv0(static_cast<T>(p), static_cast<T>(q)); }
    static T value(const N& x) { return x.value; }
    static T error(const N& x) { return x.error; }
    static N drop_error(const N& x) { return {x.value, T(0)}; }
    static N sqrt(const N& x) { return tsqrt(x); }
    static N abs(const N& x) { return tabs(x); }
    static bool less(const N& a, const N& b) { return tlt(a, b); }
    static bool is_zero(const N& a) { return teq(a, T(0)); }
};

template <Dotted T>
struct Num<CoupledNum<T>> {
    using lane = T;
    using N = CoupledNum<T>;
    static constexpr Shape shape = Shape::coupled;
    static N from_double(double d) { return {Coupled<T>(d)}; }
    static N ratio(long long p, long long q) { return {pdiv0(static_cast<T>(p), static_cast<T>(q))}; }
    static T value(const N& x) { return x.x.value; }
    static T error(const N& x) { return x.x.error; }
    static N drop_error(const N& x) { return {Coupled<T>(x.x.value)}; }
    static N sqrt(const N& x) { return {psqrt(x.x)}; }
    static N abs(const N& x) { return {pabs(x.x)}; }
    static bool less(const N& a, const N& b) { return plt(a.x, b.x); }
    static bool is_zero(const N& a) { return peq(a.x, Coupled<T>(T(0))); }
};

/// Calls f.template operator()<N>() with N the number type of kind k.
template <typename F>
decltype(auto) dispatch(Kind k, F&& f) {
    switch (k) {
    case Kind::dotted32: return f.template operator()<float>();
    case Kind::dotted64: return f.template operator()<double>();
    case Kind::twofold32: return f.template operator()<Twofold<float>>();
    case Kind::twofold64: return f.template operator()<Twofold<double>>();
    case Kind::coupled32: return f.template operator()<CoupledNum<float>>();
    case Kind::coupled64: break;
    }
    return f.template operator()<CoupledNum<double>>();
}

}  // namespace twofold::lab
