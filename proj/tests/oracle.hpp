// Exact reference arithmetic for tests: GMP rationals for + - * /, MPFR at
// high precision for square roots.
#pragma once
#include "twofold/coupled.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline mpq_class exact(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

template <typename T>
mpq_class exact(const twofold::Twofold<T>& x) {
    return exact(static_cast<double>(x.value)) + exact(static_cast<double>(x.error));
}

/// Identical bit patterns (distinguishes -0 from 0 and NaN payloads).
template <std::floating_point T>
bool same_bits(T a, T b) {
    using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
    return std::bit_cast<U>(a) == std::bit_cast<U>(b);
}

template <std::floating_point T>
bool same_bits(const twofold::Twofold<T>& a, const twofold::Twofold<T>& b) {
    return same_bits(a.value, b.value) && same_bits(a.error, b.error);
}

inline double to_double(const mpq_class& q) { return q.get_d(); }

/// |a - b| / |scale| as a double (scale != 0).
inline double rel(const mpq_class& a, const mpq_class& b, const mpq_class& scale) {
    mpq_class d = a - b;
    return std::fabs(d.get_d()) / std::fabs(scale.get_d());
}

/// sqrt(q) rounded to 400 bits, as a rational.
inline mpq_class sqrt_of(const mpq_class& q) {
    mpfr_t x;
    mpfr_init2(x, 400);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(x, x, MPFR_RNDN);
    mpf_class f(0, 400);
    mpfr_get_f(f.get_mpf_t(), x, MPFR_RNDN);
    mpfr_clear(x);
    return mpq_class(f);
}

template <typename T>
constexpr double unit_roundoff() {
    return std::ldexp(1.0, -std::numeric_limits<T>::digits);
}

/// Random finite float with uniformly distributed bit patterns restricted to
/// binary exponents [emin, emax], random sign.
template <typename T>
T random_float(std::mt19937_64& rng, int emin, int emax) {
    std::uniform_real_distribution<double> m(1.0, 2.0);
    std::uniform_int_distribution<int> e(emin, emax);
    const T x = static_cast<T>(std::ldexp(m(rng), e(rng)));
    return (rng() & 1) ? -x : x;
}

/// Random bit pattern, finite only (includes subnormals and zeros).
template <typename T>
T random_bits(std::mt19937_64& rng) {
    using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
    for (;;) {
        const T x = std::bit_cast<T>(static_cast<U>(rng()));
        if (std::isfinite(x)) return x;
    }
}

/// Twofold with |error| <= ulp(value).
template <typename T>
twofold::Twofold<T> random_twofold(std::mt19937_64& rng, int emin, int emax) {
    const T v = random_float<T>(rng, emin, emax);
    std::uniform_real_distribution<double> f(-1.0, 1.0);
    const T e = static_cast<T>(f(rng) * static_cast<double>(twofold::ulp(v)));
    return {v, e};
}

/// Coupled number: renormalized random twofold.
template <typename T>
twofold::Coupled<T> random_coupled(std::mt19937_64& rng, int emin, int emax) {
    const T v = random_float<T>(rng, emin, emax);
    std::uniform_real_distribution<double> f(-0.5, 0.5);
    const T e = static_cast<T>(f(rng) * static_cast<double>(twofold::ulp(v)));
    return twofold::Coupled<T>(twofold::Twofold<T>(v, e));
}

/// Cancellation-heavy array: each value is followed (somewhere later) by its
/// negation plus a small perturbation, over a wide exponent range, so the
/// exact sum is tiny compared with sum |x_i|.
template <typename T>
std::vector<T> ill_conditioned(std::mt19937_64& rng, std::size_t n) {
    const int span = std::numeric_limits<T>::digits;
    std::vector<T> xs;
    xs.reserve(n);
    while (xs.size() + 1 < n) {
        const T a = random_float<T>(rng, -span, span);
        xs.push_back(a);
        xs.push_back(-a + random_float<T>(rng, -3 * span / 2, -span / 2));
    }
    if (xs.size() < n) xs.push_back(random_float<T>(rng, -span, span));
    std::shuffle(xs.begin(), xs.end(), rng);
    return xs;
}

/// Exact sum and sum of magnitudes.
template <typename T>
std::pair<mpq_class, mpq_class> exact_sum(const std::vector<T>& xs) {
    mpq_class s = 0, m = 0;
    for (const T x : xs) {
        const mpq_class q = exact(static_cast<double>(x));
        s += q;
        m += abs(q);
    }
    return {s, m};
}

template <typename T>
std::pair<mpq_class, mpq_class> exact_dot(const std::vector<T>& xs, const std::vector<T>& ys) {
    mpq_class s = 0, m = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const mpq_class q = exact(static_cast<double>(xs[i])) * exact(static_cast<double>(ys[i]));
        s += q;
        m += abs(q);
    }
    return {s, m};
}

}  // namespace oracle
