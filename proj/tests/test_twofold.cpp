#include "oracle.hpp"

#include <doctest.h>

#include "twofold/arith.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace twofold;

// ---- instrumented scalar for the operation budget ----

namespace {
struct Ops {
    static inline int add = 0, mul = 0, div = 0, fma = 0, sqrt = 0;
    static void reset() { add = mul = div = fma = sqrt = 0; }
};
struct Counted {
    double v = 0;
    Counted() = default;
    Counted(double x) : v(x) {}
};
Counted operator+(Counted a, Counted b) { ++Ops::add; return a.v + b.v; }
Counted operator-(Counted a, Counted b) { ++Ops::add; return a.v - b.v; }
Counted operator*(Counted a, Counted b) { ++Ops::mul; return a.v * b.v; }
[[maybe_unused]] Counted operator/(Counted a, Counted b) { ++Ops::div; return a.v / b.v; }
Counted operator-(Counted a) { return -a.v; }
[[maybe_unused]] bool operator<(Counted a, Counted b) { return a.v < b.v; }
[[maybe_unused]] bool operator==(Counted a, Counted b) { return a.v == b.v; }
Counted fma(Counted a, Counted b, Counted c) { ++Ops::fma; return std::fma(a.v, b.v, c.v); }
[[maybe_unused]] Counted sqrt(Counted a) { ++Ops::sqrt; return std::sqrt(a.v); }
}  // namespace

template <>
inline constexpr bool twofold::enable_dotted<Counted> = true;

TEST_SUITE("twofold") {

TEST_CASE("tadd costs eight add/sub operations") {
    const Twofold<Counted> x(Counted(1.0), Counted(1e-17)), y(Counted(1e-3), Counted(-2e-20));
    Ops::reset();
    const auto z = tadd(x, y);
    CHECK(Ops::add == 8);
    CHECK(Ops::mul + Ops::div + Ops::fma + Ops::sqrt == 0);
    CHECK(z.value.v == 1.0 + 1e-3);

    Ops::reset();
    (void)tsub(x, y);
    CHECK(Ops::add == 8);

    Ops::reset();
    (void)tadd0(Counted(1.0), Counted(2.0));
    CHECK(Ops::add == 6);

    Ops::reset();
    (void)tmul(x, y);
    CHECK(Ops::mul == 3);
    CHECK(Ops::fma == 1);
    CHECK(Ops::add == 2);
}

TEST_CASE("tadd examples") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i) {
        const auto x = oracle::random_twofold<double>(rng, -10, 10);
        CHECK(oracle::same_bits(tadd(x, twofold64(0.0, 0.0)), x));
    }
    const double tiny = std::ldexp(1.0, -60);
    const auto z = tadd0(1.0, tiny);
    CHECK(z.value == 1.0);
    CHECK(z.error == tiny);
}

TEST_CASE("tsub examples and duality") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 10000; ++i) {
        const auto x = oracle::random_twofold<double>(rng, -10, 10);
        const auto y = oracle::random_twofold<double>(rng, -10, 10);
        CHECK(tsub(x, x).value == 0.0);
        REQUIRE(oracle::same_bits(tsub(x, y), tadd(x, tneg(y))));
        const auto xf = oracle::random_twofold<float>(rng, -10, 10);
        const auto yf = oracle::random_twofold<float>(rng, -10, 10);
        REQUIRE(oracle::same_bits(tsub(xf, yf), tadd(xf, tneg(yf))));
        REQUIRE(oracle::same_bits(tsub1(xf, yf.value), tadd1(xf, dneg(yf.value))));
        REQUIRE(oracle::same_bits(tsub2(xf.value, yf), tadd2(xf.value, tneg(yf))));
        REQUIRE(oracle::same_bits(tsub0(xf.value, yf.value), tadd0(xf.value, dneg(yf.value))));
    }
    const double tiny = std::ldexp(1.0, -60);
    const auto z = tsub0(1.0, tiny);
    CHECK(z.value == 1.0);
    CHECK(z.error == -tiny);
}

TEST_CASE("tmul examples") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        const auto x = oracle::random_twofold<double>(rng, -10, 10);
        const auto z = tmul(x, twofold64(1.0, 0.0));
        CHECK(z.value == x.value);
        CHECK(z.error == x.error);
    }
    const double a = 1.0 + std::ldexp(1.0, -52);
    const auto z = tmul0(a, a);
    CHECK(z.value == 1.0 + std::ldexp(1.0, -51));
    CHECK(z.error == std::ldexp(1.0, -104));
}

TEST_CASE("tdiv examples") {
    const auto h = tdiv(twofold64(1.0), twofold64(2.0));
    CHECK(h.value == 0.5);
    CHECK(h.error == 0.0);
    std::mt19937_64 rng(24);
    for (int i = 0; i < 1000; ++i) {
        const auto x = oracle::random_twofold<double>(rng, -10, 10);
        CHECK(tdiv(x, x).value == 1.0);
    }
    const auto inf = tdiv(twofold64(1.0), twofold64(0.0));
    CHECK(std::isinf(inf.value));
    CHECK(!std::isfinite(inf.error));
}

TEST_CASE_TEMPLATE("tdiv of dotted pairs is within 4u^2 (oracle)", T, float, double) {
    std::mt19937_64 rng(25);
    const double u = oracle::unit_roundoff<T>();
    for (int i = 0; i < 20000; ++i) {
        const T x = oracle::random_float<T>(rng, -20, 20);
        const T y = oracle::random_float<T>(rng, -20, 20);
        const mpq_class ex = oracle::exact(x) / oracle::exact(y);
        REQUIRE(oracle::rel(oracle::exact(tdiv(Twofold<T>(x), Twofold<T>(y))), ex, ex) <= 4 * u * u);
    }
}

TEST_CASE("tsqrt examples") {
    const auto two = tsqrt(twofold64(4.0));
    CHECK(two.value == 2.0);
    CHECK(two.error == 0.0);
    const auto zero = tsqrt(twofold64(0.0));
    CHECK(zero.value == 0.0);
    CHECK(zero.error == 0.0);

    const auto neg = tsqrt(twofold64(-1.0, 0.0));
    CHECK(std::isnan(neg.value));
    CHECK(std::isnan(neg.error));

    // Non-negative value lane with a negative value + error: error is NaN.
    const auto hidden = tsqrt(twofold32(0.0f, -1e-8f));
    CHECK(hidden.value == 0.0f);
    CHECK(std::isnan(hidden.error));

    const auto r = tsqrt0(2.0f);
    CHECK(r.value == std::sqrt(2.0f));
}

TEST_CASE("comparisons use value lanes only") {
    const double e = 1e-20;
    CHECK(teq(twofold64(1.0, -e), twofold64(1.0, e)));
    CHECK(!tlt(twofold64(std::nan(""), 0.0), twofold64(1.0, 0.0)));
    CHECK(tgt(twofold64(2.0, -5.0), twofold64(1.0, 5.0)));
    CHECK(tlt(1.0, twofold64(2.0)));
    CHECK(twofold64(1.0) < 2.0);

    const twofold64 n(std::nan(""), 0.0), one(1.0);
    for (const auto& [a, b] : {std::pair{n, one}, std::pair{one, n}, std::pair{n, n}}) {
        CHECK(!tlt(a, b));
        CHECK(!tle(a, b));
        CHECK(!tgt(a, b));
        CHECK(!tge(a, b));
        CHECK(!teq(a, b));
        CHECK(tne(a, b));  // IEEE: != is the negation of ==
    }
}

TEST_CASE("perturbing error lanes never changes a comparison") {
    std::mt19937_64 rng(26);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < 20000; ++i) {
        twofold64 x = oracle::random_twofold<double>(rng, -3, 3);
        twofold64 y = pick(rng) == 0 ? x : oracle::random_twofold<double>(rng, -3, 3);
        const auto all = [](const twofold64& a, const twofold64& b) {
            return std::array{tlt(a, b), tle(a, b), tgt(a, b), tge(a, b), teq(a, b), tne(a, b)};
        };
        const auto before = all(x, y);
        x.error = oracle::random_float<double>(rng, -3, 3);
        y.error = oracle::random_float<double>(rng, -3, 3);
        REQUIRE(before == all(x, y));
    }
}

TEST_CASE("service functions") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 1000; ++i) {
        const auto x = oracle::random_twofold<double>(rng, -5, 5);
        CHECK(oracle::same_bits(tneg(tneg(x)), x));
    }
    CHECK(tisnan(twofold64(0.0, std::nan(""))));
    CHECK(tisnan(twofold64(std::nan(""), 0.0)));
    CHECK(!tisnan(twofold64(1.0, 2.0)));
    CHECK(tisinf(twofold32(1.0f, std::numeric_limits<float>::infinity())));
    const auto a = tabs(twofold64(-3.0, 2.0));
    CHECK(a.value == 3.0);
    CHECK(a.error == -2.0);
    const auto b = tabs(twofold64(3.0, -2.0));
    CHECK(b.value == 3.0);
    CHECK(b.error == -2.0);
}

TEST_CASE("conversions") {
    const twofold32 tenth = 0.1;
    CHECK(tenth.value == 0.1f);
    CHECK(tenth.error == doctest::Approx(-1.49012e-09).epsilon(1e-5));
    // The error lane is the once-rounded residual of the narrowing.
    const double residual = 0.1 - static_cast<double>(0.1f);
    CHECK(tenth.error == static_cast<float>(residual));

    const twofold64 zero = 0;
    CHECK(zero.value == 0.0);
    CHECK(zero.error == 0.0);

    const twofold64 big = (1LL << 60) + 1;
    CHECK(oracle::exact(big) == mpq_class(mpz_class("1152921504606846977")));

    std::mt19937_64 rng(28);
    for (int i = 0; i < 1000; ++i) {
        const auto x = oracle::random_twofold<float>(rng, -20, 20);
        const twofold64 w(x);
        CHECK(w.value == static_cast<double>(x.value));
        CHECK(w.error == static_cast<double>(x.error));
        const twofold32 back(w);
        CHECK(oracle::same_bits(back, x));
    }

    const twofold32 inf(1e300);
    CHECK(std::isinf(inf.value));
}

TEST_CASE("mixed operands promote to the wider lane") {
    const twofold32 a = 0.1;
    const auto s = a + 1.0;
    static_assert(std::is_same_v<std::remove_cvref_t<decltype(s)>, twofold64>);
    CHECK(s.value == static_cast<double>(0.1f) + 1.0);

    const auto t = twofold64(2.0) * 3.0f;
    static_assert(std::is_same_v<std::remove_cvref_t<decltype(t)>, twofold64>);
    CHECK(t.value == 6.0);

    twofold32 acc = 0.0f;
    acc += 0.1f;
    CHECK(acc.value == 0.1f);

    static_assert(shape_of<double>() == Shape::dotted);
    static_assert(shape_of<twofold32>() == Shape::twofold);
    static_assert(shape_of<coupled64>() == Shape::coupled);
    CHECK(value_of(2.5) == 2.5);
    CHECK(error_of(2.5) == 0.0);
    CHECK(error_of(twofold64(1.0, 0.5)) == 0.5);
}

// Error-lane fidelity: |(value+error) - exact| <= C u^2 |scale|, inputs with
// |error| <= ulp(value). scale is |x|+|y| for add/sub (cancellation makes the
// exact result arbitrarily small), |exact| otherwise. C per operation was
// fixed by a 2e5-sample sweep (worst observed: add 2.97, sub 2.96, mul 10.4,
// div 13.6, sqrt 4.01) with headroom.
TEST_CASE_TEMPLATE("error-lane fidelity (oracle)", T, float, double) {
    constexpr double c_add = 4, c_sub = 4, c_mul = 16, c_div = 20, c_sqrt = 6;
    std::mt19937_64 rng(29);
    const double u = oracle::unit_roundoff<T>();
    const double u2 = u * u;
    for (int i = 0; i < 20000; ++i) {
        const auto x = oracle::random_twofold<T>(rng, -20, 20);
        const auto y = oracle::random_twofold<T>(rng, -20, 20);
        const mpq_class X = oracle::exact(x), Y = oracle::exact(y);
        const mpq_class scale = abs(X) + abs(Y);
        const mpq_class sum = X + Y, diff = X - Y, prod = X * Y, quot = X / Y;
        REQUIRE(oracle::rel(oracle::exact(tadd(x, y)), sum, scale) <= c_add * u2);
        REQUIRE(oracle::rel(oracle::exact(tsub(x, y)), diff, scale) <= c_sub * u2);
        REQUIRE(oracle::rel(oracle::exact(tmul(x, y)), prod, prod) <= c_mul * u2);
        REQUIRE(oracle::rel(oracle::exact(tdiv(x, y)), quot, quot) <= c_div * u2);
        const auto ax = tabs(x);
        const mpq_class root = oracle::sqrt_of(oracle::exact(ax));
        REQUIRE(oracle::rel(oracle::exact(tsqrt(ax)), root, root) <= c_sqrt * u2);
    }
}

TEST_CASE_TEMPLATE("tadd0 and tmul0 are exact (oracle)", T, float, double) {
    std::mt19937_64 rng(30);
    for (int i = 0; i < 20000; ++i) {
        const T a = oracle::random_float<T>(rng, -30, 30);
        const T b = oracle::random_float<T>(rng, -30, 30);
        REQUIRE(oracle::exact(tadd0(a, b)) == oracle::exact(a) + oracle::exact(b));
        REQUIRE(oracle::exact(tmul0(a, b)) == oracle::exact(a) * oracle::exact(b));
    }
}

}
