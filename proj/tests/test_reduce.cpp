#include "oracle.hpp"

#include <doctest.h>

#include "twofold/reduce.hpp"

#include <random>
#include <vector>

using namespace twofold;

namespace {
template <typename T>
std::vector<T> random_vector(std::mt19937_64& rng, std::size_t n, int emin, int emax) {
    std::vector<T> v(n);
    for (auto& x : v) x = oracle::random_float<T>(rng, emin, emax);
    return v;
}
}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("trivial cases") {
    const std::vector<double> empty;
    const auto s = tsum<double>(empty);
    CHECK(s.value == 0.0);
    CHECK(s.error == 0.0);
    const auto d = tdot<double>(empty, empty);
    CHECK(d.value == 0.0);
    CHECK(d.error == 0.0);

    const std::vector<double> xs{1.5, -2.25, 3.0}, zeros(3, 0.0);
    const auto z = tdot<double>(xs, zeros);
    CHECK(z.value == 0.0);
    CHECK(z.error == 0.0);

    const double a = 1.0 + std::ldexp(1.0, -52);
    const std::vector<double> va{a};
    const auto one = tdot<double>(va, va);
    const auto p = two_prod(a, a);
    CHECK(one.value == p.hi);
    CHECK(one.error == p.lo);
}

TEST_CASE("timer summation in binary32") {
    const twofold32 tick = 0.1;
    std::vector<float> ticks(3600000, tick.value);
    // The plain loop sees only the value lane; the tick's own residual is
    // accumulated separately and scaled, as the twofold loop would.
    const auto s = tsum<float>(ticks);
    CHECK(s.value == plain_sum<float>(ticks));
    twofold32 acc = 0.0f;
    for (int i = 0; i < 3600000; ++i) acc = acc + tick;
    CHECK(acc.value == s.value);
    const auto hours = acc / 3600.0f;
    CHECK(hours.value == doctest::Approx(96.3958).epsilon(1e-4));
    CHECK(hours.error == doctest::Approx(3.54008).epsilon(1e-4));
}

TEST_CASE("length mismatch") {
    const std::vector<double> a(3), b(4);
    CHECK_THROWS_AS((void)tdot<double>(a, b), LengthError);
    CHECK_THROWS_AS((void)tdot_chunked<double>(a, b, 2), LengthError);
    std::vector<double> o(3), e(3);
    CHECK_THROWS_AS(tadd_slice<double>({a, a}, {b, b}, {o, e}), LengthError);
    CHECK_THROWS_AS(tsqrt_slice<double>({a, b}, {o, e}), LengthError);
}

TEST_CASE_TEMPLATE("value lanes equal the plain loops", T, float, double) {
    std::mt19937_64 rng(61);
    for (const std::size_t n : {1u, 7u, 1000u}) {
        const auto xs = random_vector<T>(rng, n, -10, 10), ys = random_vector<T>(rng, n, -10, 10);
        REQUIRE(oracle::same_bits(tsum<T>(xs).value, plain_sum<T>(xs)));
        REQUIRE(oracle::same_bits(tdot<T>(xs, ys).value, plain_dot<T>(xs, ys)));
        T s = 0, d = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s = s + xs[i];
            const T p = xs[i] * ys[i];
            d = d + p;
        }
        REQUIRE(oracle::same_bits(plain_sum<T>(xs), s));
        REQUIRE(oracle::same_bits(plain_dot<T>(xs, ys), d));
    }
}

TEST_CASE_TEMPLATE("accuracy bound n u^2 sum|terms| (oracle)", T, float, double) {
    std::mt19937_64 rng(62);
    const double u = oracle::unit_roundoff<T>();
    for (const std::size_t n : {10u, 1000u, 10000u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto xs = oracle::ill_conditioned<T>(rng, n);
            const auto ys = random_vector<T>(rng, n, -2, 2);
            const auto [s, sm] = oracle::exact_sum(xs);
            const auto [d, dm] = oracle::exact_dot(xs, ys);
            const double bound = static_cast<double>(n) * u * u;
            INFO("n = " << n);
            REQUIRE(oracle::rel(oracle::exact(tsum<T>(xs)), s, sm) <= bound);
            REQUIRE(oracle::rel(oracle::exact(tdot<T>(xs, ys)), d, dm) <= bound);
        }
    }
}

TEST_CASE_TEMPLATE("chunked reductions are reproducible", T, float, double) {
    std::mt19937_64 rng(63);
    const auto xs = oracle::ill_conditioned<T>(rng, 10007);
    const auto ys = random_vector<T>(rng, xs.size(), -2, 2);
    for (const std::size_t chunks : {0u, 1u, 3u, 8u}) {
        const auto a = tsum_chunked<T>(xs, chunks), b = tsum_chunked<T>(xs, chunks);
        REQUIRE(oracle::same_bits(a, b));
        const auto c = tdot_chunked<T>(xs, ys, chunks), d = tdot_chunked<T>(xs, ys, chunks);
        REQUIRE(oracle::same_bits(c, d));
    }
    REQUIRE(oracle::same_bits(tsum_chunked<T>(xs, 1), tsum<T>(xs)));
    REQUIRE(oracle::same_bits(tdot_chunked<T>(xs, ys, 0), tdot<T>(xs, ys)));
    // Still accurate after combining partials.
    const auto [s, sm] = oracle::exact_sum(xs);
    const double u = oracle::unit_roundoff<T>();
    REQUIRE(oracle::rel(oracle::exact(tsum_chunked<T>(xs, 8)), s, sm) <= xs.size() * u * u);
}

TEST_CASE_TEMPLATE("slices equal the scalar operations", T, float, double) {
    std::mt19937_64 rng(64);
    const std::size_t n = 257;
    std::vector<T> xv(n), xe(n), yv(n), ye(n), ov(n), oe(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = oracle::random_twofold<T>(rng, -10, 10), y = oracle::random_twofold<T>(rng, -10, 10);
        xv[i] = x.value;
        xe[i] = x.error;
        yv[i] = y.value;
        ye[i] = y.error;
    }
    const SoaView<T> x{xv, xe}, y{yv, ye};
    const SoaSpan<T> out{ov, oe};
    const auto at = [](const SoaView<T>& v, std::size_t i) { return Twofold<T>(v.value[i], v.error[i]); };
    const auto got = [&](std::size_t i) { return Twofold<T>(ov[i], oe[i]); };

    tadd_slice<T>(x, y, out);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(oracle::same_bits(got(i), tadd(at(x, i), at(y, i))));
    tsub_slice<T>(x, y, out);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(oracle::same_bits(got(i), tsub(at(x, i), at(y, i))));
    tmul_slice<T>(x, y, out);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(oracle::same_bits(got(i), tmul(at(x, i), at(y, i))));
    tdiv_slice<T>(x, y, out);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(oracle::same_bits(got(i), tdiv(at(x, i), at(y, i))));
    tsqrt_slice<T>(x, out);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(oracle::same_bits(got(i), tsqrt(at(x, i))));
}

TEST_CASE("accumulator") {
    Accumulator<double> acc;
    acc.add(1.0);
    acc.add(std::ldexp(1.0, -60));
    acc.add(-1.0);
    CHECK(acc.sum().value == 0.0);
    CHECK(acc.sum().error == std::ldexp(1.0, -60));
    Accumulator<double> dot(twofold64(1.0, 0.5));
    dot.add_product(2.0, 3.0);
    CHECK(dot.sum().value == 7.0);
    CHECK(dot.sum().error == 0.5);
}

}
