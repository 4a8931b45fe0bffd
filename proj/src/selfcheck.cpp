#include "twofold/selfcheck.hpp"

#include "twofold/eft.hpp"

#include <cfenv>
#include <cmath>

namespace twofold {

namespace {

// Opaque to the optimizer so the checks run on real hardware arithmetic.
template <typename T>
T launder(T x) {
    volatile T v = x;
    return v;
}

template <typename T>
const char* check_width() {
    const T one = launder(T(1));
    const T eps = std::numeric_limits<T>::epsilon();
    const T tiny = launder(eps * eps);

    const auto s = two_sum(one, tiny);
    if (s.hi != one || s.lo != tiny) return "two_sum lost its residual (reassociation?)";

    // 1 + u is a tie and must round to even (1), not up.
    if (launder(one) + launder(eps / 2) != one) return "addition does not round to nearest-even";

    const T a = launder(one + eps);
    const auto p = two_prod(a, a);
    if (p.hi != one + 2 * eps || p.lo != eps * eps)
        return "fma is not fused (two_prod residual is wrong)";

    const T x = launder(T(3)), y = launder(T(7));
    if (dsub(dadd(tiny, one), one) != T(0)) return "(tiny + 1) - 1 was simplified";
    if (dmul(x, y) != T(21)) return "multiplication is broken";
    return nullptr;
}

}  // namespace

SelfCheckResult self_check() {
    if (std::fegetround() != FE_TONEAREST)
        return {false, "rounding mode is not round-to-nearest"};
    if (const char* m = check_width<float>()) return {false, std::string("binary32: ") + m};
    if (const char* m = check_width<double>()) return {false, std::string("binary64: ") + m};
    return {};
}

}  // namespace twofold
