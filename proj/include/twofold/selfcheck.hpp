#pragma once
#include <string>

namespace twofold {

struct SelfCheckResult {
    bool ok = true;
    std::string message;  ///< first failed check, empty when ok
};

/**
 * Runtime check of the environment the error-free transformations rely on:
 * round-to-nearest-even is active, fma rounds once, and neither sums nor
 * products are being simplified or contracted by the compiler.
 */
SelfCheckResult self_check();

}  // namespace twofold
