/* scenarios.hpp
 * Accuracy case studies: timer summation, quadratic roots, Rump's polynomial
 * and a 5x5 Jordan-cell linear system. Each run reports its quantities plus
 * checks: twofold kinds are compared bitwise with the plain run of the same
 * width, and known reference results are compared within fixed tolerances.
 */
#pragma once
#include "twofold/lab/report.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace twofold::lab {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double max_hours = 100000;

struct SummationConfig {
    double hours = 100;  ///< 0 <= hours <= max_hours; ticks = round(hours * 36000)
};

struct QuadraticConfig {
    double c = 1e-8;  ///< a = 1, b = 2
    std::string label;  ///< text shown for c; empty means "%.17g"
};

enum class RumpOrder { literal, grouped };

enum class JordanVariant {
    integer,     ///< system scaled by `scale`: all data integer
    normalized,  ///< lambda = 1/scale and f rounded once per entry
    truncated,   ///< normalized with every input error lane set to zero
};

struct JordanConfig {
    long long scale = 10000;  ///< lambda = 1/scale; 1 <= scale < 2^24
    JordanVariant variant = JordanVariant::normalized;
};

Report run_summation(Kind k, const SummationConfig& cfg);
Report run_quadratic(Kind k, const QuadraticConfig& cfg);
Report run_rump(Kind k, RumpOrder order);
Report run_jordan(Kind k, const JordanConfig& cfg);

/// "A", "A+B" or "A-B" with decimal operands, evaluated in binary64
/// ("1+1e-8" is fl(1 + fl(1e-8))). Throws ConfigError.
double parse_real_expression(std::string_view text);

/// 1/lambda rounded to an integer; rejects lambdas that are not 1/integer
/// to 12 significant digits. Throws ConfigError.
long long jordan_scale_from_lambda(double lambda);

RumpOrder parse_rump_order(std::string_view s);
JordanVariant parse_jordan_variant(std::string_view s);
const char* rump_order_name(RumpOrder o);
const char* jordan_variant_name(JordanVariant v);

}  // namespace twofold::lab
