/* format.hpp
 * Text form of twofold numbers: VALUE[ERROR], e.g. "3.14159[-8.74228e-08]".
 */
#pragma once
#include "twofold/types.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twofold {

enum class Notation {
    general,  ///< printf %g with `digits` significant digits; NaN prints as "nan"
    hex,      ///< bit-exact: hexadecimal float literals, NaN sign and payload kept
};

struct FormatOptions {
    Notation notation = Notation::general;
    int digits = 6;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

template <std::floating_point T>
std::string format_lane(T x, FormatOptions opts = {});

template <std::floating_point T>
std::string format(const Twofold<T>& x, FormatOptions opts = {});

/**
 * Parse "VALUE[ERROR]" (whitespace allowed around the tokens) or a bare
 * "VALUE", which yields a zero error. Lanes accept decimal, hexadecimal,
 * inf and nan forms, including the "nan(0x...)" payload form written by
 * Notation::hex. Throws ParseError on malformed input.
 */
template <std::floating_point T>
Twofold<T> parse(std::string_view text);

/// Uses the stream's own precision and float flags for both lanes.
template <Dotted T>
std::ostream& operator<<(std::ostream& os, const Twofold<T>& x) {
    return os << x.value << '[' << x.error << ']';
}

extern template std::string format_lane<float>(float, FormatOptions);
extern template std::string format_lane<double>(double, FormatOptions);
extern template std::string format<float>(const Twofold<float>&, FormatOptions);
extern template std::string format<double>(const Twofold<double>&, FormatOptions);
extern template Twofold<float> parse<float>(std::string_view);
extern template Twofold<double> parse<double>(std::string_view);

}  // namespace twofold
