#include "twofold/format.hpp"

#include <bit>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <type_traits>

namespace twofold {

namespace {

template <typename T>
using bits_t = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;

template <typename T>
constexpr int mantissa_bits = std::numeric_limits<T>::digits - 1;

template <typename T>
constexpr bits_t<T> mantissa_mask = (bits_t<T>(1) << mantissa_bits<T>) - 1;

template <typename T>
constexpr bits_t<T> sign_mask = bits_t<T>(1) << (sizeof(T) * 8 - 1);

template <typename T>
std::string format_nan_hex(T x) {
    const auto bits = std::bit_cast<bits_t<T>>(x);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%snan(0x%llx)", (bits & sign_mask<T>) ? "-" : "",
                  static_cast<unsigned long long>(bits & mantissa_mask<T>));
    return buf;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}
    void skip_space() {
        while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    }
    bool done() const { return pos_ == s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }
    std::string_view rest() const { return s_.substr(pos_); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

// "nan(0x<payload>)" with optional sign; returns false if the text is not of
// that form (plain "nan" is left to strtod).
template <typename T>
bool parse_nan_payload(std::string_view tok, std::size_t offset, T& out) {
    bool negative = false;
    std::string_view s = tok;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.size() < 4 || !(std::tolower(s[0]) == 'n' && std::tolower(s[1]) == 'a' &&
                          std::tolower(s[2]) == 'n' && s[3] == '('))
        return false;
    if (s.back() != ')') throw ParseError("unterminated NaN payload", offset);
    std::string payload(s.substr(4, s.size() - 5));
    if (payload.empty()) throw ParseError("empty NaN payload", offset);
    char* end = nullptr;
    errno = 0;
    const unsigned long long p = std::strtoull(payload.c_str(), &end, 0);
    if (errno != 0 || *end != '\0') throw ParseError("malformed NaN payload", offset);
    if (p == 0 || p > mantissa_mask<T>) throw ParseError("NaN payload out of range", offset);
    bits_t<T> bits = (~bits_t<T>(0) & ~sign_mask<T>) & ~mantissa_mask<T>;  // exponent all ones
    bits |= static_cast<bits_t<T>>(p);
    if (negative) bits |= sign_mask<T>;
    out = std::bit_cast<T>(bits);
    return true;
}

template <typename T>
T parse_lane(std::string_view tok, std::size_t offset) {
    if (tok.empty()) throw ParseError("expected a number", offset);
    T nan_value;
    if (parse_nan_payload(tok, offset, nan_value)) return nan_value;
    const std::string text(tok);
    char* end = nullptr;
    T value;
    if constexpr (std::is_same_v<T, float>) value = std::strtof(text.c_str(), &end);
    else value = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) throw ParseError("expected a number", offset);
    if (*end != '\0')
        throw ParseError("unexpected '" + std::string(1, *end) + "'",
                         offset + static_cast<std::size_t>(end - text.c_str()));
    return value;
}

// A lane token runs up to whitespace, '[' or ']'. Parentheses belong to the
// NaN payload form.
std::string_view take_token(Cursor& c) {
    const std::string_view rest = c.rest();
    std::size_t n = 0;
    bool in_parens = false;
    while (n < rest.size()) {
        const char ch = rest[n];
        if (ch == '(') in_parens = true;
        else if (ch == ')') in_parens = false;
        else if (!in_parens && (ch == '[' || ch == ']' || is_space(ch))) break;
        ++n;
    }
    c.advance(n);
    return rest.substr(0, n);
}

}  // namespace

template <std::floating_point T>
std::string format_lane(T x, FormatOptions opts) {
    if (std::isnan(x)) return opts.notation == Notation::hex ? format_nan_hex(x) : "nan";
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    char buf[64];
    if (opts.notation == Notation::hex) {
        std::snprintf(buf, sizeof buf, "%a", static_cast<double>(x));
    } else {
        const int digits = opts.digits < 1 ? 1 : (opts.digits > 40 ? 40 : opts.digits);
        std::snprintf(buf, sizeof buf, "%.*g", digits, static_cast<double>(x));
    }
    return buf;
}

template <std::floating_point T>
std::string format(const Twofold<T>& x, FormatOptions opts) {
    std::string out = format_lane(x.value, opts);
    out += '[';
    out += format_lane(x.error, opts);
    out += ']';
    return out;
}

template <std::floating_point T>
Twofold<T> parse(std::string_view text) {
    Cursor c(text);
    c.skip_space();
    const std::size_t value_at = c.pos();
    const T value = parse_lane<T>(take_token(c), value_at);
    c.skip_space();
    if (c.done()) return {value, T(0)};
    if (c.peek() != '[') throw ParseError("expected '['", c.pos());
    c.advance(1);
    c.skip_space();
    const std::size_t error_at = c.pos();
    const T error = parse_lane<T>(take_token(c), error_at);
    c.skip_space();
    if (c.peek() != ']') throw ParseError("expected ']'", c.pos());
    c.advance(1);
    c.skip_space();
    if (!c.done()) throw ParseError("trailing characters", c.pos());
    return {value, error};
}

template std::string format_lane<float>(float, FormatOptions);
template std::string format_lane<double>(double, FormatOptions);
template std::string format<float>(const Twofold<float>&, FormatOptions);
template std::string format<double>(const Twofold<double>&, FormatOptions);
template Twofold<float> parse<float>(std::string_view);
template Twofold<double> parse<double>(std::string_view);

}  // namespace twofold
