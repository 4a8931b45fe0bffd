/* report.hpp
 * Result of one lab scenario: named quantities, the checks applied to them,
 * and the text / record renderings.
 */
#pragma once
#include "twofold/format.hpp"
#include "twofold/lab/kinds.hpp"

#include <string>
#include <utility>
#include <vector>

namespace twofold::lab {

enum class Lane { value, error, sum };  ///< sum = value + error, evaluated in double

enum class Rule {
    relative,  ///< |observed - expected| <= tolerance * |expected|
    absolute,  ///< |observed - expected| <= tolerance
    bitwise,   ///< identical bit pattern (NaN payloads included)
    is_nan,
};

struct Check {
    Lane lane = Lane::value;
    Rule rule = Rule::relative;
    double expected = 0;
    double tolerance = 0;
    std::string source;  ///< what the expectation is, e.g. "dotted64 run"
    bool pass = false;
};

struct Quantity {
    std::string name;
    Shape shape = Shape::dotted;
    int width = 64;
    double value = 0;  ///< lanes widened exactly from the kind's width
    double error = 0;
    std::vector<Check> checks;

    double lane(Lane l) const;
    bool pass() const;
    /// Evaluates the check against this quantity and records it.
    void expect(Check c);
};

struct Report {
    std::string scenario;
    Kind kind = Kind::dotted64;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Quantity> quantities;

    Quantity* find(const std::string& name);
    bool all_pass() const;
    std::size_t failures() const;
};

/// Reference-log layout: a "test:" header, then one "name: value[error]" line per
/// quantity (dotted kinds print the bare value), then one line per failed check
/// and a verdict line. An empty report renders as an empty string.
std::string render_text(const Report& r, FormatOptions opts = {});

/// One JSON object per quantity with the fields scenario, kind, name,
/// value_hex, error_hex, value_dec, error_dec, expected, verdict.
std::string render_records(const Report& r);

std::string describe(const Check& c);

}  // namespace twofold::lab
