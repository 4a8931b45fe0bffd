#include "twofold/lab/report.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <cstdio>

namespace twofold::lab {

namespace {

const char* lane_name(Lane l) {
    switch (l) {
    case Lane::value: return "value";
    case Lane::error: return "error";
    case Lane::sum: return "value+error";
    }
    return "?";
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

// Lanes are stored widened; narrow back so 32-bit kinds print as floats.
std::string lane_text(const Quantity& q, double x, FormatOptions opts) {
    if (q.width == 32) return format_lane(static_cast<float>(x), opts);
    return format_lane(x, opts);
}

std::string quantity_text(const Quantity& q, FormatOptions opts) {
    std::string s = lane_text(q, q.value, opts);
    if (q.shape != Shape::dotted) s += "[" + lane_text(q, q.error, opts) + "]";
    return s;
}

}  // namespace

double Quantity::lane(Lane l) const {
    switch (l) {
    case Lane::value: return value;
    case Lane::error: return error;
    case Lane::sum: return value + error;
    }
    return value;
}

bool Quantity::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Quantity::expect(Check c) {
    const double x = lane(c.lane);
    switch (c.rule) {
    case Rule::relative: c.pass = std::fabs(x - c.expected) <= c.tolerance * std::fabs(c.expected); break;
    case Rule::absolute: c.pass = std::fabs(x - c.expected) <= c.tolerance; break;
    case Rule::bitwise:
        c.pass = std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(c.expected);
        break;
    case Rule::is_nan: c.pass = std::isnan(x); break;
    }
    checks.push_back(std::move(c));
}

Quantity* Report::find(const std::string& name) {
    for (auto& q : quantities)
        if (q.name == name) return &q;
    return nullptr;
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& q : quantities)
        for (const auto& c : q.checks) n += c.pass ? 0 : 1;
    return n;
}

std::string describe(const Check& c) {
    std::string s = lane_name(c.lane);
    switch (c.rule) {
    case Rule::relative: s += " = " + num(c.expected) + " (rel " + num(c.tolerance) + ")"; break;
    case Rule::absolute: s += " = " + num(c.expected) + " (abs " + num(c.tolerance) + ")"; break;
    case Rule::bitwise: s += " bitwise " + format_lane(c.expected, {Notation::hex}); break;
    case Rule::is_nan: s += " is nan"; break;
    }
    if (!c.source.empty()) s += " [" + c.source + "]";
    return s;
}

std::string render_text(const Report& r, FormatOptions opts) {
    if (r.quantities.empty()) return {};
    std::string out = "test: " + r.scenario + ", type=" + kind_name(r.kind);
    for (const auto& [k, v] : r.params) out += ", " + k + "=" + v;
    out += '\n';
    for (const auto& q : r.quantities) out += q.name + ": " + quantity_text(q, opts) + '\n';

    std::size_t checks = 0;
    for (const auto& q : r.quantities) {
        for (const auto& c : q.checks) {
            ++checks;
            if (!c.pass) out += "FAIL " + q.name + ": expected " + describe(c) + '\n';
        }
    }
    const std::size_t bad = r.failures();
    if (checks == 0) out += "verdict: unchecked\n";
    else if (bad == 0) out += "verdict: pass (" + std::to_string(checks) + " checks)\n";
    else out += "verdict: FAIL (" + std::to_string(bad) + " of " + std::to_string(checks) + " checks)\n";
    return out;
}

std::string render_records(const Report& r) {
    std::string out;
    const FormatOptions hex{Notation::hex};
    for (const auto& q : r.quantities) {
        const FormatOptions dec{Notation::general, q.width == 32 ? 9 : 17};
        nlohmann::ordered_json j;
        j["scenario"] = r.scenario;
        j["kind"] = kind_name(r.kind);
        j["name"] = q.name;
        j["value_hex"] = lane_text(q, q.value, hex);
        j["error_hex"] = lane_text(q, q.error, hex);
        j["value_dec"] = lane_text(q, q.value, dec);
        j["error_dec"] = lane_text(q, q.error, dec);
        if (q.checks.empty()) {
            j["expected"] = nullptr;
            j["verdict"] = "unchecked";
        } else {
            auto& e = j["expected"] = nlohmann::json::array();
            for (const auto& c : q.checks) e.push_back(describe(c));
            j["verdict"] = q.pass() ? "pass" : "fail";
        }
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace twofold::lab
