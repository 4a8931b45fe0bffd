// lab: accuracy case studies and throughput bench over the twofold C API.
//
//   lab corner summation|quadratic|rump [options]
//   lab solve jordan [options]
//   lab bench [options]
//
// Exit status: 0 all checks pass, 1 a check failed (or the floating-point
// environment is unsuitable), 2 usage error.

#include "twofold/twofold.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Usage {
    std::string message;
};

struct Free {
    void operator()(char* p) const { tf_free(p); }
    void operator()(tf_report* r) const { tf_report_free(r); }
    void operator()(tf_bench* b) const { tf_bench_free(b); }
};

std::vector<tf_kind> parse_kinds(const std::vector<std::string>& names) {
    std::vector<tf_kind> out;
    for (const auto& n : names) {
        if (n == "all") {
            for (int k = TF_DOTTED32; k <= TF_COUPLED64; ++k) out.push_back(static_cast<tf_kind>(k));
            continue;
        }
        tf_kind k;
        if (tf_kind_parse(n.c_str(), &k) != TF_OK) throw Usage{tf_last_error()};
        out.push_back(k);
    }
    return out;
}

size_t parse_size(const std::string& s) {
    if (s == "small") return 1024;
    if (s == "large") return size_t{64} << 20;
    char* end = nullptr;
    const unsigned long long n = std::strtoull(s.c_str(), &end, 10);
    if (end == s.c_str()) throw Usage{"bad size '" + s + "'"};
    std::string suffix(end);
    unsigned shift = 0;
    if (suffix == "K" || suffix == "KiB") shift = 10;
    else if (suffix == "M" || suffix == "MiB") shift = 20;
    else if (suffix == "G" || suffix == "GiB") shift = 30;
    else if (!suffix.empty()) throw Usage{"bad size suffix '" + suffix + "'"};
    return static_cast<size_t>(n) << shift;
}

bool write_out(const char* text) {
    std::fputs(text, stdout);
    return std::fflush(stdout) == 0 && !std::ferror(stdout);
}

struct Output {
    std::string format = "text";
    int digits = 6;
    tf_render mode() const { return format == "records" ? TF_RENDER_RECORDS : TF_RENDER_TEXT; }
};

// Runs one scenario per kind and prints the reports.
template <typename Run>
int run_reports(const std::vector<tf_kind>& kinds, const Output& out, Run run) {
    bool pass = true;
    bool first = true;
    for (const tf_kind k : kinds) {
        tf_report* raw = nullptr;
        const tf_status s = run(k, &raw);
        if (s == TF_EINVAL || s == TF_EPARSE) throw Usage{tf_last_error()};
        if (s != TF_OK) {
            std::fprintf(stderr, "lab: %s: %s\n", tf_status_string(s), tf_last_error());
            return exit_fail;
        }
        std::unique_ptr<tf_report, Free> report(raw);
        char* text = nullptr;
        if (tf_report_render(report.get(), out.mode(), out.digits, &text) != TF_OK) {
            std::fprintf(stderr, "lab: %s\n", tf_last_error());
            return exit_fail;
        }
        std::unique_ptr<char, Free> hold(text);
        if (!first && out.mode() == TF_RENDER_TEXT && text[0] != '\0') write_out("\n");
        first = false;
        if (!write_out(text)) {
            std::fprintf(stderr, "lab: write error\n");
            return exit_fail;
        }
        pass = pass && tf_report_failures(report.get()) == 0;
    }
    return pass ? exit_ok : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twofold accuracy lab: case studies and throughput bench"};
    app.require_subcommand(1);

    Output out;
    std::vector<std::string> kind_names{"all"};
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind_names, "Number kinds (dotted32, dotted64, twofold32, "
                                              "twofold64, coupled32, coupled64, all)")
            ->delimiter(',');
        cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "records"}));
        cmd->add_option("--digits", out.digits, "Significant digits in text output")->check(CLI::Range(1, 17));
    };

    auto* corner = app.add_subcommand("corner", "Corner-case scenarios");
    corner->require_subcommand(1);
    double hours = 100;
    auto* summation = corner->add_subcommand("summation", "0.1 s timer ticks accumulated over --hours");
    add_common(summation);
    summation->add_option("--hours", hours, "Simulated hours (0 to 1e5)");

    std::string c = "1e-8";
    auto* quadratic = corner->add_subcommand("quadratic", "Roots of x^2 + 2x + c by the school formula");
    add_common(quadratic);
    quadratic->add_option("--c", c, "c as A, A+B or A-B (e.g. 1e-8, 1+1e-8)");

    std::string order = "literal";
    auto* rump = corner->add_subcommand("rump", "Rump's polynomial at a=77617, b=33096");
    add_common(rump);
    rump->add_option("--order", order, "Evaluation order")->check(CLI::IsMember({"literal", "grouped"}));

    auto* solve = app.add_subcommand("solve", "Linear systems");
    solve->require_subcommand(1);
    double lambda = 1e-4;
    std::string variant = "normalized";
    auto* jordan = solve->add_subcommand("jordan", "5x5 Jordan cell with eigenvalue --lambda");
    add_common(jordan);
    jordan->add_option("--lambda", lambda, "Eigenvalue, 1/integer");
    jordan->add_option("--variant", variant, "integer, normalized or truncated")
        ->check(CLI::IsMember({"integer", "normalized", "truncated", "normalized+truncated"}));

    auto* bench = app.add_subcommand("bench", "Throughput of plain vs twofold kernels");
    std::vector<std::string> kernels{"sum", "tsum", "dot", "tdot"};
    std::string size = "small";
    int width = 64;
    std::uint64_t seed = 1;
    double min_seconds = 0.2;
    bench->add_option("--kernel", kernels, "sum, dot, tsum, tdot, ops")
        ->delimiter(',')
        ->check(CLI::IsMember({"sum", "dot", "tsum", "tdot", "ops"}));
    bench->add_option("--size", size, "small (1 KiB), large (64 MiB) or bytes with K/M/G suffix");
    bench->add_option("--width", width, "Lane width")->check(CLI::IsMember({32, 64}));
    bench->add_option("--seed", seed, "Input generator seed");
    bench->add_option("--min-seconds", min_seconds, "Timing budget per loop")->check(CLI::PositiveNumber);
    bench->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "records"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    if (tf_selfcheck() != TF_OK) {
        std::fprintf(stderr, "lab: floating-point self-check failed: %s\n", tf_last_error());
        return exit_fail;
    }

    try {
        if (*summation)
            return run_reports(parse_kinds(kind_names), out,
                               [&](tf_kind k, tf_report** r) { return tf_lab_summation(k, hours, r); });
        if (*quadratic)
            return run_reports(parse_kinds(kind_names), out,
                               [&](tf_kind k, tf_report** r) { return tf_lab_quadratic(k, c.c_str(), r); });
        if (*rump)
            return run_reports(parse_kinds(kind_names), out,
                               [&](tf_kind k, tf_report** r) { return tf_lab_rump(k, order.c_str(), r); });
        if (*jordan)
            return run_reports(parse_kinds(kind_names), out, [&](tf_kind k, tf_report** r) {
                return tf_lab_jordan(k, lambda, variant.c_str(), r);
            });
        if (*bench) {
            std::string list;
            for (const auto& k : kernels) list += (list.empty() ? "" : ",") + k;
            tf_bench* raw = nullptr;
            const tf_status s = tf_bench_run(list.c_str(), parse_size(size), width, seed, min_seconds, &raw);
            if (s == TF_EINVAL) throw Usage{tf_last_error()};
            if (s != TF_OK) {
                std::fprintf(stderr, "lab: %s: %s\n", tf_status_string(s), tf_last_error());
                return exit_fail;
            }
            std::unique_ptr<tf_bench, Free> b(raw);
            char* text = nullptr;
            if (tf_bench_render(b.get(), out.mode(), &text) != TF_OK) {
                std::fprintf(stderr, "lab: %s\n", tf_last_error());
                return exit_fail;
            }
            std::unique_ptr<char, Free> hold(text);
            return write_out(text) ? exit_ok : exit_fail;
        }
    } catch (const Usage& u) {
        std::fprintf(stderr, "lab: %s\n", u.message.c_str());
        return exit_usage;
    }
    return exit_usage;
}
