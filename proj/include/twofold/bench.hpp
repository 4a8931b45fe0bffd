/* bench.hpp
 * Throughput harness for plain vs twofold kernels. Numbers are machine
 * specific; only the ratios are meaningful across machines.
 */
#pragma once
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twofold {

enum class BenchKernel { sum, dot, tsum, tdot, ops };

inline constexpr std::size_t bench_small_bytes = 1024;              // cache resident
inline constexpr std::size_t bench_large_bytes = 64u * 1024 * 1024;  // memory bound

struct BenchConfig {
    std::vector<BenchKernel> kernels;
    std::size_t bytes = bench_small_bytes;  ///< per input array
    int width = 64;                         ///< 32 or 64
    std::uint64_t seed = 1;
    double min_seconds = 0.2;               ///< timing budget per measured loop
};

/**
 * One measured loop. `ratio` compares a twofold kernel with its plain
 * counterpart (tsum/sum, tdot/dot, tadd/add, ...), 1 for plain kernels.
 * `value`/`error` hold the numeric result of one pass and depend only on the
 * seed and size.
 */
struct BenchRow {
    std::string name;
    int width = 64;
    std::size_t bytes = 0;
    double ops_per_sec = 0;
    double ratio = 1;
    std::uint64_t seed = 0;
    double value = 0;
    double error = 0;
};

class BenchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws BenchError for bad configurations and allocation failures.
std::vector<BenchRow> run_bench(const BenchConfig& config);

const char* kernel_name(BenchKernel k);
BenchKernel parse_kernel(const std::string& name);  ///< throws std::invalid_argument

/// Aligned table, one line per row.
std::string render_bench_text(const std::vector<BenchRow>& rows);
/// One JSON object per line: name, width, size, ops_per_sec, ratio, seed.
std::string render_bench_records(const std::vector<BenchRow>& rows);

}  // namespace twofold
