#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lctr::bench {

struct BenchRecord {
    std::string algorithm;  // "fast" or "oracle"
    std::uint64_t r = 0;
    std::uint64_t n = 0;
    std::uint64_t wall_time_ns = 0;  // best of the repetitions, solve only
    std::uint64_t probes_or_cells = 0;
};

inline constexpr unsigned kMinExponent = 10;
inline constexpr unsigned kMaxExponent = 26;

// LCTR on staircase(2^k) for k = 10..max_exponent: the fast solver at every
// k, the oracle while the board fits its cell budget.
std::vector<BenchRecord> run_bench(unsigned max_exponent, unsigned repetitions);

std::string bench_csv_header();  // "algorithm,r,n,wall_time_ns,probes_or_cells"
std::string bench_csv_row(const BenchRecord& rec);

}  // namespace lctr::bench
