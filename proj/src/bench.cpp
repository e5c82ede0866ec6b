#include "lctr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "lctr/errors.hpp"
#include "lctr/solver_fast.hpp"
#include "lctr/solver_oracle.hpp"

namespace lctr::bench {

namespace {

template <typename Fn>
std::uint64_t best_time_ns(unsigned repetitions, Fn&& fn) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (unsigned k = 0; k < std::max(repetitions, 1u); ++k) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min<std::uint64_t>(best, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    return best;
}

}  // namespace

std::vector<BenchRecord> run_bench(unsigned max_exponent, unsigned repetitions) {
    if (max_exponent < kMinExponent || max_exponent > kMaxExponent) {
        throw InvalidFamilyParam("max exponent must be between " + std::to_string(kMinExponent) + " and " +
                                 std::to_string(kMaxExponent));
    }
    std::vector<BenchRecord> records;
    for (unsigned k = kMinExponent; k <= max_exponent; ++k) {
        const std::uint64_t r = std::uint64_t{1} << k;
        const Partition board = make_family({FamilyKind::Staircase, r});

        BenchRecord fast{"fast", r, board.size(), 0, 0};
        fast.wall_time_ns = best_time_ns(repetitions, [&] {
            ProbeCounter counter;
            volatile unsigned sink = sg_lctr(SubpositionView(board, 0, 0, &counter)).value();
            (void)sink;
            fast.probes_or_cells = counter.probes;
        });
        records.push_back(fast);

        if (board.size() > oracle::kCellBudget) continue;
        BenchRecord slow{"oracle", r, board.size(), 0, 0};
        slow.wall_time_ns = best_time_ns(repetitions, [&] {
            const auto grid = oracle::oracle_sg_lctr(board);
            slow.probes_or_cells = grid.cell_updates();
        });
        records.push_back(slow);
    }
    return records;
}

std::string bench_csv_header() { return "algorithm,r,n,wall_time_ns,probes_or_cells"; }

std::string bench_csv_row(const BenchRecord& rec) {
    return rec.algorithm + "," + std::to_string(rec.r) + "," + std::to_string(rec.n) + "," +
           std::to_string(rec.wall_time_ns) + "," + std::to_string(rec.probes_or_cells);
}

}  // namespace lctr::bench
