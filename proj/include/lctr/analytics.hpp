#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lctr/partition.hpp"
#include "lctr/solver_fast.hpp"

namespace lctr::analytics {

using BigInt = boost::multiprecision::cpp_int;

// Censuses are refused above this many boxes.
inline constexpr std::uint64_t kCensusBudget = 10'000'000;

// Size of the unfolded game tree. `states` counts distinct subpartitions
// reachable from the start (plus the empty board for LCTR).
struct TreeCensus {
    BigInt nodes;
    BigInt leaves;
    std::uint64_t states = 0;

    friend bool operator==(const TreeCensus&, const TreeCensus&) = default;
};

// Forward path-count DP over the diagram. Game must be LctrNormal or
// DownrightNormal; Downright throws EmptyBoard on the empty board.
TreeCensus census(Game game, const Partition& p);

// Closed forms for the staircase, rectangle and gamma families.
TreeCensus census_closed_form(Game game, const FamilySpec& spec);

struct StateBounds {
    std::uint64_t lower;
    std::uint64_t upper;
};

// Bounds on the state count over all partitions of n >= 1. The lower bound
// comes from the longest play, which is at least as long as on the largest
// staircase that fits in n boxes.
StateBounds state_space_bounds(Game game, std::uint64_t n);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// "family,game,r,c,nodes,leaves,states"
std::string csv_header();
std::string csv_row(std::string_view family, Game game, std::uint64_t r, std::uint64_t c, const TreeCensus& t);

// For each side k in 1..max_side, the partitions of k*k whose game tree has
// the most nodes. Exploratory only.
struct SquareScanRow {
    unsigned side;
    Game game;
    BigInt square_nodes;
    BigInt best_nodes;
    std::vector<Partition> maximizers;
};
std::vector<SquareScanRow> square_scan(unsigned max_side);

}  // namespace lctr::analytics
