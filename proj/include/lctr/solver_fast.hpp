#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

#include "lctr/partition.hpp"

namespace lctr {

// A Sprague-Grundy value. Positions here have at most two moves, so values
// never exceed 2.
class SgValue {
public:
    constexpr SgValue() = default;
    constexpr explicit SgValue(unsigned v) : value_(static_cast<std::uint8_t>(v)) {}

    constexpr unsigned value() const noexcept { return value_; }

    friend constexpr auto operator<=>(SgValue, SgValue) = default;

private:
    std::uint8_t value_ = 0;
};

enum class Game { LctrNormal, DownrightNormal, LctrMisere };

enum class Outcome { P, N };

std::string_view game_name(Game game);
Game parse_game(std::string_view name);  // "lctr", "downright", "lctr-misere"

char outcome_char(Outcome o);

// Smallest value not among the present operands.
constexpr SgValue mex2(std::optional<SgValue> a, std::optional<SgValue> b) {
    unsigned v = 0;
    while ((a && a->value() == v) || (b && b->value() == v)) ++v;
    return SgValue(v);
}

constexpr SgValue mex2(SgValue a, SgValue b) {
    return mex2(std::optional<SgValue>(a), std::optional<SgValue>(b));
}

// LCTR on a single row of c boxes (c = 0 is the empty board).
SgValue sg_one_row(std::uint64_t c);

// LCTR on rows (l1, l2), l1 >= l2 >= 1. Throws InvalidShape otherwise.
SgValue sg_two_row(std::uint64_t l1, std::uint64_t l2);

// LCTR on rows (l1, l2, l3), l1 >= l2 >= l3 >= 1. Throws InvalidShape otherwise.
SgValue sg_three_row(std::uint64_t l1, std::uint64_t l2, std::uint64_t l3);

// LCTR on a partition with at most three parts; the non-increasing sequence
// is cut at its first zero entry.
SgValue sg_up_to_three_rows(std::uint64_t l1, std::uint64_t l2 = 0, std::uint64_t l3 = 0);

// Hook (c, 1^(r-1)); game must be LctrNormal or DownrightNormal.
SgValue sg_gamma(Game game, std::uint64_t r, std::uint64_t c);

// LCTR on c^r.
SgValue sg_rectangle(std::uint64_t r, std::uint64_t c);

// SG values of the boundary subgames around the top-left square of a board
// with Durfee length 2 (a20, a21, a02, a12) or 3 (the remaining six).
struct BoundaryAlphas {
    SgValue a20, a21, a02, a12;
    SgValue a30, a31, a32, a03, a13, a23;
};

// Boundary of a Durfee-2 view, read through column lengths and the first two
// parts.
BoundaryAlphas durfee2_alphas(const SubpositionView& v);
SgValue fold_durfee2(const BoundaryAlphas& a);

// Boundary of a Durfee-3 view.
BoundaryAlphas durfee3_alphas(const SubpositionView& v);
SgValue fold_durfee3(const BoundaryAlphas& a);

// Downright on a nonempty board: jump down the diagonal to the hook at
// (d-1, d-1). Throws EmptyBoard.
SgValue sg_downright(const SubpositionView& v);

// LCTR (normal play) on any board, including the empty one.
SgValue sg_lctr(const SubpositionView& v);

// Dispatch on game. LctrMisere has no SG value: throws UnsupportedQuery.
SgValue sg(Game game, const SubpositionView& v);

// P/N classification. Downright throws EmptyBoard on the empty board; misère
// LCTR puts the empty board in N and otherwise follows Downright.
Outcome outcome(Game game, const SubpositionView& v);

}  // namespace lctr
