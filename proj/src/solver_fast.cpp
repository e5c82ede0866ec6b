#include "lctr/solver_fast.hpp"

#include <string>

#include "lctr/errors.hpp"

namespace lctr {

namespace {

bool odd(std::uint64_t x) { return (x & 1U) != 0; }

std::uint64_t minus(std::uint64_t x, std::uint64_t k) { return x > k ? x - k : 0; }

std::string shape_text(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
    std::string s = "(" + std::to_string(a) + "," + std::to_string(b);
    if (c != 0) s += "," + std::to_string(c);
    return s + ")";
}

}  // namespace

std::string_view game_name(Game game) {
    switch (game) {
        case Game::LctrNormal: return "lctr";
        case Game::DownrightNormal: return "downright";
        case Game::LctrMisere: return "lctr-misere";
    }
    return "?";
}

Game parse_game(std::string_view name) {
    if (name == "lctr") return Game::LctrNormal;
    if (name == "downright") return Game::DownrightNormal;
    if (name == "lctr-misere") return Game::LctrMisere;
    throw UnsupportedQuery("unknown game '" + std::string(name) + "'");
}

char outcome_char(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }

SgValue sg_one_row(std::uint64_t c) {
    if (c == 0) return SgValue(0);
    return SgValue(odd(c) ? 1 : 2);
}

SgValue sg_two_row(std::uint64_t l1, std::uint64_t l2) {
    if (l2 == 0 || l1 < l2) throw InvalidShape("two-row game needs l1 >= l2 >= 1, got " + shape_text(l1, l2));
    if (l1 == l2) return SgValue(odd(l1) ? 2 : 0);
    return SgValue(odd(l2) ? 0 : 1);
}

SgValue sg_three_row(std::uint64_t l1, std::uint64_t l2, std::uint64_t l3) {
    if (l3 == 0 || l2 < l3 || l1 < l2) {
        throw InvalidShape("three-row game needs l1 >= l2 >= l3 >= 1, got " + shape_text(l1, l2, l3));
    }
    if (l1 == l2 && l2 == l3) {
        if (l3 == 1) return SgValue(1);
        if (l3 == 2) return SgValue(2);
        return SgValue(odd(l3) ? 0 : 1);
    }
    if (l1 > l2 && l2 == l3) return SgValue(odd(l3) ? 0 : 1);
    if (l1 == l2) return SgValue(odd(l3) ? 1 : 0);  // l2 > l3
    if (l3 == 1) return SgValue(odd(l2) ? 2 : 1);   // l1 > l2 > 1
    return SgValue(odd(l3) ? 1 : 0);                // l1 > l2 > l3 > 1
}

SgValue sg_up_to_three_rows(std::uint64_t l1, std::uint64_t l2, std::uint64_t l3) {
    if (l1 == 0) return SgValue(0);
    if (l2 == 0) return sg_one_row(l1);
    if (l3 == 0) return sg_two_row(l1, l2);
    return sg_three_row(l1, l2, l3);
}

SgValue sg_gamma(Game game, std::uint64_t r, std::uint64_t c) {
    if (r == 0 || c == 0) throw InvalidShape("gamma needs r, c >= 1");
    switch (game) {
        case Game::LctrNormal:
            if (c > 1 && r > 1) return SgValue(0);
            if ((r == 1 && odd(c)) || (c == 1 && odd(r))) return SgValue(1);
            return SgValue(2);
        case Game::DownrightNormal:
            if (odd(c) && odd(r)) return SgValue(0);
            if (odd(c) != odd(r) && c > 1 && r > 1) return SgValue(2);
            return SgValue(1);
        case Game::LctrMisere:
            break;
    }
    throw UnsupportedQuery("misère LCTR has no SG value");
}

SgValue sg_rectangle(std::uint64_t r, std::uint64_t c) {
    if (r == 0 || c == 0) throw InvalidShape("rectangle needs r, c >= 1");
    const bool even_sum = odd(r) == odd(c);
    if (c > 1 && r > 1 && even_sum) return SgValue(0);
    if ((c <= 2 || r <= 2) && !even_sum) return SgValue(2);
    return SgValue(1);
}

BoundaryAlphas durfee2_alphas(const SubpositionView& v) {
    const std::uint64_t rows = column_length(v, 0);
    const std::uint64_t second_col = column_length(v, 1);
    const Part l1 = part_at(v, 0);
    const Part l2 = part_at(v, 1);

    // The row remainders below the square are read through their conjugates,
    // whose parts are the column lengths minus 2.
    BoundaryAlphas a{};
    a.a02 = sg_up_to_three_rows(minus(l1, 2), minus(l2, 2));
    a.a12 = sg_up_to_three_rows(minus(l2, 2));
    a.a20 = sg_up_to_three_rows(minus(rows, 2), minus(second_col, 2));
    a.a21 = sg_up_to_three_rows(minus(second_col, 2));
    return a;
}

SgValue fold_durfee2(const BoundaryAlphas& a) {
    const SgValue g11 = mex2(a.a21, a.a12);
    const SgValue g01 = mex2(a.a02, g11);
    const SgValue g10 = mex2(a.a20, g11);
    return mex2(g01, g10);
}

BoundaryAlphas durfee3_alphas(const SubpositionView& v) {
    const std::uint64_t rows = column_length(v, 0);
    const std::uint64_t col1 = column_length(v, 1);
    const std::uint64_t col2 = column_length(v, 2);
    const Part l1 = part_at(v, 0);
    const Part l2 = part_at(v, 1);
    const Part l3 = part_at(v, 2);

    BoundaryAlphas a{};
    a.a03 = sg_up_to_three_rows(minus(l1, 3), minus(l2, 3), minus(l3, 3));
    a.a13 = sg_up_to_three_rows(minus(l2, 3), minus(l3, 3));
    a.a23 = sg_up_to_three_rows(minus(l3, 3));
    a.a30 = sg_up_to_three_rows(minus(rows, 3), minus(col1, 3), minus(col2, 3));
    a.a31 = sg_up_to_three_rows(minus(col1, 3), minus(col2, 3));
    a.a32 = sg_up_to_three_rows(minus(col2, 3));
    return a;
}

SgValue fold_durfee3(const BoundaryAlphas& a) {
    const SgValue g22 = mex2(a.a23, a.a32);
    const SgValue g21 = mex2(g22, a.a31);
    const SgValue g20 = mex2(g21, a.a30);
    const SgValue g12 = mex2(a.a13, g22);
    const SgValue g11 = mex2(g12, g21);
    const SgValue g10 = mex2(g11, g20);
    const SgValue g02 = mex2(a.a03, g12);
    const SgValue g01 = mex2(g02, g11);
    return mex2(g01, g10);
}

SgValue sg_downright(const SubpositionView& v) {
    const std::uint64_t d = durfee(v);
    if (d == 0) throw EmptyBoard("Downright is not defined on the empty board");
    const SubpositionView corner = subposition(v, d - 1, d - 1);
    return sg_gamma(Game::DownrightNormal, column_length(corner, 0), part_at(corner, 0));
}

SgValue sg_lctr(const SubpositionView& v) {
    const std::uint64_t d = durfee(v);
    switch (d) {
        case 0:
            return SgValue(0);
        case 1:
            return sg_gamma(Game::LctrNormal, column_length(v, 0), part_at(v, 0));
        case 2:
            return fold_durfee2(durfee2_alphas(v));
        default:
            return fold_durfee3(durfee3_alphas(subposition(v, d - 3, d - 3)));
    }
}

SgValue sg(Game game, const SubpositionView& v) {
    switch (game) {
        case Game::LctrNormal: return sg_lctr(v);
        case Game::DownrightNormal: return sg_downright(v);
        case Game::LctrMisere: break;
    }
    throw UnsupportedQuery("misère LCTR has no SG value; ask for the outcome instead");
}

Outcome outcome(Game game, const SubpositionView& v) {
    switch (game) {
        case Game::LctrNormal:
            return sg_lctr(v) == SgValue(0) ? Outcome::P : Outcome::N;
        case Game::DownrightNormal:
            return sg_downright(v) == SgValue(0) ? Outcome::P : Outcome::N;
        case Game::LctrMisere:
            if (is_empty(v)) return Outcome::N;
            return sg_downright(v) == SgValue(0) ? Outcome::P : Outcome::N;
    }
    return Outcome::N;
}

}  // namespace lctr
