#include <doctest.h>

#include <cmath>
#include <random>

#include "brute.hpp"
#include "lctr/errors.hpp"
#include "lctr/solver_fast.hpp"

using namespace lctr;

namespace {

unsigned lctr_of(const Partition& p) { return sg_lctr(SubpositionView(p)).value(); }
unsigned downright_of(const Partition& p) { return sg_downright(SubpositionView(p)).value(); }

std::vector<Part> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

std::uint64_t probe_budget(std::uint64_t rows) {
    return 12 * static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(rows) + 1.0))) + 64;
}

}  // namespace

TEST_CASE("mex2") {
    CHECK(mex2(SgValue(0), SgValue(1)) == SgValue(2));
    CHECK(mex2(std::nullopt, std::nullopt) == SgValue(0));
    CHECK(mex2(SgValue(2), SgValue(2)) == SgValue(0));
    CHECK(mex2(SgValue(1), std::nullopt) == SgValue(0));
    CHECK(mex2(SgValue(0), std::nullopt) == SgValue(1));
    CHECK(mex2(SgValue(1), SgValue(2)) == SgValue(0));
}

TEST_CASE("one-row closed form") {
    CHECK(sg_one_row(0) == SgValue(0));
    CHECK(sg_one_row(5) == SgValue(1));
    CHECK(sg_one_row(6) == SgValue(2));
    for (unsigned c = 1; c <= 30; ++c) CHECK(sg_one_row(c).value() == brute::sg_lctr({c}));
}

TEST_CASE("two-row closed form") {
    CHECK(sg_two_row(4, 4) == SgValue(0));
    CHECK(sg_two_row(7, 3) == SgValue(0));
    CHECK(sg_two_row(7, 4) == SgValue(1));
    CHECK_THROWS_AS(sg_two_row(3, 4), InvalidShape);
    CHECK_THROWS_AS(sg_two_row(3, 0), InvalidShape);
    for (unsigned a = 1; a <= 20; ++a)
        for (unsigned b = 1; b <= a; ++b) CHECK(sg_two_row(a, b).value() == brute::sg_lctr({a, b}));
}

TEST_CASE("three-row closed form") {
    CHECK(sg_three_row(2, 2, 2) == SgValue(2));
    CHECK(sg_three_row(5, 2, 2) == SgValue(1));
    CHECK(sg_three_row(5, 4, 1) == SgValue(1));
    CHECK(sg_three_row(6, 4, 2) == SgValue(0));
    CHECK_THROWS_AS(sg_three_row(2, 3, 1), InvalidShape);
    CHECK_THROWS_AS(sg_three_row(3, 2, 0), InvalidShape);
    for (unsigned a = 1; a <= 14; ++a)
        for (unsigned b = 1; b <= a; ++b)
            for (unsigned c = 1; c <= b; ++c) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(sg_three_row(a, b, c).value() == brute::sg_lctr({a, b, c}));
            }
}

TEST_CASE("gamma closed forms") {
    CHECK(sg_gamma(Game::LctrNormal, 3, 4) == SgValue(0));
    CHECK(sg_gamma(Game::DownrightNormal, 3, 5) == SgValue(0));
    CHECK(sg_gamma(Game::DownrightNormal, 2, 5) == SgValue(2));
    CHECK(sg_gamma(Game::DownrightNormal, 2, 2) == SgValue(1));
    CHECK_THROWS_AS(sg_gamma(Game::LctrMisere, 2, 2), UnsupportedQuery);
    for (unsigned r = 1; r <= 15; ++r)
        for (unsigned c = 1; c <= 15; ++c) {
            const Partition g = make_family({FamilyKind::Gamma, r, c});
            CHECK(sg_gamma(Game::LctrNormal, r, c).value() == brute::sg_lctr(parts_of(g)));
            CHECK(sg_gamma(Game::DownrightNormal, r, c).value() == brute::sg_downright(parts_of(g)));
        }
}

TEST_CASE("rectangle closed form") {
    CHECK(sg_rectangle(3, 5) == SgValue(0));
    CHECK(sg_rectangle(2, 5) == SgValue(2));
    CHECK(sg_rectangle(3, 4) == SgValue(1));
    for (unsigned r = 1; r <= 10; ++r)
        for (unsigned c = 1; c <= 10; ++c) {
            const Partition rect = make_family({FamilyKind::Rectangle, r, c});
            CHECK(sg_rectangle(r, c).value() == brute::sg_lctr(parts_of(rect)));
            CHECK(sg_rectangle(r, c) == sg_lctr(SubpositionView(rect)));
        }
}

TEST_CASE("sg_downright examples") {
    CHECK(downright_of(make_family({FamilyKind::Staircase, 6})) == 1);
    CHECK(downright_of(Partition({1})) == 0);
    CHECK(downright_of(Partition({8, 7, 6, 5, 5, 2, 1})) == 0);
    CHECK(downright_of(Partition({12, 11, 9, 7, 6, 5, 3, 1})) == 1);
    CHECK_THROWS_AS(downright_of(Partition{}), EmptyBoard);
    const Partition p({3, 1});
    CHECK_THROWS_AS(sg_downright(SubpositionView(p, 2, 0)), EmptyBoard);
}

TEST_CASE("sg_lctr examples") {
    CHECK(lctr_of(Partition{}) == 0);
    CHECK(lctr_of(make_family({FamilyKind::Staircase, 6})) == 0);
    CHECK(lctr_of(Partition({8, 7, 6, 5, 5, 2, 1})) == 0);
    CHECK(lctr_of(Partition({12, 11, 9, 7, 6, 5, 3, 1})) == 0);
    CHECK(lctr_of(Partition({6, 5, 3, 3, 2})) == 2);
    CHECK(lctr_of(Partition({5, 3, 2, 2, 1})) == 0);
}

TEST_CASE("Durfee-2 boundary values match the brute-force subgames") {
    for (unsigned n = 4; n <= 14; ++n) {
        for (const auto& parts : brute::partitions(n)) {
            if (brute::durfee(parts) != 2) continue;
            const Partition p(parts);
            const BoundaryAlphas a = durfee2_alphas(SubpositionView(p));
            CHECK(a.a20.value() == brute::sg_lctr(brute::sub(parts, 2, 0)));
            CHECK(a.a21.value() == brute::sg_lctr(brute::sub(parts, 2, 1)));
            CHECK(a.a02.value() == brute::sg_lctr(brute::sub(parts, 0, 2)));
            CHECK(a.a12.value() == brute::sg_lctr(brute::sub(parts, 1, 2)));
        }
    }
}

TEST_CASE("Durfee-3 boundary values match the brute-force subgames") {
    for (unsigned n = 9; n <= 16; ++n) {
        for (const auto& parts : brute::partitions(n)) {
            if (brute::durfee(parts) != 3) continue;
            const Partition p(parts);
            const BoundaryAlphas a = durfee3_alphas(SubpositionView(p));
            CHECK(a.a30.value() == brute::sg_lctr(brute::sub(parts, 3, 0)));
            CHECK(a.a31.value() == brute::sg_lctr(brute::sub(parts, 3, 1)));
            CHECK(a.a32.value() == brute::sg_lctr(brute::sub(parts, 3, 2)));
            CHECK(a.a03.value() == brute::sg_lctr(brute::sub(parts, 0, 3)));
            CHECK(a.a13.value() == brute::sg_lctr(brute::sub(parts, 1, 3)));
            CHECK(a.a23.value() == brute::sg_lctr(brute::sub(parts, 2, 3)));
        }
    }
}

TEST_CASE("fast solvers agree with the raw recursion on every subposition, n <= 14") {
    for (unsigned n = 0; n <= 14; ++n) {
        for (const auto& parts : brute::partitions(n)) {
            const Partition p(parts);
            for (std::uint64_t i = 0; i <= p.rows(); ++i) {
                for (std::uint64_t j = 0; j <= p.first(); ++j) {
                    const auto sub = brute::sub(parts, i, j);
                    const SubpositionView v(p, i, j);
                    CHECK(sg_lctr(v).value() == brute::sg_lctr(sub));
                    std::map<brute::Parts, bool> memo;
                    const bool wins = brute::misere_lctr_wins(sub, memo);
                    CHECK(outcome(Game::LctrMisere, v) == (wins ? Outcome::N : Outcome::P));
                    if (!sub.empty()) CHECK(sg_downright(v).value() == brute::sg_downright(sub));
                }
            }
        }
    }
}

TEST_CASE("outcome examples") {
    const Partition empty;
    CHECK(outcome(Game::LctrMisere, SubpositionView(empty)) == Outcome::N);
    const Partition one({1});
    CHECK(outcome(Game::LctrMisere, SubpositionView(one)) == Outcome::P);
    const Partition s5 = make_family({FamilyKind::Staircase, 5});
    CHECK(outcome(Game::LctrNormal, SubpositionView(s5)) == Outcome::N);
    CHECK(outcome(Game::LctrNormal, SubpositionView(empty)) == Outcome::P);
    CHECK_THROWS_AS(outcome(Game::DownrightNormal, SubpositionView(empty)), EmptyBoard);
    CHECK_THROWS_AS(sg(Game::LctrMisere, SubpositionView(one)), UnsupportedQuery);
}

TEST_CASE("staircase closed forms up to r = 60") {
    for (unsigned r = 1; r <= 60; ++r) {
        const Partition s = make_family({FamilyKind::Staircase, r});
        CHECK(lctr_of(s) == r % 2);
        CHECK(downright_of(s) == (r - 1) % 2);
    }
}

TEST_CASE("conjugation invariance on large random boards") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t rows = 1 + rng() % 3000;
        // Mix wide random boards with thin ones whose Durfee length is small.
        const std::uint64_t width = trial % 3 == 0 ? 1 + rng() % 4 : 1 + rng() % 3000;
        auto parts = brute::random_parts(rng, rows, width);
        if (trial % 3 == 0) parts.front() += rng() % 1000;
        const Partition p(parts);
        const Partition c = conjugate(p);
        CHECK(lctr_of(p) == lctr_of(c));
        CHECK(downright_of(p) == downright_of(c));
        CHECK(lctr_of(p) <= 2);
    }
}

TEST_CASE("probe budget on staircases and random boards") {
    for (unsigned e = 1; e <= 16; ++e) {
        const std::uint64_t r = std::uint64_t{1} << e;
        const Partition s = make_family({FamilyKind::Staircase, r});
        ProbeCounter lc;
        sg_lctr(SubpositionView(s, 0, 0, &lc));
        ProbeCounter dc;
        sg_downright(SubpositionView(s, 0, 0, &dc));
        CHECK(lc.probes <= probe_budget(r));
        CHECK(dc.probes <= probe_budget(r));
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t rows = 1 + rng() % 10000;
        const Partition p(brute::random_parts(rng, rows, 1 + rng() % 20000));
        ProbeCounter lc;
        sg_lctr(SubpositionView(p, 0, 0, &lc));
        CHECK(lc.probes <= probe_budget(rows));
    }
}
