#include "lctr/analytics.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "lctr/errors.hpp"

namespace lctr::analytics {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint32_t>& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
};

void require_normal_game(Game game) {
    if (game == Game::LctrMisere) throw UnsupportedQuery("tree census is defined for lctr and downright only");
}

// Number of distinct nonempty subpartitions. lambda[i, j] is the row
// parts[i] - j stacked on lambda[i+1, j], so ids are interned bottom-up.
std::uint64_t distinct_subpartitions(const Partition& p) {
    std::unordered_map<std::pair<std::uint64_t, std::uint32_t>, std::uint32_t, PairHash> ids;
    std::vector<std::uint32_t> below;  // ids of row i+1; 0 is the empty board
    std::vector<std::uint32_t> row;
    for (std::size_t i = p.rows(); i-- > 0;) {
        row.assign(p[i], 0);
        for (std::uint64_t j = 0; j < p[i]; ++j) {
            const std::uint32_t rest = j < below.size() ? below[j] : 0;
            const auto key = std::pair{p[i] - j, rest};
            auto it = ids.find(key);
            if (it == ids.end()) it = ids.emplace(key, static_cast<std::uint32_t>(ids.size() + 1)).first;
            row[j] = it->second;
        }
        std::swap(below, row);
    }
    return ids.size();
}

}  // namespace

TreeCensus census(Game game, const Partition& p) {
    require_normal_game(game);
    if (p.size() > kCensusBudget) {
        throw BudgetExceeded("census accepts at most " + std::to_string(kCensusBudget) + " boxes");
    }
    const bool lctr = game == Game::LctrNormal;
    if (p.empty()) {
        if (!lctr) throw EmptyBoard("Downright is not defined on the empty board");
        return TreeCensus{1, 1, 1};
    }

    BigInt boxes = 0;    // tree nodes at boxes of the diagram
    BigInt corners = 0;  // Downright leaves
    BigInt to_empty = 0; // LCTR moves into the empty board, weighted by paths

    std::vector<BigInt> above;
    std::vector<BigInt> row;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        const std::uint64_t width = p[i];
        const std::uint64_t below_width = i + 1 < p.rows() ? p[i + 1] : 0;
        row.assign(width, BigInt(0));
        for (std::uint64_t j = 0; j < width; ++j) {
            BigInt& paths = row[j];
            if (i == 0 && j == 0) paths = 1;
            if (i > 0) paths += above[j];
            if (j > 0) paths += row[j - 1];

            boxes += paths;
            const bool has_right = j + 1 < width;
            const bool has_down = j < below_width;
            if (!has_right && !has_down) corners += paths;
            to_empty += paths * (static_cast<unsigned>(!has_right) + static_cast<unsigned>(!has_down));
        }
        std::swap(above, row);
    }

    const std::uint64_t states = distinct_subpartitions(p);
    if (lctr) return TreeCensus{boxes + to_empty, to_empty, states + 1};
    return TreeCensus{boxes, corners, states};
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;
    }
    return result;
}

TreeCensus census_closed_form(Game game, const FamilySpec& spec) {
    require_normal_game(game);
    const std::uint64_t r = spec.r;
    const std::uint64_t c = spec.c;
    if (r == 0 || (spec.kind != FamilyKind::Staircase && c == 0)) {
        throw InvalidFamilyParam("family parameters must be at least 1");
    }
    const bool lctr = game == Game::LctrNormal;
    switch (spec.kind) {
        case FamilyKind::Gamma: {
            const BigInt nodes = lctr ? 2 * r + 2 * c - 1 : r + c - 1;
            if (std::min(r, c) == 1) {
                return lctr ? TreeCensus{nodes, r + c, r + c} : TreeCensus{nodes, 1, r + c - 1};
            }
            return lctr ? TreeCensus{nodes, r + c, r + c - 1} : TreeCensus{nodes, 2, r + c - 2};
        }
        case FamilyKind::Staircase: {
            const BigInt pow_r = BigInt(1) << r;
            if (lctr) return TreeCensus{2 * pow_r - 1, pow_r, r + 1};
            return TreeCensus{pow_r - 1, pow_r / 2, r};
        }
        case FamilyKind::Rectangle: {
            const BigInt paths = binomial(r + c, r);
            if (lctr) return TreeCensus{2 * paths - 1, paths, r * c + 1};
            return TreeCensus{paths - 1, binomial(r + c - 2, r - 1), r * c};
        }
    }
    throw InvalidFamilyParam("unknown family");
}

StateBounds state_space_bounds(Game game, std::uint64_t n) {
    require_normal_game(game);
    if (n == 0) throw InvalidShape("state-space bounds need n >= 1");
    // Largest r with r(r+1)/2 <= n.
    std::uint64_t r = 0;
    while ((r + 1) * (r + 2) / 2 <= n) ++r;
    if (game == Game::LctrNormal) return {r + 1, n + 1};
    return {r, n};
}

std::string csv_header() { return "family,game,r,c,nodes,leaves,states"; }

std::string csv_row(std::string_view family, Game game, std::uint64_t r, std::uint64_t c, const TreeCensus& t) {
    std::ostringstream out;
    out << family << ',' << game_name(game) << ',' << r << ',' << c << ',' << t.nodes << ',' << t.leaves << ','
        << t.states;
    return out.str();
}

std::vector<SquareScanRow> square_scan(unsigned max_side) {
    std::vector<SquareScanRow> rows;
    for (unsigned side = 1; side <= max_side; ++side) {
        const auto all = partitions_of(side * side);
        for (const Game game : {Game::LctrNormal, Game::DownrightNormal}) {
            SquareScanRow out{side, game, census(game, make_family({FamilyKind::Rectangle, side, side})).nodes, 0, {}};
            for (const auto& p : all) {
                const BigInt nodes = census(game, p).nodes;
                if (nodes > out.best_nodes) {
                    out.best_nodes = nodes;
                    out.maximizers.clear();
                }
                if (nodes == out.best_nodes) out.maximizers.push_back(p);
            }
            rows.push_back(std::move(out));
        }
    }
    return rows;
}

}  // namespace lctr::analytics
