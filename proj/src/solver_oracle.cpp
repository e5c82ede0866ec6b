#include "lctr/solver_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "lctr/errors.hpp"

namespace lctr::oracle {

namespace {

std::vector<std::uint64_t> ragged_row_starts(const Partition& p) {
    if (p.size() > kCellBudget) {
        throw BudgetExceeded("board has " + std::to_string(p.size()) + " boxes; the oracle accepts at most " +
                             std::to_string(kCellBudget));
    }
    std::vector<std::uint64_t> starts(p.rows() + 1, 0);
    for (std::size_t i = 0; i < p.rows(); ++i) starts[i + 1] = starts[i] + p[i];
    return starts;
}

template <typename Cell, typename Format>
std::string dump_rows(const Partition& p, const std::vector<std::uint64_t>& starts,
                      const std::vector<Cell>& cells, Format fmt) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::uint64_t j = 0; j < p[i]; ++j) {
            if (j > 0) out << ' ';
            out << fmt(cells[starts[i] + j]);
        }
        out << '\n';
    }
    return out.str();
}

std::string box_label(std::uint64_t i, std::uint64_t j) {
    return std::to_string(i) + "," + std::to_string(j);
}

// Builds the box graph of a diagram; `with_empty` adds the LCTR terminal.
GenericGame box_graph(const Partition& p, bool with_empty) {
    GenericGame g;
    std::vector<std::uint64_t> starts(p.rows() + 1, 0);
    for (std::size_t i = 0; i < p.rows(); ++i) starts[i + 1] = starts[i] + p[i];
    const std::size_t boxes = starts.back();
    const std::size_t empty = boxes;

    g.labels.reserve(boxes + 1);
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::uint64_t j = 0; j < p[i]; ++j) g.labels.push_back(box_label(i, j));
    }
    if (with_empty) g.labels.emplace_back("empty");
    g.moves.resize(g.labels.size());

    auto contains = [&](std::uint64_t i, std::uint64_t j) { return i < p.rows() && j < p[i]; };
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::uint64_t j = 0; j < p[i]; ++j) {
            auto& out = g.moves[starts[i] + j];
            for (const auto& [ci, cj] : {std::pair{i + 1, j}, std::pair{i, j + 1}}) {
                if (contains(ci, cj)) {
                    out.push_back(starts[ci] + cj);
                } else if (with_empty) {
                    out.push_back(empty);
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
    }
    g.start = 0;  // box (0,0), or the lone empty position
    return g;
}

}  // namespace

SgGrid::SgGrid(Partition partition, Game game)
    : partition_(std::move(partition)), game_(game), row_start_(ragged_row_starts(partition_)) {
    cells_.assign(row_start_.back(), 0);
}

SgValue SgGrid::value(std::uint64_t i, std::uint64_t j) const {
    if (contains(i, j)) return at(i, j);
    if (game_ == Game::DownrightNormal) throw EmptyBoard("Downright is not defined on the empty board");
    return SgValue(0);
}

std::string SgGrid::dump() const {
    return dump_rows(partition_, row_start_, cells_, [](std::uint8_t v) { return static_cast<int>(v); });
}

SgGrid oracle_sg_lctr(const Partition& p) {
    SgGrid grid(p, Game::LctrNormal);
    for (std::size_t i = p.rows(); i-- > 0;) {
        const std::uint64_t below = i + 1 < p.rows() ? p[i + 1] : 0;
        for (std::uint64_t j = p[i]; j-- > 0;) {
            const SgValue down = j < below ? grid.at(i + 1, j) : SgValue(0);
            const SgValue right = j + 1 < p[i] ? grid.at(i, j + 1) : SgValue(0);
            grid.cell(i, j) = static_cast<std::uint8_t>(mex2(down, right).value());
            ++grid.cell_updates_;
        }
    }
    return grid;
}

SgGrid oracle_sg_downright(const Partition& p) {
    if (p.empty()) throw EmptyBoard("Downright is not defined on the empty board");
    SgGrid grid(p, Game::DownrightNormal);
    for (std::size_t i = p.rows(); i-- > 0;) {
        const std::uint64_t below = i + 1 < p.rows() ? p[i + 1] : 0;
        for (std::uint64_t j = p[i]; j-- > 0;) {
            std::optional<SgValue> down;
            std::optional<SgValue> right;
            if (j < below) down = grid.at(i + 1, j);
            if (j + 1 < p[i]) right = grid.at(i, j + 1);
            grid.cell(i, j) = static_cast<std::uint8_t>(mex2(down, right).value());
            ++grid.cell_updates_;
        }
    }
    return grid;
}

Outcome PnGrid::value(std::uint64_t i, std::uint64_t j) const {
    if (i < partition_.rows() && j < partition_[i]) return at(i, j);
    return empty_;
}

std::string PnGrid::dump() const {
    return dump_rows(partition_, row_start_, cells_, [](Outcome o) { return outcome_char(o); });
}

PnGrid oracle_misere_pn(const Partition& p) {
    PnGrid grid;
    grid.partition_ = p;
    grid.row_start_ = ragged_row_starts(p);
    grid.cells_.assign(grid.row_start_.back(), Outcome::N);
    grid.empty_ = Outcome::N;  // reaching the terminal loses under misère play

    for (std::size_t i = p.rows(); i-- > 0;) {
        const std::uint64_t below = i + 1 < p.rows() ? p[i + 1] : 0;
        for (std::uint64_t j = p[i]; j-- > 0;) {
            const Outcome down = j < below ? grid.at(i + 1, j) : grid.empty_;
            const Outcome right = j + 1 < p[i] ? grid.at(i, j + 1) : grid.empty_;
            const bool can_reach_p = down == Outcome::P || right == Outcome::P;
            grid.cells_[grid.row_start_[i] + j] = can_reach_p ? Outcome::N : Outcome::P;
        }
    }
    return grid;
}

GenericGame truncate(const GenericGame& g) {
    if (g.is_terminal(g.start)) throw StartIsTerminal("the start position has no moves; its truncation is empty");

    constexpr std::size_t kDropped = static_cast<std::size_t>(-1);
    std::vector<std::size_t> remap(g.size(), kDropped);
    GenericGame out;
    for (std::size_t pos = 0; pos < g.size(); ++pos) {
        if (g.is_terminal(pos)) continue;
        remap[pos] = out.labels.size();
        out.labels.push_back(g.labels[pos]);
    }
    out.moves.resize(out.labels.size());
    for (std::size_t pos = 0; pos < g.size(); ++pos) {
        if (remap[pos] == kDropped) continue;
        for (const std::size_t to : g.moves[pos]) {
            if (remap[to] != kDropped) out.moves[remap[pos]].push_back(remap[to]);
        }
    }
    out.start = remap[g.start];
    return out;
}

std::vector<Outcome> generic_pn(const GenericGame& g, Convention convention) {
    enum class Mark : std::uint8_t { Unseen, Open, Done };
    std::vector<Mark> mark(g.size(), Mark::Unseen);
    std::vector<Outcome> result(g.size(), Outcome::N);

    // Iterative post-order so that every child is classified before its parent.
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (mark[root] != Mark::Unseen) continue;
        stack.emplace_back(root, 0);
        mark[root] = Mark::Open;
        while (!stack.empty()) {
            auto& [pos, next] = stack.back();
            if (next < g.moves[pos].size()) {
                const std::size_t child = g.moves[pos][next++];
                if (mark[child] == Mark::Open) throw InvalidShape("game graph has a cycle");
                if (mark[child] == Mark::Unseen) {
                    mark[child] = Mark::Open;
                    stack.emplace_back(child, 0);
                }
                continue;
            }
            if (g.moves[pos].empty()) {
                result[pos] = convention == Convention::Normal ? Outcome::P : Outcome::N;
            } else {
                const bool reaches_p = std::any_of(g.moves[pos].begin(), g.moves[pos].end(),
                                                   [&](std::size_t c) { return result[c] == Outcome::P; });
                result[pos] = reaches_p ? Outcome::N : Outcome::P;
            }
            mark[pos] = Mark::Done;
            stack.pop_back();
        }
    }
    return result;
}

GenericGame lctr_game_graph(const Partition& p) { return box_graph(p, true); }

GenericGame downright_game_graph(const Partition& p) {
    if (p.empty()) throw EmptyBoard("Downright is not defined on the empty board");
    return box_graph(p, false);
}

bool same_labelled_graph(const GenericGame& a, const GenericGame& b) {
    auto edges = [](const GenericGame& g) {
        std::map<std::string, std::set<std::string>> e;
        for (std::size_t pos = 0; pos < g.size(); ++pos) {
            auto& out = e[g.labels[pos]];
            for (const std::size_t to : g.moves[pos]) out.insert(g.labels[to]);
        }
        return e;
    };
    return a.labels[a.start] == b.labels[b.start] && edges(a) == edges(b);
}

}  // namespace lctr::oracle
