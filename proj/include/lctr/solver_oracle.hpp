#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lctr/partition.hpp"
#include "lctr/solver_fast.hpp"

namespace lctr::oracle {

// Boards larger than this are refused with BudgetExceeded.
inline constexpr std::uint64_t kCellBudget = 100'000'000;

// SG value of every nonempty subposition lambda[i, j], stored ragged and
// row-major: row i holds parts[i] cells.
class SgGrid {
public:
    const Partition& partition() const noexcept { return partition_; }
    Game game() const noexcept { return game_; }

    // (i, j) must be a box of the diagram.
    SgValue at(std::uint64_t i, std::uint64_t j) const { return SgValue(cells_[row_start_[i] + j]); }

    // SG of lambda[i, j] for any offsets; outside the diagram this is the
    // empty LCTR board (0). Downright has no empty board: throws EmptyBoard.
    SgValue value(std::uint64_t i, std::uint64_t j) const;

    bool contains(std::uint64_t i, std::uint64_t j) const noexcept {
        return i < partition_.rows() && j < partition_[i];
    }

    // Number of cell assignments made while filling; equals the box count.
    std::uint64_t cell_updates() const noexcept { return cell_updates_; }

    // One line per row, space-separated digits.
    std::string dump() const;

private:
    friend SgGrid oracle_sg_lctr(const Partition&);
    friend SgGrid oracle_sg_downright(const Partition&);

    SgGrid(Partition partition, Game game);

    std::uint8_t& cell(std::uint64_t i, std::uint64_t j) { return cells_[row_start_[i] + j]; }

    Partition partition_;
    Game game_;
    std::vector<std::uint64_t> row_start_;
    std::vector<std::uint8_t> cells_;
    std::uint64_t cell_updates_ = 0;
};

// Fills bottom-right to top-left with value(i, j) = mex(value(i+1, j),
// value(i, j+1)), children off the diagram being the empty board (0).
SgGrid oracle_sg_lctr(const Partition& p);

// Same sweep with Downright's rules: a child exists only if it is a box.
// Throws EmptyBoard for the empty partition.
SgGrid oracle_sg_downright(const Partition& p);

// Misère LCTR P/N classification of every subposition.
class PnGrid {
public:
    const Partition& partition() const noexcept { return partition_; }
    Outcome at(std::uint64_t i, std::uint64_t j) const { return cells_[row_start_[i] + j]; }
    // Offsets outside the diagram denote the empty board.
    Outcome value(std::uint64_t i, std::uint64_t j) const;
    Outcome empty_outcome() const noexcept { return empty_; }
    std::string dump() const;

private:
    friend PnGrid oracle_misere_pn(const Partition&);

    Partition partition_;
    std::vector<std::uint64_t> row_start_;
    std::vector<Outcome> cells_;
    Outcome empty_ = Outcome::N;
};

PnGrid oracle_misere_pn(const Partition& p);

// A finite acyclic game graph with labelled positions.
struct GenericGame {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> moves;  // sorted, duplicate-free
    std::size_t start = 0;

    std::size_t size() const noexcept { return labels.size(); }
    bool is_terminal(std::size_t pos) const { return moves[pos].empty(); }
};

enum class Convention { Normal, Misere };

// Drops every original terminal together with the moves into it. Throws
// StartIsTerminal if the start position has no moves.
GenericGame truncate(const GenericGame& g);

// Backward induction over the whole graph.
std::vector<Outcome> generic_pn(const GenericGame& g, Convention convention);

// Position (i, j) is labelled "i,j"; LCTR adds a single "empty" position.
GenericGame lctr_game_graph(const Partition& p);
GenericGame downright_game_graph(const Partition& p);

// True if both graphs have the same label set and the same labelled edges.
bool same_labelled_graph(const GenericGame& a, const GenericGame& b);

}  // namespace lctr::oracle
