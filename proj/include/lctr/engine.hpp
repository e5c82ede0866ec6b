#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lctr/partition.hpp"
#include "lctr/solver_fast.hpp"

namespace lctr::engine {

enum class Move { TopRow, LeftColumn };

std::string_view move_name(Move m);  // "top_row", "left_column"
Move parse_move(std::string_view name);

bool is_terminal(Game game, const SubpositionView& v);

// TopRow first, then LeftColumn. Empty iff the position is terminal.
std::vector<Move> legal_moves(Game game, const SubpositionView& v);

SubpositionView after(const SubpositionView& v, Move m);

struct MoveAdvice {
    std::vector<Move> moves;
    bool winning = false;  // false: every move loses and all legal moves are listed
};

// Moves to positions that are P for the opponent. Throws TerminalPosition.
MoveAdvice best_moves(Game game, const SubpositionView& v);

// Deterministic pick: the first winning move, or from a P-position the move
// leaving the opponent the most rows plus columns.
Move choose_move(Game game, const SubpositionView& v);

enum class Side { Human, Engine };
std::string_view side_name(Side s);

struct GameSession {
    std::string id;
    Game game = Game::LctrNormal;
    Partition base;
    std::uint64_t row_offset = 0;
    std::uint64_t col_offset = 0;
    Side to_move = Side::Human;
    std::vector<Move> history;
    bool finished = false;
    std::optional<Side> winner;

    SubpositionView view() const { return SubpositionView(base, row_offset, col_offset); }
};

// 32 lowercase hex digits from the system entropy source.
std::string random_session_id();

// A finished start position goes to whoever did not have to move (normal)
// or to the side to move (misère).
GameSession new_session(Game game, Partition base, bool human_first, std::string id = random_session_id());

// Turn-agnostic: plays m for whoever is to move. Throws SessionFinished or
// IllegalMove.
GameSession apply_move(GameSession s, Move m);

// Same as apply_move but checks that `side` is to move (WrongTurn).
GameSession play(GameSession s, Side side, Move m);
GameSession play_engine(GameSession s);

// Offsets obtained by replaying the history from the origin.
std::pair<std::uint64_t, std::uint64_t> replay_offsets(const std::vector<Move>& history);

// In-memory sessions. Each session has its own mutex; the map lock is held
// only to look entries up.
class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionStore(Clock::duration idle_limit = std::chrono::hours(24)) : idle_limit_(idle_limit) {}

    GameSession create(Game game, Partition base, bool human_first);
    GameSession get(const std::string& id);
    // Runs fn on the session under its lock and stores the result.
    GameSession update(const std::string& id, const std::function<GameSession(const GameSession&)>& fn);
    std::size_t evict_idle(Clock::time_point now = Clock::now());
    std::size_t size() const;

private:
    struct Entry {
        std::mutex mutex;
        GameSession session;
        Clock::time_point last_used;
    };

    std::shared_ptr<Entry> find(const std::string& id);

    Clock::duration idle_limit_;
    mutable std::mutex map_mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

}  // namespace lctr::engine
