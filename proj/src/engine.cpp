#include "lctr/engine.hpp"

#include <algorithm>
#include <random>

#include "lctr/errors.hpp"

namespace lctr::engine {

std::string_view move_name(Move m) { return m == Move::TopRow ? "top_row" : "left_column"; }

Move parse_move(std::string_view name) {
    if (name == "top_row") return Move::TopRow;
    if (name == "left_column") return Move::LeftColumn;
    throw IllegalMove("unknown move kind '" + std::string(name) + "'");
}

std::string_view side_name(Side s) { return s == Side::Human ? "human" : "engine"; }

std::vector<Move> legal_moves(Game game, const SubpositionView& v) {
    if (game == Game::DownrightNormal) {
        std::vector<Move> out;
        if (part_at(v, 1) > 0) out.push_back(Move::TopRow);
        if (part_at(v, 0) >= 2) out.push_back(Move::LeftColumn);
        return out;
    }
    if (is_empty(v)) return {};
    return {Move::TopRow, Move::LeftColumn};
}

bool is_terminal(Game game, const SubpositionView& v) { return legal_moves(game, v).empty(); }

SubpositionView after(const SubpositionView& v, Move m) {
    return m == Move::TopRow ? subposition(v, 1, 0) : subposition(v, 0, 1);
}

MoveAdvice best_moves(Game game, const SubpositionView& v) {
    const auto legal = legal_moves(game, v);
    if (legal.empty()) throw TerminalPosition("no moves from a terminal position");
    MoveAdvice advice;
    for (const Move m : legal) {
        if (outcome(game, after(v, m)) == Outcome::P) advice.moves.push_back(m);
    }
    advice.winning = !advice.moves.empty();
    if (!advice.winning) advice.moves = legal;
    return advice;
}

Move choose_move(Game game, const SubpositionView& v) {
    const MoveAdvice advice = best_moves(game, v);
    if (advice.winning) return advice.moves.front();
    // Losing anyway: leave the longest game behind.
    Move pick = advice.moves.front();
    std::uint64_t best = 0;
    for (const Move m : advice.moves) {
        const SubpositionView child = after(v, m);
        const std::uint64_t height = column_length(child, 0) + part_at(child, 0);
        if (height > best) {
            best = height;
            pick = m;
        }
    }
    return pick;
}

std::string random_session_id() {
    static thread_local std::random_device device;
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    for (int word = 0; word < 4; ++word) {
        std::uint32_t bits = device();
        for (int k = 0; k < 8; ++k, bits >>= 4) id.push_back(kHex[bits & 0xF]);
    }
    return id;
}

namespace {

Side other(Side s) { return s == Side::Human ? Side::Engine : Side::Human; }

// Marks s finished if its position is terminal. `to_move` must already be
// the side facing the terminal position.
void settle(GameSession& s) {
    if (!is_terminal(s.game, s.view())) return;
    s.finished = true;
    s.winner = s.game == Game::LctrMisere ? s.to_move : other(s.to_move);
}

}  // namespace

GameSession new_session(Game game, Partition base, bool human_first, std::string id) {
    if (game == Game::DownrightNormal && base.empty()) {
        throw EmptyBoard("Downright is not defined on the empty board");
    }
    GameSession s;
    s.id = std::move(id);
    s.game = game;
    s.base = std::move(base);
    s.to_move = human_first ? Side::Human : Side::Engine;
    settle(s);
    return s;
}

GameSession apply_move(GameSession s, Move m) {
    if (s.finished) throw SessionFinished("the game is over");
    const auto legal = legal_moves(s.game, s.view());
    if (std::find(legal.begin(), legal.end(), m) == legal.end()) {
        throw IllegalMove(std::string(move_name(m)) + " is not legal here");
    }
    const SubpositionView next = after(s.view(), m);
    s.row_offset = next.row_offset();
    s.col_offset = next.col_offset();
    s.history.push_back(m);
    s.to_move = other(s.to_move);
    settle(s);
    return s;
}

GameSession play(GameSession s, Side side, Move m) {
    if (s.finished) throw SessionFinished("the game is over");
    if (s.to_move != side) throw WrongTurn(std::string("it is the ") + std::string(side_name(s.to_move)) + "'s turn");
    return apply_move(std::move(s), m);
}

GameSession play_engine(GameSession s) {
    if (s.finished) throw SessionFinished("the game is over");
    if (s.to_move != Side::Engine) throw WrongTurn("it is the human's turn");
    const Move m = choose_move(s.game, s.view());
    return apply_move(std::move(s), m);
}

std::pair<std::uint64_t, std::uint64_t> replay_offsets(const std::vector<Move>& history) {
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    for (const Move m : history) (m == Move::TopRow ? i : j) += 1;
    return {i, j};
}

GameSession SessionStore::create(Game game, Partition base, bool human_first) {
    auto entry = std::make_shared<Entry>();
    entry->session = new_session(game, std::move(base), human_first);
    entry->last_used = Clock::now();
    evict_idle(entry->last_used);
    std::lock_guard lock(map_mutex_);
    sessions_.emplace(entry->session.id, entry);
    return entry->session;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
    std::lock_guard lock(map_mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw UnknownSession("no session '" + id + "'");
    return it->second;
}

GameSession SessionStore::get(const std::string& id) {
    const auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    entry->last_used = Clock::now();
    return entry->session;
}

GameSession SessionStore::update(const std::string& id, const std::function<GameSession(const GameSession&)>& fn) {
    const auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    entry->session = fn(entry->session);
    entry->last_used = Clock::now();
    return entry->session;
}

std::size_t SessionStore::evict_idle(Clock::time_point now) {
    std::lock_guard lock(map_mutex_);
    std::size_t evicted = 0;
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        bool idle = false;
        {
            std::lock_guard entry_lock(it->second->mutex);
            idle = now - it->second->last_used > idle_limit_;
        }
        if (idle) {
            it = sessions_.erase(it);
            ++evicted;
        } else {
            ++it;
        }
    }
    return evicted;
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(map_mutex_);
    return sessions_.size();
}

}  // namespace lctr::engine
