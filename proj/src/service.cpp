#include "lctr/service.hpp"

#include <httplib.h>

#include "lctr/errors.hpp"
#include "lctr/solver_oracle.hpp"

namespace lctr::service {

using nlohmann::json;

namespace {

// A request that is well-formed JSON but not what the endpoint expects.
class BadRequest : public Error {
    using Error::Error;
};

json partition_json(const Partition& p) {
    return json{{"text", to_string(p)}, {"parts", std::vector<Part>(p.parts().begin(), p.parts().end())}};
}

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view kind, const std::string& message) {
    send(res, status, json{{"error", kind}, {"message", message}});
}

// Maps library errors onto HTTP statuses.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
    try {
        fn();
    } catch (const json::exception& e) {
        send_error(res, 400, "malformed_request", e.what());
    } catch (const BadRequest& e) {
        send_error(res, 400, "malformed_request", e.what());
    } catch (const UnsupportedQuery& e) {
        send_error(res, 400, "unsupported_query", e.what());
    } catch (const BudgetExceeded& e) {
        send_error(res, 400, "budget_exceeded", e.what());
    } catch (const UnknownSession& e) {
        send_error(res, 404, "unknown_session", e.what());
    } catch (const WrongTurn& e) {
        send_error(res, 409, "wrong_turn", e.what());
    } catch (const IllegalMove& e) {
        send_error(res, 409, "illegal_move", e.what());
    } catch (const SessionFinished& e) {
        send_error(res, 409, "session_finished", e.what());
    } catch (const ParseError& e) {
        send_error(res, 422, "parse_error", e.what());
    } catch (const NotAPartition& e) {
        send_error(res, 422, "not_a_partition", e.what());
    } catch (const EmptyBoard& e) {
        send_error(res, 422, "empty_board", e.what());
    } catch (const Error& e) {
        send_error(res, 400, "invalid_request", e.what());
    }
}

json parse_body(const httplib::Request& req) {
    json body = json::parse(req.body);
    if (!body.is_object()) throw BadRequest("request body must be a JSON object");
    return body;
}

std::string required_string(const json& body, const char* key) {
    if (!body.contains(key) || !body[key].is_string()) throw BadRequest(std::string("missing string field '") + key + "'");
    return body[key].get<std::string>();
}

std::string required_param(const httplib::Request& req, const char* key) {
    if (!req.has_param(key)) throw BadRequest(std::string("missing query parameter '") + key + "'");
    return req.get_param_value(key);
}

Game parse_game_field(const std::string& name) {
    try {
        return parse_game(name);
    } catch (const UnsupportedQuery& e) {
        throw BadRequest(e.what());
    }
}

json move_list(const std::vector<engine::Move>& moves) {
    json out = json::array();
    for (const auto m : moves) out.push_back(engine::move_name(m));
    return out;
}

json eval_json(Game game, const Partition& p) {
    const SubpositionView v(p);
    json out;
    if (game != Game::LctrMisere) out["sg"] = sg(game, v).value();
    out["outcome"] = std::string(1, outcome_char(outcome(game, v)));
    if (engine::is_terminal(game, v)) {
        out["best_moves"] = json::array();
        out["winning"] = false;
    } else {
        const auto advice = engine::best_moves(game, v);
        out["best_moves"] = move_list(advice.moves);
        out["winning"] = advice.winning;
    }
    return out;
}

json grid_json(Game game, const Partition& p) {
    if (p.size() > kGridLimit) {
        throw BudgetExceeded("grid overlay is limited to " + std::to_string(kGridLimit) + " boxes");
    }
    json rows = json::array();
    std::string text;
    if (game == Game::LctrMisere) {
        const auto grid = oracle::oracle_misere_pn(p);
        text = grid.dump();
        for (std::size_t i = 0; i < p.rows(); ++i) {
            json row = json::array();
            for (std::uint64_t j = 0; j < p[i]; ++j) row.push_back(std::string(1, outcome_char(grid.at(i, j))));
            rows.push_back(std::move(row));
        }
    } else {
        const auto grid = game == Game::LctrNormal ? oracle::oracle_sg_lctr(p) : oracle::oracle_sg_downright(p);
        text = grid.dump();
        for (std::size_t i = 0; i < p.rows(); ++i) {
            json row = json::array();
            for (std::uint64_t j = 0; j < p[i]; ++j) row.push_back(grid.at(i, j).value());
            rows.push_back(std::move(row));
        }
    }
    return json{{"game", game_name(game)}, {"partition", partition_json(p)}, {"grid", text}, {"values", rows}};
}

}  // namespace

json state_json(const engine::GameSession& s) {
    const SubpositionView v = s.view();
    json history = json::array();
    for (const auto m : s.history) history.push_back(engine::move_name(m));
    return json{
        {"id", s.id},
        {"game", game_name(s.game)},
        {"base", partition_json(s.base)},
        {"offsets", {s.row_offset, s.col_offset}},
        {"partition", partition_json(materialize(v))},
        {"legal_moves", move_list(engine::legal_moves(s.game, v))},
        {"to_move", engine::side_name(s.to_move)},
        {"history", history},
        {"finished", s.finished},
        {"winner", s.winner ? json(engine::side_name(*s.winner)) : json(nullptr)},
    };
}

void install_routes(httplib::Server& server, engine::SessionStore& store) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.set_payload_max_length(std::uint64_t{64} << 20);

    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });

    server.Post("/games", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json body = parse_body(req);
            const Game game = parse_game_field(required_string(body, "game"));
            Partition p = parse_partition(required_string(body, "partition"));
            bool human_first = true;
            if (body.contains("human_first")) {
                if (!body["human_first"].is_boolean()) throw BadRequest("human_first must be a boolean");
                human_first = body["human_first"].get<bool>();
            }
            const auto s = store.create(game, std::move(p), human_first);
            send(res, 201, json{{"id", s.id}, {"state", state_json(s)}});
        });
    });

    server.Get(R"(/games/([0-9a-zA-Z]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send(res, 200, state_json(store.get(req.matches[1]))); });
    });

    server.Post(R"(/games/([0-9a-zA-Z]+)/moves)", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json body = parse_body(req);
            const std::string kind = required_string(body, "kind");
            if (kind != "top_row" && kind != "left_column") throw BadRequest("kind must be top_row or left_column");
            const auto move = engine::parse_move(kind);
            const auto s = store.update(req.matches[1], [&](const engine::GameSession& g) {
                return engine::play(g, engine::Side::Human, move);
            });
            send(res, 200, state_json(s));
        });
    });

    server.Post(R"(/games/([0-9a-zA-Z]+)/engine-move)", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const auto s = store.update(req.matches[1], [](const engine::GameSession& g) { return engine::play_engine(g); });
            send(res, 200, json{{"move", engine::move_name(s.history.back())}, {"state", state_json(s)}});
        });
    });

    server.Get("/eval", [](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const Game game = parse_game_field(required_param(req, "game"));
            const Partition p = parse_partition(required_param(req, "partition"));
            send(res, 200, eval_json(game, p));
        });
    });

    server.Get("/eval/grid", [](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const Game game = parse_game_field(required_param(req, "game"));
            const Partition p = parse_partition(required_param(req, "partition"));
            send(res, 200, grid_json(game, p));
        });
    });
}

bool serve(const std::string& host, int port, std::ostream& log) {
    engine::SessionStore store;
    httplib::Server server;
    install_routes(server, store);
    if (!server.bind_to_port(host, port)) {
        log << "cannot bind " << host << ':' << port << '\n';
        return false;
    }
    log << "listening on http://" << host << ':' << port << '\n';
    log.flush();
    return server.listen_after_bind();
}

}  // namespace lctr::service
