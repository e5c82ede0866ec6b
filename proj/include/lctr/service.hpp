#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <json.hpp>

#include "lctr/engine.hpp"

namespace httplib {
class Server;
}

namespace lctr::service {

// Largest board served by /eval/grid.
inline constexpr std::uint64_t kGridLimit = 10'000;

// Session state as sent to clients (snake_case keys).
nlohmann::json state_json(const engine::GameSession& s);

void install_routes(httplib::Server& server, engine::SessionStore& store);

// Blocks until the server stops. Returns false if the address cannot be bound.
bool serve(const std::string& host, int port, std::ostream& log);

}  // namespace lctr::service
