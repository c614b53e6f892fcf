#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rankbench/report.hpp"

namespace httplib {
class Server;
}

namespace rankbench {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kDefaultPort = 8080;
inline constexpr std::size_t kMaxBodyBytes = 1 << 20;

// Status plus JSON body. Handlers are pure functions of the request body.
struct HttpReply {
  int status = 200;
  Json body;
};

HttpReply handle_rank(std::string_view body);
HttpReply handle_sweep(std::string_view body);
HttpReply handle_stats(std::string_view body);
HttpReply handle_health();

// Installs the /api routes, CORS headers, body limit and JSON error pages.
void register_routes(httplib::Server& server);

// --port flag, then RANKBENCH_PORT, then 8080.
int resolve_port(std::optional<int> flag);

// Blocks until the server stops. Returns false if the socket cannot be bound.
bool run_service(const std::string& host, int port);

}  // namespace rankbench
