#include "rankbench/service.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdlib>
#include <iostream>

#include "rankbench/atopsis.hpp"
#include "rankbench/hellinger.hpp"
#include "rankbench/stats.hpp"

namespace rankbench {

namespace {

// A rejected request: 400 for malformed or invalid input, 422 for
// well-formed values outside their allowed range.
struct RequestError {
  int status;
  std::string message;
  std::string field;
};

[[noreturn]] void reject(int status, std::string field, std::string message) {
  throw RequestError{status, std::move(message), std::move(field)};
}

Json parse_body(std::string_view body) {
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded()) reject(400, "", "request body is not valid JSON");
  if (!j.is_object()) reject(400, "", "request body must be a JSON object");
  return j;
}

std::vector<std::string> string_list(const Json& req, const std::string& field) {
  if (!req.contains(field) || !req[field].is_array()) {
    reject(400, field, "'" + field + "' must be an array of names");
  }
  std::vector<std::string> out;
  for (const auto& v : req[field]) {
    if (!v.is_string()) reject(400, field, "'" + field + "' must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<double> grid_values(const Json& req, const std::string& field, std::size_t rows,
                                std::size_t cols) {
  if (!req.contains(field) || !req[field].is_array()) {
    reject(400, field, "'" + field + "' must be an array of rows");
  }
  const auto& grid = req[field];
  if (grid.size() != rows) {
    reject(400, field, "'" + field + "' has " + std::to_string(grid.size()) + " rows, expected " +
                           std::to_string(rows));
  }
  std::vector<double> values;
  values.reserve(rows * cols);
  for (const auto& row : grid) {
    if (!row.is_array() || row.size() != cols) {
      reject(400, field, "every row of '" + field + "' needs " + std::to_string(cols) + " numbers");
    }
    for (const auto& v : row) {
      if (!v.is_number()) reject(400, field, "'" + field + "' must contain only numbers");
      values.push_back(v.get<double>());
    }
  }
  return values;
}

LabeledMatrix matrix_field(const Json& req, const std::string& field,
                           const std::vector<std::string>& algorithms,
                           const std::vector<std::string>& benchmarks) {
  auto values = grid_values(req, field, algorithms.size(), benchmarks.size());
  try {
    return LabeledMatrix(algorithms, benchmarks, std::move(values));
  } catch (const RankError& e) {
    const auto kind = e.kind();
    std::string where = field;
    if (kind == ErrorKind::BadValue && std::string_view(e.what()).find("duplicate") != std::string_view::npos) {
      where = std::string_view(e.what()).find("row label") != std::string_view::npos ? "algorithms"
                                                                                      : "benchmarks";
    }
    reject(400, where, e.what());
  }
}

template <typename T, typename Parse>
T enum_field(const Json& req, const std::string& field, T fallback, Parse parse) {
  if (!req.contains(field)) return fallback;
  if (!req[field].is_string()) reject(400, field, "'" + field + "' must be a string");
  try {
    return parse(req[field].get<std::string>());
  } catch (const RankError& e) {
    reject(400, field, e.what());
  }
}

double number_field(const Json& req, const std::string& field, double fallback) {
  if (!req.contains(field) || req[field].is_null()) return fallback;
  if (!req[field].is_number()) reject(400, field, "'" + field + "' must be a number");
  return req[field].get<double>();
}

enum class Method { Atopsis, Hellinger };

Method parse_method(std::string_view text) {
  if (text == "atopsis") return Method::Atopsis;
  if (text == "hellinger") return Method::Hellinger;
  throw RankError(ErrorKind::BadValue, "unknown method '" + std::string(text) + "'");
}

struct RankRequest {
  std::optional<DecisionMatrixPair> pair;
  double w_mu = 0.7;
  CriterionDirection direction = CriterionDirection::Benefit;
  NormalizationScheme scheme = kDefaultScheme;
  Method method = Method::Atopsis;
  double sigma_floor = kDefaultSigmaFloor;
  double tie_epsilon = kDefaultTieEpsilon;

  Json config() const {
    Json c;
    c["w_mu"] = w_mu;
    c["w_sigma"] = 1.0 - w_mu;
    c["direction"] = to_string(direction);
    c["normalization"] = to_string(scheme);
    c["method"] = method == Method::Atopsis ? "atopsis" : "hellinger";
    c["sigma_floor"] = sigma_floor;
    c["tie_epsilon"] = tie_epsilon;
    return c;
  }
};

RankRequest parse_rank_request(const Json& req) {
  RankRequest r;
  const auto algorithms = string_list(req, "algorithms");
  const auto benchmarks = string_list(req, "benchmarks");
  if (algorithms.empty()) reject(400, "algorithms", "at least one algorithm is required");
  if (benchmarks.empty()) reject(400, "benchmarks", "at least one benchmark is required");
  auto mu = matrix_field(req, "mu", algorithms, benchmarks);
  auto sigma = matrix_field(req, "sigma", algorithms, benchmarks);
  r.pair.emplace(std::move(mu), std::move(sigma));

  if (req.contains("weights")) {
    const auto& w = req["weights"];
    if (!w.is_object() || !w.contains("w_mu") || !w["w_mu"].is_number()) {
      reject(400, "weights", "'weights' must be an object with a numeric 'w_mu'");
    }
    r.w_mu = w["w_mu"].get<double>();
    if (!(r.w_mu >= 0.0 && r.w_mu <= 1.0)) reject(422, "weights", "w_mu must lie in [0, 1]");
  }
  r.direction = enum_field(req, "direction", r.direction, parse_direction);
  r.scheme = enum_field(req, "normalization", r.scheme, parse_scheme);
  r.method = enum_field(req, "method", r.method, parse_method);
  r.sigma_floor = number_field(req, "sigma_floor", r.sigma_floor);
  if (!(r.sigma_floor > 0.0)) reject(422, "sigma_floor", "sigma_floor must be positive");
  r.tie_epsilon = number_field(req, "tie_epsilon", r.tie_epsilon);
  if (!(r.tie_epsilon >= 0.0)) reject(422, "tie_epsilon", "tie_epsilon must be nonnegative");
  return r;
}

std::vector<WeightPair> parse_grid(const Json& req) {
  if (!req.contains("grid") || req["grid"].is_null()) return default_grid();
  const auto& g = req["grid"];
  try {
    if (g.is_array()) {
      if (g.empty()) reject(400, "grid", "grid is empty");
      std::vector<WeightPair> grid;
      for (const auto& v : g) {
        if (!v.is_number()) reject(400, "grid", "grid entries must be numbers (w_mu)");
        const double w = v.get<double>();
        if (!(w >= 0.0 && w <= 1.0)) reject(422, "grid", "grid w_mu must lie in [0, 1]");
        grid.push_back(WeightPair::from_mean(w));
      }
      for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i].mu() > grid[i - 1].mu())) {
          reject(422, "grid", "grid must be strictly increasing in w_mu");
        }
      }
      return grid;
    }
    if (g.is_object()) {
      const double start = number_field(g, "start", 0.5);
      const double stop = number_field(g, "stop", 1.0);
      const double step = number_field(g, "step", 0.1);
      return make_grid(start, stop, step);
    }
  } catch (const RankError& e) {
    reject(422, "grid", e.what());
  }
  reject(400, "grid", "grid must be an array of w_mu values or {start, stop, step}");
}

template <typename Fn>
HttpReply guarded(std::string_view body, Fn&& fn) {
  try {
    return fn(parse_body(body));
  } catch (const RequestError& e) {
    Json err;
    err["error"] = e.message;
    err["field"] = e.field.empty() ? Json(nullptr) : Json(e.field);
    return {e.status, std::move(err)};
  } catch (const RankError& e) {
    Json err;
    err["error"] = e.what();
    err["field"] = nullptr;
    return {422, std::move(err)};
  } catch (const Json::exception& e) {
    Json err;
    err["error"] = e.what();
    err["field"] = nullptr;
    return {400, std::move(err)};
  }
}

}  // namespace

HttpReply handle_rank(std::string_view body) {
  return guarded(body, [](const Json& req) {
    const auto r = parse_rank_request(req);
    Json out;
    if (r.method == Method::Atopsis) {
      AtopsisOptions opts;
      opts.tie_epsilon = r.tie_epsilon;
      const auto stage1 = atopsis_stage1(*r.pair, r.direction, r.scheme, opts);
      const auto ranking = global_stage(stage1, WeightPair::from_mean(r.w_mu), r.tie_epsilon);
      out = ranking_json(ranking);
      out["stage1"] = stage1_json(stage1);
    } else {
      out = ranking_json(
          hellinger_topsis_rank(*r.pair, r.direction, r.scheme, r.sigma_floor, r.tie_epsilon));
      out["stage1"] = nullptr;
    }
    out["config"] = r.config();
    return HttpReply{200, std::move(out)};
  });
}

HttpReply handle_sweep(std::string_view body) {
  return guarded(body, [](const Json& req) {
    const auto r = parse_rank_request(req);
    const auto grid = parse_grid(req);
    AtopsisOptions opts;
    opts.tie_epsilon = r.tie_epsilon;
    const auto report = weight_sweep(*r.pair, grid, r.direction, r.scheme, opts);
    Json out = sweep_json(report);
    auto config = r.config();
    config.erase("w_mu");
    config.erase("w_sigma");
    out["config"] = std::move(config);
    return HttpReply{200, std::move(out)};
  });
}

HttpReply handle_stats(std::string_view body) {
  return guarded(body, [](const Json& req) {
    const auto algorithms = string_list(req, "algorithms");
    const auto benchmarks = string_list(req, "benchmarks");
    if (algorithms.empty()) reject(400, "algorithms", "at least one algorithm is required");
    if (benchmarks.empty()) reject(400, "benchmarks", "at least one benchmark is required");
    const auto mu = matrix_field(req, "mu", algorithms, benchmarks);
    const auto direction =
        enum_field(req, "direction", CriterionDirection::Benefit, parse_direction);
    const double alpha = number_field(req, "alpha", 0.05);
    if (!(alpha > 0.0 && alpha < 1.0)) reject(422, "alpha", "alpha must lie in (0, 1)");
    try {
      return HttpReply{200, stats_json(pairwise_wilcoxon(mu, direction, alpha))};
    } catch (const RankError& e) {
      reject(422, "mu", e.what());
    }
  });
}

HttpReply handle_health() {
  Json out;
  out["status"] = "ok";
  out["version"] = kVersion;
  return {200, std::move(out)};
}

void register_routes(httplib::Server& server) {
  server.set_payload_max_length(kMaxBodyBytes);
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  auto bind = [](HttpReply (*handler)(std::string_view)) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      const auto reply = handler(req.body);
      res.status = reply.status;
      res.set_content(reply.body.dump(), "application/json");
    };
  };
  server.Post("/api/rank", bind(handle_rank));
  server.Post("/api/sweep", bind(handle_sweep));
  server.Post("/api/stats", bind(handle_stats));
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    const auto reply = handle_health();
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });

  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    Json err;
    err["error"] = res.status == 404 ? "not found" : httplib::status_message(res.status);
    err["field"] = nullptr;
    res.set_content(err.dump(), "application/json");
  });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        Json err;
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          err["error"] = e.what();
        } catch (...) {
          err["error"] = "internal error";
        }
        err["field"] = nullptr;
        res.status = 500;
        res.set_content(err.dump(), "application/json");
      });
}

int resolve_port(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RANKBENCH_PORT")) {
    char* end = nullptr;
    const long port = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && port > 0 && port < 65536) return static_cast<int>(port);
    std::cerr << "ignoring invalid RANKBENCH_PORT='" << env << "'\n";
  }
  return kDefaultPort;
}

bool run_service(const std::string& host, int port) {
  httplib::Server server;
  register_routes(server);
  std::cerr << "rankbench service listening on " << host << ":" << port << '\n';
  return server.listen(host, port);
}

}  // namespace rankbench
