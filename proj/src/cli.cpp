#include "rankbench/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "rankbench/atopsis.hpp"
#include "rankbench/hellinger.hpp"
#include "rankbench/report.hpp"
#include "rankbench/service.hpp"
#include "rankbench/stats.hpp"

namespace rankbench {

namespace {

struct Options {
  std::string mu;
  std::string sigma;
  double w_mu = 0.7;
  std::string direction = "benefit";
  std::string norm = "none";
  std::string method = "atopsis";
  double sigma_floor = kDefaultSigmaFloor;
  double tie_eps = kDefaultTieEpsilon;
  double alpha = 0.05;
  std::string format = "table";
  std::vector<std::string> exclude;
  std::string out;
  double start = 0.5;
  double stop = 1.0;
  double step = 0.1;
  std::optional<int> port;
  std::string host = "0.0.0.0";
};

void add_inputs(CLI::App* cmd, Options& o, bool sigma_required) {
  cmd->add_option("--mu", o.mu, "CSV of mean ratings")->required();
  auto* sigma = cmd->add_option("--sigma", o.sigma, "CSV of standard deviations");
  if (sigma_required) sigma->required();
  cmd->add_option("--direction", o.direction, "benefit or cost")
      ->check(CLI::IsMember({"benefit", "cost"}))
      ->capture_default_str();
  cmd->add_option("--exclude", o.exclude, "algorithm to drop (repeatable)");
  cmd->add_option("--format", o.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "write the result here instead of stdout");
}

void add_ranking(CLI::App* cmd, Options& o) {
  cmd->add_option("--norm", o.norm, "vector, max or none")
      ->check(CLI::IsMember({"vector", "max", "none"}))
      ->capture_default_str();
  cmd->add_option("--tie-eps", o.tie_eps, "closeness gap treated as a tie")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_hellinger(CLI::App* cmd, Options& o) {
  cmd->add_option("--sigma-floor", o.sigma_floor, "replacement for zero standard deviations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

DecisionMatrixPair load_pair(const Options& o) {
  auto pair = load_matrix_pair_files(o.mu, o.sigma);
  if (o.exclude.empty()) return pair;
  return pair.without(o.exclude);
}

LabeledMatrix load_mu(const Options& o) {
  if (!o.sigma.empty()) return load_pair(o).mu();
  LabeledMatrix mu = load_matrix_file(o.mu);
  if (o.exclude.empty()) return mu;
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < mu.rows(); ++r) {
    if (std::find(o.exclude.begin(), o.exclude.end(), mu.row_labels()[r]) == o.exclude.end()) {
      keep.push_back(r);
    }
  }
  for (const auto& name : o.exclude) {
    if (mu.find_row(name) == mu.rows()) {
      throw RankError(ErrorKind::BadValue, "cannot exclude unknown algorithm '" + name + "'");
    }
  }
  if (keep.empty()) throw RankError(ErrorKind::EmptyMatrix, "every algorithm was excluded");
  return mu.select_rows(keep);
}

Json base_config(const Options& o) {
  Json c;
  c["mu"] = o.mu;
  c["sigma"] = o.sigma.empty() ? Json(nullptr) : Json(o.sigma);
  c["direction"] = o.direction;
  c["exclude"] = o.exclude;
  return c;
}

Json ranking_config(const Options& o) {
  Json c = base_config(o);
  c["normalization"] = o.norm;
  c["tie_epsilon"] = o.tie_eps;
  return c;
}

AtopsisOptions atopsis_options(const Options& o) {
  AtopsisOptions opts;
  opts.tie_epsilon = o.tie_eps;
  return opts;
}

std::string cmd_rank(const Options& o) {
  const auto pair = load_pair(o);
  const auto dir = parse_direction(o.direction);
  const auto scheme = parse_scheme(o.norm);
  const auto format = parse_format(o.format);
  Json config = ranking_config(o);
  config["method"] = o.method;

  if (o.method == "hellinger") {
    const auto ranking = hellinger_topsis_rank(pair, dir, scheme, o.sigma_floor, o.tie_eps);
    if (format != OutputFormat::Json) return render_ranking(ranking, format);
    config["sigma_floor"] = o.sigma_floor;
    Json j = ranking_json(ranking);
    j["stage1"] = nullptr;
    j["config"] = std::move(config);
    return j.dump(2) + "\n";
  }
  const auto stage1 = atopsis_stage1(pair, dir, scheme, atopsis_options(o));
  const auto weights = WeightPair::from_mean(o.w_mu);
  const auto ranking = global_stage(stage1, weights, o.tie_eps);
  if (format != OutputFormat::Json) return render_ranking(ranking, format);
  config["w_mu"] = weights.mu();
  config["w_sigma"] = weights.sigma();
  Json j = ranking_json(ranking);
  j["stage1"] = stage1_json(stage1);
  j["config"] = std::move(config);
  return j.dump(2) + "\n";
}

std::string cmd_sweep(const Options& o) {
  const auto pair = load_pair(o);
  const auto grid = make_grid(o.start, o.stop, o.step);
  const auto report = weight_sweep(pair, grid, parse_direction(o.direction), parse_scheme(o.norm),
                                   atopsis_options(o));
  const auto format = parse_format(o.format);
  if (format != OutputFormat::Json) return render_sweep(report, format);
  Json config = ranking_config(o);
  config["start"] = o.start;
  config["stop"] = o.stop;
  config["step"] = o.step;
  Json j = sweep_json(report);
  j["config"] = std::move(config);
  return j.dump(2) + "\n";
}

std::string cmd_compare(const Options& o) {
  const auto pair = load_pair(o);
  const auto dir = parse_direction(o.direction);
  const auto scheme = parse_scheme(o.norm);
  const auto weights = WeightPair::from_mean(o.w_mu);
  const auto a = atopsis_rank(pair, weights, dir, scheme, atopsis_options(o));
  const auto h = hellinger_topsis_rank(pair, dir, scheme, o.sigma_floor, o.tie_eps);
  const auto format = parse_format(o.format);
  if (format != OutputFormat::Json) return render_compare(a, h, format);
  Json config = ranking_config(o);
  config["w_mu"] = weights.mu();
  config["w_sigma"] = weights.sigma();
  config["sigma_floor"] = o.sigma_floor;
  Json j = compare_json(a, h);
  j["config"] = std::move(config);
  return j.dump(2) + "\n";
}

std::string cmd_stats(const Options& o) {
  const auto report = pairwise_wilcoxon(load_mu(o), parse_direction(o.direction), o.alpha);
  const auto format = parse_format(o.format);
  if (format != OutputFormat::Json) return render_stats(report, format);
  Json config = base_config(o);
  config["alpha"] = o.alpha;
  Json j = stats_json(report);
  j["config"] = std::move(config);
  return j.dump(2) + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank algorithms across benchmarks from mean and std matrices", "rankbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Options o;

  auto* rank = app.add_subcommand("rank", "A-TOPSIS (or Hellinger-TOPSIS) ranking");
  add_inputs(rank, o, true);
  add_ranking(rank, o);
  add_hellinger(rank, o);
  rank->add_option("--w-mu", o.w_mu, "weight of the mean criterion")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  rank->add_option("--method", o.method, "atopsis or hellinger")
      ->check(CLI::IsMember({"atopsis", "hellinger"}))
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "rankings over a grid of mean weights");
  add_inputs(sweep, o, true);
  add_ranking(sweep, o);
  sweep->add_option("--start", o.start, "first w_mu")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sweep->add_option("--stop", o.stop, "last w_mu")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sweep->add_option("--step", o.step, "grid spacing")->check(CLI::PositiveNumber)->capture_default_str();

  auto* compare = app.add_subcommand("compare", "A-TOPSIS next to Hellinger-TOPSIS");
  add_inputs(compare, o, true);
  add_ranking(compare, o);
  add_hellinger(compare, o);
  compare->add_option("--w-mu", o.w_mu, "weight of the mean criterion")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Friedman and pairwise Wilcoxon tests on the means");
  add_inputs(stats, o, false);
  stats->add_option("--alpha", o.alpha, "significance level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  auto* serve = app.add_subcommand("serve", "run the HTTP ranking service");
  serve->add_option("--port", o.port, "listen port (default $RANKBENCH_PORT or 8080)")
      ->check(CLI::Range(1, 65535));
  serve->add_option("--host", o.host, "listen address")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*stats && !(o.alpha > 0.0 && o.alpha < 1.0)) {
      throw CLI::ValidationError("--alpha", "must lie strictly between 0 and 1");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*serve) {
    const int port = resolve_port(o.port);
    if (!run_service(o.host, port)) {
      err << "error: cannot listen on " << o.host << ":" << port << '\n';
      return kExitInput;
    }
    return kExitOk;
  }

  std::string text;
  try {
    if (*rank) text = cmd_rank(o);
    else if (*sweep) text = cmd_sweep(o);
    else if (*compare) text = cmd_compare(o);
    else text = cmd_stats(o);
  } catch (const RankError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (o.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write '" << o.out << "'\n";
    return kExitInput;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"rankbench"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rankbench
