#include "rankbench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rankbench {

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw RankError(ErrorKind::BadValue, "unknown output format '" + std::string(text) + "'");
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

Json named_values(const std::vector<std::string>& labels, const std::vector<double>& values) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) obj[labels[i]] = values[i];
  return obj;
}

// "CHO > MV = AVG > FNN" with '=' joining members of a tie group.
std::string order_string(const GlobalRanking& ranking) {
  std::string out;
  for (const auto& group : ranking.tie_groups) {
    if (!out.empty()) out += " > ";
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i > 0) out += " = ";
      out += group[i];
    }
  }
  return out;
}

// Competition rank per position in `order`: tied alternatives share the
// position of their group's leader.
std::vector<std::size_t> display_ranks(const GlobalRanking& ranking) {
  std::vector<std::size_t> ranks;
  std::size_t pos = 1;
  for (const auto& group : ranking.tie_groups) {
    for (std::size_t i = 0; i < group.size(); ++i) ranks.push_back(pos);
    pos += group.size();
  }
  return ranks;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  return out + "\"";
}

// Left-aligned columns separated by two spaces.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << csv_field(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::size_t> by_p_value(const StatsReport& report) {
  std::vector<std::size_t> idx(report.pairwise.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    return report.pairwise[a].result.p_value < report.pairwise[b].result.p_value;
  });
  return idx;
}

}  // namespace

Json ranking_json(const GlobalRanking& ranking) {
  Json j;
  j["order"] = ranking.order;
  j["xi"] = named_values(ranking.labels, ranking.xi);
  j["ties"] = ranking.tie_groups;
  return j;
}

Json stage1_json(const ClosenessMatrix& closeness) {
  Json j;
  j["xi_mu"] = named_values(closeness.labels, closeness.xi_mu);
  j["xi_sigma"] = named_values(closeness.labels, closeness.xi_sigma);
  return j;
}

Json sweep_json(const SweepReport& report) {
  Json grid = Json::array();
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    Json row;
    row["w_mu"] = report.grid[i].mu();
    row["w_sigma"] = report.grid[i].sigma();
    const Json ranking = ranking_json(report.rankings[i]);
    for (const auto& [key, value] : ranking.items()) row[key] = value;
    grid.push_back(std::move(row));
  }
  Json j;
  j["grid"] = std::move(grid);
  j["stability_w_mu"] =
      report.stability_point ? Json(report.grid[*report.stability_point].mu()) : Json(nullptr);
  return j;
}

Json stats_json(const StatsReport& report) {
  Json friedman;
  friedman["statistic"] = report.friedman.statistic;
  friedman["p_value"] = report.friedman.p_value;
  friedman["k"] = report.friedman.k;
  friedman["n"] = report.friedman.n;
  friedman["mean_ranks"] = named_values(report.labels, report.friedman.mean_ranks);

  Json pairs = Json::array();
  Json significant = Json::array();
  for (const auto& p : report.pairwise) {
    const bool sig = p.result.p_value < report.alpha;
    Json row;
    row["first"] = p.first;
    row["second"] = p.second;
    row["w_statistic"] = p.result.w_statistic;
    row["n_effective"] = p.result.n_effective;
    row["p_value"] = p.result.p_value;
    row["exact"] = p.result.exact;
    row["defined"] = p.result.defined;
    row["significant"] = sig;
    pairs.push_back(std::move(row));
    if (sig) significant.push_back({p.first, p.second});
  }
  Json j;
  j["alpha"] = report.alpha;
  j["friedman"] = std::move(friedman);
  j["pairwise"] = std::move(pairs);
  j["significant"] = std::move(significant);
  return j;
}

Json compare_json(const GlobalRanking& atopsis, const GlobalRanking& hellinger) {
  Json agreement = Json::array();
  for (std::size_t i = 0; i < atopsis.order.size(); ++i) {
    agreement.push_back(i < hellinger.order.size() && atopsis.order[i] == hellinger.order[i]);
  }
  Json j;
  j["atopsis"] = ranking_json(atopsis);
  j["hellinger"] = ranking_json(hellinger);
  j["agreement"] = std::move(agreement);
  return j;
}

std::string render_ranking(const GlobalRanking& ranking, OutputFormat format) {
  if (format == OutputFormat::Json) return ranking_json(ranking).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows{{"rank", "algorithm", "xi"}};
  const auto ranks = display_ranks(ranking);
  for (std::size_t i = 0; i < ranking.order.size(); ++i) {
    rows.push_back({std::to_string(ranks[i]), ranking.order[i],
                    format_number(ranking.xi_of(ranking.order[i]))});
  }
  if (format == OutputFormat::Csv) return render_csv(rows);
  return render_columns(rows) + "order: " + order_string(ranking) + "\n";
}

std::string render_sweep(const SweepReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return sweep_json(report).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows{{"w_mu", "w_sigma", "ranking", "stable"}};
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    const bool stable = report.stability_point && i >= *report.stability_point;
    rows.push_back({format_number(report.grid[i].mu()), format_number(report.grid[i].sigma()),
                    order_string(report.rankings[i]), stable ? "yes" : "no"});
  }
  if (format == OutputFormat::Csv) return render_csv(rows);
  std::string out = render_columns(rows);
  out += report.stability_point
             ? "stability: w_mu = " + format_number(report.grid[*report.stability_point].mu()) + "\n"
             : std::string("stability: none\n");
  return out;
}

std::string render_compare(const GlobalRanking& atopsis, const GlobalRanking& hellinger,
                           OutputFormat format) {
  if (format == OutputFormat::Json) return compare_json(atopsis, hellinger).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows{
      {"position", "atopsis", "atopsis_xi", "hellinger", "hellinger_xi", "agree"}};
  for (std::size_t i = 0; i < atopsis.order.size(); ++i) {
    const auto& a = atopsis.order[i];
    const auto& h = hellinger.order[i];
    rows.push_back({std::to_string(i + 1), a, format_number(atopsis.xi_of(a)), h,
                    format_number(hellinger.xi_of(h)), a == h ? "yes" : "no"});
  }
  if (format == OutputFormat::Csv) return render_csv(rows);
  return render_columns(rows) + "A-TOPSIS:  " + order_string(atopsis) +
         "\nHellinger: " + order_string(hellinger) + "\n";
}

std::string render_stats(const StatsReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return stats_json(report).dump(2) + "\n";
  const auto& f = report.friedman;
  if (format == OutputFormat::Csv) {
    std::vector<std::vector<std::string>> rows{
        {"test", "first", "second", "statistic", "n", "p_value", "significant"}};
    rows.push_back({"friedman", "", "", format_number(f.statistic), std::to_string(f.n),
                    format_number(f.p_value), f.p_value < report.alpha ? "yes" : "no"});
    for (auto i : by_p_value(report)) {
      const auto& p = report.pairwise[i];
      rows.push_back({"wilcoxon", p.first, p.second, format_number(p.result.w_statistic),
                      std::to_string(p.result.n_effective), format_number(p.result.p_value),
                      p.result.p_value < report.alpha ? "yes" : "no"});
    }
    return render_csv(rows);
  }
  std::string out = "Friedman: statistic = " + format_number(f.statistic) +
                    ", p = " + format_number(f.p_value) + " (k = " + std::to_string(f.k) +
                    ", n = " + std::to_string(f.n) + ", alpha = " + format_number(report.alpha) +
                    ")" + (f.p_value < report.alpha ? " -> reject H0" : "") + "\n\n";
  std::vector<std::vector<std::string>> rows{{"pair", "W", "n", "p", "significant"}};
  for (auto i : by_p_value(report)) {
    const auto& p = report.pairwise[i];
    std::string note = p.result.p_value < report.alpha ? "*" : "";
    if (!p.result.defined) note = "undefined";
    else if (!p.result.exact) note += " (normal approx.)";
    rows.push_back({p.first + " - " + p.second, format_number(p.result.w_statistic),
                    std::to_string(p.result.n_effective), format_number(p.result.p_value), note});
  }
  return out + render_columns(rows) + std::to_string(report.significant().size()) +
         " significant pair(s)\n";
}

}  // namespace rankbench
