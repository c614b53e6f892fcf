#pragma once

#include <json.hpp>
#include <string>

#include "rankbench/atopsis.hpp"
#include "rankbench/stats.hpp"

namespace rankbench {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(std::string_view text);

// Twelve significant digits; shared by table and CSV output.
std::string format_number(double value);

// {"order": [...], "xi": {name: value}, "ties": [[...]]}
Json ranking_json(const GlobalRanking& ranking);
// {"xi_mu": {name: value}, "xi_sigma": {name: value}}
Json stage1_json(const ClosenessMatrix& closeness);
// {"grid": [{w_mu, w_sigma, order, xi, ties}], "stability_w_mu": value | null}
Json sweep_json(const SweepReport& report);
Json stats_json(const StatsReport& report);
Json compare_json(const GlobalRanking& atopsis, const GlobalRanking& hellinger);

std::string render_ranking(const GlobalRanking& ranking, OutputFormat format);
std::string render_sweep(const SweepReport& report, OutputFormat format);
std::string render_compare(const GlobalRanking& atopsis, const GlobalRanking& hellinger,
                           OutputFormat format);
std::string render_stats(const StatsReport& report, OutputFormat format);

}  // namespace rankbench
