#include "rankbench/atopsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rankbench {

std::size_t GlobalRanking::position(const std::string& label) const {
  const auto it = std::find(order.begin(), order.end(), label);
  return it == order.end() ? 0 : static_cast<std::size_t>(it - order.begin()) + 1;
}

double GlobalRanking::xi_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw RankError(ErrorKind::BadValue, "unknown alternative " + label);
  return xi[static_cast<std::size_t>(it - labels.begin())];
}

bool GlobalRanking::tied(const std::string& a, const std::string& b) const {
  for (const auto& group : tie_groups) {
    const bool has_a = std::find(group.begin(), group.end(), a) != group.end();
    const bool has_b = std::find(group.begin(), group.end(), b) != group.end();
    if (has_a || has_b) return has_a && has_b;
  }
  return false;
}

GlobalRanking make_ranking(std::vector<std::string> labels, std::vector<double> xi,
                           double tie_epsilon) {
  if (labels.size() != xi.size()) {
    throw RankError(ErrorKind::LengthMismatch, "labels and scores differ in length");
  }
  if (!(tie_epsilon >= 0.0)) throw RankError(ErrorKind::BadValue, "tie epsilon must be >= 0");
  std::vector<std::size_t> idx(labels.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return xi[a] > xi[b]; });

  GlobalRanking ranking;
  double leader = 0.0;
  for (auto i : idx) {
    ranking.order.push_back(labels[i]);
    if (ranking.tie_groups.empty() || leader - xi[i] > tie_epsilon) {
      ranking.tie_groups.emplace_back();
      leader = xi[i];
    }
    ranking.tie_groups.back().push_back(labels[i]);
  }
  ranking.labels = std::move(labels);
  ranking.xi = std::move(xi);
  return ranking;
}

ClosenessMatrix atopsis_stage1(const DecisionMatrixPair& pair, CriterionDirection mean_direction,
                               NormalizationScheme scheme, const AtopsisOptions& options) {
  const auto weights = options.inner_weights.value_or(CriterionWeights::uniform(pair.criteria()));
  ClosenessMatrix out;
  out.labels = pair.names();
  out.xi_mu = topsis_rank(pair.mu(), weights, mean_direction, scheme);
  // Lower dispersion is always preferable.
  out.xi_sigma = topsis_rank(pair.sigma(), weights, CriterionDirection::Cost, scheme);
  return out;
}

GlobalRanking global_stage(const ClosenessMatrix& closeness, const WeightPair& weights,
                           double tie_epsilon) {
  const auto m = closeness.labels.size();
  if (closeness.xi_mu.size() != m || closeness.xi_sigma.size() != m) {
    throw RankError(ErrorKind::LengthMismatch, "closeness vectors do not match the labels");
  }
  std::vector<double> values;
  values.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    values.push_back(closeness.xi_mu[i]);
    values.push_back(closeness.xi_sigma[i]);
  }
  const LabeledMatrix stacked(closeness.labels, {"mean", "std"}, std::move(values));
  const auto weighted = apply_weights(stacked, CriterionWeights({weights.mu(), weights.sigma()}));
  constexpr CriterionDirection both_benefit[] = {CriterionDirection::Benefit,
                                                 CriterionDirection::Benefit};
  const auto ideals = ideal_solutions(weighted, both_benefit);
  auto xi = rankbench::closeness(separation_distances(weighted, ideals));
  return make_ranking(closeness.labels, std::move(xi), tie_epsilon);
}

GlobalRanking atopsis_rank(const DecisionMatrixPair& pair, const WeightPair& weights,
                           CriterionDirection mean_direction, NormalizationScheme scheme,
                           const AtopsisOptions& options) {
  return global_stage(atopsis_stage1(pair, mean_direction, scheme, options), weights,
                      options.tie_epsilon);
}

std::vector<WeightPair> make_grid(double start, double stop, double step) {
  const bool finite = std::isfinite(start) && std::isfinite(stop) && std::isfinite(step);
  if (!finite || start < 0.0 || stop > 1.0 || start > stop) {
    throw RankError(ErrorKind::BadGrid, "grid needs 0 <= start <= stop <= 1");
  }
  if (start == stop) return {WeightPair::from_mean(start)};
  if (!(step > 0.0)) throw RankError(ErrorKind::BadGrid, "grid step must be positive");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000) throw RankError(ErrorKind::BadGrid, "grid has too many points");
  std::vector<WeightPair> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 1e-12 so 0.5 + 3 * 0.1 reads back as 0.8.
    double w = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    grid.push_back(WeightPair::from_mean(std::min(w, 1.0)));
  }
  return grid;
}

std::vector<WeightPair> default_grid() { return make_grid(0.5, 1.0, 0.1); }

std::optional<std::size_t> find_stability_point(const std::vector<GlobalRanking>& rankings) {
  if (rankings.empty()) return std::nullopt;
  std::size_t start = rankings.size() - 1;
  while (start > 0 && rankings[start - 1].order == rankings.back().order) --start;
  // A run made of the last point alone is no evidence of stability.
  if (rankings.size() > 1 && start == rankings.size() - 1) return std::nullopt;
  return start;
}

SweepReport weight_sweep(const DecisionMatrixPair& pair, const std::vector<WeightPair>& grid,
                         CriterionDirection mean_direction, NormalizationScheme scheme,
                         const AtopsisOptions& options) {
  if (grid.empty()) throw RankError(ErrorKind::BadGrid, "empty weight grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i].mu() > grid[i - 1].mu())) {
      throw RankError(ErrorKind::BadGrid, "grid must be strictly increasing in w_mu");
    }
  }
  // Stage 1 does not depend on the weights.
  const auto stage1 = atopsis_stage1(pair, mean_direction, scheme, options);
  SweepReport report;
  report.grid = grid;
  report.rankings.reserve(grid.size());
  for (const auto& w : grid) report.rankings.push_back(global_stage(stage1, w, options.tie_epsilon));
  report.stability_point = find_stability_point(report.rankings);
  return report;
}

}  // namespace rankbench
