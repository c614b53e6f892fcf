#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rankbench/decision_core.hpp"
#include "rankbench/topsis.hpp"

namespace rankbench {

inline constexpr double kDefaultTieEpsilon = 1e-9;

// Stage-1 output: closeness of every alternative computed separately on the
// mean matrix (xi_mu) and on the standard-deviation matrix (xi_sigma).
struct ClosenessMatrix {
  std::vector<std::string> labels;
  ClosenessVector xi_mu;
  ClosenessVector xi_sigma;
};

/// Alternatives sorted by descending score, with tie groups.
///
/// `labels` and `xi` keep input row order; `order` is the ranked permutation
/// of the labels. A tie group collects consecutive alternatives whose score
/// is within `tie_epsilon` of the group's leader, so adjacent groups are
/// strictly decreasing.
struct GlobalRanking {
  std::vector<std::string> labels;
  std::vector<double> xi;
  std::vector<std::string> order;
  std::vector<std::vector<std::string>> tie_groups;

  // 1-based position of `label` in `order`; 0 when absent.
  std::size_t position(const std::string& label) const;
  double xi_of(const std::string& label) const;
  bool tied(const std::string& a, const std::string& b) const;
};

GlobalRanking make_ranking(std::vector<std::string> labels, std::vector<double> xi,
                           double tie_epsilon = kDefaultTieEpsilon);

struct AtopsisOptions {
  // Stage-1 benchmark weights; uniform when empty.
  std::optional<CriterionWeights> inner_weights;
  double tie_epsilon = kDefaultTieEpsilon;
};

ClosenessMatrix atopsis_stage1(const DecisionMatrixPair& pair, CriterionDirection mean_direction,
                               NormalizationScheme scheme, const AtopsisOptions& options = {});

/// Stage 2: weight the two closeness columns, treat both as benefit
/// criteria and run TOPSIS over the resulting m x 2 matrix. The closeness
/// columns are already dimensionless, so they are not normalized again.
GlobalRanking global_stage(const ClosenessMatrix& closeness, const WeightPair& weights,
                           double tie_epsilon = kDefaultTieEpsilon);

GlobalRanking atopsis_rank(const DecisionMatrixPair& pair, const WeightPair& weights,
                           CriterionDirection mean_direction,
                           NormalizationScheme scheme = kDefaultScheme,
                           const AtopsisOptions& options = {});

struct SweepReport {
  std::vector<WeightPair> grid;
  std::vector<GlobalRanking> rankings;
  // First grid index from which the order never changes again.
  std::optional<std::size_t> stability_point;
};

// w_mu from start to stop inclusive; start == stop gives a single point.
std::vector<WeightPair> make_grid(double start, double stop, double step);
std::vector<WeightPair> default_grid();

std::optional<std::size_t> find_stability_point(const std::vector<GlobalRanking>& rankings);

SweepReport weight_sweep(const DecisionMatrixPair& pair, const std::vector<WeightPair>& grid,
                         CriterionDirection mean_direction,
                         NormalizationScheme scheme = kDefaultScheme,
                         const AtopsisOptions& options = {});

}  // namespace rankbench
