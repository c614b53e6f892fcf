#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rankbench/decision_core.hpp"

namespace rankbench {

struct FriedmanResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t k = 0;  // algorithms
  std::size_t n = 0;  // benchmarks
  std::vector<double> mean_ranks;
};

struct WilcoxonResult {
  double w_statistic = 0.0;  // min of the positive and negative signed-rank sums
  double p_value = 1.0;      // two-sided
  std::size_t n_effective = 0;
  bool exact = true;    // false when the normal approximation was used
  bool defined = true;  // false when every difference was zero
};

struct PairwiseComparison {
  std::string first;
  std::string second;
  WilcoxonResult result;
};

struct StatsReport {
  std::vector<std::string> labels;
  FriedmanResult friedman;
  std::vector<PairwiseComparison> pairwise;
  double alpha = 0.05;

  std::vector<PairwiseComparison> significant() const;
};

// Differences (and ranks) closer than this, relative to their magnitude,
// count as equal. Decimal data such as 93.74 - 93.73 and 95.39 - 95.38 land
// a few ulps apart in binary and must still tie.
inline constexpr double kTieTolerance = 1e-9;

// Largest n_effective enumerated exactly; larger samples use the normal
// approximation with continuity correction.
inline constexpr std::size_t kMaxExactWilcoxon = 25;

/// Midranks (1-based, ascending) with tolerance-based tie detection.
std::vector<double> midranks(std::span<const double> values);

// Upper tail of the chi-square distribution.
double chi_square_sf(double x, double dof);

FriedmanResult friedman_test(const LabeledMatrix& mu, CriterionDirection direction);

/// Wilcoxon signed-rank test on paired samples with an exact two-sided
/// p-value. Zero differences are dropped, tied |d| share midranks and the
/// null distribution is counted over every sign assignment of those ranks.
/// Throws AllZeroDifferences when nothing is left to rank.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y);

/// Friedman plus Wilcoxon over all k(k-1)/2 pairs in row order. A pair with
/// identical rows is reported with p = 1 and `defined = false`.
StatsReport pairwise_wilcoxon(const LabeledMatrix& mu, CriterionDirection direction, double alpha);

}  // namespace rankbench
