#include "rankbench/topsis.hpp"

#include <algorithm>
#include <cmath>

namespace rankbench {

IdealPair ideal_solutions(const LabeledMatrix& weighted,
                          std::span<const CriterionDirection> directions) {
  if (directions.size() != weighted.cols()) {
    throw RankError(ErrorKind::LengthMismatch,
                    "got " + std::to_string(directions.size()) + " directions for " +
                        std::to_string(weighted.cols()) + " criteria");
  }
  IdealPair ideals;
  ideals.positive.resize(weighted.cols());
  ideals.negative.resize(weighted.cols());
  for (std::size_t c = 0; c < weighted.cols(); ++c) {
    const auto col = weighted.column(c);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    if (directions[c] == CriterionDirection::Benefit) {
      ideals.positive[c] = *hi;
      ideals.negative[c] = *lo;
    } else {
      ideals.positive[c] = *lo;
      ideals.negative[c] = *hi;
    }
  }
  return ideals;
}

SeparationPair separation_distances(const LabeledMatrix& weighted, const IdealPair& ideals) {
  if (ideals.positive.size() != weighted.cols() || ideals.negative.size() != weighted.cols()) {
    throw RankError(ErrorKind::LengthMismatch, "ideal vectors do not match the criteria count");
  }
  SeparationPair sep;
  sep.d_plus.resize(weighted.rows());
  sep.d_minus.resize(weighted.rows());
  for (std::size_t r = 0; r < weighted.rows(); ++r) {
    double plus = 0.0;
    double minus = 0.0;
    const auto row = weighted.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      const double dp = ideals.positive[c] - row[c];
      const double dm = ideals.negative[c] - row[c];
      plus += dp * dp;
      minus += dm * dm;
    }
    sep.d_plus[r] = std::sqrt(plus);
    sep.d_minus[r] = std::sqrt(minus);
  }
  return sep;
}

ClosenessVector closeness(const SeparationPair& sep) {
  ClosenessVector xi(sep.d_plus.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const double total = sep.d_plus[i] + sep.d_minus[i];
    xi[i] = total == 0.0 ? kDegenerateCloseness : sep.d_minus[i] / total;
  }
  return xi;
}

ClosenessVector topsis_rank(const LabeledMatrix& matrix, const CriterionWeights& weights,
                            std::span<const CriterionDirection> directions,
                            NormalizationScheme scheme) {
  const auto weighted = apply_weights(normalize(matrix, scheme), weights);
  const auto ideals = ideal_solutions(weighted, directions);
  return closeness(separation_distances(weighted, ideals));
}

ClosenessVector topsis_rank(const LabeledMatrix& matrix, const CriterionWeights& weights,
                            CriterionDirection direction, NormalizationScheme scheme) {
  const std::vector<CriterionDirection> directions(matrix.cols(), direction);
  return topsis_rank(matrix, weights, directions, scheme);
}

}  // namespace rankbench
