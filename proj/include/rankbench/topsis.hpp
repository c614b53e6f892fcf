#pragma once

#include <span>
#include <vector>

#include "rankbench/decision_core.hpp"

namespace rankbench {

// Per-criterion positive and negative ideal values of a weighted matrix.
struct IdealPair {
  std::vector<double> positive;
  std::vector<double> negative;
};

struct SeparationPair {
  std::vector<double> d_plus;
  std::vector<double> d_minus;
};

using ClosenessVector = std::vector<double>;

// Relative closeness returned when an alternative sits at zero distance from
// both ideals (every alternative identical after weighting).
inline constexpr double kDegenerateCloseness = 0.5;

IdealPair ideal_solutions(const LabeledMatrix& weighted,
                          std::span<const CriterionDirection> directions);
SeparationPair separation_distances(const LabeledMatrix& weighted, const IdealPair& ideals);
ClosenessVector closeness(const SeparationPair& sep);

/// Standard TOPSIS: normalize, weight, locate ideals, measure Euclidean
/// separations and return the relative closeness of every row.
ClosenessVector topsis_rank(const LabeledMatrix& matrix, const CriterionWeights& weights,
                            std::span<const CriterionDirection> directions,
                            NormalizationScheme scheme);

// Convenience for the homogeneous case where every column shares a direction.
ClosenessVector topsis_rank(const LabeledMatrix& matrix, const CriterionWeights& weights,
                            CriterionDirection direction, NormalizationScheme scheme);

}  // namespace rankbench
