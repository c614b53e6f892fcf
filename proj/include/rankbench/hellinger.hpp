#pragma once

#include "rankbench/atopsis.hpp"
#include "rankbench/decision_core.hpp"

namespace rankbench {

// A cell of the decision matrix read as a normal distribution N(mu, sigma^2).
struct GaussianSummary {
  double mu;
  double sigma;
};

inline constexpr double kDefaultSigmaFloor = 1e-4;

// Squared Hellinger distance between two normals, in [0, 1].
double hellinger_squared(const GaussianSummary& a, const GaussianSummary& b);
double hellinger_distance(const GaussianSummary& a, const GaussianSummary& b);

/// Hellinger-TOPSIS baseline.
///
/// Each column is scaled by the divisor the scheme derives from its means,
/// and zero standard deviations (in those scaled units) are replaced by
/// `sigma_floor`. Per criterion the positive ideal is (best mean, smallest
/// sigma) and the negative ideal is (worst mean, largest sigma). Separations
/// are the root of the summed squared Hellinger distances to each ideal.
GlobalRanking hellinger_topsis_rank(const DecisionMatrixPair& pair, CriterionDirection direction,
                                    NormalizationScheme scheme = kDefaultScheme,
                                    double sigma_floor = kDefaultSigmaFloor,
                                    double tie_epsilon = kDefaultTieEpsilon);

}  // namespace rankbench
