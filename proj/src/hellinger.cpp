#include "rankbench/hellinger.hpp"

#include <algorithm>
#include <cmath>

namespace rankbench {

double hellinger_squared(const GaussianSummary& a, const GaussianSummary& b) {
  if (!(a.sigma > 0.0) || !(b.sigma > 0.0)) {
    throw RankError(ErrorKind::NonPositiveSigma, "Hellinger distance needs sigma > 0");
  }
  const double var_sum = a.sigma * a.sigma + b.sigma * b.sigma;
  const double diff = a.mu - b.mu;
  // log of the Bhattacharyya coefficient; expm1 keeps precision near H = 0.
  const double log_bc =
      0.5 * std::log(2.0 * a.sigma * b.sigma / var_sum) - diff * diff / (4.0 * var_sum);
  return std::clamp(-std::expm1(log_bc), 0.0, 1.0);
}

double hellinger_distance(const GaussianSummary& a, const GaussianSummary& b) {
  return std::sqrt(hellinger_squared(a, b));
}

GlobalRanking hellinger_topsis_rank(const DecisionMatrixPair& pair, CriterionDirection direction,
                                    NormalizationScheme scheme, double sigma_floor,
                                    double tie_epsilon) {
  if (!(sigma_floor > 0.0) || !std::isfinite(sigma_floor)) {
    throw RankError(ErrorKind::NonPositiveSigmaFloor, "sigma floor must be positive");
  }
  const auto m = pair.alternatives();
  const auto n = pair.criteria();
  std::vector<double> d_plus(m, 0.0);
  std::vector<double> d_minus(m, 0.0);

  for (std::size_t c = 0; c < n; ++c) {
    const auto mu_col = pair.mu().column(c);
    const auto sigma_col = pair.sigma().column(c);
    double divisor = column_divisor(mu_col, scheme);
    if (divisor == 0.0) divisor = 1.0;

    std::vector<GaussianSummary> cells(m);
    for (std::size_t r = 0; r < m; ++r) {
      const double s = sigma_col[r] / divisor;
      cells[r] = {mu_col[r] / divisor, s > 0.0 ? s : sigma_floor};
    }
    const auto [mu_lo, mu_hi] = std::minmax_element(
        cells.begin(), cells.end(), [](const auto& x, const auto& y) { return x.mu < y.mu; });
    const auto [s_lo, s_hi] = std::minmax_element(
        cells.begin(), cells.end(), [](const auto& x, const auto& y) { return x.sigma < y.sigma; });
    const bool benefit = direction == CriterionDirection::Benefit;
    const GaussianSummary positive{benefit ? mu_hi->mu : mu_lo->mu, s_lo->sigma};
    const GaussianSummary negative{benefit ? mu_lo->mu : mu_hi->mu, s_hi->sigma};

    for (std::size_t r = 0; r < m; ++r) {
      d_plus[r] += hellinger_squared(cells[r], positive);
      d_minus[r] += hellinger_squared(cells[r], negative);
    }
  }

  SeparationPair sep{std::move(d_plus), std::move(d_minus)};
  for (auto& d : sep.d_plus) d = std::sqrt(d);
  for (auto& d : sep.d_minus) d = std::sqrt(d);
  return make_ranking(pair.names(), closeness(sep), tie_epsilon);
}

}  // namespace rankbench
