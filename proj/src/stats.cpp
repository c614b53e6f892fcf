#include "rankbench/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace rankbench {

namespace {

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::vector<PairwiseComparison> StatsReport::significant() const {
  std::vector<PairwiseComparison> out;
  for (const auto& p : pairwise) {
    if (p.result.p_value < alpha) out.push_back(p);
  }
  return out;
}

std::vector<double> midranks(std::span<const double> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && nearly_equal(values[idx[j + 1]], values[idx[i]])) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

double chi_square_sf(double x, double dof) {
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * x);
}

FriedmanResult friedman_test(const LabeledMatrix& mu, CriterionDirection direction) {
  const auto k = mu.rows();
  const auto n = mu.cols();
  if (k < 2) throw RankError(ErrorKind::TooFewAlgorithms, "Friedman test needs >= 2 algorithms");
  if (n < 2) throw RankError(ErrorKind::TooFewBenchmarks, "Friedman test needs >= 2 benchmarks");

  FriedmanResult res;
  res.k = k;
  res.n = n;
  res.mean_ranks.assign(k, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    auto col = mu.column(c);
    // Rank 1 is the best algorithm.
    if (direction == CriterionDirection::Benefit) {
      for (auto& v : col) v = -v;
    }
    const auto ranks = midranks(col);
    for (std::size_t r = 0; r < k; ++r) res.mean_ranks[r] += ranks[r];
  }
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  double sum_sq = 0.0;
  for (auto& r : res.mean_ranks) {
    r /= nd;
    const double dev = r - (kd + 1.0) / 2.0;
    sum_sq += dev * dev;
  }
  res.statistic = 12.0 * nd / (kd * (kd + 1.0)) * sum_sq;
  res.p_value = std::clamp(chi_square_sf(res.statistic, kd - 1.0), 0.0, 1.0);
  return res;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw RankError(ErrorKind::LengthMismatch, "Wilcoxon needs two samples of equal, nonzero length");
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!nearly_equal(x[i], y[i])) diffs.push_back(x[i] - y[i]);
  }
  if (diffs.empty()) {
    throw RankError(ErrorKind::AllZeroDifferences, "every paired difference is zero");
  }
  std::vector<double> magnitudes(diffs.size());
  std::transform(diffs.begin(), diffs.end(), magnitudes.begin(), [](double d) { return std::abs(d); });
  const auto ranks = midranks(magnitudes);

  WilcoxonResult res;
  res.n_effective = diffs.size();
  double w_plus = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    total += ranks[i];
    if (diffs[i] > 0.0) w_plus += ranks[i];
  }
  res.w_statistic = std::min(w_plus, total - w_plus);

  const auto n = res.n_effective;
  if (n <= kMaxExactWilcoxon) {
    // Midranks are multiples of 1/2, so doubled ranks are integers and the
    // count of sign assignments per doubled sum is exact.
    std::vector<std::int64_t> doubled(n);
    std::int64_t max_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      doubled[i] = std::llround(2.0 * ranks[i]);
      max_sum += doubled[i];
    }
    std::vector<std::uint64_t> count(static_cast<std::size_t>(max_sum) + 1, 0);
    count[0] = 1;
    std::int64_t reach = 0;
    for (auto r : doubled) {
      for (std::int64_t s = reach; s >= 0; --s) {
        count[static_cast<std::size_t>(s + r)] += count[static_cast<std::size_t>(s)];
      }
      reach += r;
    }
    const auto threshold = std::llround(2.0 * res.w_statistic);
    std::uint64_t tail = 0;
    for (std::int64_t s = 0; s <= threshold; ++s) tail += count[static_cast<std::size_t>(s)];
    const double assignments = std::ldexp(1.0, static_cast<int>(n));
    res.p_value = std::min(1.0, 2.0 * static_cast<double>(tail) / assignments);
  } else {
    res.exact = false;
    const double nd = static_cast<double>(n);
    const double mean = nd * (nd + 1.0) / 4.0;
    double tie_term = 0.0;
    std::vector<double> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i);
      tie_term += t * t * t - t;
      i = j;
    }
    const double var = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
    const double z = std::max(0.0, std::abs(res.w_statistic - mean) - 0.5) / std::sqrt(var);
    res.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  }
  return res;
}

StatsReport pairwise_wilcoxon(const LabeledMatrix& mu, CriterionDirection direction, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw RankError(ErrorKind::BadValue, "alpha must lie in (0, 1)");
  }
  StatsReport report;
  report.alpha = alpha;
  report.labels = mu.row_labels();
  report.friedman = friedman_test(mu, direction);
  const auto& names = mu.row_labels();
  for (std::size_t a = 0; a < mu.rows(); ++a) {
    for (std::size_t b = a + 1; b < mu.rows(); ++b) {
      PairwiseComparison cmp{names[a], names[b], {}};
      try {
        cmp.result = wilcoxon_signed_rank(mu.row(a), mu.row(b));
      } catch (const RankError& e) {
        if (e.kind() != ErrorKind::AllZeroDifferences) throw;
        cmp.result.defined = false;
        cmp.result.p_value = 1.0;
        cmp.result.n_effective = 0;
      }
      report.pairwise.push_back(std::move(cmp));
    }
  }
  return report;
}

}  // namespace rankbench
