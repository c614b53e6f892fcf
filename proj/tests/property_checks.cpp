#include "property_checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "rankbench/atopsis.hpp"
#include "rankbench/hellinger.hpp"
#include "rankbench/stats.hpp"
#include "rankbench/topsis.hpp"
#include "support.hpp"

namespace testing {

using namespace rankbench;

namespace {

void fail(PropertyOutcome& out, const std::string& why) {
  if (out.failures++ == 0) out.first_failure = why;
}

std::vector<std::string> order_by(const std::vector<std::string>& labels, const std::vector<double>& score) {
  std::vector<std::size_t> idx(labels.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return score[a] > score[b]; });
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(labels[i]);
  return out;
}

NormalizationScheme pick_scheme(std::mt19937_64& rng) {
  static constexpr NormalizationScheme all[] = {NormalizationScheme::Vector, NormalizationScheme::Max,
                                                NormalizationScheme::Identity};
  return all[rng() % 3];
}

}  // namespace

PropertyOutcome closeness_bounds(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"closeness bounds and degenerate rule"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t t = 0; t < cases; ++t) {
    ++out.cases;
    const auto m = 1 + rng() % 8;
    const auto n = 1 + rng() % 6;
    auto mat = random_matrix(rng, m, n, 0.0, 50.0);
    std::vector<CriterionDirection> dirs(n);
    for (auto& d : dirs) d = rng() % 2 ? CriterionDirection::Benefit : CriterionDirection::Cost;
    std::vector<double> w(n);
    for (auto& x : w) x = u(rng) + 1e-3;
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;

    // Every fourth case collapses all rows onto the first one.
    const bool degenerate = t % 4 == 0;
    if (degenerate) {
      std::vector<double> v(m * n);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) v[r * n + c] = mat.at(0, c);
      }
      mat = mat.with_values(std::move(v));
    }
    const auto xi = topsis_rank(mat, CriterionWeights(w), dirs, pick_scheme(rng));
    for (double x : xi) {
      if (!(x >= 0.0 && x <= 1.0)) fail(out, "closeness outside [0, 1]");
      if (degenerate && x != kDegenerateCloseness) fail(out, "identical rows did not score 0.5");
    }
  }
  return out;
}

PropertyOutcome scale_invariance(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"column-scale invariance (vector, max)"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> scale(-2.0, 2.0);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  for (std::size_t t = 0; t < cases; ++t) {
    ++out.cases;
    const auto pair = random_pair(rng);
    const auto scheme = t % 2 ? NormalizationScheme::Vector : NormalizationScheme::Max;
    const auto m = pair.alternatives();
    const auto n = pair.criteria();
    std::vector<double> c(n);
    for (auto& x : c) x = std::pow(10.0, scale(rng));
    std::vector<double> mu(m * n);
    std::vector<double> sigma(m * n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        mu[r * n + j] = pair.mu().at(r, j) * c[j];
        sigma[r * n + j] = pair.sigma().at(r, j) * c[j];
      }
    }
    const DecisionMatrixPair scaled(pair.mu().with_values(mu), pair.sigma().with_values(sigma));
    const auto w = WeightPair::from_mean(weight(rng));
    const auto dir = t % 3 ? CriterionDirection::Benefit : CriterionDirection::Cost;
    const auto a = atopsis_rank(pair, w, dir, scheme);
    const auto b = atopsis_rank(scaled, w, dir, scheme);
    if (a.order != b.order) fail(out, "order changed after rescaling a column");
    for (std::size_t i = 0; i < m; ++i) {
      if (std::abs(a.xi[i] - b.xi[i]) > 1e-9) fail(out, "closeness moved after rescaling a column");
    }
  }
  return out;
}

PropertyOutcome weight_extremes(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"weight-extreme reduction"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    ++out.cases;
    const auto pair = random_pair(rng);
    const auto dir = t % 2 ? CriterionDirection::Benefit : CriterionDirection::Cost;
    const auto stage1 = atopsis_stage1(pair, dir, pick_scheme(rng));
    const auto by_mean = global_stage(stage1, WeightPair(1.0, 0.0));
    const auto by_sigma = global_stage(stage1, WeightPair(0.0, 1.0));
    if (by_mean.order != order_by(stage1.labels, stage1.xi_mu)) fail(out, "w = (1, 0) not ordered by mean closeness");
    if (by_sigma.order != order_by(stage1.labels, stage1.xi_sigma)) fail(out, "w = (0, 1) not ordered by std closeness");
  }
  return out;
}

PropertyOutcome stage2_oracle(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"stage-2 brute-force oracle"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t t = 0; t < cases; ++t) {
    ++out.cases;
    const auto m = 2 + rng() % 9;
    ClosenessMatrix cm;
    cm.labels = labels("A", m);
    for (std::size_t i = 0; i < m; ++i) {
      cm.xi_mu.push_back(u(rng));
      cm.xi_sigma.push_back(t % 10 == 0 ? 0.5 : u(rng));
    }
    const double w = t % 50 == 0 ? static_cast<double>(t % 100 == 0) : u(rng);
    const auto got = global_stage(cm, WeightPair::from_mean(w));
    const auto want = oracle_stage2(cm.xi_mu, cm.xi_sigma, w, 1.0 - w);
    for (std::size_t i = 0; i < m; ++i) {
      if (std::abs(got.xi[i] - want[i]) > 1e-12) {
        std::ostringstream why;
        why << "row " << i << ": " << got.xi[i] << " vs oracle " << want[i];
        fail(out, why.str());
      }
    }
  }
  return out;
}

PropertyOutcome hellinger_quadrature(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"Hellinger closed form vs quadrature"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mean(-5.0, 5.0);
  std::uniform_real_distribution<double> spread(0.2, 3.0);
  for (std::size_t t = 0; t < cases; ++t) {
    ++out.cases;
    const GaussianSummary a{mean(rng), spread(rng)};
    const GaussianSummary b{t % 7 == 0 ? a.mu : mean(rng), t % 5 == 0 ? a.sigma : spread(rng)};
    const double got = hellinger_squared(a, b);
    const double want = oracle_hellinger_squared(a.mu, a.sigma, b.mu, b.sigma);
    if (std::abs(got - want) > 1e-6) {
      std::ostringstream why;
      why << "N(" << a.mu << ", " << a.sigma << ") vs N(" << b.mu << ", " << b.sigma << "): " << got
          << " vs quadrature " << want;
      fail(out, why.str());
    }
  }
  return out;
}

PropertyOutcome wilcoxon_enumeration(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"Wilcoxon exact p vs sign enumeration"};
  std::mt19937_64 rng(seed);
  // Two-decimal values on a coarse grid so zero and tied differences show up.
  std::uniform_int_distribution<int> cents(9000, 9040);
  while (out.cases < cases) {
    const auto n = 1 + out.cases % 8;
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = cents(rng) / 100.0;
      y[i] = cents(rng) / 100.0;
    }
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any = any || x[i] != y[i];
    if (!any) continue;
    ++out.cases;
    const double got = wilcoxon_signed_rank(x, y).p_value;
    const double want = oracle_wilcoxon(x, y);
    if (std::abs(got - want) > 1e-12) {
      std::ostringstream why;
      why << "n = " << n << ": " << got << " vs enumeration " << want;
      fail(out, why.str());
    }
  }
  return out;
}

std::vector<PropertyOutcome> all_properties() {
  return {closeness_bounds(500, 11),   scale_invariance(500, 12),     weight_extremes(500, 13),
          stage2_oracle(1000, 14),     hellinger_quadrature(200, 15), wilcoxon_enumeration(200, 16)};
}

}  // namespace testing
