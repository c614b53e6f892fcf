#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rankbench/atopsis.hpp"
#include "rankbench/decision_core.hpp"
#include "rankbench/report.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
  return std::string(RANKBENCH_DATA_DIR) + "/" + name;
}

inline rankbench::DecisionMatrixPair case1() {
  return rankbench::load_matrix_pair_files(data_path("case1_mu.csv"), data_path("case1_sigma.csv"));
}

inline rankbench::DecisionMatrixPair case1_without_knn() {
  const std::vector<std::string> knn{"KNN"};
  return case1().without(knn);
}

inline rankbench::DecisionMatrixPair case2() {
  return rankbench::load_matrix_pair_files(data_path("case2_mu.csv"), data_path("case2_sigma.csv"));
}

// Request body for the ranking service.
inline rankbench::Json request_body(const rankbench::DecisionMatrixPair& pair) {
  auto rows = [](const rankbench::LabeledMatrix& m) {
    rankbench::Json out = rankbench::Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
    }
    return out;
  };
  rankbench::Json j;
  j["algorithms"] = pair.names();
  j["benchmarks"] = pair.mu().col_labels();
  j["mu"] = rows(pair.mu());
  j["sigma"] = rows(pair.sigma());
  return j;
}

// "CHO > MV > AVG" -> {"CHO", "MV", "AVG"}
inline std::vector<std::string> split_order(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(" > ", pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(text.substr(pos, next - pos));
    pos = next + 3;
  }
  return out;
}

// Dense row-major matrix used by the oracles below. Nothing here calls the
// library's numeric code.
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> v;
  double& operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

inline Dense dense(const rankbench::LabeledMatrix& m) {
  return {m.rows(), m.cols(), {m.values().begin(), m.values().end()}};
}

inline std::vector<double> oracle_topsis(Dense m, const std::vector<double>& w,
                                         const std::vector<bool>& benefit,
                                         rankbench::NormalizationScheme scheme) {
  for (std::size_t c = 0; c < m.cols; ++c) {
    double d = 1.0;
    if (scheme == rankbench::NormalizationScheme::Vector) {
      d = 0.0;
      for (std::size_t r = 0; r < m.rows; ++r) d += m(r, c) * m(r, c);
      d = std::sqrt(d);
    } else if (scheme == rankbench::NormalizationScheme::Max) {
      d = 0.0;
      for (std::size_t r = 0; r < m.rows; ++r) d = std::max(d, m(r, c));
    }
    for (std::size_t r = 0; r < m.rows; ++r) m(r, c) = (d == 0.0 ? 0.0 : m(r, c) / d) * w[c];
  }
  std::vector<double> xi(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double dp = 0.0;
    double dm = 0.0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      double hi = m(0, c);
      double lo = m(0, c);
      for (std::size_t k = 1; k < m.rows; ++k) {
        hi = std::max(hi, m(k, c));
        lo = std::min(lo, m(k, c));
      }
      const double best = benefit[c] ? hi : lo;
      const double worst = benefit[c] ? lo : hi;
      dp += (m(r, c) - best) * (m(r, c) - best);
      dm += (m(r, c) - worst) * (m(r, c) - worst);
    }
    dp = std::sqrt(dp);
    dm = std::sqrt(dm);
    xi[r] = dp + dm == 0.0 ? 0.5 : dm / (dp + dm);
  }
  return xi;
}

inline std::vector<double> oracle_stage2(const std::vector<double>& x1, const std::vector<double>& x2,
                                         double w1, double w2) {
  Dense c{x1.size(), 2, {}};
  for (std::size_t i = 0; i < x1.size(); ++i) {
    c.v.push_back(x1[i]);
    c.v.push_back(x2[i]);
  }
  // Weighting without renormalizing is oracle_topsis with identity and both
  // columns benefit.
  return oracle_topsis(c, {w1, w2}, {true, true}, rankbench::NormalizationScheme::Identity);
}

inline std::vector<double> oracle_atopsis(const rankbench::DecisionMatrixPair& pair, double w_mu,
                                          bool mean_benefit, rankbench::NormalizationScheme scheme) {
  const auto n = pair.criteria();
  const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
  const auto x1 = oracle_topsis(dense(pair.mu()), uniform, std::vector<bool>(n, mean_benefit), scheme);
  const auto x2 = oracle_topsis(dense(pair.sigma()), uniform, std::vector<bool>(n, false), scheme);
  return oracle_stage2(x1, x2, w_mu, 1.0 - w_mu);
}

// Bhattacharyya coefficient by trapezoid quadrature; H^2 = 1 - BC.
inline double oracle_hellinger_squared(double mu1, double s1, double mu2, double s2) {
  const double lo = std::min(mu1 - 12.0 * s1, mu2 - 12.0 * s2);
  const double hi = std::max(mu1 + 12.0 * s1, mu2 + 12.0 * s2);
  const int steps = 200000;
  const double h = (hi - lo) / steps;
  const double pi = std::acos(-1.0);
  auto pdf = [&](double x, double m, double s) {
    const double z = (x - m) / s;
    return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * pi));
  };
  double sum = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + h * i;
    const double f = std::sqrt(pdf(x, mu1, s1) * pdf(x, mu2, s2));
    sum += (i == 0 || i == steps) ? 0.5 * f : f;
  }
  return 1.0 - sum * h;
}

// Two-sided signed-rank p-value by listing every sign pattern. Ranks are
// midranks computed by counting, ties within 1e-9 relative.
inline double oracle_wilcoxon(const std::vector<double>& x, const std::vector<double>& y) {
  auto same = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!same(x[i], y[i])) d.push_back(x[i] - y[i]);
  }
  const auto n = d.size();
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    double below = 0.0;
    double equal = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (same(std::abs(d[j]), std::abs(d[i]))) equal += 1.0;
      else if (std::abs(d[j]) < std::abs(d[i])) below += 1.0;
    }
    rank[i] = below + (equal + 1.0) / 2.0;
  }
  auto stat = [&](std::uint32_t positive_mask) {
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t i = 0; i < n; ++i) ((positive_mask >> i) & 1u ? plus : minus) += rank[i];
    return std::min(plus, minus);
  };
  std::uint32_t observed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] > 0) observed |= 1u << i;
  }
  const double w = stat(observed);
  std::uint64_t hits = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (stat(mask) <= w + 1e-9) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(1u << n);
}

inline std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline rankbench::LabeledMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                              double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(m * n);
  for (auto& x : v) x = u(rng);
  return {labels("A", m), labels("B", n), std::move(v)};
}

inline rankbench::DecisionMatrixPair random_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rows(2, 9);
  std::uniform_int_distribution<std::size_t> cols(1, 12);
  const auto m = rows(rng);
  const auto n = cols(rng);
  auto mu = random_matrix(rng, m, n, 1.0, 100.0);
  auto sigma = random_matrix(rng, m, n, 0.01, 5.0);
  return {std::move(mu), std::move(sigma)};
}

}  // namespace testing
