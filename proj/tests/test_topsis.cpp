#include <doctest.h>

#include <random>

#include "rankbench/topsis.hpp"
#include "support.hpp"

using namespace rankbench;

namespace {

LabeledMatrix small() { return parse_matrix_csv("alg,x,y\nA,1,0\nB,0,1\nC,1,1\n"); }

}  // namespace

TEST_CASE("topsis: hand-worked closeness") {
  const auto xi = topsis_rank(small(), CriterionWeights::uniform(2), CriterionDirection::Benefit,
                              NormalizationScheme::Identity);
  CHECK(xi[0] == doctest::Approx(0.5));
  CHECK(xi[1] == doctest::Approx(0.5));
  CHECK(xi[2] == doctest::Approx(1.0));
}

TEST_CASE("topsis: ideals follow the direction of each column") {
  const auto m = apply_weights(small(), CriterionWeights::uniform(2));
  const CriterionDirection dirs[] = {CriterionDirection::Benefit, CriterionDirection::Cost};
  const auto ideals = ideal_solutions(m, dirs);
  CHECK(ideals.positive == std::vector<double>{0.5, 0.0});
  CHECK(ideals.negative == std::vector<double>{0.0, 0.5});
  const auto sep = separation_distances(m, ideals);
  CHECK(sep.d_plus[0] == 0.0);
  CHECK(sep.d_minus[1] == 0.0);
  const auto xi = closeness(sep);
  CHECK(xi[0] == 1.0);
  CHECK(xi[1] == 0.0);
}

TEST_CASE("topsis: identical rows get the degenerate score") {
  const auto m = parse_matrix_csv("alg,x,y\nA,2,3\nB,2,3\n");
  for (auto scheme : {NormalizationScheme::Vector, NormalizationScheme::Max, NormalizationScheme::Identity}) {
    const auto xi = topsis_rank(m, CriterionWeights::uniform(2), CriterionDirection::Cost, scheme);
    CHECK(xi[0] == kDegenerateCloseness);
    CHECK(xi[1] == kDegenerateCloseness);
  }
}

TEST_CASE("topsis: single alternative") {
  const auto m = parse_matrix_csv("alg,x\nA,2\n");
  CHECK(topsis_rank(m, CriterionWeights::uniform(1), CriterionDirection::Benefit,
                    NormalizationScheme::Vector)[0] == kDegenerateCloseness);
}

TEST_CASE("topsis: direction count must match the columns") {
  const CriterionDirection one[] = {CriterionDirection::Benefit};
  CHECK_THROWS_AS(topsis_rank(small(), CriterionWeights::uniform(2), one, NormalizationScheme::Max),
                  RankError);
}

TEST_CASE("topsis: matches the brute-force oracle with mixed directions") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int t = 0; t < 300; ++t) {
    const auto m = 1 + rng() % 9;
    const auto n = 1 + rng() % 7;
    const auto mat = testing::random_matrix(rng, m, n, 0.0, 10.0);
    std::vector<CriterionDirection> dirs(n);
    std::vector<bool> benefit(n);
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      benefit[j] = rng() % 2 == 0;
      dirs[j] = benefit[j] ? CriterionDirection::Benefit : CriterionDirection::Cost;
      w[j] = u(rng);
      total += w[j];
    }
    for (auto& x : w) x /= total;
    const auto scheme = static_cast<NormalizationScheme>(t % 3);
    const auto got = topsis_rank(mat, CriterionWeights(w), dirs, scheme);
    const auto want = testing::oracle_topsis(testing::dense(mat), w, benefit, scheme);
    for (std::size_t i = 0; i < m; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

TEST_CASE("topsis: flipping every direction gives 1 - xi") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto mat = testing::random_matrix(rng, 2 + rng() % 6, 1 + rng() % 5, 0.0, 10.0);
    const auto w = CriterionWeights::uniform(mat.cols());
    const auto scheme = static_cast<NormalizationScheme>(t % 3);
    const auto b = topsis_rank(mat, w, CriterionDirection::Benefit, scheme);
    const auto c = topsis_rank(mat, w, CriterionDirection::Cost, scheme);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] + c[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("topsis: a dominating row never scores lower") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> bump(0.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    const auto base = testing::random_matrix(rng, 2 + rng() % 6, 1 + rng() % 5, 0.0, 10.0);
    std::vector<double> v(base.values().begin(), base.values().end());
    // Row 0 becomes at least as good as row 1 everywhere.
    for (std::size_t c = 0; c < base.cols(); ++c) v[c] = base.at(1, c) + bump(rng);
    const auto mat = base.with_values(v);
    const auto xi = topsis_rank(mat, CriterionWeights::uniform(mat.cols()), CriterionDirection::Benefit,
                                static_cast<NormalizationScheme>(t % 3));
    CHECK(xi[0] >= xi[1] - 1e-12);
  }
}

TEST_CASE("topsis: row permutation permutes the scores") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const auto mat = testing::random_matrix(rng, 2 + rng() % 7, 1 + rng() % 5, 0.0, 10.0);
    std::vector<std::size_t> perm(mat.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto scheme = static_cast<NormalizationScheme>(t % 3);
    const auto w = CriterionWeights::uniform(mat.cols());
    const auto a = topsis_rank(mat, w, CriterionDirection::Benefit, scheme);
    const auto b = topsis_rank(mat.select_rows(perm), w, CriterionDirection::Benefit, scheme);
    for (std::size_t i = 0; i < perm.size(); ++i) CHECK(b[i] == doctest::Approx(a[perm[i]]).epsilon(1e-12));
  }
}
