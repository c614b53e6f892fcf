#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankbench/error.hpp"

namespace rankbench {

enum class CriterionDirection { Benefit, Cost };

/// Per-column normalization applied before weighting.
///
/// Vector divides each column by its Euclidean norm, Max by its largest
/// entry. Identity leaves the raw ratings untouched and is the default.
enum class NormalizationScheme { Vector, Max, Identity };

inline constexpr NormalizationScheme kDefaultScheme = NormalizationScheme::Identity;

std::string_view to_string(CriterionDirection d) noexcept;
std::string_view to_string(NormalizationScheme s) noexcept;
CriterionDirection parse_direction(std::string_view text);
NormalizationScheme parse_scheme(std::string_view text);

/// Dense m x n matrix of nonnegative finite ratings with unique row
/// (alternative) and column (criterion) labels. Immutable once built.
class LabeledMatrix {
 public:
  LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                std::vector<double> values);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

  double at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols(), cols()};
  }
  std::vector<double> column(std::size_t c) const;
  std::span<const double> values() const noexcept { return values_; }

  // Index of a row label, or rows() when absent.
  std::size_t find_row(std::string_view label) const noexcept;
  std::size_t find_col(std::string_view label) const noexcept;

  LabeledMatrix with_values(std::vector<double> values) const;
  LabeledMatrix select_rows(std::span<const std::size_t> indices) const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<double> values_;
};

/// The mean matrix and the standard-deviation matrix of one benchmark study.
/// Both share shape and labels.
class DecisionMatrixPair {
 public:
  DecisionMatrixPair(LabeledMatrix mu, LabeledMatrix sigma);

  const LabeledMatrix& mu() const noexcept { return mu_; }
  const LabeledMatrix& sigma() const noexcept { return sigma_; }
  std::size_t alternatives() const noexcept { return mu_.rows(); }
  std::size_t criteria() const noexcept { return mu_.cols(); }
  const std::vector<std::string>& names() const noexcept { return mu_.row_labels(); }

  // Drops the named alternatives from both matrices. Unknown names are a BadValue.
  DecisionMatrixPair without(std::span<const std::string> names) const;
  DecisionMatrixPair select_rows(std::span<const std::size_t> indices) const;

 private:
  LabeledMatrix mu_;
  LabeledMatrix sigma_;
};

class WeightPair {
 public:
  WeightPair(double w_mu, double w_sigma);
  static WeightPair from_mean(double w_mu) { return {w_mu, 1.0 - w_mu}; }

  double mu() const noexcept { return w_mu_; }
  double sigma() const noexcept { return w_sigma_; }

 private:
  double w_mu_;
  double w_sigma_;
};

class CriterionWeights {
 public:
  explicit CriterionWeights(std::vector<double> weights);
  static CriterionWeights uniform(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::span<const double> values() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

inline constexpr double kWeightSumTolerance = 1e-9;

LabeledMatrix parse_matrix_csv(std::string_view text);
DecisionMatrixPair load_matrix_pair(std::string_view mean_csv, std::string_view std_csv);
DecisionMatrixPair load_matrix_pair_files(const std::string& mean_path,
                                          const std::string& std_path);
// One matrix from disk; errors name the path.
LabeledMatrix load_matrix_file(const std::string& path);
std::string to_csv(const LabeledMatrix& matrix);

// Divisor used for column j under a scheme; 0 for an all-zero column.
double column_divisor(std::span<const double> column, NormalizationScheme scheme);

LabeledMatrix normalize(const LabeledMatrix& matrix, NormalizationScheme scheme);
LabeledMatrix apply_weights(const LabeledMatrix& normalized, const CriterionWeights& weights);

}  // namespace rankbench
