#include "rankbench/decision_core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace rankbench {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadValue: return "BadValue";
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::WeightInvalid: return "WeightInvalid";
    case ErrorKind::NonPositiveSigma: return "NonPositiveSigma";
    case ErrorKind::NonPositiveSigmaFloor: return "NonPositiveSigmaFloor";
    case ErrorKind::TooFewAlgorithms: return "TooFewAlgorithms";
    case ErrorKind::TooFewBenchmarks: return "TooFewBenchmarks";
    case ErrorKind::AllZeroDifferences: return "AllZeroDifferences";
    case ErrorKind::BadGrid: return "BadGrid";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

std::string_view to_string(CriterionDirection d) noexcept {
  return d == CriterionDirection::Benefit ? "benefit" : "cost";
}

std::string_view to_string(NormalizationScheme s) noexcept {
  switch (s) {
    case NormalizationScheme::Vector: return "vector";
    case NormalizationScheme::Max: return "max";
    case NormalizationScheme::Identity: return "none";
  }
  return "none";
}

CriterionDirection parse_direction(std::string_view text) {
  if (text == "benefit") return CriterionDirection::Benefit;
  if (text == "cost") return CriterionDirection::Cost;
  throw RankError(ErrorKind::BadValue, "unknown direction '" + std::string(text) + "'");
}

NormalizationScheme parse_scheme(std::string_view text) {
  if (text == "vector") return NormalizationScheme::Vector;
  if (text == "max") return NormalizationScheme::Max;
  if (text == "none" || text == "identity") return NormalizationScheme::Identity;
  throw RankError(ErrorKind::BadValue, "unknown normalization '" + std::string(text) + "'");
}

namespace {

void require_unique(const std::vector<std::string>& labels, const char* axis) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw RankError(ErrorKind::BadValue, std::string("duplicate ") + axis + " label '" + l + "'");
    }
  }
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels, std::vector<double> values)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      values_(std::move(values)) {
  if (row_labels_.empty() || col_labels_.empty()) {
    throw RankError(ErrorKind::EmptyMatrix, "matrix needs at least one row and one column");
  }
  if (values_.size() != row_labels_.size() * col_labels_.size()) {
    throw RankError(ErrorKind::ShapeMismatch,
                    "expected " + std::to_string(row_labels_.size() * col_labels_.size()) +
                        " values, got " + std::to_string(values_.size()));
  }
  require_unique(row_labels_, "row");
  require_unique(col_labels_, "column");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!std::isfinite(v) || v < 0.0) {
      const auto r = k / cols();
      const auto c = k % cols();
      throw RankError(ErrorKind::BadValue, "entry (" + row_labels_[r] + ", " + col_labels_[c] +
                                               ") must be finite and nonnegative");
    }
  }
}

std::vector<double> LabeledMatrix::column(std::size_t c) const {
  std::vector<double> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

std::size_t LabeledMatrix::find_row(std::string_view label) const noexcept {
  return static_cast<std::size_t>(
      std::find(row_labels_.begin(), row_labels_.end(), label) - row_labels_.begin());
}

std::size_t LabeledMatrix::find_col(std::string_view label) const noexcept {
  return static_cast<std::size_t>(
      std::find(col_labels_.begin(), col_labels_.end(), label) - col_labels_.begin());
}

LabeledMatrix LabeledMatrix::with_values(std::vector<double> values) const {
  return {row_labels_, col_labels_, std::move(values)};
}

LabeledMatrix LabeledMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<std::string> labels;
  std::vector<double> values;
  labels.reserve(indices.size());
  values.reserve(indices.size() * cols());
  for (auto i : indices) {
    labels.push_back(row_labels_.at(i));
    const auto r = row(i);
    values.insert(values.end(), r.begin(), r.end());
  }
  return {std::move(labels), col_labels_, std::move(values)};
}

DecisionMatrixPair::DecisionMatrixPair(LabeledMatrix mu, LabeledMatrix sigma)
    : mu_(std::move(mu)), sigma_(std::move(sigma)) {
  if (mu_.rows() != sigma_.rows() || mu_.cols() != sigma_.cols()) {
    throw RankError(ErrorKind::ShapeMismatch,
                    "mean matrix is " + std::to_string(mu_.rows()) + "x" +
                        std::to_string(mu_.cols()) + " but std matrix is " +
                        std::to_string(sigma_.rows()) + "x" + std::to_string(sigma_.cols()));
  }
  if (mu_.row_labels() != sigma_.row_labels() || mu_.col_labels() != sigma_.col_labels()) {
    throw RankError(ErrorKind::ShapeMismatch, "mean and std matrices carry different labels");
  }
}

DecisionMatrixPair DecisionMatrixPair::select_rows(std::span<const std::size_t> indices) const {
  return {mu_.select_rows(indices), sigma_.select_rows(indices)};
}

DecisionMatrixPair DecisionMatrixPair::without(std::span<const std::string> names) const {
  for (const auto& n : names) {
    if (mu_.find_row(n) == mu_.rows()) {
      throw RankError(ErrorKind::BadValue, "cannot exclude unknown algorithm '" + n + "'");
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < alternatives(); ++i) {
    if (std::find(names.begin(), names.end(), mu_.row_labels()[i]) == names.end()) {
      keep.push_back(i);
    }
  }
  if (keep.empty()) throw RankError(ErrorKind::EmptyMatrix, "every algorithm was excluded");
  return select_rows(keep);
}

WeightPair::WeightPair(double w_mu, double w_sigma) : w_mu_(w_mu), w_sigma_(w_sigma) {
  const bool in_range = std::isfinite(w_mu) && std::isfinite(w_sigma) && w_mu >= 0.0 &&
                        w_mu <= 1.0 && w_sigma >= 0.0 && w_sigma <= 1.0;
  if (!in_range || std::abs(w_mu + w_sigma - 1.0) > kWeightSumTolerance) {
    throw RankError(ErrorKind::WeightInvalid,
                    "weights must lie in [0,1] and sum to 1 (got " + std::to_string(w_mu) + ", " +
                        std::to_string(w_sigma) + ")");
  }
}

CriterionWeights::CriterionWeights(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw RankError(ErrorKind::LengthMismatch, "empty criterion weights");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw RankError(ErrorKind::WeightInvalid, "criterion weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw RankError(ErrorKind::WeightInvalid, "criterion weights must sum to 1");
  }
}

CriterionWeights CriterionWeights::uniform(std::size_t n) {
  if (n == 0) throw RankError(ErrorKind::LengthMismatch, "no criteria");
  return CriterionWeights(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

struct Cell {
  std::string text;
  bool quoted = false;
};

// Splits CSV text into records. Quoted fields may hold separators, doubled
// quotes and line breaks.
std::vector<std::vector<Cell>> split_records(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<std::vector<Cell>> records;
  std::vector<Cell> record;
  Cell cell;
  bool in_quotes = false;
  bool record_has_content = false;

  auto end_cell = [&] {
    if (!cell.quoted) cell.text = std::string(trim(cell.text));
    record.push_back(std::move(cell));
    cell = Cell{};
  };
  auto end_record = [&] {
    end_cell();
    if (record_has_content) records.push_back(std::move(record));
    record.clear();
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.text.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell.text.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!trim(cell.text).empty()) {
          throw RankError(ErrorKind::BadValue, "stray quote inside unquoted field");
        }
        cell.text.clear();
        cell.quoted = true;
        in_quotes = true;
        record_has_content = true;
        break;
      case ',':
        end_cell();
        record_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        if (cell.quoted) {
          if (ch != ' ' && ch != '\t') {
            throw RankError(ErrorKind::BadValue, "text after closing quote");
          }
          break;
        }
        cell.text.push_back(ch);
        if (ch != ' ' && ch != '\t') record_has_content = true;
    }
  }
  if (in_quotes) throw RankError(ErrorKind::BadValue, "unterminated quoted field");
  end_record();
  return records;
}

double parse_number(const Cell& cell, const std::string& row, const std::string& col) {
  std::string text = std::string(trim(cell.text));
  auto bad = [&](const char* why) {
    return RankError(ErrorKind::BadValue,
                     "cell (" + row + ", " + col + ") = '" + cell.text + "': " + why);
  };
  if (text.empty()) throw bad("empty cell");
  if (text.find('.') == std::string::npos) std::replace(text.begin(), text.end(), ',', '.');
  if (text.front() == '-' || text.front() == '+') throw bad("signed values are not allowed");
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::fixed);
  if (ec != std::errc{} || ptr != end) {
    auto [ptr2, ec2] = std::from_chars(begin, end, value, std::chars_format::general);
    if (ec2 != std::errc{} || ptr2 != end) throw bad("not a number");
  }
  if (!std::isfinite(value)) throw bad("not finite");
  return value;
}

}  // namespace

LabeledMatrix parse_matrix_csv(std::string_view text) {
  const auto records = split_records(text);
  if (records.empty()) throw RankError(ErrorKind::EmptyMatrix, "no header row");
  const auto& header = records.front();
  if (header.size() < 2) throw RankError(ErrorKind::EmptyMatrix, "header names no benchmarks");
  if (records.size() < 2) throw RankError(ErrorKind::EmptyMatrix, "no algorithm rows");

  std::vector<std::string> cols;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].text.empty()) throw RankError(ErrorKind::BadValue, "empty benchmark name");
    cols.push_back(std::string(trim(header[c].text)));
  }
  std::vector<std::string> rows;
  std::vector<double> values;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw RankError(ErrorKind::ShapeMismatch, "row " + std::to_string(r) + " has " +
                                                    std::to_string(rec.size()) +
                                                    " cells, header has " +
                                                    std::to_string(header.size()));
    }
    std::string name(trim(rec[0].text));
    if (name.empty()) throw RankError(ErrorKind::BadValue, "empty algorithm name");
    for (std::size_t c = 1; c < rec.size(); ++c) {
      values.push_back(parse_number(rec[c], name, cols[c - 1]));
    }
    rows.push_back(std::move(name));
  }
  return {std::move(rows), std::move(cols), std::move(values)};
}

namespace {

DecisionMatrixPair align_pair(LabeledMatrix mu, LabeledMatrix sigma) {
  if (mu.rows() != sigma.rows() || mu.cols() != sigma.cols()) {
    return {std::move(mu), std::move(sigma)};  // throws ShapeMismatch with both shapes
  }
  // Realign the std file to the mean file's label order.
  std::vector<double> aligned(mu.rows() * mu.cols());
  for (std::size_t r = 0; r < mu.rows(); ++r) {
    const auto sr = sigma.find_row(mu.row_labels()[r]);
    if (sr == sigma.rows()) {
      throw RankError(ErrorKind::ShapeMismatch,
                      "algorithm '" + mu.row_labels()[r] + "' missing from std file");
    }
    for (std::size_t c = 0; c < mu.cols(); ++c) {
      const auto sc = sigma.find_col(mu.col_labels()[c]);
      if (sc == sigma.cols()) {
        throw RankError(ErrorKind::ShapeMismatch,
                        "benchmark '" + mu.col_labels()[c] + "' missing from std file");
      }
      aligned[r * mu.cols() + c] = sigma.at(sr, sc);
    }
  }
  LabeledMatrix realigned = mu.with_values(std::move(aligned));
  return {std::move(mu), std::move(realigned)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RankError(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

LabeledMatrix parse_file(const std::string& path) {
  const auto text = read_file(path);
  try {
    return parse_matrix_csv(text);
  } catch (const RankError& e) {
    throw RankError(e.kind(), path + ": " + e.what());
  }
}

}  // namespace

DecisionMatrixPair load_matrix_pair(std::string_view mean_csv, std::string_view std_csv) {
  return align_pair(parse_matrix_csv(mean_csv), parse_matrix_csv(std_csv));
}

DecisionMatrixPair load_matrix_pair_files(const std::string& mean_path,
                                          const std::string& std_path) {
  return align_pair(parse_file(mean_path), parse_file(std_path));
}

LabeledMatrix load_matrix_file(const std::string& path) { return parse_file(path); }

std::string to_csv(const LabeledMatrix& matrix) {
  std::ostringstream out;
  out.precision(17);
  out << "algorithm";
  for (const auto& c : matrix.col_labels()) out << ',' << csv_field(c);
  out << '\n';
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    out << csv_field(matrix.row_labels()[r]);
    for (double v : matrix.row(r)) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Normalization and weighting

double column_divisor(std::span<const double> column, NormalizationScheme scheme) {
  switch (scheme) {
    case NormalizationScheme::Vector: {
      double sq = 0.0;
      for (double v : column) sq += v * v;
      return std::sqrt(sq);
    }
    case NormalizationScheme::Max:
      return column.empty() ? 0.0 : *std::max_element(column.begin(), column.end());
    case NormalizationScheme::Identity:
      return std::all_of(column.begin(), column.end(), [](double v) { return v == 0.0; }) ? 0.0
                                                                                          : 1.0;
  }
  return 1.0;
}

LabeledMatrix normalize(const LabeledMatrix& matrix, NormalizationScheme scheme) {
  if (scheme == NormalizationScheme::Identity) return matrix;
  std::vector<double> out(matrix.values().begin(), matrix.values().end());
  for (std::size_t c = 0; c < matrix.cols(); ++c) {
    const auto col = matrix.column(c);
    const double divisor = column_divisor(col, scheme);
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
      // All-zero columns stay zero.
      out[r * matrix.cols() + c] = divisor == 0.0 ? 0.0 : col[r] / divisor;
    }
  }
  return matrix.with_values(std::move(out));
}

LabeledMatrix apply_weights(const LabeledMatrix& normalized, const CriterionWeights& weights) {
  if (weights.size() != normalized.cols()) {
    throw RankError(ErrorKind::LengthMismatch,
                    "got " + std::to_string(weights.size()) + " weights for " +
                        std::to_string(normalized.cols()) + " criteria");
  }
  std::vector<double> out(normalized.values().begin(), normalized.values().end());
  for (std::size_t r = 0; r < normalized.rows(); ++r) {
    for (std::size_t c = 0; c < normalized.cols(); ++c) out[r * normalized.cols() + c] *= weights[c];
  }
  return normalized.with_values(std::move(out));
}

}  // namespace rankbench
