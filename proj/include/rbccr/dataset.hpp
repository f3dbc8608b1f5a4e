#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rbccr/matrix.hpp"

namespace rbccr {

// Parse failure with the 1-based line number it occurred on.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A binary classification dataset. Exactly two distinct labels, with
// minority_label the rarer one (lexicographic tie-break on equal counts).
struct Dataset {
    std::string name;
    Matrix features;                  // n x m
    std::vector<std::string> labels;  // n entries, two distinct values
    std::string minority_label;

    std::size_t size() const { return features.rows(); }
    std::size_t num_features() const { return features.cols(); }
    std::size_t minority_count() const;
    std::size_t majority_count() const { return size() - minority_count(); }
    std::string majority_label() const;
    double imbalance_ratio() const;

    // 1 for minority rows, 0 for majority rows.
    std::vector<int> binary_labels() const;
};

// Validates the Dataset invariants; throws std::invalid_argument on violation.
void validate(const Dataset& d);

struct ScalingParams {
    std::vector<double> means;
    std::vector<double> standard_deviations;  // 1.0 for constant columns
};

// KEEL .dat format: "@relation/@attribute/@data" header, comma-separated data
// rows. Honors @inputs/@outputs when present, otherwise the last attribute is
// the class. Categorical values are coded by first appearance in the data.
Dataset parse_keel(const std::string& text, const std::string& name = "dataset");

// CSV with a header row; label column selected by name.
Dataset parse_csv(const std::string& text, const std::string& label_column,
                  const std::string& name = "dataset");

// CSV with a header row; label column selected by 0-based index.
Dataset parse_csv(const std::string& text, std::size_t label_index,
                  const std::string& name = "dataset");

// Serializes features + labels as CSV (header "f0,...,f<m-1>,label"); doubles
// are written with enough digits to round-trip exactly.
std::string to_csv(const Dataset& d);

std::string format_double(double v);

// Per-column z-score using the population standard deviation (divide by n);
// constant columns map to all-zeros.
std::pair<Dataset, ScalingParams> standardize(const Dataset& d);

// Applies previously fitted parameters (train-fold scaling applied to test).
Dataset apply_scaling(const Dataset& d, const ScalingParams& params);

// Row partition preserving within-class order: (X_min, X_maj).
std::pair<Matrix, Matrix> split_by_class(const Dataset& d);

// As split_by_class, but returning original row indices.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
split_indices_by_class(const Dataset& d);

struct FoldSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Stratified k-fold: folds partition the indices, per-class counts across
// folds differ by at most one, deterministic for a fixed seed.
std::vector<FoldSplit> stratified_kfold(const Dataset& d, std::size_t k, std::uint64_t seed);

// Dataset restricted to the given rows (in the given order).
Dataset subset(const Dataset& d, const std::vector<std::size_t>& indices);

} // namespace rbccr
