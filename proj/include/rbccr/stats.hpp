#pragma once

#include <vector>

#include "rbccr/matrix.hpp"

namespace rbccr {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    double alpha = 0.10;
    bool significant = false;
    bool degenerate = false;  // e.g. all paired differences zero
};

// One-sided Wilcoxon signed-rank test of H1: a > b (paired). Zero differences
// are dropped; midranks on tied |d|. Exact null distribution (sign-flip
// enumeration via dynamic programming) for n <= 12 effective pairs, normal
// approximation with tie-corrected variance above. All differences zero
// yields a degenerate result with p = 1.
TestResult wilcoxon_one_sided(const std::vector<double>& a, const std::vector<double>& b,
                              double alpha = 0.10);

struct FriedmanResult {
    TestResult test;
    std::vector<double> average_ranks;  // rank 1 = best (highest value)
};

// Friedman test over a datasets x methods matrix of mean scores. Per-row
// midranks; chi-square statistic with k - 1 degrees of freedom.
FriedmanResult friedman(const Matrix& means, double alpha = 0.10);

// Step-down Holm adjustment; output order matches input order.
std::vector<double> holm_adjust(const std::vector<double>& p_values);

// Midranks of a vector, rank 1 = largest value (ties share the average rank).
std::vector<double> midranks_descending(const std::vector<double>& values);

// Upper tail of the chi-square distribution.
double chi_squared_sf(double x, double degrees_of_freedom);

// Upper tail of the standard normal distribution.
double normal_sf(double z);

} // namespace rbccr
