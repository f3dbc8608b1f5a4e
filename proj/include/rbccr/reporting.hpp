#pragma once

#include <string>
#include <vector>

#include "rbccr/evaluation.hpp"
#include "rbccr/stats.hpp"

namespace rbccr {

// CSV report builders over evaluation records. Records may mix classifiers;
// every table groups by classifier first.

// classifier,dataset,method,<six metric means>
std::string means_csv(const std::vector<EvalRecord>& records);

// classifier,metric,method,avg_rank
std::string ranks_csv(const std::vector<EvalRecord>& records);

// classifier,metric,method_a,method_b,wins_a,wins_b,ties  (per-dataset means)
std::string pairwise_wins_csv(const std::vector<EvalRecord>& records);

// One-sided Wilcoxon of method_a > method_b over per-dataset means:
// classifier,metric,wins_a,wins_b,statistic,p_value,significant
std::string wilcoxon_pair_csv(const std::vector<EvalRecord>& records,
                              const std::string& method_a, const std::string& method_b,
                              double alpha = 0.10);

// classifier,metric,chi_squared,p_value,significant plus per-method rank rows
std::string friedman_csv(const std::vector<EvalRecord>& records, double alpha = 0.10);

// Holm-adjusted one-sided Wilcoxon comparisons of the top-ranked method
// against every other method:
// classifier,metric,best_method,other_method,p_value,holm_p,significant
std::string holm_csv(const std::vector<EvalRecord>& records, double alpha = 0.10);

// Distinct classifiers in record order.
std::vector<std::string> classifiers_in(const std::vector<EvalRecord>& records);

// Records of one classifier.
std::vector<EvalRecord> filter_classifier(const std::vector<EvalRecord>& records,
                                          const std::string& classifier);

} // namespace rbccr
