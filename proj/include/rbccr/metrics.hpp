#pragma once

#include <string>
#include <vector>

namespace rbccr {

// The six evaluation metrics. Minority is the positive class throughout.
// Zero-denominator convention: precision/recall/specificity are 0 when their
// denominator is 0, and f_measure is 0 when precision + recall is 0.
struct MetricSet {
    double precision = 0.0;
    double recall = 0.0;
    double specificity = 0.0;
    double auc = 0.0;
    double f_measure = 0.0;
    double g_mean = 0.0;

    double get(const std::string& metric_name) const;
};

inline const std::vector<std::string> kMetricNames = {"precision",  "recall",    "specificity",
                                                      "auc",        "f_measure", "g_mean"};

// Label-based metrics (auc left at 0; fill it from auc() below). Labels are
// 1 for minority, 0 for majority.
MetricSet confusion_metrics(const std::vector<int>& true_labels,
                            const std::vector<int>& predicted_labels);

// Rank-based ROC area (Mann-Whitney with midranks for tied scores). Both
// classes must be present.
double auc(const std::vector<int>& true_labels, const std::vector<double>& scores);

} // namespace rbccr
