#include "rbccr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rbccr {

double MetricSet::get(const std::string& metric_name) const {
    if (metric_name == "precision") return precision;
    if (metric_name == "recall") return recall;
    if (metric_name == "specificity") return specificity;
    if (metric_name == "auc") return auc;
    if (metric_name == "f_measure") return f_measure;
    if (metric_name == "g_mean") return g_mean;
    throw std::invalid_argument("unknown metric '" + metric_name + "'");
}

MetricSet confusion_metrics(const std::vector<int>& true_labels,
                            const std::vector<int>& predicted_labels) {
    if (true_labels.size() != predicted_labels.size())
        throw std::invalid_argument("confusion_metrics: length mismatch");
    double tp = 0, fp = 0, tn = 0, fn = 0;
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        if (true_labels[i] == 1)
            predicted_labels[i] == 1 ? ++tp : ++fn;
        else
            predicted_labels[i] == 1 ? ++fp : ++tn;
    }
    MetricSet m;
    m.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
    m.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
    m.specificity = tn + fp > 0 ? tn / (tn + fp) : 0.0;
    m.f_measure = m.precision + m.recall > 0
                      ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                      : 0.0;
    m.g_mean = std::sqrt(m.recall * m.specificity);
    return m;
}

double auc(const std::vector<int>& true_labels, const std::vector<double>& scores) {
    if (true_labels.size() != scores.size())
        throw std::invalid_argument("auc: length mismatch");
    const std::size_t n = scores.size();
    std::size_t n_min = 0;
    for (int l : true_labels) n_min += static_cast<std::size_t>(l == 1);
    const std::size_t n_maj = n - n_min;
    if (n_min == 0 || n_maj == 0) throw std::invalid_argument("auc: single-class input");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Midranks over tied score groups; sum ranks of minority rows.
    double rank_sum_min = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // (first + last) / 2
        for (std::size_t k = i; k < j; ++k)
            if (true_labels[order[k]] == 1) rank_sum_min += midrank;
        i = j;
    }
    const double n_min_d = static_cast<double>(n_min);
    return (rank_sum_min - n_min_d * (n_min_d + 1.0) / 2.0) /
           (n_min_d * static_cast<double>(n_maj));
}

} // namespace rbccr
