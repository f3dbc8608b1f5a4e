#include "rbccr/reporting.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbccr {

std::vector<std::string> classifiers_in(const std::vector<EvalRecord>& records) {
    std::vector<std::string> out;
    for (const auto& r : records)
        if (std::find(out.begin(), out.end(), r.classifier) == out.end())
            out.push_back(r.classifier);
    return out;
}

std::vector<EvalRecord> filter_classifier(const std::vector<EvalRecord>& records,
                                          const std::string& classifier) {
    std::vector<EvalRecord> out;
    for (const auto& r : records)
        if (r.classifier == classifier) out.push_back(r);
    return out;
}

std::string means_csv(const std::vector<EvalRecord>& records) {
    std::string out = "classifier,dataset,method";
    for (const auto& name : kMetricNames) out += "," + name;
    out += '\n';
    for (const auto& classifier : classifiers_in(records)) {
        const auto table = rank_table(filter_classifier(records, classifier));
        for (std::size_t i = 0; i < table.datasets.size(); ++i) {
            for (std::size_t j = 0; j < table.methods.size(); ++j) {
                out += classifier + ',' + table.datasets[i] + ',' + table.methods[j];
                for (const auto& name : kMetricNames)
                    out += ',' + format_double(table.means.at(name)(i, j));
                out += '\n';
            }
        }
    }
    return out;
}

std::string ranks_csv(const std::vector<EvalRecord>& records) {
    std::string out = "classifier,metric,method,avg_rank\n";
    for (const auto& classifier : classifiers_in(records)) {
        const auto table = rank_table(filter_classifier(records, classifier));
        for (const auto& name : kMetricNames) {
            const auto& ranks = table.average_ranks.at(name);
            for (std::size_t j = 0; j < table.methods.size(); ++j) {
                out += classifier + ',' + name + ',' + table.methods[j] + ',' +
                       format_double(ranks[j]) + '\n';
            }
        }
    }
    return out;
}

std::string pairwise_wins_csv(const std::vector<EvalRecord>& records) {
    std::string out = "classifier,metric,method_a,method_b,wins_a,wins_b,ties\n";
    for (const auto& classifier : classifiers_in(records)) {
        const auto table = rank_table(filter_classifier(records, classifier));
        for (const auto& name : kMetricNames) {
            const Matrix& means = table.means.at(name);
            for (std::size_t a = 0; a < table.methods.size(); ++a) {
                for (std::size_t b = a + 1; b < table.methods.size(); ++b) {
                    std::size_t wins_a = 0, wins_b = 0, ties = 0;
                    for (std::size_t i = 0; i < table.datasets.size(); ++i) {
                        if (means(i, a) > means(i, b)) ++wins_a;
                        else if (means(i, b) > means(i, a)) ++wins_b;
                        else ++ties;
                    }
                    out += classifier + ',' + name + ',' + table.methods[a] + ',' +
                           table.methods[b] + ',' + std::to_string(wins_a) + ',' +
                           std::to_string(wins_b) + ',' + std::to_string(ties) + '\n';
                }
            }
        }
    }
    return out;
}

std::string wilcoxon_pair_csv(const std::vector<EvalRecord>& records,
                              const std::string& method_a, const std::string& method_b,
                              double alpha) {
    std::string out = "classifier,metric,method_a,method_b,wins_a,wins_b,statistic,p_value,"
                      "significant\n";
    for (const auto& classifier : classifiers_in(records)) {
        const auto table = rank_table(filter_classifier(records, classifier));
        const auto ia = std::find(table.methods.begin(), table.methods.end(), method_a);
        const auto ib = std::find(table.methods.begin(), table.methods.end(), method_b);
        if (ia == table.methods.end() || ib == table.methods.end()) continue;
        const std::size_t a = static_cast<std::size_t>(ia - table.methods.begin());
        const std::size_t b = static_cast<std::size_t>(ib - table.methods.begin());
        for (const auto& name : kMetricNames) {
            const Matrix& means = table.means.at(name);
            std::vector<double> va(table.datasets.size()), vb(table.datasets.size());
            std::size_t wins_a = 0, wins_b = 0;
            for (std::size_t i = 0; i < table.datasets.size(); ++i) {
                va[i] = means(i, a);
                vb[i] = means(i, b);
                if (va[i] > vb[i]) ++wins_a;
                else if (vb[i] > va[i]) ++wins_b;
            }
            TestResult res;
            try {
                res = wilcoxon_one_sided(va, vb, alpha);
            } catch (const std::exception&) {
                res.degenerate = true;
            }
            out += classifier + ',' + name + ',' + method_a + ',' + method_b + ',' +
                   std::to_string(wins_a) + ',' + std::to_string(wins_b) + ',' +
                   format_double(res.statistic) + ',' + format_double(res.p_value) + ',' +
                   (res.significant ? "yes" : "no") + '\n';
        }
    }
    return out;
}

std::string friedman_csv(const std::vector<EvalRecord>& records, double alpha) {
    std::string out = "classifier,metric,method,avg_rank,chi_squared,p_value,significant\n";
    for (const auto& classifier : classifiers_in(records)) {
        const auto table = rank_table(filter_classifier(records, classifier));
        if (table.methods.size() < 2 || table.datasets.size() < 2) continue;
        for (const auto& name : kMetricNames) {
            const auto result = friedman(table.means.at(name), alpha);
            for (std::size_t j = 0; j < table.methods.size(); ++j) {
                out += classifier + ',' + name + ',' + table.methods[j] + ',' +
                       format_double(result.average_ranks[j]) + ',' +
                       format_double(result.test.statistic) + ',' +
                       format_double(result.test.p_value) + ',' +
                       (result.test.significant ? "yes" : "no") + '\n';
            }
        }
    }
    return out;
}

std::string holm_csv(const std::vector<EvalRecord>& records, double alpha) {
    std::string out = "classifier,metric,best_method,other_method,p_value,holm_p,significant\n";
    for (const auto& classifier : classifiers_in(records)) {
        const auto table = rank_table(filter_classifier(records, classifier));
        if (table.methods.size() < 2) continue;
        for (const auto& name : kMetricNames) {
            const auto& avg_ranks = table.average_ranks.at(name);
            const std::size_t best = static_cast<std::size_t>(
                std::min_element(avg_ranks.begin(), avg_ranks.end()) - avg_ranks.begin());
            const Matrix& means = table.means.at(name);
            std::vector<double> raw;
            std::vector<std::size_t> others;
            for (std::size_t j = 0; j < table.methods.size(); ++j) {
                if (j == best) continue;
                std::vector<double> va(table.datasets.size()), vb(table.datasets.size());
                for (std::size_t i = 0; i < table.datasets.size(); ++i) {
                    va[i] = means(i, best);
                    vb[i] = means(i, j);
                }
                TestResult res;
                try {
                    res = wilcoxon_one_sided(va, vb, alpha);
                } catch (const std::exception&) {
                    res.degenerate = true;
                }
                raw.push_back(res.p_value);
                others.push_back(j);
            }
            const auto adjusted = holm_adjust(raw);
            for (std::size_t k = 0; k < others.size(); ++k) {
                out += classifier + ',' + name + ',' + table.methods[best] + ',' +
                       table.methods[others[k]] + ',' + format_double(raw[k]) + ',' +
                       format_double(adjusted[k]) + ',' + (adjusted[k] < alpha ? "yes" : "no") +
                       '\n';
            }
        }
    }
    return out;
}

} // namespace rbccr
