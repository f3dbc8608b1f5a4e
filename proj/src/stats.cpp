#include "rbccr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rbccr {

namespace {

// Midranks of |values| ascending (rank 1 = smallest magnitude).
std::vector<double> midranks_abs_ascending(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(values[a]) < std::abs(values[b]);
    });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && std::abs(values[order[j]]) == std::abs(values[order[i]])) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = midrank;
        i = j;
    }
    return ranks;
}

// Regularized incomplete gamma, series/continued-fraction split.
double gamma_q_cf(double a, double x) {
    const double eps = 1e-15;
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_p_series(double a, double x) {
    const double eps = 1e-15;
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * eps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q(double a, double x) {
    if (x <= 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

} // namespace

double chi_squared_sf(double x, double degrees_of_freedom) {
    if (degrees_of_freedom <= 0.0)
        throw std::invalid_argument("chi_squared_sf: degrees of freedom must be > 0");
    return gamma_q(degrees_of_freedom / 2.0, x / 2.0);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

TestResult wilcoxon_one_sided(const std::vector<double>& a, const std::vector<double>& b,
                              double alpha) {
    if (a.size() != b.size())
        throw std::invalid_argument("wilcoxon: samples must be paired (equal length)");
    std::vector<double> diffs;
    diffs.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) diffs.push_back(d);
    }
    TestResult result;
    result.alpha = alpha;
    if (diffs.empty()) {
        result.degenerate = true;
        result.p_value = 1.0;
        return result;
    }
    const std::size_t n = diffs.size();
    const auto ranks = midranks_abs_ascending(diffs);

    double w_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (diffs[i] > 0.0) w_plus += ranks[i];
    result.statistic = w_plus;

    if (n <= 12) {
        // Doubled midranks are integers; count sign assignments by dynamic
        // programming over the rank weights.
        std::vector<long long> r2(n);
        long long total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            r2[i] = std::llround(2.0 * ranks[i]);
            total += r2[i];
        }
        std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
        count[0] = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (long long w = total; w >= r2[i]; --w)
                count[static_cast<std::size_t>(w)] +=
                    count[static_cast<std::size_t>(w - r2[i])];
        }
        const long long w2_obs = std::llround(2.0 * w_plus);
        double tail = 0.0;
        for (long long w = w2_obs; w <= total; ++w)
            tail += count[static_cast<std::size_t>(w)];
        result.p_value = tail / std::ldexp(1.0, static_cast<int>(n));
    } else {
        const double dn = static_cast<double>(n);
        const double mean = dn * (dn + 1.0) / 4.0;
        double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0;
        // Tie correction: subtract sum(t^3 - t) / 48 over tied groups of |d|.
        std::vector<double> abs_sorted(n);
        for (std::size_t i = 0; i < n; ++i) abs_sorted[i] = std::abs(diffs[i]);
        std::sort(abs_sorted.begin(), abs_sorted.end());
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && abs_sorted[j] == abs_sorted[i]) ++j;
            const double t = static_cast<double>(j - i);
            variance -= (t * t * t - t) / 48.0;
            i = j;
        }
        const double z = (w_plus - mean) / std::sqrt(variance);
        result.p_value = normal_sf(z);
    }
    result.significant = result.p_value < alpha;
    return result;
}

std::vector<double> midranks_descending(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = midrank;
        i = j;
    }
    return ranks;
}

FriedmanResult friedman(const Matrix& means, double alpha) {
    const std::size_t n_rows = means.rows();   // datasets
    const std::size_t k = means.cols();        // methods
    if (n_rows < 2 || k < 2)
        throw std::invalid_argument("friedman: need at least 2 datasets and 2 methods");

    FriedmanResult result;
    result.average_ranks.assign(k, 0.0);
    std::vector<double> row(k);
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t j = 0; j < k; ++j) row[j] = means(i, j);
        const auto ranks = midranks_descending(row);
        for (std::size_t j = 0; j < k; ++j) result.average_ranks[j] += ranks[j];
    }
    for (auto& r : result.average_ranks) r /= static_cast<double>(n_rows);

    const double dk = static_cast<double>(k);
    const double dn = static_cast<double>(n_rows);
    double sum_sq = 0.0;
    for (double r : result.average_ranks) sum_sq += r * r;
    const double statistic =
        12.0 * dn / (dk * (dk + 1.0)) * (sum_sq - dk * (dk + 1.0) * (dk + 1.0) / 4.0);

    result.test.alpha = alpha;
    result.test.statistic = statistic;
    result.test.p_value = chi_squared_sf(std::max(statistic, 0.0), dk - 1.0);
    result.test.significant = result.test.p_value < alpha;
    return result;
}

std::vector<double> holm_adjust(const std::vector<double>& p_values) {
    const std::size_t m = p_values.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });
    std::vector<double> adjusted(m, 0.0);
    double running_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double scaled = static_cast<double>(m - i) * p_values[order[i]];
        running_max = std::max(running_max, std::min(scaled, 1.0));
        adjusted[order[i]] = running_max;
    }
    return adjusted;
}

} // namespace rbccr
