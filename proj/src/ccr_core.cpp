#include "rbccr/ccr_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rbccr {

double sphere_radius(const std::vector<double>& sorted_distances, double energy) {
    if (energy <= 0.0) throw std::invalid_argument("sphere_radius: energy must be > 0");
    double prev = 0.0;
    for (double d : sorted_distances) {
        if (d < 0.0) throw std::invalid_argument("sphere_radius: negative distance");
        if (d < prev) throw std::invalid_argument("sphere_radius: distances not sorted");
        prev = d;
    }
    double r = 0.0;
    double e = energy;
    double n_r = 0.0;
    for (double d : sorted_distances) {
        n_r += 1.0;
        const double delta_e = -(d - r) * n_r;
        if (e + delta_e > 0.0) {
            r = d;
            e += delta_e;
        } else {
            r += e / n_r;
            return r;
        }
    }
    return r;  // all neighbors absorbed; leftover energy unspent
}

std::vector<double> distances_to_rows(std::span<const double> x, const Matrix& rows) {
    std::vector<double> d(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) d[i] = euclidean_distance(x, rows.row(i));
    return d;
}

std::vector<std::size_t> stable_sort_by_distance(const std::vector<double>& distances) {
    std::vector<std::size_t> order(distances.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return distances[a] < distances[b]; });
    return order;
}

Matrix compute_translations(const Matrix& x_min, const Matrix& x_maj,
                            const std::vector<double>& radii, Rng& rng) {
    if (radii.size() != x_min.rows())
        throw std::invalid_argument("compute_translations: one radius per minority row required");
    const std::size_t m = x_maj.cols();
    Matrix t(x_maj.rows(), m, 0.0);
    for (std::size_t i = 0; i < x_min.rows(); ++i) {
        const auto center = x_min.row(i);
        const double r_i = radii[i];
        if (r_i <= 0.0) continue;
        for (std::size_t j = 0; j < x_maj.rows(); ++j) {
            const double d_j = euclidean_distance(center, x_maj.row(j));
            if (d_j >= r_i) continue;
            if (d_j == 0.0) {
                // Coincident points: push to the surface in a random direction.
                const auto dir = rng.unit_vector(m);
                for (std::size_t c = 0; c < m; ++c) t(j, c) += r_i * dir[c];
                continue;
            }
            const double scale = (r_i - d_j) / d_j;
            for (std::size_t c = 0; c < m; ++c)
                t(j, c) += scale * (x_maj(j, c) - center[c]);
        }
    }
    return t;
}

AllocationPlan allocate_counts(const std::vector<double>& radii, std::size_t n_maj,
                               std::size_t n_min) {
    if (n_maj < n_min)
        throw std::invalid_argument("allocate_counts: majority smaller than minority");
    AllocationPlan plan;
    plan.counts.assign(radii.size(), 0);
    if (radii.empty()) return plan;
    double inv_sum = 0.0;
    for (double r : radii) {
        if (r <= 0.0) throw std::invalid_argument("allocate_counts: non-positive radius");
        inv_sum += 1.0 / r;
    }
    const double deficit = static_cast<double>(n_maj - n_min);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        plan.counts[i] =
            static_cast<std::size_t>(std::floor((1.0 / radii[i]) / inv_sum * deficit));
    }
    return plan;
}

} // namespace rbccr
