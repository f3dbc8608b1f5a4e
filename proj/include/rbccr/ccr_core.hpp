#pragma once

#include <cstddef>
#include <vector>

#include "rbccr/matrix.hpp"
#include "rbccr/random.hpp"

namespace rbccr {

// Number of synthetic observations to generate per minority observation.
struct AllocationPlan {
    std::vector<std::size_t> counts;

    std::size_t total() const {
        std::size_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }
};

// Energy-budget sphere expansion for one minority observation, given the
// ascending distances to all majority observations. Walks the sorted
// neighbors, charging (d_j - r) * n_r per step; when the budget cannot cover
// the next step the radius advances by the remaining energy divided by the
// neighbor count. If every neighbor is absorbed the radius stays at the last
// accepted distance and leftover energy is unspent.
double sphere_radius(const std::vector<double>& sorted_distances, double energy);

// Distances from one point to every row of a matrix, with a stable
// (distance, original index) ordering helper shared by cleaning and KNN.
std::vector<double> distances_to_rows(std::span<const double> x, const Matrix& rows);
std::vector<std::size_t> stable_sort_by_distance(const std::vector<double>& distances);

// Cleaning: every majority observation strictly inside a sphere is pushed
// radially to its surface; overlapping spheres accumulate their translations.
// A majority point coinciding with a sphere center is pushed in a seeded
// uniformly random direction.
Matrix compute_translations(const Matrix& x_min, const Matrix& x_maj,
                            const std::vector<double>& radii, Rng& rng);

// Proportional allocation: g_i = floor((r_i^-1 / sum_k r_k^-1) * deficit).
// The floor shortfall is not redistributed.
AllocationPlan allocate_counts(const std::vector<double>& radii, std::size_t n_maj,
                               std::size_t n_min);

} // namespace rbccr
