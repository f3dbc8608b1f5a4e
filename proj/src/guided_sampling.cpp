#include "rbccr/guided_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rbccr {

std::string to_string(SamplingRegion region) {
    switch (region) {
        case SamplingRegion::L: return "L";
        case SamplingRegion::E: return "E";
        case SamplingRegion::H: return "H";
        case SamplingRegion::LEH: return "LEH";
    }
    return "?";
}

SamplingRegion region_from_string(const std::string& s) {
    if (s == "L") return SamplingRegion::L;
    if (s == "E") return SamplingRegion::E;
    if (s == "H") return SamplingRegion::H;
    if (s == "LEH") return SamplingRegion::LEH;
    throw std::invalid_argument("unknown sampling region '" + s + "'");
}

std::vector<double> sample_in_ball(std::span<const double> center, double radius, Rng& rng) {
    if (radius < 0.0) throw std::invalid_argument("sample_in_ball: negative radius");
    const std::size_t m = center.size();
    std::vector<double> point(center.begin(), center.end());
    if (radius == 0.0) return point;
    const auto dir = rng.unit_vector(m);
    const double rho = radius * std::pow(rng.uniform01(), 1.0 / static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j) point[j] += rho * dir[j];
    return point;
}

RegionBounds region_bounds(double seed_potential, const std::vector<double>& candidate_potentials) {
    if (candidate_potentials.empty())
        throw std::invalid_argument("region_bounds: no candidate potentials");
    const auto [min_it, max_it] =
        std::minmax_element(candidate_potentials.begin(), candidate_potentials.end());
    RegionBounds b;
    b.seed_potential = seed_potential;
    b.bound_low = seed_potential - (seed_potential - *min_it) / 3.0;
    b.bound_high = seed_potential + (*max_it - seed_potential) / 3.0;
    return b;
}

SamplingRegion classify_region(double z, const RegionBounds& bounds) {
    if (z <= bounds.bound_low) return SamplingRegion::L;
    if (z >= bounds.bound_high) return SamplingRegion::H;
    return SamplingRegion::E;
}

GuidedSampleResult guided_sample_detailed(std::span<const double> seed_point, double radius,
                                          const Matrix& x_min, const GuidedSamplingConfig& config,
                                          std::size_t n, Rng& rng) {
    if (config.candidates < 1)
        throw std::invalid_argument("guided_sample: need at least one candidate");
    const std::size_t m = seed_point.size();
    const PotentialParams params{config.gamma};
    const double seed_potential = potential(seed_point, x_min, params);

    Matrix candidates(config.candidates, m);
    for (std::size_t i = 0; i < config.candidates; ++i) {
        const auto c = sample_in_ball(seed_point, radius, rng);
        for (std::size_t j = 0; j < m; ++j) candidates(i, j) = c[j];
    }
    const std::vector<double> z = potential_batch(candidates, x_min, params);
    const RegionBounds bounds = region_bounds(seed_potential, z);

    // Kept set: the seed itself plus every candidate in the target region.
    Matrix kept(0, m);
    kept.append_row(seed_point);
    for (std::size_t i = 0; i < config.candidates; ++i) {
        if (config.region == SamplingRegion::LEH ||
            classify_region(z[i], bounds) == config.region) {
            kept.append_row(candidates.row(i));
        }
    }

    GuidedSampleResult result;
    result.bounds = bounds;
    result.samples = Matrix(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto pick = kept.row(rng.uniform_index(kept.rows()));
        for (std::size_t j = 0; j < m; ++j) result.samples(i, j) = pick[j];
    }
    return result;
}

Matrix guided_sample(std::span<const double> seed_point, double radius, const Matrix& x_min,
                     const GuidedSamplingConfig& config, std::size_t n, Rng& rng) {
    return guided_sample_detailed(seed_point, radius, x_min, config, n, rng).samples;
}

} // namespace rbccr
