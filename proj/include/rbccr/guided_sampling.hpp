#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rbccr/matrix.hpp"
#include "rbccr/potential.hpp"
#include "rbccr/random.hpp"

namespace rbccr {

// Sampling region within a sphere. LEH keeps every candidate (unfiltered
// sampling, identical to plain CCR).
enum class SamplingRegion { L, E, H, LEH };

std::string to_string(SamplingRegion region);
SamplingRegion region_from_string(const std::string& s);

struct RegionBounds {
    double seed_potential = 0.0;
    double bound_low = 0.0;
    double bound_high = 0.0;
};

struct GuidedSamplingConfig {
    std::size_t candidates = 100;
    SamplingRegion region = SamplingRegion::LEH;
    double gamma = 1.0;
};

// Uniform draw from the closed m-ball: uniform direction, radial coordinate
// radius * u^(1/m).
std::vector<double> sample_in_ball(std::span<const double> center, double radius, Rng& rng);

// bound_low = seed - (seed - min Z) / 3, bound_high = seed + (max Z - seed) / 3,
// with Z the candidate potentials.
RegionBounds region_bounds(double seed_potential, const std::vector<double>& candidate_potentials);

// L if z <= bound_low, else H if z >= bound_high, else E. The L branch is
// checked first, so degenerate bounds classify everything at the seed
// potential as L.
SamplingRegion classify_region(double z, const RegionBounds& bounds);

// Draws `candidates` points uniformly in the ball around seed_point, keeps
// those whose minority potential falls in the target region plus the seed
// point itself, then returns n draws (with replacement) from the kept set.
Matrix guided_sample(std::span<const double> seed_point, double radius, const Matrix& x_min,
                     const GuidedSamplingConfig& config, std::size_t n, Rng& rng);

// As guided_sample, also reporting the bounds estimated from the candidate
// draws so callers can re-check the region predicate on every sample.
struct GuidedSampleResult {
    Matrix samples;
    RegionBounds bounds;
};

GuidedSampleResult guided_sample_detailed(std::span<const double> seed_point, double radius,
                                          const Matrix& x_min, const GuidedSamplingConfig& config,
                                          std::size_t n, Rng& rng);

} // namespace rbccr
