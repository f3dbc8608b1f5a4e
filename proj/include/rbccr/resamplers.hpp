#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbccr/guided_sampling.hpp"
#include "rbccr/matrix.hpp"
#include "rbccr/random.hpp"

namespace rbccr {

enum class ResampleMethod { none, ros, rus, smote, ccr, rb_ccr };

std::string to_string(ResampleMethod method);
ResampleMethod method_from_string(const std::string& s);

struct ResamplerConfig {
    ResampleMethod method = ResampleMethod::none;
    double energy = 5.0;                            // ccr, rb_ccr
    double gamma = 1.0;                             // rb_ccr
    SamplingRegion region = SamplingRegion::LEH;    // rb_ccr
    std::size_t candidates = 100;                   // rb_ccr
    std::size_t k_neighbors = 5;                    // smote
    std::uint64_t seed = 0;

    // Compact "key=value;..." form used in records and reports.
    std::string params_string() const;
};

void validate(const ResamplerConfig& config);

// Result of one resampling call. Majority rows keep their input order except
// for undersampling, which keeps a subset; source index vectors tie every
// output row back to the input row it came from (synthetics to the minority
// observation that seeded them).
struct ResampleOutput {
    Matrix majority;
    Matrix minority;
    Matrix synthetic;
    double achieved_ratio = 1.0;

    std::vector<std::size_t> majority_source;
    std::vector<std::size_t> synthetic_source;
    std::vector<bool> majority_translated;

    // Training set assembly order: majority, minority, synthetic.
    Matrix combined_features() const;
    // 1 for minority and synthetic rows, 0 for majority rows.
    std::vector<int> combined_labels() const;
};

// Algorithm: per-minority sphere radii from the energy budget, majority
// cleaning by translation, proportional allocation of synthetic counts, then
// guided sampling restricted to the configured region.
ResampleOutput rb_ccr_resample(const Matrix& x_maj, const Matrix& x_min,
                               const ResamplerConfig& config, Rng& rng);

// Plain CCR: guided sampling with region LEH (unfiltered).
ResampleOutput ccr_resample(const Matrix& x_maj, const Matrix& x_min, double energy, Rng& rng);

// Synthetic points interpolated between minority neighbors; balances classes
// exactly. k is clamped to |X_min| - 1.
ResampleOutput smote_resample(const Matrix& x_maj, const Matrix& x_min,
                              std::size_t k_neighbors, Rng& rng);

// Duplicates random minority rows until balanced.
ResampleOutput random_oversample(const Matrix& x_maj, const Matrix& x_min, Rng& rng);

// Keeps a random majority subset of size |X_min|, input order preserved.
ResampleOutput random_undersample(const Matrix& x_maj, const Matrix& x_min, Rng& rng);

// Pass-through baseline.
ResampleOutput none_resample(const Matrix& x_maj, const Matrix& x_min);

// Dispatch on config.method; the rng seeds each method identically.
ResampleOutput resample(const Matrix& x_maj, const Matrix& x_min, const ResamplerConfig& config,
                        Rng& rng);

} // namespace rbccr
