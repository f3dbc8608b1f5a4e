#pragma once

#include <span>
#include <vector>

#include "rbccr/matrix.hpp"

namespace rbccr {

// Spread of the Gaussian radial basis function.
struct PotentialParams {
    double gamma = 1.0;
};

// Class potential of a query point against an observation collection:
// the sum over the collection of exp(-(||X_i - x|| / gamma)^2).
// Empty collection yields 0; the value lies in [0, |collection|].
double potential(std::span<const double> x, const Matrix& collection,
                 const PotentialParams& params);

// Row-wise potential for a batch of query points.
std::vector<double> potential_batch(const Matrix& points, const Matrix& collection,
                                    const PotentialParams& params);

} // namespace rbccr
