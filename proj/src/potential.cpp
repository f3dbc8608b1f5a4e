#include "rbccr/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace rbccr {

double potential(std::span<const double> x, const Matrix& collection,
                 const PotentialParams& params) {
    if (params.gamma <= 0.0) throw std::invalid_argument("potential: gamma must be > 0");
    if (collection.empty()) return 0.0;
    if (collection.cols() != x.size())
        throw std::invalid_argument("potential: dimension mismatch");
    const double inv_gamma2 = 1.0 / (params.gamma * params.gamma);
    double sum = 0.0;
    for (std::size_t i = 0; i < collection.rows(); ++i) {
        sum += std::exp(-squared_distance(collection.row(i), x) * inv_gamma2);
    }
    return sum;
}

std::vector<double> potential_batch(const Matrix& points, const Matrix& collection,
                                    const PotentialParams& params) {
    std::vector<double> out(points.rows());
    for (std::size_t i = 0; i < points.rows(); ++i) {
        out[i] = potential(points.row(i), collection, params);
    }
    return out;
}

} // namespace rbccr
