#include "rbccr/resamplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rbccr/ccr_core.hpp"
#include "rbccr/dataset.hpp"

namespace rbccr {

std::string to_string(ResampleMethod method) {
    switch (method) {
        case ResampleMethod::none: return "none";
        case ResampleMethod::ros: return "ros";
        case ResampleMethod::rus: return "rus";
        case ResampleMethod::smote: return "smote";
        case ResampleMethod::ccr: return "ccr";
        case ResampleMethod::rb_ccr: return "rb-ccr";
    }
    return "?";
}

ResampleMethod method_from_string(const std::string& s) {
    if (s == "none") return ResampleMethod::none;
    if (s == "ros") return ResampleMethod::ros;
    if (s == "rus") return ResampleMethod::rus;
    if (s == "smote") return ResampleMethod::smote;
    if (s == "ccr") return ResampleMethod::ccr;
    if (s == "rb-ccr" || s == "rb_ccr" || s == "rbccr") return ResampleMethod::rb_ccr;
    throw std::invalid_argument("unknown resampling method '" + s + "'");
}

std::string ResamplerConfig::params_string() const {
    switch (method) {
        case ResampleMethod::none:
        case ResampleMethod::ros:
        case ResampleMethod::rus:
            return "-";
        case ResampleMethod::smote:
            return "k=" + std::to_string(k_neighbors);
        case ResampleMethod::ccr:
            return "energy=" + format_double(energy);
        case ResampleMethod::rb_ccr:
            return "energy=" + format_double(energy) + ";gamma=" + format_double(gamma) +
                   ";region=" + to_string(region);
    }
    return "-";
}

void validate(const ResamplerConfig& config) {
    switch (config.method) {
        case ResampleMethod::ccr:
            if (config.energy <= 0.0)
                throw std::invalid_argument("ccr: energy must be > 0");
            break;
        case ResampleMethod::rb_ccr:
            if (config.energy <= 0.0)
                throw std::invalid_argument("rb-ccr: energy must be > 0");
            if (config.gamma <= 0.0)
                throw std::invalid_argument("rb-ccr: gamma must be > 0");
            if (config.candidates < 1)
                throw std::invalid_argument("rb-ccr: candidates must be >= 1");
            break;
        case ResampleMethod::smote:
            if (config.k_neighbors < 1)
                throw std::invalid_argument("smote: k must be >= 1");
            break;
        default:
            break;
    }
}

Matrix ResampleOutput::combined_features() const {
    Matrix out = majority;
    for (std::size_t i = 0; i < minority.rows(); ++i) out.append_row(minority.row(i));
    for (std::size_t i = 0; i < synthetic.rows(); ++i) out.append_row(synthetic.row(i));
    return out;
}

std::vector<int> ResampleOutput::combined_labels() const {
    std::vector<int> y(majority.rows(), 0);
    y.insert(y.end(), minority.rows() + synthetic.rows(), 1);
    return y;
}

namespace {

double ratio_of(std::size_t n_maj, std::size_t n_min_total) {
    return n_min_total == 0 ? 0.0
                            : static_cast<double>(n_maj) / static_cast<double>(n_min_total);
}

ResampleOutput identity_output(const Matrix& x_maj, const Matrix& x_min) {
    ResampleOutput out;
    out.majority = x_maj;
    out.minority = x_min;
    out.synthetic = Matrix(0, x_min.cols());
    out.majority_source.resize(x_maj.rows());
    std::iota(out.majority_source.begin(), out.majority_source.end(), std::size_t{0});
    out.majority_translated.assign(x_maj.rows(), false);
    out.achieved_ratio = ratio_of(x_maj.rows(), x_min.rows());
    return out;
}

} // namespace

ResampleOutput none_resample(const Matrix& x_maj, const Matrix& x_min) {
    return identity_output(x_maj, x_min);
}

ResampleOutput rb_ccr_resample(const Matrix& x_maj, const Matrix& x_min,
                               const ResamplerConfig& config, Rng& rng) {
    if (x_min.rows() == 0) throw std::invalid_argument("rb-ccr: empty minority class");
    if (x_maj.rows() < x_min.rows())
        throw std::invalid_argument("rb-ccr: majority smaller than minority");
    if (x_maj.cols() != x_min.cols())
        throw std::invalid_argument("rb-ccr: feature dimension mismatch");
    if (config.energy <= 0.0) throw std::invalid_argument("rb-ccr: energy must be > 0");

    const std::size_t n_min = x_min.rows();
    const std::size_t n_maj = x_maj.rows();

    std::vector<double> radii(n_min);
    for (std::size_t i = 0; i < n_min; ++i) {
        auto d = distances_to_rows(x_min.row(i), x_maj);
        const auto order = stable_sort_by_distance(d);
        std::vector<double> sorted(n_maj);
        for (std::size_t j = 0; j < n_maj; ++j) sorted[j] = d[order[j]];
        radii[i] = sphere_radius(sorted, config.energy);
    }

    const Matrix t = compute_translations(x_min, x_maj, radii, rng);

    ResampleOutput out;
    out.majority = x_maj;
    out.majority_source.resize(n_maj);
    std::iota(out.majority_source.begin(), out.majority_source.end(), std::size_t{0});
    out.majority_translated.assign(n_maj, false);
    for (std::size_t j = 0; j < n_maj; ++j) {
        bool moved = false;
        for (std::size_t c = 0; c < x_maj.cols(); ++c) {
            out.majority(j, c) += t(j, c);
            moved = moved || t(j, c) != 0.0;
        }
        out.majority_translated[j] = moved;
    }
    out.minority = x_min;

    const AllocationPlan plan = allocate_counts(radii, n_maj, n_min);
    out.synthetic = Matrix(0, x_min.cols());
    GuidedSamplingConfig sampling{config.candidates, config.region, config.gamma};
    for (std::size_t i = 0; i < n_min; ++i) {
        const Matrix s = guided_sample(x_min.row(i), radii[i], x_min, sampling,
                                       plan.counts[i], rng);
        for (std::size_t k = 0; k < s.rows(); ++k) {
            out.synthetic.append_row(s.row(k));
            out.synthetic_source.push_back(i);
        }
    }
    out.achieved_ratio = ratio_of(n_maj, n_min + out.synthetic.rows());
    return out;
}

ResampleOutput ccr_resample(const Matrix& x_maj, const Matrix& x_min, double energy, Rng& rng) {
    ResamplerConfig config;
    config.method = ResampleMethod::ccr;
    config.energy = energy;
    config.region = SamplingRegion::LEH;
    return rb_ccr_resample(x_maj, x_min, config, rng);
}

ResampleOutput smote_resample(const Matrix& x_maj, const Matrix& x_min,
                              std::size_t k_neighbors, Rng& rng) {
    const std::size_t n_min = x_min.rows();
    if (n_min < 2) throw std::invalid_argument("smote: need at least two minority observations");
    if (x_maj.rows() < n_min)
        throw std::invalid_argument("smote: majority smaller than minority");
    const std::size_t k = std::min(k_neighbors, n_min - 1);
    const std::size_t m = x_min.cols();

    // k nearest minority neighbors per minority row, stable tie-break.
    std::vector<std::vector<std::size_t>> neighbors(n_min);
    for (std::size_t i = 0; i < n_min; ++i) {
        auto d = distances_to_rows(x_min.row(i), x_min);
        d[i] = std::numeric_limits<double>::infinity();  // exclude self
        const auto order = stable_sort_by_distance(d);
        neighbors[i].assign(order.begin(), order.begin() + k);
    }

    ResampleOutput out = identity_output(x_maj, x_min);
    const std::size_t deficit = x_maj.rows() - n_min;
    std::vector<double> point(m);
    for (std::size_t s = 0; s < deficit; ++s) {
        const std::size_t a = rng.uniform_index(n_min);
        const std::size_t b = neighbors[a][rng.uniform_index(k)];
        const double u = rng.uniform01();
        for (std::size_t j = 0; j < m; ++j)
            point[j] = x_min(a, j) + u * (x_min(b, j) - x_min(a, j));
        out.synthetic.append_row(point);
        out.synthetic_source.push_back(a);
    }
    out.achieved_ratio = ratio_of(x_maj.rows(), n_min + deficit);
    return out;
}

ResampleOutput random_oversample(const Matrix& x_maj, const Matrix& x_min, Rng& rng) {
    if (x_min.rows() == 0 || x_maj.rows() == 0)
        throw std::invalid_argument("ros: both classes must be non-empty");
    if (x_maj.rows() < x_min.rows())
        throw std::invalid_argument("ros: majority smaller than minority");
    ResampleOutput out = identity_output(x_maj, x_min);
    const std::size_t deficit = x_maj.rows() - x_min.rows();
    for (std::size_t s = 0; s < deficit; ++s) {
        const std::size_t a = rng.uniform_index(x_min.rows());
        out.synthetic.append_row(x_min.row(a));
        out.synthetic_source.push_back(a);
    }
    out.achieved_ratio = ratio_of(x_maj.rows(), x_min.rows() + deficit);
    return out;
}

ResampleOutput random_undersample(const Matrix& x_maj, const Matrix& x_min, Rng& rng) {
    if (x_min.rows() == 0 || x_maj.rows() == 0)
        throw std::invalid_argument("rus: both classes must be non-empty");
    if (x_maj.rows() < x_min.rows())
        throw std::invalid_argument("rus: majority smaller than minority");
    std::vector<std::size_t> idx(x_maj.rows());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    rng.shuffle(idx);
    idx.resize(x_min.rows());
    std::sort(idx.begin(), idx.end());

    ResampleOutput out;
    out.majority = x_maj.take_rows(idx);
    out.majority_source = idx;
    out.majority_translated.assign(idx.size(), false);
    out.minority = x_min;
    out.synthetic = Matrix(0, x_min.cols());
    out.achieved_ratio = ratio_of(idx.size(), x_min.rows());
    return out;
}

ResampleOutput resample(const Matrix& x_maj, const Matrix& x_min, const ResamplerConfig& config,
                        Rng& rng) {
    validate(config);
    switch (config.method) {
        case ResampleMethod::none: return none_resample(x_maj, x_min);
        case ResampleMethod::ros: return random_oversample(x_maj, x_min, rng);
        case ResampleMethod::rus: return random_undersample(x_maj, x_min, rng);
        case ResampleMethod::smote: return smote_resample(x_maj, x_min, config.k_neighbors, rng);
        case ResampleMethod::ccr: return ccr_resample(x_maj, x_min, config.energy, rng);
        case ResampleMethod::rb_ccr: return rb_ccr_resample(x_maj, x_min, config, rng);
    }
    throw std::logic_error("resample: unhandled method");
}

} // namespace rbccr
