#include <doctest.h>

#include <cmath>

#include "rbccr/ccr_core.hpp"
#include "rbccr/potential.hpp"
#include "rbccr/resamplers.hpp"

using namespace rbccr;

namespace {

Matrix rows(const std::vector<std::vector<double>>& r) { return Matrix::from_rows(r); }

// Two minority clusters with majority mass in between (the usual two-cluster
// demonstration layout).
struct TwoClusterFixture {
    Matrix x_min = rows({{-2.0, 0.0}, {-1.6, 0.3}, {-1.6, -0.3}, {2.0, 0.0}, {1.6, 0.2}});
    Matrix x_maj = rows({{-0.4, 0.1}, {0.0, -0.2}, {0.3, 0.3}, {-0.2, -0.4}, {0.5, 0.0},
                         {0.1, 0.5}, {-0.6, 0.4}, {0.7, -0.3}, {-0.1, 0.2}, {0.4, -0.5},
                         {0.0, 0.0}, {-0.3, -0.1}, {0.2, -0.2}, {0.6, 0.2}, {-0.5, -0.3}});
};

std::vector<double> recompute_radii(const Matrix& x_min, const Matrix& x_maj, double energy) {
    std::vector<double> radii(x_min.rows());
    for (std::size_t i = 0; i < x_min.rows(); ++i) {
        auto d = distances_to_rows(x_min.row(i), x_maj);
        std::sort(d.begin(), d.end());
        radii[i] = sphere_radius(d, energy);
    }
    return radii;
}

} // namespace

TEST_CASE("rb-ccr on balanced input translates but does not synthesize") {
    const Matrix x_min = rows({{0.0, 0.0}, {1.0, 0.0}});
    const Matrix x_maj = rows({{0.1, 0.0}, {5.0, 5.0}});
    ResamplerConfig config;
    config.method = ResampleMethod::rb_ccr;
    config.energy = 1.0;
    Rng rng(3);
    const auto out = rb_ccr_resample(x_maj, x_min, config, rng);
    CHECK(out.synthetic.rows() == 0);
    CHECK(out.achieved_ratio == 1.0);
    // The nearby majority point moved, the distant one did not.
    CHECK(out.majority_translated[0]);
    CHECK_FALSE(out.majority_translated[1]);
    CHECK(out.majority(1, 0) == 5.0);
}

TEST_CASE("rb-ccr splits the deficit evenly across equal radii") {
    // Two minority points in symmetric positions relative to all majority.
    const Matrix x_min = rows({{-1.0, 0.0}, {1.0, 0.0}});
    const Matrix x_maj = rows({{-3.0, 0.0}, {3.0, 0.0}, {-3.0, 1.0}, {3.0, 1.0},
                               {-3.0, -1.0}, {3.0, -1.0}});
    ResamplerConfig config;
    config.method = ResampleMethod::rb_ccr;
    config.energy = 1.0;
    Rng rng(5);
    const auto out = rb_ccr_resample(x_maj, x_min, config, rng);
    REQUIRE(out.synthetic.rows() == 4);
    std::size_t from_first = 0;
    for (auto s : out.synthetic_source) from_first += s == 0;
    CHECK(from_first == 2);
}

TEST_CASE("ccr equals rb-ccr with LEH under a shared seed") {
    const TwoClusterFixture f;
    ResamplerConfig config;
    config.method = ResampleMethod::rb_ccr;
    config.energy = 2.0;
    config.region = SamplingRegion::LEH;
    Rng a(42), b(42);
    const auto via_rb = rb_ccr_resample(f.x_maj, f.x_min, config, a);
    const auto via_ccr = ccr_resample(f.x_maj, f.x_min, 2.0, b);
    CHECK(via_rb.majority == via_ccr.majority);
    CHECK(via_rb.minority == via_ccr.minority);
    CHECK(via_rb.synthetic == via_ccr.synthetic);
    CHECK(via_rb.achieved_ratio == via_ccr.achieved_ratio);
}

TEST_CASE("low energy keeps synthetics near their seeds") {
    // Majority far away: every radius equals the full 0.5 energy budget.
    const Matrix x_min = rows({{0.0, 0.0}, {10.0, 0.0}});
    const Matrix x_maj = rows({{20.0, 0.0}, {21.0, 0.0}, {22.0, 0.0}, {23.0, 0.0},
                               {24.0, 0.0}, {25.0, 0.0}});
    ResamplerConfig config;
    config.method = ResampleMethod::ccr;
    config.energy = 0.5;
    Rng rng(7);
    const auto out = resample(x_maj, x_min, config, rng);
    REQUIRE(out.synthetic.rows() > 0);
    double mean_dist = 0.0;
    for (std::size_t i = 0; i < out.synthetic.rows(); ++i) {
        mean_dist += euclidean_distance(out.synthetic.row(i),
                                        x_min.row(out.synthetic_source[i]));
    }
    mean_dist /= static_cast<double>(out.synthetic.rows());
    CHECK(mean_dist < 0.5);
}

TEST_CASE("rb-ccr rejects an empty minority class") {
    ResamplerConfig config;
    config.method = ResampleMethod::ccr;
    Rng rng(1);
    CHECK_THROWS_AS(rb_ccr_resample(Matrix(4, 2), Matrix(0, 2), config, rng),
                    std::invalid_argument);
}

TEST_CASE("region H synthetics score higher minority potential than region L") {
    const TwoClusterFixture f;
    const PotentialParams params{1.0};
    double h_sum = 0.0, l_sum = 0.0;
    std::size_t h_n = 0, l_n = 0;
    for (std::uint64_t rep = 0; rep < 30; ++rep) {
        for (auto region : {SamplingRegion::H, SamplingRegion::L}) {
            ResamplerConfig config;
            config.method = ResampleMethod::rb_ccr;
            config.energy = 2.5;
            config.gamma = 1.0;
            config.region = region;
            Rng rng(1000 + rep);
            const auto out = rb_ccr_resample(f.x_maj, f.x_min, config, rng);
            for (std::size_t i = 0; i < out.synthetic.rows(); ++i) {
                const double z = potential(out.synthetic.row(i), f.x_min, params);
                if (region == SamplingRegion::H) {
                    h_sum += z;
                    ++h_n;
                } else {
                    l_sum += z;
                    ++l_n;
                }
            }
        }
    }
    REQUIRE(h_n > 0);
    REQUIRE(l_n > 0);
    CHECK(h_sum / static_cast<double>(h_n) > l_sum / static_cast<double>(l_n));
}

TEST_CASE("rb-ccr synthetics stay within independently recomputed radii") {
    const TwoClusterFixture f;
    ResamplerConfig config;
    config.method = ResampleMethod::rb_ccr;
    config.energy = 2.0;
    config.region = SamplingRegion::E;
    Rng rng(11);
    const auto out = rb_ccr_resample(f.x_maj, f.x_min, config, rng);
    const auto radii = recompute_radii(f.x_min, f.x_maj, config.energy);
    for (std::size_t i = 0; i < out.synthetic.rows(); ++i) {
        const std::size_t seed_idx = out.synthetic_source[i];
        const double dist =
            euclidean_distance(out.synthetic.row(i), f.x_min.row(seed_idx));
        CHECK(dist <= radii[seed_idx] * (1.0 + 1e-12) + 1e-12);
    }
}

TEST_CASE("smote interpolates between minority neighbors") {
    const Matrix x_min = rows({{0.0, 0.0}, {1.0, 1.0}});
    const Matrix x_maj = rows({{5.0, 5.0}, {6.0, 6.0}, {7.0, 7.0}, {8.0, 8.0}});
    Rng rng(13);
    const auto out = smote_resample(x_maj, x_min, 1, rng);
    REQUIRE(out.synthetic.rows() == 2);
    CHECK(out.achieved_ratio == 1.0);
    for (std::size_t i = 0; i < out.synthetic.rows(); ++i) {
        // On the segment between the two minority points: x == y in [0, 1].
        CHECK(out.synthetic(i, 0) == doctest::Approx(out.synthetic(i, 1)).epsilon(1e-12));
        CHECK(out.synthetic(i, 0) >= 0.0);
        CHECK(out.synthetic(i, 0) <= 1.0);
    }
    CHECK_THROWS_AS(smote_resample(x_maj, rows({{1.0, 1.0}}), 1, rng), std::invalid_argument);
}

TEST_CASE("smote synthetics lie on a segment to some k-neighbor") {
    const Matrix x_min = rows({{0.0, 0.0}, {2.0, 0.0}, {1.0, 1.5}});
    const Matrix x_maj = Matrix(9, 2, 7.0);
    Rng rng(17);
    const auto out = smote_resample(x_maj, x_min, 2, rng);
    REQUIRE(out.synthetic.rows() == 6);
    for (std::size_t i = 0; i < out.synthetic.rows(); ++i) {
        const std::size_t a = out.synthetic_source[i];
        double best = 1e9;
        for (std::size_t b = 0; b < x_min.rows(); ++b) {
            if (b == a) continue;
            // Distance from the synthetic to segment (x_a, x_b).
            const double ax = out.synthetic(i, 0) - x_min(a, 0);
            const double ay = out.synthetic(i, 1) - x_min(a, 1);
            const double bx = x_min(b, 0) - x_min(a, 0);
            const double by = x_min(b, 1) - x_min(a, 1);
            const double t = std::clamp((ax * bx + ay * by) / (bx * bx + by * by), 0.0, 1.0);
            best = std::min(best, std::hypot(ax - t * bx, ay - t * by));
        }
        CHECK(best < 1e-9);
    }
}

TEST_CASE("random oversampling duplicates minority rows") {
    const Matrix x_min = rows({{1.5, -0.5}});
    const Matrix x_maj = rows({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}});
    Rng rng(19);
    const auto out = random_oversample(x_maj, x_min, rng);
    REQUIRE(out.synthetic.rows() == 2);
    for (std::size_t i = 0; i < out.synthetic.rows(); ++i) {
        CHECK(out.synthetic(i, 0) == 1.5);
        CHECK(out.synthetic(i, 1) == -0.5);
    }
    CHECK(out.achieved_ratio == 1.0);

    // Already balanced: identity.
    Rng rng2(19);
    const auto balanced = random_oversample(x_min, x_min, rng2);
    CHECK(balanced.synthetic.rows() == 0);
}

TEST_CASE("random undersampling keeps a majority subset in order") {
    const Matrix x_min = rows({{0.0}, {1.0}});
    const Matrix x_maj = rows({{10.0}, {11.0}, {12.0}, {13.0}, {14.0}});
    Rng rng(23);
    const auto out = random_undersample(x_maj, x_min, rng);
    REQUIRE(out.majority.rows() == 2);
    CHECK(out.achieved_ratio == 1.0);
    CHECK(out.majority_source[0] < out.majority_source[1]);
    for (std::size_t i = 0; i < out.majority.rows(); ++i)
        CHECK(out.majority(i, 0) == x_maj(out.majority_source[i], 0));
}

TEST_CASE("all methods preserve the original minority rows and are seeded") {
    const TwoClusterFixture f;
    for (auto method : {ResampleMethod::none, ResampleMethod::ros, ResampleMethod::rus,
                        ResampleMethod::smote, ResampleMethod::ccr, ResampleMethod::rb_ccr}) {
        ResamplerConfig config;
        config.method = method;
        config.energy = 1.5;
        config.k_neighbors = 3;
        config.region = SamplingRegion::H;
        Rng a(31), b(31);
        const auto first = resample(f.x_maj, f.x_min, config, a);
        const auto second = resample(f.x_maj, f.x_min, config, b);
        CHECK(first.minority == f.x_min);
        CHECK(first.majority == second.majority);
        CHECK(first.synthetic == second.synthetic);
        CHECK(first.combined_features().rows() ==
              first.majority.rows() + first.minority.rows() + first.synthetic.rows());

        const double input_ratio =
            static_cast<double>(f.x_maj.rows()) / static_cast<double>(f.x_min.rows());
        if (method == ResampleMethod::ccr || method == ResampleMethod::rb_ccr) {
            CHECK(first.achieved_ratio >= 1.0);
            CHECK(first.achieved_ratio <= input_ratio);
        } else if (method != ResampleMethod::none) {
            CHECK(first.achieved_ratio == 1.0);
        }
    }
}
