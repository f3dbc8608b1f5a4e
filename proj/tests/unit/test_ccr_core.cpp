#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rbccr/ccr_core.hpp"
#include "rbccr/random.hpp"

using namespace rbccr;

namespace {

// Continuous-expansion simulator: grow the radius in eps-sized steps, paying
// step * (enclosed majority count + 1) per step, the +1 being the neighbor
// currently being approached. Expansion stops at the outermost neighbor with
// any leftover budget unspent, mirroring the discrete walk.
double simulate_radius(const std::vector<double>& sorted_distances, double energy,
                       double eps = 1e-4) {
    if (sorted_distances.empty()) return 0.0;
    const double r_max = sorted_distances.back();
    double r = 0.0;
    double e = energy;
    while (e > 0.0 && r < r_max) {
        const double step = std::min(eps, r_max - r);
        const double mid = r + step / 2.0;
        double rate = 1.0;
        for (double d : sorted_distances) {
            if (d < mid) rate += 1.0;
            else break;
        }
        const double cost = step * rate;
        if (cost <= e) {
            e -= cost;
            r += step;
        } else {
            r += e / rate;
            e = 0.0;
        }
    }
    return r;
}

} // namespace

TEST_CASE("sphere_radius hand traces") {
    // Budget runs out before the first neighbor.
    CHECK(sphere_radius({1.0}, 0.5) == 0.5);
    // First step costs 1.0, second would cost 1.0 with 0.8 left.
    CHECK(sphere_radius({1.0, 1.5}, 1.8) == 1.0 + (1.8 - 1.0) / 2.0);
    CHECK(sphere_radius({1.0, 1.5}, 1.8) == doctest::Approx(1.4).epsilon(1e-15));
    // Neighbors exhausted: radius stays at the last distance.
    CHECK(sphere_radius({1.0}, 5.0) == 1.0);

    CHECK_THROWS_AS(sphere_radius({2.0, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sphere_radius({-1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sphere_radius({1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("sphere_radius below the first neighbor equals the energy") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const double d1 = rng.uniform(0.5, 3.0);
        const double energy = rng.uniform(0.01, d1 * 0.99);
        CHECK(sphere_radius({d1, d1 + 1.0}, energy) == energy);
    }
}

TEST_CASE("sphere_radius monotone in energy and bounded by the last neighbor") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.uniform_index(8);
        std::vector<double> d(n);
        for (auto& x : d) x = rng.uniform(0.05, 3.0);
        std::sort(d.begin(), d.end());
        double prev = 0.0;
        for (double energy : {0.1, 0.5, 1.0, 2.5, 5.0, 25.0, 100.0}) {
            const double r = sphere_radius(d, energy);
            CHECK(r >= prev);
            CHECK(r <= d.back());
            prev = r;
        }
    }
}

TEST_CASE("sphere_radius agrees with the continuous-expansion simulator") {
    Rng rng(11);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.uniform_index(8);
        std::vector<double> d;
        double next = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next += rng.uniform(0.02, 0.6);
            d.push_back(next);
        }
        const double energy = rng.uniform(0.05, 4.0);
        worst = std::max(worst, std::abs(sphere_radius(d, energy) - simulate_radius(d, energy)));
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("compute_translations pushes one enclosed point to the surface") {
    Matrix x_min(0, 2);
    x_min.append_row(std::vector<double>{0.0, 0.0});
    Matrix x_maj(0, 2);
    x_maj.append_row(std::vector<double>{0.5, 0.0});
    Rng rng(1);
    const Matrix t = compute_translations(x_min, x_maj, {1.0}, rng);
    CHECK(t(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(t(0, 1) == 0.0);
    const double after = std::hypot(x_maj(0, 0) + t(0, 0), x_maj(0, 1) + t(0, 1));
    CHECK(std::abs(after - 1.0) < 1e-9);
}

TEST_CASE("compute_translations leaves outside points alone") {
    Matrix x_min(0, 2);
    x_min.append_row(std::vector<double>{0.0, 0.0});
    Matrix x_maj(0, 2);
    x_maj.append_row(std::vector<double>{2.0, 0.0});
    Rng rng(1);
    const Matrix t = compute_translations(x_min, x_maj, {1.0}, rng);
    CHECK(t(0, 0) == 0.0);
    CHECK(t(0, 1) == 0.0);
}

TEST_CASE("compute_translations accumulates over overlapping spheres") {
    Matrix x_min(0, 2);
    x_min.append_row(std::vector<double>{-1.0, 0.0});
    x_min.append_row(std::vector<double>{1.0, 0.0});
    Matrix x_maj(0, 2);
    x_maj.append_row(std::vector<double>{0.0, 0.25});
    const std::vector<double> radii{1.5, 1.5};
    Rng rng(1);
    const Matrix both = compute_translations(x_min, x_maj, radii, rng);

    Matrix first(0, 2), second(0, 2);
    first.append_row(x_min.row(0));
    second.append_row(x_min.row(1));
    Rng rng_a(1), rng_b(1);
    const Matrix t_a = compute_translations(first, x_maj, {1.5}, rng_a);
    const Matrix t_b = compute_translations(second, x_maj, {1.5}, rng_b);
    CHECK(both(0, 0) == doctest::Approx(t_a(0, 0) + t_b(0, 0)).epsilon(1e-12));
    CHECK(both(0, 1) == doctest::Approx(t_a(0, 1) + t_b(0, 1)).epsilon(1e-12));
}

TEST_CASE("compute_translations handles a coincident majority point") {
    Matrix x_min(0, 3);
    x_min.append_row(std::vector<double>{0.5, 0.5, 0.5});
    Matrix x_maj(0, 3);
    x_maj.append_row(std::vector<double>{0.5, 0.5, 0.5});
    Rng rng(42);
    const Matrix t = compute_translations(x_min, x_maj, {0.8}, rng);
    const double norm = std::sqrt(t(0, 0) * t(0, 0) + t(0, 1) * t(0, 1) + t(0, 2) * t(0, 2));
    CHECK(norm == doctest::Approx(0.8).epsilon(1e-12));

    Rng rng2(42);
    const Matrix t2 = compute_translations(x_min, x_maj, {0.8}, rng2);
    CHECK(t == t2);
}

TEST_CASE("allocate_counts examples") {
    CHECK(allocate_counts({1.0, 1.0}, 6, 2).counts == std::vector<std::size_t>{2, 2});
    // Weights 0.75 / 0.25 over a deficit of 4.
    CHECK(allocate_counts({1.0, 3.0}, 6, 2).counts == std::vector<std::size_t>{3, 1});
    CHECK(allocate_counts({0.7, 1.3}, 5, 5).counts == std::vector<std::size_t>{0, 0});
    CHECK_THROWS_AS(allocate_counts({0.0, 1.0}, 6, 2), std::invalid_argument);
    CHECK_THROWS_AS(allocate_counts({1.0}, 2, 3), std::invalid_argument);
}

TEST_CASE("allocate_counts orders inversely with radius") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n_min = 2 + rng.uniform_index(10);
        const std::size_t n_maj = n_min + rng.uniform_index(40);
        std::vector<double> radii(n_min);
        for (auto& r : radii) r = rng.uniform(0.05, 3.0);
        const auto plan = allocate_counts(radii, n_maj, n_min);
        CHECK(plan.total() <= n_maj - n_min);
        for (std::size_t i = 0; i < n_min; ++i)
            for (std::size_t j = 0; j < n_min; ++j)
                if (radii[i] < radii[j]) CHECK(plan.counts[i] >= plan.counts[j]);
    }
}
