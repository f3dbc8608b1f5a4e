// Regenerates the bundled synthetic benchmark datasets under data/.
// Each dataset is a small imbalanced binary problem with deliberate class
// overlap so that resampling choices actually move the metrics. Fixed seeds;
// rerunning reproduces the committed files byte for byte.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rbccr/random.hpp"

namespace fs = std::filesystem;
using rbccr::Rng;

namespace {

struct Row {
    std::vector<double> x;
    bool minority;
};

struct Builder {
    std::vector<Row> rows;
    Rng rng;

    explicit Builder(std::uint64_t seed) : rng(seed) {}

    void blob(bool minority, std::size_t count, const std::vector<double>& center,
              const std::vector<double>& sigma) {
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<double> x(center.size());
            for (std::size_t j = 0; j < center.size(); ++j)
                x[j] = center[j] + sigma[j] * rng.normal();
            rows.push_back({x, minority});
        }
    }

    // Noisy circle arc (2-D only), angles in radians.
    void arc(bool minority, std::size_t count, double cx, double cy, double radius,
             double angle_from, double angle_to, double noise) {
        for (std::size_t i = 0; i < count; ++i) {
            const double a = rng.uniform(angle_from, angle_to);
            rows.push_back({{cx + radius * std::cos(a) + noise * rng.normal(),
                             cy + radius * std::sin(a) + noise * rng.normal()},
                            minority});
        }
    }

    void flip_labels(double fraction) {
        for (auto& r : rows)
            if (rng.uniform01() < fraction) r.minority = !r.minority;
    }
};

void write_keel(const std::string& dir, const std::string& name, Builder& b) {
    std::size_t n_min = 0;
    for (const auto& r : b.rows)
        if (r.minority) ++n_min;
    // Keep the generated minority the smaller class even after label flips.
    if (n_min * 2 > b.rows.size()) {
        for (auto& r : b.rows) r.minority = !r.minority;
        n_min = b.rows.size() - n_min;
    }

    const std::size_t m = b.rows.front().x.size();
    std::ofstream out(fs::path(dir) / (name + ".dat"), std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << name << '\n';
        std::exit(2);
    }
    out << "@relation " << name << "\n";
    for (std::size_t j = 0; j < m; ++j) out << "@attribute f" << j << " real\n";
    out << "@attribute class {negative, positive}\n@data\n";
    char buf[64];
    for (const auto& r : b.rows) {
        for (std::size_t j = 0; j < m; ++j) {
            std::snprintf(buf, sizeof(buf), "%.6g", r.x[j]);
            out << buf << ", ";
        }
        out << (r.minority ? "positive" : "negative") << "\n";
    }
    std::printf("%-10s n=%zu m=%zu minority=%zu IR=%.2f\n", name.c_str(), b.rows.size(), m,
                n_min, static_cast<double>(b.rows.size() - n_min) / n_min);
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";
    fs::create_directories(dir);

    {
        // Two gaussian blobs with a ~2-sigma gap.
        Builder b(1001);
        b.blob(true, 40, {0.0, 0.0}, {1.0, 1.0});
        b.blob(false, 200, {2.2, 1.4}, {1.2, 1.2});
        write_keel(dir, "blobs2", b);
    }
    {
        // Minority split across two sub-clusters, one brushing the majority.
        Builder b(1002);
        b.blob(true, 26, {-2.5, 0.0, 0.5}, {0.8, 0.8, 0.8});
        b.blob(true, 14, {2.0, 1.4, -0.8}, {0.7, 0.7, 0.7});
        b.blob(false, 210, {1.0, 0.0, 0.0}, {1.3, 1.3, 1.3});
        write_keel(dir, "clusters3", b);
    }
    {
        // Majority core with a loose minority ring around it.
        Builder b(1003);
        b.arc(true, 40, 0.0, 0.0, 2.2, 0.0, 2.0 * M_PI, 0.55);
        b.blob(false, 190, {0.0, 0.0}, {1.0, 1.0});
        write_keel(dir, "ring2", b);
    }
    {
        // Interleaved crescents.
        Builder b(1004);
        b.arc(true, 42, 0.0, 0.0, 2.0, 0.0, M_PI, 0.45);
        b.arc(false, 205, 1.8, 0.8, 2.0, M_PI, 2.0 * M_PI, 0.45);
        write_keel(dir, "moons2", b);
    }
    {
        // Minority hugging the edge of an elongated majority.
        Builder b(1005);
        b.blob(true, 34, {2.4, 0.0, 0.0, 0.4}, {0.7, 0.7, 0.6, 0.6});
        b.blob(false, 196, {0.0, 0.0, 0.0, 0.0}, {1.8, 0.9, 0.8, 0.8});
        write_keel(dir, "edge4", b);
    }
    {
        // Eight features, moderate separation.
        Builder b(1006);
        b.blob(true, 30, {1.1, 1.1, 1.1, 1.1, 0.0, 0.0, 0.0, 0.0},
               {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
        b.blob(false, 210, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
               {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
        write_keel(dir, "wide8", b);
    }
    {
        // Minority sprinkled inside the majority at a short offset.
        Builder b(1007);
        b.blob(true, 26, {0.9, 0.9, 0.0}, {0.9, 0.9, 0.9});
        b.blob(false, 208, {0.0, 0.0, 0.0}, {1.2, 1.2, 1.2});
        write_keel(dir, "sprinkle3", b);
    }
    {
        // Three majority clusters; minority wedged between two of them.
        Builder b(1008);
        b.blob(true, 36, {0.0, 1.6}, {0.6, 0.6});
        b.blob(false, 80, {-2.2, 0.0}, {0.9, 0.9});
        b.blob(false, 80, {2.2, 0.0}, {0.9, 0.9});
        b.blob(false, 60, {0.0, -2.0}, {1.0, 1.0});
        write_keel(dir, "triad2", b);
    }
    {
        // Anisotropic majority; minority along the short axis.
        Builder b(1009);
        b.blob(true, 32, {0.0, 2.0, 0.3, -0.3}, {0.8, 0.6, 0.7, 0.7});
        b.blob(false, 204, {0.0, 0.0, 0.0, 0.0}, {2.4, 0.8, 1.0, 1.0});
        write_keel(dir, "aniso4", b);
    }
    {
        // Minority in the tail of a six-dimensional ellipsoid.
        Builder b(1010);
        b.blob(true, 28, {1.8, 0.9, 0.0, 0.0, 0.0, 0.0}, {0.8, 0.8, 0.8, 0.8, 0.8, 0.8});
        b.blob(false, 196, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, {1.4, 1.1, 1.0, 1.0, 1.0, 1.0});
        write_keel(dir, "tails6", b);
    }
    {
        // Blobs with flipped labels sprinkled in.
        Builder b(1011);
        b.blob(true, 40, {0.0, 0.0}, {0.9, 0.9});
        b.blob(false, 180, {2.0, 0.0}, {1.1, 1.1});
        b.flip_labels(0.05);
        write_keel(dir, "noisy2", b);
    }
    {
        // Tight minority core with a wide halo; majority overlaps the halo.
        Builder b(2001);
        b.blob(true, 26, {0.0, 0.0, 0.0}, {0.6, 0.6, 0.6});
        b.blob(true, 14, {0.0, 0.0, 0.0}, {1.9, 1.9, 1.9});
        b.blob(false, 205, {1.9, 1.0, 0.0}, {1.1, 1.1, 1.1});
        write_keel(dir, "halo3", b);
    }
    {
        // Minority core away from the majority plus a fringe leaning into it.
        Builder b(2002);
        b.blob(true, 24, {-1.8, 0.0, 0.0, 0.0}, {0.7, 0.7, 0.7, 0.7});
        b.blob(true, 12, {0.2, 0.0, 0.0, 0.0}, {0.9, 0.9, 0.9, 0.9});
        b.blob(false, 200, {1.1, 0.0, 0.0, 0.0}, {1.2, 1.2, 1.2, 1.2});
        write_keel(dir, "slope4", b);
    }
    {
        // Shape matches a classic repository entry: 214 samples, 9 features,
        // 76/138 split (imbalance ratio 1.82).
        Builder b(1012);
        b.blob(true, 76, {0.9, 0.5, 0.0, 0.4, 0.0, 0.0, 0.3, 0.0, 0.2},
               {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
        b.blob(false, 138, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
               {1.1, 1.1, 1.1, 1.1, 1.1, 1.1, 1.1, 1.1, 1.1});
        write_keel(dir, "shards9", b);
    }
    return 0;
}
