#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace rbccr {

// Seeded random source. All sampling primitives are hand-rolled on top of
// mt19937_64 so that streams are identical across platforms and standard
// library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in [0, n). Rejection sampling, unbiased.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) return 0;
        const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= bound);
        return static_cast<std::size_t>(x % n);
    }

    // Standard normal via the polar method; second deviate cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // Uniform direction on the unit (m-1)-sphere.
    std::vector<double> unit_vector(std::size_t m) {
        std::vector<double> v(m);
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& x : v) {
                x = normal();
                norm2 += x * x;
            }
        } while (norm2 == 0.0);
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v) x *= inv;
        return v;
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline void hash_mix(std::uint64_t& h, std::uint64_t v) {
    h = splitmix64(h ^ splitmix64(v));
}

inline void hash_mix(std::uint64_t& h, std::string_view s) {
    std::uint64_t fnv = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        fnv ^= c;
        fnv *= 0x100000001b3ULL;
    }
    hash_mix(h, fnv);
}

} // namespace detail

// Deterministic per-task seed derived from the master seed and task
// coordinates (dataset name, repetition, fold, grid index, role tag).
// Independent of execution order, so parallel schedules reproduce the
// sequential results exactly.
template <typename... Parts>
std::uint64_t derive_seed(std::uint64_t master, const Parts&... parts) {
    std::uint64_t h = detail::splitmix64(master);
    (detail::hash_mix(h, parts), ...);
    return h;
}

} // namespace rbccr
