#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "framekit/types.hpp"

namespace framekit {

// Counter-based splitmix64 stream. Seed-reproducible across platforms,
// independent streams by construction from (seed, stream) pairs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Vec unit_vector(std::size_t dim, Field field) {
        Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            double re = gaussian();
            double im = field == Field::Complex ? gaussian() : 0.0;
            v[i] = cd(re, im);
        }
        if (norm(v) < 1e-12) return unit_vector(dim, field);
        return normalized(v);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace framekit
