#pragma once

#include <numbers>
#include <sstream>
#include <string>

#include "framekit/frame.hpp"
#include "framekit/rng.hpp"

namespace framekit {

// K copies of the standard orthonormal basis, basis-major order.
inline Frame onb_copies(std::size_t dim, std::size_t copies) {
    if (dim < 1 || copies < 1) throw std::invalid_argument("onb_copies: dim and copies must be >= 1");
    Frame f;
    f.field = Field::Real;
    f.dim = dim;
    for (std::size_t k = 0; k < copies; ++k)
        for (std::size_t i = 0; i < dim; ++i) f.vectors.push_back(unit_axis(dim, i));
    std::ostringstream os;
    os << "onb-copies(M=" << dim << ",K=" << copies << ")";
    f.label = os.str();
    return f;
}

// The M+1 vector simplex frame in R^M: project the standard basis of
// R^{M+1} off the all-ones direction, then express each projected vector
// in a Householder basis of that direction's orthogonal complement.
inline Frame simplex_frame(std::size_t dim) {
    if (dim < 1) throw std::invalid_argument("simplex_frame: dim must be >= 1");
    const std::size_t n = dim + 1;
    const double inv_sqrt_n = 1.0 / std::sqrt(double(n));

    // Householder H = I - 2ww^T with w || (u - e_n), u the unit all-ones
    // vector. H maps u to e_n, so columns 0..dim-1 of H span u-perp.
    std::vector<double> w(n, inv_sqrt_n);
    w[n - 1] -= 1.0;
    double wn = 0.0;
    for (double t : w) wn += t * t;
    wn = std::sqrt(wn);
    for (double& t : w) t /= wn;

    Frame f;
    f.field = Field::Real;
    f.dim = dim;
    for (std::size_t i = 0; i < n; ++i) {
        // v = (I - P) e_i, P the projection onto u
        std::vector<double> v(n, -inv_sqrt_n * inv_sqrt_n);
        v[i] += 1.0;
        double vn = 0.0;
        for (double t : v) vn += t * t;
        vn = std::sqrt(vn);

        Vec coords(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            // q_k = H e_k = e_k - 2 w_k w; coordinate <v, q_k>
            double dot_wv = 0.0;
            for (std::size_t j = 0; j < n; ++j) dot_wv += w[j] * v[j];
            coords[k] = (v[k] - 2.0 * w[k] * dot_wv) / vn;
        }
        f.vectors.push_back(std::move(coords));
    }
    std::ostringstream os;
    os << "simplex(M=" << dim << ")";
    f.label = os.str();
    return f;
}

// UNTF from M rows of the N-point discrete Fourier character table.
// With drop_dc the constant row is excluded, so the vectors sum to zero.
// The real variant uses cosine/sine row pairs and needs an even dim.
inline Frame harmonic_frame(std::size_t dim, std::size_t count, bool drop_dc,
                            Field field = Field::Complex) {
    if (count < dim) throw std::invalid_argument("harmonic_frame: need N >= M");
    Frame f;
    f.field = field;
    f.dim = dim;
    const double scale = 1.0 / std::sqrt(double(dim));
    const double two_pi = 2.0 * std::numbers::pi;

    if (field == Field::Complex) {
        if (drop_dc && count < dim + 1)
            throw std::invalid_argument("harmonic_frame: drop_dc needs N >= M+1");
        std::size_t first_row = drop_dc ? 1 : 0;
        for (std::size_t j = 0; j < count; ++j) {
            Vec v(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                double theta = two_pi * double((first_row + r) * j % count) / double(count);
                v[r] = scale * cd(std::cos(theta), std::sin(theta));
            }
            f.vectors.push_back(std::move(v));
        }
    } else {
        if (dim % 2 != 0)
            throw std::invalid_argument("harmonic_frame: real variant needs even dim");
        std::size_t pairs = dim / 2;
        if (count < 2 * pairs + 1)
            throw std::invalid_argument("harmonic_frame: real variant needs N >= M+1");
        // frequencies 1..pairs avoid the constant row, so the sum is zero
        // regardless of drop_dc; the flag only gates the feasibility check.
        (void)drop_dc;
        const double amp = std::numbers::sqrt2 * scale;
        for (std::size_t j = 0; j < count; ++j) {
            Vec v(dim);
            for (std::size_t p = 0; p < pairs; ++p) {
                double theta = two_pi * double((p + 1) * j % count) / double(count);
                v[2 * p] = amp * std::cos(theta);
                v[2 * p + 1] = amp * std::sin(theta);
            }
            f.vectors.push_back(std::move(v));
        }
    }
    std::ostringstream os;
    os << "harmonic(M=" << dim << ",N=" << count << (drop_dc ? ",drop-dc" : "") << ","
       << field_name(field) << ")";
    f.label = os.str();
    return f;
}

// Catalogued maximal real ETFs: (2,3) simplex and (3,6) icosahedral.
inline Frame etf_catalog(std::size_t dim, std::size_t count) {
    if (dim == 2 && count == 3) {
        Frame f = simplex_frame(2);
        f.label = "etf(M=2,N=3)";
        return f;
    }
    if (dim == 3 && count == 6) {
        const double g = (1.0 + std::sqrt(5.0)) / 2.0;  // golden ratio
        const double s = 1.0 / std::sqrt(1.0 + g * g);
        Frame f;
        f.field = Field::Real;
        f.dim = 3;
        f.label = "etf(M=3,N=6)";
        const double raw[6][3] = {
            {0, 1, g}, {0, -1, g}, {1, g, 0}, {-1, g, 0}, {g, 0, 1}, {g, 0, -1},
        };
        for (const auto& r : raw) f.vectors.push_back(Vec{s * r[0], s * r[1], s * r[2]});

        // construction self-check against the ETF coherence formula
        SpectralSummary sum = classify(f);
        double want = std::sqrt((6.0 - 3.0) / (3.0 * 5.0));
        if (!sum.is_equiangular || !sum.is_tight ||
            std::abs(*sum.coherence - want) > 1e-9)
            throw std::logic_error("etf_catalog: icosahedral construction failed verification");
        return f;
    }
    std::ostringstream os;
    os << "etf_catalog: no catalogued equiangular tight frame for (M=" << dim << ",N=" << count
       << ")";
    throw std::invalid_argument(os.str());
}

inline Vec random_unit_vector(std::size_t dim, std::uint64_t seed, Field field = Field::Real) {
    SplitMix64 rng(seed, 0x75564543ULL);  // "UVEC" stream
    return rng.unit_vector(dim, field);
}

inline Frame random_frame(std::size_t dim, std::size_t count, std::uint64_t seed,
                          Field field = Field::Real) {
    if (dim < 1 || count < 1) throw std::invalid_argument("random_frame: dim and count must be >= 1");
    Frame f;
    f.field = field;
    f.dim = dim;
    for (std::size_t j = 0; j < count; ++j) {
        SplitMix64 rng(seed, 0x4652414dULL + j);  // "FRAM" + column
        f.vectors.push_back(rng.unit_vector(dim, field));
    }
    std::ostringstream os;
    os << "random(M=" << dim << ",N=" << count << ",seed=" << seed << ")";
    f.label = os.str();
    return f;
}

// Flat description of a constructor call; what the CLI flags and the
// frame-file header carry.
struct FrameRecipe {
    std::string kind;  // onb-copies | simplex | harmonic | etf-catalog | random
    std::size_t dim = 0;
    std::size_t count = 0;  // N; optional for simplex (defaults to M+1)
    std::uint64_t seed = 42;
    bool drop_dc = false;
    Field field = Field::Real;
};

inline Frame build_frame(const FrameRecipe& r) {
    if (r.kind == "onb-copies") {
        if (r.dim == 0 || r.count == 0 || r.count % r.dim != 0)
            throw std::invalid_argument("build_frame: onb-copies needs count = K * dim");
        return onb_copies(r.dim, r.count / r.dim);
    }
    if (r.kind == "simplex") {
        if (r.count != 0 && r.count != r.dim + 1)
            throw std::invalid_argument("build_frame: simplex has count = dim + 1");
        return simplex_frame(r.dim);
    }
    if (r.kind == "harmonic") return harmonic_frame(r.dim, r.count, r.drop_dc, r.field);
    if (r.kind == "etf-catalog") return etf_catalog(r.dim, r.count);
    if (r.kind == "random") return random_frame(r.dim, r.count, r.seed, r.field);
    throw std::invalid_argument("build_frame: unknown kind '" + r.kind + "'");
}

}  // namespace framekit
