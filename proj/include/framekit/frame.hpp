#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framekit/linalg.hpp"
#include "framekit/types.hpp"

namespace framekit {

// Ordered family of N vectors in an M-dimensional real or complex space.
// Spanning is not assumed; it is what classify() verifies.
struct Frame {
    Field field = Field::Real;
    std::size_t dim = 0;
    std::vector<Vec> vectors;
    std::string label;

    std::size_t count() const { return vectors.size(); }

    void validate() const {
        if (dim == 0) throw std::invalid_argument("Frame: dimension must be positive");
        if (vectors.empty()) throw std::invalid_argument("Frame: needs at least one vector");
        for (const Vec& v : vectors)
            if (v.size() != dim) throw std::invalid_argument("Frame: vector dimension mismatch");
    }
};

struct SpectralSummary {
    Mat frame_operator;
    std::vector<double> eigenvalues;  // non-increasing
    double lower_bound = 0.0;         // A = lambda_min
    double upper_bound = 0.0;         // B = lambda_max
    bool is_frame = false;
    bool is_unit_norm = false;
    bool is_tight = false;
    bool is_parseval = false;
    bool is_equiangular = false;
    std::optional<double> coherence;  // common |<phi_i,phi_j>| when equiangular
};

inline Mat frame_operator(const Frame& f) {
    f.validate();
    return outer_product_sum(f.vectors, f.dim);
}

inline std::pair<double, double> optimal_frame_bounds(const Frame& f) {
    EigenResult e = hermitian_eigen(frame_operator(f));
    return {std::max(e.values.back(), 0.0), e.values.front()};
}

inline std::vector<cd> analysis_coefficients(const Frame& f, const Vec& x) {
    if (x.size() != f.dim) throw std::invalid_argument("analysis_coefficients: dimension mismatch");
    std::vector<cd> coeffs;
    coeffs.reserve(f.count());
    for (const Vec& phi : f.vectors) coeffs.push_back(inner(x, phi));
    return coeffs;
}

inline SpectralSummary classify(const Frame& f, double tol = 1e-9) {
    f.validate();
    SpectralSummary s;
    s.frame_operator = frame_operator(f);
    EigenResult e = hermitian_eigen(s.frame_operator);
    s.eigenvalues = e.values;
    s.upper_bound = e.values.front();
    s.lower_bound = std::max(e.values.back(), 0.0);
    s.is_frame = s.lower_bound > tol * std::max(s.upper_bound, 1.0);
    if (!s.is_frame) s.lower_bound = std::max(s.lower_bound, 0.0);

    double worst_norm_dev = 0.0;
    for (const Vec& phi : f.vectors) worst_norm_dev = std::max(worst_norm_dev, std::abs(norm(phi) - 1.0));
    s.is_unit_norm = worst_norm_dev <= tol;

    s.is_tight = s.upper_bound > 0.0 && (s.upper_bound - s.lower_bound) / s.upper_bound <= tol;
    s.is_parseval = s.is_tight && std::abs(s.upper_bound - 1.0) <= tol;

    if (s.is_unit_norm && f.count() >= 2) {
        double dmin = 1e300, dmax = 0.0;
        for (std::size_t i = 0; i < f.count(); ++i)
            for (std::size_t j = i + 1; j < f.count(); ++j) {
                double d = std::abs(inner(f.vectors[i], f.vectors[j]));
                dmin = std::min(dmin, d);
                dmax = std::max(dmax, d);
            }
        if (dmax - dmin <= tol * std::max(1.0, dmax)) {
            s.is_equiangular = true;
            s.coherence = 0.5 * (dmin + dmax);
        }
    }
    return s;
}

// D = max ||phi_i||^2, the denominator in the support-count bounds.
inline double max_norm_sq(const Frame& f) {
    double d = 0.0;
    for (const Vec& phi : f.vectors) d = std::max(d, norm_sq(phi));
    return d;
}

inline Vec vector_sum(const Frame& f) {
    Vec s(f.dim);
    for (const Vec& phi : f.vectors) s = add(std::move(s), phi);
    return s;
}

}  // namespace framekit
