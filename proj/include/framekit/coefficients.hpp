#pragma once

#include <numeric>
#include <optional>

#include "framekit/frame.hpp"
#include "framekit/report.hpp"

namespace framekit {

// Sorted squared frame coefficients of a unit vector, the comparison
// object for all the majorization statements.
struct CoefficientProfile {
    std::vector<double> values;            // non-increasing |<x,phi_i>|^2
    std::vector<std::size_t> permutation;  // values[k] came from frame index permutation[k]
    double x_norm = 0.0;
};

inline void require_unit(const Vec& x, double tol = 1e-9) {
    if (std::abs(norm(x) - 1.0) > tol)
        throw std::invalid_argument("expected a unit vector");
}

inline CoefficientProfile profile(const Frame& f, const Vec& x) {
    require_unit(x);
    auto coeffs = analysis_coefficients(f, x);
    CoefficientProfile p;
    p.x_norm = norm(x);
    p.permutation.resize(coeffs.size());
    std::iota(p.permutation.begin(), p.permutation.end(), std::size_t{0});
    std::stable_sort(p.permutation.begin(), p.permutation.end(), [&](std::size_t i, std::size_t j) {
        return std::norm(coeffs[i]) > std::norm(coeffs[j]);
    });
    p.values.reserve(coeffs.size());
    for (std::size_t i : p.permutation) p.values.push_back(std::norm(coeffs[i]));
    return p;
}

struct SupportReport {
    std::vector<std::size_t> nonzero_indices;    // J_x
    std::vector<std::size_t> threshold_indices;  // K_x, |<x,phi_i>|^2 > C*A/N
    double jx_bound = 0.0;                       // A/D
    double kx_bound = 0.0;                       // (1-C)*A/D
    double max_norm_sq = 0.0;                    // D
    double jx_margin = 0.0;                      // |J_x| - A/D
    bool equality_case = false;                  // |J_x| hit A/D numerically
    bool rank_one_support = false;               // span{phi_i : i in J_x} is a line
};

// Counting bounds |J_x| >= A/D and |K_x| >= (1-C) A/D. When the J_x bound
// is attained numerically, the support set must span a line; we verify
// that directly.
inline SupportReport support_counts(const Frame& f, const Vec& x, double c,
                                    double zero_tol = -1.0) {
    require_unit(x);
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("support_counts: C must be in (0,1)");
    auto [a, b] = optimal_frame_bounds(f);
    if (a <= 1e-12 * std::max(b, 1.0))
        throw std::invalid_argument("support_counts: input family is not a frame (A = 0)");
    if (zero_tol < 0.0) zero_tol = 1e-9 * std::sqrt(b);

    SupportReport r;
    r.max_norm_sq = max_norm_sq(f);
    r.jx_bound = a / r.max_norm_sq;
    r.kx_bound = (1.0 - c) * a / r.max_norm_sq;

    auto coeffs = analysis_coefficients(f, x);
    double kx_threshold = c * a / double(f.count());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        double mag = std::abs(coeffs[i]);
        if (mag > zero_tol) r.nonzero_indices.push_back(i);
        if (mag * mag > kx_threshold) r.threshold_indices.push_back(i);
    }

    r.jx_margin = double(r.nonzero_indices.size()) - r.jx_bound;
    if (r.jx_margin <= 1e-9) {
        r.equality_case = true;
        std::vector<Vec> support;
        for (std::size_t i : r.nonzero_indices) support.push_back(f.vectors[i]);
        r.rank_one_support = numerical_rank(support) == 1;
    }
    return r;
}

struct MajorizationResult {
    bool holds = false;
    int first_failing_prefix = -1;  // 1-based prefix length, -1 when none
};

namespace detail {
inline void require_sorted_nonnegative(const std::vector<double>& v, const char* who) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0) throw std::invalid_argument(std::string(who) + ": negative entry");
        if (i > 0 && v[i] > v[i - 1] + 1e-12)
            throw std::invalid_argument(std::string(who) + ": entries not non-increasing");
    }
}
}  // namespace detail

inline MajorizationResult weakly_majorizes(const std::vector<double>& a,
                                           const std::vector<double>& b, double tol = 1e-10) {
    detail::require_sorted_nonnegative(a, "weakly_majorizes");
    detail::require_sorted_nonnegative(b, "weakly_majorizes");
    std::size_t n = std::max(a.size(), b.size());  // shorter side zero-padded
    MajorizationResult r;
    double sa = 0.0, sb = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k < a.size()) sa += a[k];
        if (k < b.size()) sb += b[k];
        if (sa < sb - tol) {
            r.first_failing_prefix = int(k) + 1;
            return r;
        }
    }
    r.holds = true;
    return r;
}

inline bool majorizes(const std::vector<double>& a, const std::vector<double>& b,
                      double tol = 1e-10) {
    MajorizationResult weak = weakly_majorizes(a, b, tol);
    if (!weak.holds) return false;
    double sa = std::accumulate(a.begin(), a.end(), 0.0);
    double sb = std::accumulate(b.begin(), b.end(), 0.0);
    return std::abs(sa - sb) <= tol;
}

// Flat weak majorization: profile >_W (A/N, ..., A/N). For a UNTF this is
// the corollary's comparison against (1/M, ..., 1/M).
inline TheoremReport check_flat_majorization(const Frame& f, const Vec& x) {
    auto [a, b] = optimal_frame_bounds(f);
    CoefficientProfile p = profile(f, x);
    double flat = a / double(f.count());
    std::vector<double> bvec(f.count(), flat);
    MajorizationResult m = weakly_majorizes(p.values, bvec);

    TheoremReport rep;
    rep.claim_id = "sec4.flat-majorization";
    rep.frame_label = f.label;
    rep.lhs = p.values.empty() ? 0.0 : p.values.front();
    rep.rhs = flat;
    rep.margin = rep.lhs - rep.rhs;
    rep.pass = m.holds;
    rep.witnesses = {x};
    if (!m.holds) rep.note = "weak majorization fails at prefix " + std::to_string(m.first_failing_prefix);
    return rep;
}

// Tail equality: if some prefix sum of the profile equals m * (A/N), the
// whole tail must sit at A/N. Returns the smallest such m with the
// verification flag.
inline std::optional<std::pair<std::size_t, bool>> tail_equality(const Frame& f, const Vec& x,
                                                                 double tol = 1e-10) {
    auto [a, b] = optimal_frame_bounds(f);
    CoefficientProfile p = profile(f, x);
    double flat = a / double(f.count());
    double prefix = 0.0;
    for (std::size_t m = 1; m <= p.values.size(); ++m) {
        prefix += p.values[m - 1];
        if (std::abs(prefix - double(m) * flat) <= tol) {
            bool verified = true;
            for (std::size_t i = m; i < p.values.size(); ++i)
                if (std::abs(p.values[i] - flat) > 1e-9) verified = false;
            return std::make_pair(m, verified);
        }
    }
    return std::nullopt;
}

struct ModulusOneReport {
    std::size_t count = 0;       // coefficients with a_i >= 1 - tol
    std::size_t bound = 0;       // floor(lambda_1)
    double lambda_max = 0.0;
    bool pass = false;
};

inline ModulusOneReport modulus_one_bound(const Frame& f, const Vec& x, double tol = 1e-9) {
    require_unit(x);
    SpectralSummary s = classify(f);
    if (!s.is_unit_norm)
        throw std::invalid_argument("modulus_one_bound: frame must be unit norm");
    ModulusOneReport r;
    r.lambda_max = s.upper_bound;
    r.bound = std::size_t(std::floor(r.lambda_max + 1e-9));
    for (double v : profile(f, x).values)
        if (v >= 1.0 - tol) ++r.count;
    r.pass = r.count <= r.bound;
    return r;
}

// When x is orthogonal to K frame vectors the nonzero coefficients must
// inflate: profile >_W (A/(N-K) x (N-K), 0 x K).
inline TheoremReport orthogonal_inflation(const Frame& f, const Vec& x, double zero_tol = -1.0) {
    auto [a, b] = optimal_frame_bounds(f);
    if (a <= 1e-12 * std::max(b, 1.0))
        throw std::invalid_argument("orthogonal_inflation: input family is not a frame");
    if (zero_tol < 0.0) zero_tol = 1e-9 * std::sqrt(b);

    std::size_t k = 0;
    for (cd c : analysis_coefficients(f, x))
        if (std::abs(c) <= zero_tol) ++k;
    const std::size_t n = f.count();
    if (k == n)
        throw std::invalid_argument(
            "orthogonal_inflation: x orthogonal to every frame vector; not a frame");

    CoefficientProfile p = profile(f, x);
    std::vector<double> bvec(n, 0.0);
    std::fill(bvec.begin(), bvec.begin() + (n - k), a / double(n - k));
    MajorizationResult m = weakly_majorizes(p.values, bvec);

    TheoremReport rep;
    rep.claim_id = "sec4.orthogonal-inflation";
    rep.frame_label = f.label;
    rep.lhs = p.values.empty() ? 0.0 : p.values.front();
    rep.rhs = a / double(n - k);
    rep.margin = rep.lhs - rep.rhs;
    rep.pass = m.holds;
    rep.samples = k;  // number of orthogonal frame vectors found
    rep.witnesses = {x};
    if (!m.holds) rep.note = "weak majorization fails at prefix " + std::to_string(m.first_failing_prefix);
    return rep;
}

}  // namespace framekit
