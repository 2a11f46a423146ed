#pragma once

#include <functional>
#include <numbers>
#include <optional>

#include "framekit/coefficients.hpp"
#include "framekit/frame.hpp"
#include "framekit/report.hpp"
#include "framekit/spark.hpp"

namespace framekit {

struct SearchConfig {
    std::size_t starts = 256;
    int polish_iters = 200;
    double conv_tol = 1e-10;
    std::uint64_t seed = 42;
};

struct SearchResult {
    double value = 0.0;
    Vec witness_x;
    std::optional<Vec> witness_y;
    std::size_t starts_used = 0;
    std::size_t best_start = 0;
    bool converged = false;
    bool certified = false;  // value is exact (annihilating-pair certificate)
};

// Named bounds from the product-sum and distance-sum statements. A field
// is set only when its hypothesis holds for the frame at hand.
struct BoundLedger {
    std::optional<double> hoelder_upper;        // B
    std::optional<double> count_upper;          // (N-2M+2) sqrt(B/M), N >= 2M-1
    std::optional<double> best_upper;
    std::optional<double> untf_lower_coeff;     // N/M, multiplies |<x,y>|
    std::optional<double> etf_fixed_lower;      // (N/M) c
    std::optional<double> prop226_low, prop226_high;
    std::optional<double> cor242_low, cor242_high;
    std::optional<double> exact_low, exact_high;  // 2N -+ 2||sum phi||
    bool cor242_improved = false;                 // the (M=2,N=3) sqrt(5c/3) variant
};

inline double product_sum(const Frame& f, const Vec& x, const Vec& y) {
    auto cx = analysis_coefficients(f, x);
    auto cy = analysis_coefficients(f, y);
    double s = 0.0;
    for (std::size_t i = 0; i < f.count(); ++i) s += std::abs(cx[i]) * std::abs(cy[i]);
    return s;
}

namespace detail {

// Subgradient of x -> sum_i w_i |<x,phi_i>|, zero contribution at kinks.
inline Vec weighted_abs_subgradient(const Frame& f, const Vec& x, const std::vector<double>& w) {
    Vec g(f.dim);
    for (std::size_t i = 0; i < f.count(); ++i) {
        cd c = inner(x, f.vectors[i]);
        double mag = std::abs(c);
        if (mag <= 1e-14) continue;
        cd factor = w[i] * c / mag;
        for (std::size_t j = 0; j < f.dim; ++j) g[j] += factor * f.vectors[i][j];
    }
    return g;
}

inline Vec step_and_renormalize(const Vec& x, const Vec& g, double eta) {
    Vec y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = x[j] - eta * g[j];
    double n = norm(y);
    if (n < 1e-14) return x;
    return scaled(std::move(y), 1.0 / n);
}

// Projected subgradient descent on the unit sphere: backtracking from
// step 1, shrink x0.5, accept only on decrease.
template <class Objective, class Subgradient>
std::pair<Vec, double> polish_on_sphere(Vec x, Objective&& obj, Subgradient&& grad,
                                        const SearchConfig& cfg, bool* converged) {
    double fx = obj(x);
    for (int it = 0; it < cfg.polish_iters; ++it) {
        Vec g = grad(x);
        double eta = 1.0;
        bool improved = false;
        for (int bt = 0; bt < 45; ++bt) {
            Vec cand = step_and_renormalize(x, g, eta);
            double fc = obj(cand);
            if (fc < fx) {
                if (fx - fc < cfg.conv_tol) {
                    x = std::move(cand);
                    fx = fc;
                    if (converged) *converged = true;
                    return {x, fx};
                }
                x = std::move(cand);
                fx = fc;
                improved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!improved) {
            if (converged) *converged = true;
            return {x, fx};
        }
    }
    if (converged) *converged = false;
    return {x, fx};
}

// Minima of abs-value sums sit on the hyperplanes <x, phi_i> = 0; the
// subgradient steps stall just off them. Snap onto nearby hyperplanes
// whenever that decreases the objective.
template <class Objective>
bool snap_to_kinks(const std::vector<Vec>& dirs, Vec& x, double& fx, Objective&& obj) {
    bool any = false;
    for (bool moved = true; moved;) {
        moved = false;
        for (const Vec& d : dirs) {
            double dn = norm(d);
            if (dn < 1e-14) continue;
            Vec cand = reject(x, scaled(Vec(d), 1.0 / dn));
            double n = norm(cand);
            if (n < 1e-8) continue;
            cand = scaled(std::move(cand), 1.0 / n);
            double fc = obj(cand);
            if (fc < fx - 1e-15) {
                x = std::move(cand);
                fx = fc;
                moved = any = true;
            }
        }
    }
    return any;
}

}  // namespace detail

// Multistart minimization of a nonnegative sphere objective. sign = +1
// minimizes, -1 maximizes.
template <class Objective, class Subgradient>
SearchResult multistart_sphere(std::size_t dim, Field field, Objective&& obj, Subgradient&& grad,
                               const SearchConfig& cfg, int sign = +1) {
    SearchResult best;
    best.value = 1e300;
    for (std::size_t s = 0; s < cfg.starts; ++s) {
        SplitMix64 rng(cfg.seed, 0x53504831ULL + s);
        Vec x0 = rng.unit_vector(dim, field);
        bool conv = false;
        auto signed_obj = [&](const Vec& v) { return sign * obj(v); };
        auto signed_grad = [&](const Vec& v) { return sign > 0 ? grad(v) : scaled(grad(v), -1.0); };
        auto [x, fx] = detail::polish_on_sphere(x0, signed_obj, signed_grad, cfg, &conv);
        if (fx < best.value) {
            best.value = fx;
            best.witness_x = std::move(x);
            best.best_start = s;
            best.converged = conv;
        }
    }
    best.starts_used = cfg.starts;
    best.value *= sign;
    return best;
}

enum class Direction { Min, Max };

// Multistart projected subgradient over the product of two unit spheres.
// For minimization, a complement-property failure is certified by an
// annihilating pair and reported as exactly zero.
inline SearchResult extremize_product_sum(const Frame& f, Direction dir, const SearchConfig& cfg,
                                          bool try_certificate = true) {
    auto [a, b] = optimal_frame_bounds(f);
    if (a <= 1e-12 * std::max(b, 1.0))
        throw std::invalid_argument("extremize_product_sum: input family is not a frame");

    if (dir == Direction::Min && try_certificate && f.count() <= subset_cap(20)) {
        ComplementPropertyResult cp = complement_property(f);
        if (!cp.holds) {
            auto [x, y] = annihilating_pair(f, *cp.witness);
            SearchResult r;
            r.value = 0.0;
            r.witness_x = x;
            r.witness_y = y;
            r.converged = true;
            r.certified = true;
            return r;
        }
    }

    const int sign = dir == Direction::Min ? +1 : -1;
    SearchResult best;
    best.value = 1e300;
    for (std::size_t s = 0; s < cfg.starts; ++s) {
        SplitMix64 rng(cfg.seed, 0x50414952ULL + s);
        Vec x = rng.unit_vector(f.dim, f.field);
        Vec y = rng.unit_vector(f.dim, f.field);
        double fxy = sign * product_sum(f, x, y);
        bool conv = false;

        for (int it = 0; it < cfg.polish_iters; ++it) {
            auto cx = analysis_coefficients(f, x);
            auto cy = analysis_coefficients(f, y);
            std::vector<double> wx(f.count()), wy(f.count());
            for (std::size_t i = 0; i < f.count(); ++i) {
                wx[i] = std::abs(cy[i]);
                wy[i] = std::abs(cx[i]);
            }
            Vec gx = detail::weighted_abs_subgradient(f, x, wx);
            Vec gy = detail::weighted_abs_subgradient(f, y, wy);
            if (sign < 0) {
                gx = scaled(std::move(gx), -1.0);
                gy = scaled(std::move(gy), -1.0);
            }

            double eta = 1.0;
            bool improved = false;
            for (int bt = 0; bt < 45; ++bt) {
                Vec cx2 = detail::step_and_renormalize(x, gx, eta);
                Vec cy2 = detail::step_and_renormalize(y, gy, eta);
                double fc = sign * product_sum(f, cx2, cy2);
                if (fc < fxy) {
                    bool small = fxy - fc < cfg.conv_tol;
                    x = std::move(cx2);
                    y = std::move(cy2);
                    fxy = fc;
                    improved = true;
                    if (small) {
                        conv = true;
                        it = cfg.polish_iters;  // stop outer loop
                    }
                    break;
                }
                eta *= 0.5;
            }
            if (!improved) {
                conv = true;
                break;
            }
        }
        if (fxy < best.value) {
            best.value = fxy;
            best.witness_x = x;
            best.witness_y = y;
            best.best_start = s;
            best.converged = conv;
        }
    }
    if (sign > 0 && best.witness_y) {
        for (bool moved = true; moved;) {
            moved = false;
            moved |= detail::snap_to_kinks(f.vectors, best.witness_x, best.value, [&](const Vec& v) {
                return product_sum(f, v, *best.witness_y);
            });
            moved |= detail::snap_to_kinks(f.vectors, *best.witness_y, best.value, [&](const Vec& v) {
                return product_sum(f, best.witness_x, v);
            });
        }
    }
    best.starts_used = cfg.starts;
    best.value *= sign;
    return best;
}

// Upper bounds for the product sum: Hoelder (B) always, the counting
// bound when N >= 2M-1. For UNTFs, best_upper picks Hoelder exactly when
// N - sqrt(N) + 2 >= 2M; otherwise the two are compared directly.
inline BoundLedger product_sum_bounds(const Frame& f) {
    auto [a, b] = optimal_frame_bounds(f);
    const double n = double(f.count()), m = double(f.dim);
    BoundLedger ledger;
    ledger.hoelder_upper = b;
    if (n >= 2.0 * m - 1.0) ledger.count_upper = (n - 2.0 * m + 2.0) * std::sqrt(b / m);

    SpectralSummary s = classify(f);
    if (!ledger.count_upper) {
        ledger.best_upper = ledger.hoelder_upper;
    } else if (s.is_unit_norm && s.is_tight) {
        ledger.best_upper =
            n - std::sqrt(n) + 2.0 >= 2.0 * m ? ledger.hoelder_upper : ledger.count_upper;
    } else {
        ledger.best_upper = std::min(*ledger.hoelder_upper, *ledger.count_upper);
    }
    if (s.is_unit_norm && s.is_tight) ledger.untf_lower_coeff = n / m;
    return ledger;
}

// UNTF pointwise lower bound (N/M)|<x,y>| <= product sum.
inline TheoremReport untf_pair_lower(const Frame& f, const Vec& x, const Vec& y) {
    SpectralSummary s = classify(f);
    if (!(s.is_unit_norm && s.is_tight))
        throw std::invalid_argument("untf_pair_lower: frame must be unit norm and tight");
    require_unit(x);
    require_unit(y);
    TheoremReport rep;
    rep.claim_id = "sec5.untf-pair-lower";
    rep.frame_label = f.label;
    rep.lhs = double(f.count()) / double(f.dim) * std::abs(inner(x, y));
    rep.rhs = product_sum(f, x, y);
    rep.margin = rep.rhs - rep.lhs;
    rep.pass = rep.margin >= -1e-9;
    rep.witnesses = {x, y};
    return rep;
}

struct EtfFixedVectorReport {
    double bound = 0.0;           // (N/M) c
    SearchResult searched;        // multistart infimum over x
    std::optional<double> special_case;  // 2/sqrt(2M-1) or (M+1)/(2 sqrt(M+2))
    bool pass = false;
};

// ETF fixed-vector lower bound: inf over unit x of
// sum_i |<phi_j, phi_i>| |<x, phi_i>| is at least (N/M) c.
inline EtfFixedVectorReport etf_fixed_vector_bound(const Frame& f, std::size_t j,
                                                   const SearchConfig& cfg = {}) {
    SpectralSummary s = classify(f);
    if (!(s.is_equiangular && s.is_tight))
        throw std::invalid_argument("etf_fixed_vector_bound: frame must be an equiangular tight frame");
    if (j >= f.count()) throw std::invalid_argument("etf_fixed_vector_bound: index out of range");

    const double n = double(f.count()), m = double(f.dim);
    const double c = *s.coherence;

    EtfFixedVectorReport rep;
    rep.bound = n / m * c;
    if (f.count() == 2 * f.dim) rep.special_case = 2.0 / std::sqrt(2.0 * m - 1.0);
    else if (2 * f.count() == f.dim * (f.dim + 1)) rep.special_case = (m + 1.0) / (2.0 * std::sqrt(m + 2.0));

    std::vector<double> w(f.count());
    for (std::size_t i = 0; i < f.count(); ++i)
        w[i] = std::abs(inner(f.vectors[j], f.vectors[i]));
    auto obj = [&](const Vec& x) {
        auto cx = analysis_coefficients(f, x);
        double total = 0.0;
        for (std::size_t i = 0; i < f.count(); ++i) total += w[i] * std::abs(cx[i]);
        return total;
    };
    auto grad = [&](const Vec& x) { return detail::weighted_abs_subgradient(f, x, w); };
    rep.searched = multistart_sphere(f.dim, f.field, obj, grad, cfg, +1);
    detail::snap_to_kinks(f.vectors, rep.searched.witness_x, rep.searched.value, obj);
    rep.pass = rep.searched.value >= rep.bound - 1e-6;
    return rep;
}

// Distance sums. Real geometry throughout; complex frames route through
// Re<.,.>, for which the same expansion holds.
inline double distance_sum(const Frame& f, const Vec& x) {
    require_unit(x);
    for (const Vec& phi : f.vectors)
        if (std::abs(norm(phi) - 1.0) > 1e-9)
            throw std::invalid_argument("distance_sum: frame must be unit norm");
    double direct = 0.0;
    for (const Vec& phi : f.vectors) direct += norm_sq(sub(Vec(x), phi));
    double identity = 2.0 * double(f.count()) - 2.0 * inner(x, vector_sum(f)).real();
    if (std::abs(direct - identity) > 1e-10 * std::max(1.0, direct))
        throw std::logic_error("distance_sum: direct sum and identity disagree");
    return direct;
}

// Exact Lagrange extrema 2N -+ 2||sum phi||.
inline std::pair<double, double> distance_sum_extrema(const Frame& f) {
    for (const Vec& phi : f.vectors)
        if (std::abs(norm(phi) - 1.0) > 1e-9)
            throw std::invalid_argument("distance_sum_extrema: frame must be unit norm");
    double s = norm(vector_sum(f));
    double n2 = 2.0 * double(f.count());
    return {n2 - 2.0 * s, n2 + 2.0 * s};
}

// Searched counterpart of distance_sum_extrema (smooth objective).
inline std::pair<SearchResult, SearchResult> search_distance_extrema(const Frame& f,
                                                                     const SearchConfig& cfg = {}) {
    Vec s = vector_sum(f);
    auto obj = [&](const Vec& x) {
        return 2.0 * double(f.count()) - 2.0 * inner(x, s).real();
    };
    auto grad = [&](const Vec& x) {
        (void)x;
        return scaled(Vec(s), -2.0);
    };
    SearchResult lo = multistart_sphere(f.dim, f.field, obj, grad, cfg, +1);
    SearchResult hi = multistart_sphere(f.dim, f.field, obj, grad, cfg, -1);
    return {lo, hi};
}

// Nested distance-sum intervals for real ETFs: the tight interval from
// the top frame-operator eigenvalue, and the looser sqrt(2c) outer one.
// Strict nesting needs 1/N < c < 1/2; c = 0 (N = M) and the simplex-pair
// c = 1 (M = 1) fall outside, and (M=2, N=3) upgrades to sqrt(5c/3).
inline BoundLedger etf_distance_bounds(const Frame& f) {
    if (f.field != Field::Real)
        throw std::invalid_argument("etf_distance_bounds: stated for real frames only");
    SpectralSummary s = classify(f);
    if (!(s.is_equiangular && s.is_tight))
        throw std::invalid_argument("etf_distance_bounds: frame must be an equiangular tight frame");

    const double n = double(f.count()), m = double(f.dim);
    const double c = *s.coherence;
    BoundLedger ledger;
    auto [lo, hi] = distance_sum_extrema(f);
    ledger.exact_low = lo;
    ledger.exact_high = hi;

    if (c < 1.0 - 1e-9) {
        double lam = std::sqrt(n * (1.0 + (n - 1.0) * c));
        ledger.prop226_low = 2.0 * (n - lam);
        ledger.prop226_high = 2.0 * (n + lam);
    }
    if (f.dim == 2 && f.count() == 3) {
        double factor = std::sqrt(5.0 / 3.0 * c);
        ledger.cor242_low = 2.0 * n * (1.0 - factor);
        ledger.cor242_high = 2.0 * n * (1.0 + factor);
        ledger.cor242_improved = true;
    } else if (c > 1.0 / n + 1e-12 && c < 0.5 - 1e-12) {
        double factor = std::sqrt(2.0 * c);
        ledger.cor242_low = 2.0 * n * (1.0 - factor);
        ledger.cor242_high = 2.0 * n * (1.0 + factor);
    }
    return ledger;
}

// Zero-sum UNTF identity: distance sum is exactly 2N for every unit x.
inline TheoremReport zero_sum_identity(const Frame& f, std::size_t samples,
                                       std::uint64_t seed = 42) {
    TheoremReport rep;
    rep.claim_id = "sec6.zero-sum-2N";
    rep.frame_label = f.label;
    rep.samples = samples;
    rep.seed = seed;

    SpectralSummary s = classify(f);
    double sum_norm = norm(vector_sum(f));
    if (!(s.is_unit_norm && s.is_tight) || sum_norm > 1e-9) {
        rep.hypothesis = Hypothesis::Violated;
        rep.note = !s.is_tight ? "frame is not tight"
                 : !s.is_unit_norm ? "frame is not unit norm"
                                   : "frame vectors do not sum to zero";
        return rep;
    }

    double want = 2.0 * double(f.count());
    double worst = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        SplitMix64 rng(seed, 0x5a53554dULL + k);
        Vec x = rng.unit_vector(f.dim, f.field);
        worst = std::max(worst, std::abs(distance_sum(f, x) - want));
    }
    rep.lhs = worst;
    rep.rhs = 1e-8;
    rep.margin = rep.rhs - rep.lhs;
    rep.pass = worst <= 1e-8;
    return rep;
}

struct ProductDistanceReport {
    double value = 0.0;
    double identity_value = 0.0;  // 4N (1 + <x,y>/M)
    TheoremReport report;
};

// Zero-sum UNTF product-distance identity and the 4N(1 -+ 1/M) bounds.
inline ProductDistanceReport product_distance_sum(const Frame& f, const Vec& x, const Vec& y) {
    if (f.field != Field::Real)
        throw std::invalid_argument("product_distance_sum: stated for real frames only");
    SpectralSummary s = classify(f);
    if (!(s.is_unit_norm && s.is_tight) || norm(vector_sum(f)) > 1e-9)
        throw std::invalid_argument("product_distance_sum: needs a zero-sum unit norm tight frame");
    require_unit(x);
    require_unit(y);

    const double n = double(f.count()), m = double(f.dim);
    ProductDistanceReport out;
    for (const Vec& phi : f.vectors)
        out.value += norm_sq(sub(Vec(x), phi)) * norm_sq(sub(Vec(y), phi));
    out.identity_value = 4.0 * n * (1.0 + inner(x, y).real() / m);

    out.report.claim_id = "sec6.product-distance";
    out.report.frame_label = f.label;
    out.report.lhs = out.value;
    out.report.rhs = out.identity_value;
    out.report.margin = std::abs(out.value - out.identity_value);
    bool in_band = out.value >= 4.0 * n * (1.0 - 1.0 / m) - 1e-8 &&
                   out.value <= 4.0 * n * (1.0 + 1.0 / m) + 1e-8;
    out.report.pass = out.report.margin <= 1e-8 && in_band;
    out.report.witnesses = {x, y};
    return out;
}

// ---- Brute-force oracles ------------------------------------------------

namespace oracle {

// Extrema of a callable over the unit circle (real M = 2 only). A coarse
// sweep locates the extrema; shrinking local grids then resolve them well
// past 1e-6 even when the objective has kinks there.
template <class F>
std::pair<double, double> circle_extrema(F&& fn, std::size_t points = 4096) {
    auto at = [&](double theta) { return fn(Vec{std::cos(theta), std::sin(theta)}); };
    double lo = 1e300, hi = -1e300, arg_lo = 0.0, arg_hi = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
        double theta = 2.0 * std::numbers::pi * double(k) / double(points);
        double v = at(theta);
        if (v < lo) lo = v, arg_lo = theta;
        if (v > hi) hi = v, arg_hi = theta;
    }
    for (double span = 2.0 * std::numbers::pi / double(points); span > 1e-10; span *= 0.1) {
        double c_lo = arg_lo, c_hi = arg_hi;
        for (int k = -20; k <= 20; ++k) {
            double tl = c_lo + span * double(k) / 20.0;
            double th = c_hi + span * double(k) / 20.0;
            if (double v = at(tl); v < lo) lo = v, arg_lo = tl;
            if (double v = at(th); v > hi) hi = v, arg_hi = th;
        }
    }
    return {lo, hi};
}

// Pairwise product-sum extrema over an angle grid (real M = 2 only).
inline std::pair<double, double> circle_pair_product_extrema(const Frame& f,
                                                             std::size_t points = 4096) {
    if (f.dim != 2) throw std::invalid_argument("circle oracle: dim must be 2");
    const std::size_t n = f.count();
    std::vector<double> mag(points * n);
    for (std::size_t k = 0; k < points; ++k) {
        double theta = 2.0 * std::numbers::pi * double(k) / double(points);
        Vec x = {std::cos(theta), std::sin(theta)};
        for (std::size_t i = 0; i < n; ++i) mag[k * n + i] = std::abs(inner(x, f.vectors[i]));
    }
    auto at = [&](double ta, double tb) {
        Vec x = {std::cos(ta), std::sin(ta)}, y = {std::cos(tb), std::sin(tb)};
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += std::abs(inner(x, f.vectors[i])) * std::abs(inner(y, f.vectors[i]));
        return s;
    };
    double lo = 1e300, hi = -1e300;
    double lo_a = 0.0, lo_b = 0.0, hi_a = 0.0, hi_b = 0.0;
    const double step = 2.0 * std::numbers::pi / double(points);
    for (std::size_t a = 0; a < points; ++a) {
        const double* ma = &mag[a * n];
        for (std::size_t b = a; b < points; ++b) {
            const double* mb = &mag[b * n];
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += ma[i] * mb[i];
            if (s < lo) lo = s, lo_a = step * double(a), lo_b = step * double(b);
            if (s > hi) hi = s, hi_a = step * double(a), hi_b = step * double(b);
        }
    }
    // shrinking local grids around the coarse extrema, as in circle_extrema
    for (double span = step; span > 1e-10; span *= 0.1) {
        double cla = lo_a, clb = lo_b, cha = hi_a, chb = hi_b;
        for (int ka = -10; ka <= 10; ++ka)
            for (int kb = -10; kb <= 10; ++kb) {
                double tla = cla + span * double(ka) / 10.0, tlb = clb + span * double(kb) / 10.0;
                double tha = cha + span * double(ka) / 10.0, thb = chb + span * double(kb) / 10.0;
                if (double v = at(tla, tlb); v < lo) lo = v, lo_a = tla, lo_b = tlb;
                if (double v = at(tha, thb); v > hi) hi = v, hi_a = tha, hi_b = thb;
            }
    }
    return {lo, hi};
}

// Spherical Fibonacci lattice on S^2 (real M = 3 only).
inline std::vector<Vec> fibonacci_sphere(std::size_t points = 100000) {
    std::vector<Vec> out;
    out.reserve(points);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < points; ++k) {
        double z = 1.0 - 2.0 * (double(k) + 0.5) / double(points);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double theta = golden * double(k);
        out.push_back(Vec{r * std::cos(theta), r * std::sin(theta), z});
    }
    return out;
}

template <class F>
std::pair<double, double> sphere_extrema(F&& fn, std::size_t points = 100000) {
    double lo = 1e300, hi = -1e300;
    for (const Vec& x : fibonacci_sphere(points)) {
        double v = fn(x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

}  // namespace oracle

}  // namespace framekit
