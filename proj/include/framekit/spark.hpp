#pragma once

#include <bit>
#include <cstdlib>
#include <optional>

#include "framekit/frame.hpp"

namespace framekit {

struct PartitionWitness {
    std::vector<std::size_t> subset;  // I; the complement is implicit
    bool subset_spans = false;
    bool complement_spans = false;
    std::optional<Vec> x;  // unit, orthogonal to {phi_i : i in I}
    std::optional<Vec> y;  // unit, orthogonal to the complement
};

struct SparkResult {
    bool full_spark = false;
    std::optional<std::vector<std::size_t>> failing_subset;  // first in lexicographic order
};

struct ComplementPropertyResult {
    bool holds = false;
    std::optional<PartitionWitness> witness;
};

// Combinatorial caps, overridable through FRAME_SUBSET_CAP.
inline std::size_t subset_cap(std::size_t fallback) {
    if (const char* env = std::getenv("FRAME_SUBSET_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return std::size_t(v);
    }
    return fallback;
}

namespace detail {

inline bool subset_spans(const Frame& f, std::uint32_t mask, double tol = 1e-10) {
    Mat s(f.dim, f.dim);
    std::size_t used = 0;
    for (std::size_t i = 0; i < f.count(); ++i) {
        if (!(mask & (1u << i))) continue;
        ++used;
        const Vec& phi = f.vectors[i];
        for (std::size_t r = 0; r < f.dim; ++r)
            for (std::size_t c = 0; c < f.dim; ++c) s(r, c) += phi[r] * std::conj(phi[c]);
    }
    if (used < f.dim) return false;
    EigenResult e = hermitian_eigen(s);
    double lam_max = std::max(e.values.front(), 0.0);
    return lam_max > 0.0 && e.values.back() > tol * lam_max;
}

inline std::vector<std::size_t> mask_to_indices(std::uint32_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

}  // namespace detail

// Every M-subset spans. Reports the lexicographically first failing
// subset otherwise.
inline SparkResult full_spark(const Frame& f, std::size_t cap = 0) {
    f.validate();
    if (cap == 0) cap = subset_cap(24);
    const std::size_t n = f.count(), m = f.dim;
    if (n < m) throw std::invalid_argument("full_spark: needs N >= M");
    if (n > cap)
        throw std::invalid_argument("full_spark: N exceeds combinatorial cap (set FRAME_SUBSET_CAP)");

    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    SparkResult result;
    while (true) {
        std::vector<Vec> subset;
        for (std::size_t i : idx) subset.push_back(f.vectors[i]);
        if (numerical_rank(subset) != m) {
            result.failing_subset = idx;
            return result;
        }
        // next combination in lexicographic order
        std::size_t k = m;
        while (k > 0 && idx[k - 1] == n - m + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t i = k; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
    result.full_spark = true;
    return result;
}

// Complement property over ALL subsets I (not just |I| = M): for each I,
// span(I) or span(I^c) is the whole space. strict_size_m restricts the
// enumeration to |I| = M for comparison with the definition as printed.
inline ComplementPropertyResult complement_property(const Frame& f, std::size_t cap = 0,
                                                    bool strict_size_m = false) {
    f.validate();
    if (cap == 0) cap = subset_cap(20);
    const std::size_t n = f.count();
    if (n > cap)
        throw std::invalid_argument(
            "complement_property: N exceeds combinatorial cap (set FRAME_SUBSET_CAP)");
    if (n >= 32) throw std::invalid_argument("complement_property: N >= 32 unsupported");

    const std::uint32_t full = n == 31 ? 0x7fffffffu : ((1u << n) - 1u);
    ComplementPropertyResult result;
    // Fix vector 0 on the I side; partitions are unordered pairs.
    for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
        std::uint32_t mask = (rest << 1) | 1u;
        if (strict_size_m && std::size_t(std::popcount(mask)) != f.dim &&
            std::size_t(std::popcount(full & ~mask)) != f.dim)
            continue;
        bool left = detail::subset_spans(f, mask);
        if (left) continue;
        bool right = detail::subset_spans(f, full & ~mask);
        if (right) continue;

        PartitionWitness w;
        w.subset = detail::mask_to_indices(mask, n);
        w.subset_spans = false;
        w.complement_spans = false;
        std::vector<Vec> in, out;
        for (std::size_t i = 0; i < n; ++i)
            (mask & (1u << i) ? in : out).push_back(f.vectors[i]);
        w.x = null_space_basis(in, f.dim).front();
        w.y = null_space_basis(out, f.dim).front();
        result.witness = std::move(w);
        return result;
    }
    result.holds = true;
    return result;
}

// Unit x, y annihilating the product sum, from a failed-partition witness.
inline std::pair<Vec, Vec> annihilating_pair(const Frame& f, const PartitionWitness& w) {
    std::vector<Vec> in, out;
    for (std::size_t i = 0; i < f.count(); ++i) {
        bool in_subset = std::find(w.subset.begin(), w.subset.end(), i) != w.subset.end();
        (in_subset ? in : out).push_back(f.vectors[i]);
    }
    if (numerical_rank(in) == f.dim || numerical_rank(out) == f.dim)
        throw std::invalid_argument("annihilating_pair: witness side actually spans");
    Vec x = w.x ? *w.x : null_space_basis(in, f.dim).front();
    Vec y = w.y ? *w.y : null_space_basis(out, f.dim).front();
    return {x, y};
}

struct ProductCountReport {
    std::size_t count = 0;
    std::optional<std::size_t> full_spark_bound;  // N - (2M - 2) when it applies
    bool pass = true;
};

inline ProductCountReport nonzero_product_count(const Frame& f, const Vec& x, const Vec& y,
                                                double zero_tol = 1e-9,
                                                std::optional<bool> is_full_spark = std::nullopt) {
    if (std::abs(norm(x) - 1.0) > 1e-9 || std::abs(norm(y) - 1.0) > 1e-9)
        throw std::invalid_argument("nonzero_product_count: expected unit vectors");

    auto cx = analysis_coefficients(f, x);
    auto cy = analysis_coefficients(f, y);
    ProductCountReport r;
    for (std::size_t i = 0; i < f.count(); ++i)
        if (std::abs(cx[i]) * std::abs(cy[i]) > zero_tol * zero_tol) ++r.count;

    bool spark = is_full_spark ? *is_full_spark : full_spark(f).full_spark;
    if (spark && f.count() + 2 >= 2 * f.dim) {
        r.full_spark_bound = f.count() - (2 * f.dim - 2);
        r.pass = r.count >= *r.full_spark_bound;
    }
    return r;
}

// Real phase-retrieval injectivity is exactly the complement property.
inline bool phase_retrieval_injective(const Frame& f, std::size_t cap = 0) {
    if (f.field != Field::Real)
        throw std::invalid_argument(
            "phase_retrieval_injective: the stated equivalence is the real-field result");
    return complement_property(f, cap).holds;
}

}  // namespace framekit
