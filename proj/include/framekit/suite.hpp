#pragma once

#include <json.hpp>

#include "framekit/coefficients.hpp"
#include "framekit/construct.hpp"
#include "framekit/search.hpp"
#include "framekit/spark.hpp"

namespace framekit {

struct SuiteConfig {
    std::string suite = "all";  // all | sec3 | sec4 | sec5 | sec6
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    std::size_t starts = 64;  // multistart budget for search-backed claims
};

namespace detail {

inline TheoremReport skipped(const Frame& f, std::string claim_id, std::string why) {
    TheoremReport rep;
    rep.claim_id = std::move(claim_id);
    rep.frame_label = f.label;
    rep.hypothesis = Hypothesis::Skipped;
    rep.note = std::move(why);
    return rep;
}

inline TheoremReport violated(const Frame& f, std::string claim_id, std::string why) {
    TheoremReport rep = skipped(f, std::move(claim_id), std::move(why));
    rep.hypothesis = Hypothesis::Violated;
    return rep;
}

inline Vec sample_x(const Frame& f, std::uint64_t seed, std::uint64_t salt, std::size_t k) {
    SplitMix64 rng(seed, salt + k);
    return rng.unit_vector(f.dim, f.field);
}

// ---- sec3 ---------------------------------------------------------------

inline TheoremReport claim_jx_lower(const Frame& f, const SuiteConfig& cfg) {
    TheoremReport rep;
    rep.claim_id = "sec3.jx-lower";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    double worst = 1e300;
    std::size_t worst_count = 0;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        Vec x = sample_x(f, cfg.seed, 0x53334a58ULL, k);
        SupportReport s = support_counts(f, x, 0.5);
        if (s.jx_margin < worst) {
            worst = s.jx_margin;
            worst_count = s.nonzero_indices.size();
            rep.rhs = s.jx_bound;
            rep.witnesses = {x};
        }
    }
    rep.lhs = double(worst_count);
    rep.margin = worst;
    rep.pass = worst >= -1e-9;
    if (rep.pass) rep.witnesses.clear();
    return rep;
}

inline TheoremReport claim_kx_lower(const Frame& f, const SuiteConfig& cfg, double c,
                                    const char* claim_id) {
    TheoremReport rep;
    rep.claim_id = claim_id;
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    double worst = 1e300;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        Vec x = sample_x(f, cfg.seed, 0x53334b58ULL, k);
        SupportReport s = support_counts(f, x, c);
        double margin = double(s.threshold_indices.size()) - s.kx_bound;
        if (margin < worst) {
            worst = margin;
            rep.lhs = double(s.threshold_indices.size());
            rep.rhs = s.kx_bound;
            rep.witnesses = {x};
        }
    }
    rep.margin = worst;
    rep.pass = worst >= -1e-9;
    if (rep.pass) rep.witnesses.clear();
    return rep;
}

// ---- sec4 ---------------------------------------------------------------

inline TheoremReport claim_flat_majorization(const Frame& f, const SuiteConfig& cfg) {
    TheoremReport rep;
    rep.claim_id = "sec4.flat-majorization";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.pass = true;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        Vec x = sample_x(f, cfg.seed, 0x53344d4aULL, k);
        TheoremReport one = check_flat_majorization(f, x);
        if (k == 0 || !one.pass) {
            rep.lhs = one.lhs;
            rep.rhs = one.rhs;
            rep.margin = one.margin;
        }
        if (!one.pass) {
            rep.pass = false;
            rep.note = one.note;
            rep.witnesses = {x};
            return rep;
        }
    }
    return rep;
}

inline TheoremReport claim_tail_equality(const Frame& f, const SuiteConfig& cfg) {
    TheoremReport rep;
    rep.claim_id = "sec4.tail-equality";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.pass = true;

    auto [a, b] = optimal_frame_bounds(f);
    double flat = a / double(f.count());
    std::size_t fired = 0;
    auto probe = [&](const Vec& x) {
        auto hit = tail_equality(f, x);
        if (!hit) return;
        ++fired;
        if (!hit->second) {
            rep.pass = false;
            rep.witnesses = {x};
            rep.note = "prefix equality at m = " + std::to_string(hit->first) +
                       " without a flat tail";
        }
    };
    // frame vectors themselves are the likeliest equality witnesses
    bool unit = classify(f).is_unit_norm;
    if (unit)
        for (const Vec& phi : f.vectors) probe(phi);
    for (std::size_t k = 0; k < cfg.samples; ++k) probe(sample_x(f, cfg.seed, 0x53345445ULL, k));

    rep.lhs = double(fired);
    rep.rhs = flat;
    if (rep.note.empty()) rep.note = std::to_string(fired) + " prefix-equality events";
    return rep;
}

inline TheoremReport claim_modulus_one(const Frame& f, const SuiteConfig& cfg) {
    if (!classify(f).is_unit_norm)
        return skipped(f, "sec4.modulus-one", "frame is not unit norm");
    TheoremReport rep;
    rep.claim_id = "sec4.modulus-one";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.pass = true;
    auto probe = [&](const Vec& x) {
        ModulusOneReport m = modulus_one_bound(f, x);
        if (double(m.count) - double(m.bound) > rep.lhs - rep.rhs || rep.witnesses.empty()) {
            rep.lhs = double(m.count);
            rep.rhs = double(m.bound);
            rep.witnesses = {x};
        }
        if (!m.pass) rep.pass = false;
    };
    for (const Vec& phi : f.vectors) probe(phi);
    for (std::size_t k = 0; k < cfg.samples; ++k) probe(sample_x(f, cfg.seed, 0x53344d31ULL, k));
    rep.margin = rep.rhs - rep.lhs;
    if (rep.pass) rep.witnesses.clear();
    return rep;
}

inline TheoremReport claim_orthogonal_inflation(const Frame& f, const SuiteConfig& cfg) {
    TheoremReport rep;
    rep.claim_id = "sec4.orthogonal-inflation";
    rep.frame_label = f.label;
    rep.seed = cfg.seed;
    rep.pass = true;
    std::size_t probes = 0;
    // x orthogonal to the first k frame vectors, k = 1..M-1
    for (std::size_t k = 1; k + 1 <= f.dim; ++k) {
        std::vector<Vec> head(f.vectors.begin(), f.vectors.begin() + std::min(k, f.count()));
        auto basis = null_space_basis(head, f.dim);
        if (basis.empty()) continue;
        TheoremReport one = orthogonal_inflation(f, basis.front());
        ++probes;
        rep.lhs = one.lhs;
        rep.rhs = one.rhs;
        rep.margin = one.margin;
        if (!one.pass) {
            rep.pass = false;
            rep.note = one.note;
            rep.witnesses = {basis.front()};
            break;
        }
    }
    if (probes == 0) return skipped(f, "sec4.orthogonal-inflation", "no proper orthogonal complement to probe (M = 1)");
    rep.samples = probes;
    return rep;
}

// ---- sec5 ---------------------------------------------------------------

inline TheoremReport claim_complement_property(const Frame& f, const SuiteConfig& cfg) {
    if (f.count() > subset_cap(20))
        return skipped(f, "sec5.complement-property", "N exceeds the subset enumeration cap");
    if (f.count() < 2 * f.dim - 1)
        return violated(f, "sec5.complement-property",
                        "N < 2M-1: every partition leaves one side too short to span");
    TheoremReport rep;
    rep.claim_id = "sec5.complement-property";
    rep.frame_label = f.label;
    rep.seed = cfg.seed;
    ComplementPropertyResult cp = complement_property(f);
    rep.pass = cp.holds;
    if (!cp.holds) {
        auto [x, y] = annihilating_pair(f, *cp.witness);
        rep.lhs = product_sum(f, x, y);
        rep.rhs = 0.0;
        rep.margin = -rep.lhs;
        rep.witnesses = {x, y};
        std::string subset;
        for (std::size_t i : cp.witness->subset) subset += (subset.empty() ? "" : ",") + std::to_string(i + 1);
        rep.note = "fails at I = {" + subset + "}; annihilating pair attached";
    }
    return rep;
}

inline TheoremReport claim_cp_min_equivalence(const Frame& f, const SuiteConfig& cfg) {
    if (f.count() > subset_cap(20))
        return skipped(f, "sec5.cp-min-equivalence", "N exceeds the subset enumeration cap");
    TheoremReport rep;
    rep.claim_id = "sec5.cp-min-equivalence";
    rep.frame_label = f.label;
    rep.seed = cfg.seed;
    SearchConfig sc;
    sc.starts = cfg.starts;
    sc.seed = cfg.seed;
    bool holds = complement_property(f).holds;
    SearchResult lo = extremize_product_sum(f, Direction::Min, sc);
    rep.lhs = lo.value;
    rep.rhs = 1e-6;
    rep.margin = holds ? lo.value - 1e-6 : -lo.value;
    rep.pass = holds == (lo.value > 1e-6);
    rep.note = holds ? "complement property holds; searched minimum stays positive"
                     : "complement property fails; minimum certified zero";
    return rep;
}

inline TheoremReport claim_hoelder_upper(const Frame& f, const SuiteConfig& cfg) {
    TheoremReport rep;
    rep.claim_id = "sec5.hoelder-upper";
    rep.frame_label = f.label;
    rep.seed = cfg.seed;
    SearchConfig sc;
    sc.starts = cfg.starts;
    sc.seed = cfg.seed;
    BoundLedger led = product_sum_bounds(f);
    SearchResult hi = extremize_product_sum(f, Direction::Max, sc);
    rep.lhs = hi.value;
    rep.rhs = *led.hoelder_upper;
    rep.margin = rep.rhs - rep.lhs;
    rep.pass = rep.margin >= -1e-6;
    return rep;
}

inline TheoremReport claim_count_upper(const Frame& f, const SuiteConfig& cfg) {
    // Reported, never asserted: the stated bound only covers pairs with
    // fixed orthogonality patterns, and x = y on a tight frame exceeds it.
    TheoremReport rep = skipped(f, "sec5.count-upper", "");
    rep.seed = cfg.seed;
    BoundLedger led = product_sum_bounds(f);
    if (!led.count_upper) {
        rep.note = "bound needs N >= 2M-1";
        return rep;
    }
    SearchConfig sc;
    sc.starts = cfg.starts;
    sc.seed = cfg.seed;
    SearchResult hi = extremize_product_sum(f, Direction::Max, sc);
    rep.lhs = hi.value;
    rep.rhs = *led.count_upper;
    rep.margin = rep.rhs - rep.lhs;
    rep.note = rep.margin >= -1e-6
                   ? "observed supremum within the constrained-pair bound"
                   : "observed supremum exceeds the constrained-pair bound (reported only)";
    return rep;
}

inline TheoremReport claim_untf_pair_lower(const Frame& f, const SuiteConfig& cfg) {
    SpectralSummary s = classify(f);
    if (!(s.is_unit_norm && s.is_tight))
        return skipped(f, "sec5.untf-pair-lower", "frame is not unit-norm tight");
    TheoremReport rep;
    rep.claim_id = "sec5.untf-pair-lower";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.pass = true;
    double worst = 1e300;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        SplitMix64 rng(cfg.seed, 0x53355054ULL + k);
        Vec x = rng.unit_vector(f.dim, f.field);
        Vec y = rng.unit_vector(f.dim, f.field);
        TheoremReport one = untf_pair_lower(f, x, y);
        if (one.margin < worst) {
            worst = one.margin;
            rep.lhs = one.rhs;  // product sum
            rep.rhs = one.lhs;  // (N/M)|<x,y>|
            if (!one.pass) rep.witnesses = {x, y};
        }
        if (!one.pass) rep.pass = false;
    }
    rep.margin = worst;
    return rep;
}

inline TheoremReport claim_full_spark_count(const Frame& f, const SuiteConfig& cfg) {
    if (f.count() > subset_cap(24))
        return skipped(f, "sec5.full-spark-count", "N exceeds the subset enumeration cap");
    if (!full_spark(f).full_spark)
        return violated(f, "sec5.full-spark-count", "frame is not full spark");
    if (f.count() + 2 < 2 * f.dim)
        return violated(f, "sec5.full-spark-count", "bound needs N >= 2M-2");
    TheoremReport rep;
    rep.claim_id = "sec5.full-spark-count";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.pass = true;
    double worst = 1e300;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        SplitMix64 rng(cfg.seed, 0x53355043ULL + k);
        Vec x = rng.unit_vector(f.dim, f.field);
        Vec y = rng.unit_vector(f.dim, f.field);
        ProductCountReport r = nonzero_product_count(f, x, y, 1e-9, true);
        double margin = double(r.count) - double(*r.full_spark_bound);
        if (margin < worst) {
            worst = margin;
            rep.lhs = double(r.count);
            rep.rhs = double(*r.full_spark_bound);
            if (!r.pass) rep.witnesses = {x, y};
        }
        if (!r.pass) rep.pass = false;
    }
    rep.margin = worst;
    return rep;
}

inline TheoremReport claim_etf_fixed_vector(const Frame& f, const SuiteConfig& cfg) {
    SpectralSummary s = classify(f);
    if (!(s.is_equiangular && s.is_tight))
        return skipped(f, "sec5.etf-fixed-vector", "frame is not an equiangular tight frame");
    TheoremReport rep;
    rep.claim_id = "sec5.etf-fixed-vector";
    rep.frame_label = f.label;
    rep.samples = f.count();
    rep.seed = cfg.seed;
    rep.pass = true;
    SearchConfig sc;
    sc.starts = cfg.starts;
    sc.seed = cfg.seed;
    double worst = 1e300;
    for (std::size_t j = 0; j < f.count(); ++j) {
        EtfFixedVectorReport r = etf_fixed_vector_bound(f, j, sc);
        double margin = r.searched.value - r.bound;
        if (margin < worst) {
            worst = margin;
            rep.lhs = r.searched.value;
            rep.rhs = r.bound;
            if (!r.pass) rep.witnesses = {r.searched.witness_x};
        }
        if (!r.pass) rep.pass = false;
    }
    rep.margin = worst;
    return rep;
}

// ---- sec6 ---------------------------------------------------------------

inline TheoremReport claim_distance_identity(const Frame& f, const SuiteConfig& cfg) {
    if (!classify(f).is_unit_norm)
        return skipped(f, "sec6.distance-identity", "frame is not unit norm");
    TheoremReport rep;
    rep.claim_id = "sec6.distance-identity";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    Vec total = vector_sum(f);
    double worst = 0.0;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        Vec x = sample_x(f, cfg.seed, 0x53364449ULL, k);
        double direct = 0.0;
        for (const Vec& phi : f.vectors) direct += norm_sq(sub(Vec(x), phi));
        double identity = 2.0 * double(f.count()) - 2.0 * inner(x, total).real();
        worst = std::max(worst, std::abs(direct - identity));
    }
    rep.lhs = worst;
    rep.rhs = 1e-10 * std::max(1.0, 2.0 * double(f.count()));
    rep.margin = rep.rhs - rep.lhs;
    rep.pass = rep.margin >= 0.0;
    return rep;
}

inline TheoremReport claim_distance_extrema(const Frame& f, const SuiteConfig& cfg) {
    if (!classify(f).is_unit_norm)
        return skipped(f, "sec6.distance-extrema", "frame is not unit norm");
    TheoremReport rep;
    rep.claim_id = "sec6.distance-extrema";
    rep.frame_label = f.label;
    rep.seed = cfg.seed;
    SearchConfig sc;
    sc.starts = cfg.starts;
    sc.seed = cfg.seed;
    auto [lo, hi] = distance_sum_extrema(f);
    auto [slo, shi] = search_distance_extrema(f, sc);
    rep.lhs = std::max(std::abs(slo.value - lo), std::abs(shi.value - hi));
    rep.rhs = 1e-7;
    rep.margin = rep.rhs - rep.lhs;
    rep.pass = rep.margin >= 0.0;
    return rep;
}

inline TheoremReport claim_etf_nesting(const Frame& f, const SuiteConfig& cfg) {
    SpectralSummary s = classify(f);
    if (f.field != Field::Real || !(s.is_equiangular && s.is_tight))
        return skipped(f, "sec6.etf-nesting", "frame is not a real equiangular tight frame");
    TheoremReport rep;
    rep.claim_id = "sec6.etf-nesting";
    rep.frame_label = f.label;
    rep.seed = cfg.seed;
    BoundLedger led = etf_distance_bounds(f);
    if (!led.prop226_low)
        return violated(f, "sec6.etf-nesting", "coherence is 1; the interval degenerates");
    rep.pass = *led.exact_low >= *led.prop226_low - 1e-9 && *led.exact_high <= *led.prop226_high + 1e-9 &&
               *led.prop226_low > 0.0;
    if (led.cor242_low)
        rep.pass = rep.pass && *led.cor242_low < *led.prop226_low && *led.cor242_high > *led.prop226_high;
    rep.lhs = *led.prop226_low;
    rep.rhs = led.cor242_low ? *led.cor242_low : 0.0;
    rep.margin = rep.lhs - rep.rhs;
    rep.note = led.cor242_low
                   ? (led.cor242_improved ? "improved (M=2,N=3) interval" : "general interval")
                   : "coherence outside (1/N, 1/2); outer interval not stated";
    return rep;
}

inline TheoremReport claim_product_distance(const Frame& f, const SuiteConfig& cfg) {
    SpectralSummary s = classify(f);
    if (f.field != Field::Real || !(s.is_unit_norm && s.is_tight) || norm(vector_sum(f)) > 1e-9)
        return skipped(f, "sec6.product-distance", "needs a real zero-sum unit-norm tight frame");
    TheoremReport rep;
    rep.claim_id = "sec6.product-distance";
    rep.frame_label = f.label;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.pass = true;
    double worst = 0.0;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        SplitMix64 rng(cfg.seed, 0x53365044ULL + k);
        Vec x = rng.unit_vector(f.dim, f.field);
        Vec y = rng.unit_vector(f.dim, f.field);
        ProductDistanceReport r = product_distance_sum(f, x, y);
        worst = std::max(worst, r.report.margin);
        if (!r.report.pass) {
            rep.pass = false;
            rep.witnesses = {x, y};
        }
    }
    rep.lhs = worst;
    rep.rhs = 1e-8;
    rep.margin = rep.rhs - rep.lhs;
    return rep;
}

}  // namespace detail

inline std::vector<TheoremReport> run_suite(const Frame& f, const SuiteConfig& cfg) {
    f.validate();
    auto wanted = [&](const char* section) { return cfg.suite == "all" || cfg.suite == section; };
    if (!(cfg.suite == "all" || cfg.suite == "sec3" || cfg.suite == "sec4" || cfg.suite == "sec5" ||
          cfg.suite == "sec6"))
        throw std::invalid_argument("run_suite: unknown suite '" + cfg.suite + "'");

    auto [a, b] = optimal_frame_bounds(f);
    bool is_frame = a > 1e-12 * std::max(b, 1.0);

    std::vector<TheoremReport> out;
    auto add = [&](TheoremReport rep) {
        rep.seed = cfg.seed;
        out.push_back(std::move(rep));
    };

    if (wanted("sec3")) {
        if (!is_frame) {
            add(detail::skipped(f, "sec3.jx-lower", "not a frame (A = 0)"));
            add(detail::skipped(f, "sec3.kx-lower-c10", "not a frame (A = 0)"));
            add(detail::skipped(f, "sec3.kx-lower-c50", "not a frame (A = 0)"));
            add(detail::skipped(f, "sec3.kx-lower-c90", "not a frame (A = 0)"));
        } else {
            add(detail::claim_jx_lower(f, cfg));
            add(detail::claim_kx_lower(f, cfg, 0.1, "sec3.kx-lower-c10"));
            add(detail::claim_kx_lower(f, cfg, 0.5, "sec3.kx-lower-c50"));
            add(detail::claim_kx_lower(f, cfg, 0.9, "sec3.kx-lower-c90"));
        }
    }
    if (wanted("sec4")) {
        if (!is_frame) {
            add(detail::skipped(f, "sec4.flat-majorization", "not a frame (A = 0)"));
            add(detail::skipped(f, "sec4.tail-equality", "not a frame (A = 0)"));
            add(detail::skipped(f, "sec4.modulus-one", "not a frame (A = 0)"));
            add(detail::skipped(f, "sec4.orthogonal-inflation", "not a frame (A = 0)"));
        } else {
            add(detail::claim_flat_majorization(f, cfg));
            add(detail::claim_tail_equality(f, cfg));
            add(detail::claim_modulus_one(f, cfg));
            add(detail::claim_orthogonal_inflation(f, cfg));
        }
    }
    if (wanted("sec5")) {
        if (!is_frame) {
            for (const char* id : {"sec5.complement-property", "sec5.cp-min-equivalence",
                                   "sec5.hoelder-upper", "sec5.count-upper", "sec5.untf-pair-lower",
                                   "sec5.full-spark-count", "sec5.etf-fixed-vector"})
                add(detail::skipped(f, id, "not a frame (A = 0)"));
        } else {
            add(detail::claim_complement_property(f, cfg));
            add(detail::claim_cp_min_equivalence(f, cfg));
            add(detail::claim_hoelder_upper(f, cfg));
            add(detail::claim_count_upper(f, cfg));
            add(detail::claim_untf_pair_lower(f, cfg));
            add(detail::claim_full_spark_count(f, cfg));
            add(detail::claim_etf_fixed_vector(f, cfg));
        }
    }
    if (wanted("sec6")) {
        if (!is_frame) {
            for (const char* id : {"sec6.distance-identity", "sec6.distance-extrema",
                                   "sec6.etf-nesting", "sec6.zero-sum-2N", "sec6.product-distance"})
                add(detail::skipped(f, id, "not a frame (A = 0)"));
        } else {
            add(detail::claim_distance_identity(f, cfg));
            add(detail::claim_distance_extrema(f, cfg));
            add(detail::claim_etf_nesting(f, cfg));
            add(zero_sum_identity(f, cfg.samples, cfg.seed));
            add(detail::claim_product_distance(f, cfg));
        }
    }

    std::sort(out.begin(), out.end(),
              [](const TheoremReport& l, const TheoremReport& r) { return l.claim_id < r.claim_id; });
    return out;
}

inline const char* report_status(const TheoremReport& rep) {
    if (rep.hypothesis == Hypothesis::Skipped) return "skipped";
    if (rep.hypothesis == Hypothesis::Violated) return "hypothesis-violated";
    return rep.pass ? "pass" : "fail";
}

inline nlohmann::json suite_report_json(const Frame& f, const SuiteConfig& cfg,
                                        const std::vector<TheoremReport>& reports) {
    nlohmann::json claims = nlohmann::json::array();
    std::size_t passed = 0, failed = 0, gated = 0;
    for (const TheoremReport& rep : reports) {
        std::string status = report_status(rep);
        if (status == "pass") ++passed;
        else if (status == "fail") ++failed;
        else ++gated;
        nlohmann::json c{{"claim_id", rep.claim_id}, {"status", status},
                         {"hypothesis", hypothesis_name(rep.hypothesis)},
                         {"lhs", rep.lhs},       {"rhs", rep.rhs},
                         {"margin", rep.margin}, {"samples", rep.samples},
                         {"seed", rep.seed}};
        if (!rep.note.empty()) c["note"] = rep.note;
        if (!rep.witnesses.empty()) {
            nlohmann::json ws = nlohmann::json::array();
            for (const Vec& w : rep.witnesses) {
                nlohmann::json row = nlohmann::json::array();
                for (const cd& z : w) {
                    if (f.field == Field::Real)
                        row.push_back(z.real());
                    else
                        row.push_back(nlohmann::json::array({z.real(), z.imag()}));
                }
                ws.push_back(std::move(row));
            }
            c["witnesses"] = std::move(ws);
        }
        claims.push_back(std::move(c));
    }
    return nlohmann::json{
        {"frame",
         {{"label", f.label}, {"field", field_name(f.field)}, {"dim", f.dim}, {"count", f.count()}}},
        {"suite", cfg.suite},
        {"samples", cfg.samples},
        {"seed", cfg.seed},
        {"claims", std::move(claims)},
        {"summary", {{"pass", passed}, {"fail", failed}, {"gated", gated}}}};
}

inline std::string suite_report_csv(const std::vector<TheoremReport>& reports) {
    std::ostringstream os;
    os << "claim_id,status,lhs,rhs,margin,samples,seed\n";
    os.precision(17);
    for (const TheoremReport& rep : reports)
        os << rep.claim_id << ',' << report_status(rep) << ',' << rep.lhs << ',' << rep.rhs << ','
           << rep.margin << ',' << rep.samples << ',' << rep.seed << '\n';
    return os.str();
}

inline bool suite_failed(const std::vector<TheoremReport>& reports) {
    for (const TheoremReport& rep : reports)
        if (rep.counts_as_failure()) return true;
    return false;
}

}  // namespace framekit
