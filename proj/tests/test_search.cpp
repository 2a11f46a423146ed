#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framekit/construct.hpp"
#include "framekit/search.hpp"

using namespace framekit;

namespace {

Vec orthogonal_to_first(const Frame& f) {
    return null_space_basis({f.vectors[0]}, f.dim).front();
}

Frame doubled_pair() {
    Frame f;
    f.field = Field::Real;
    f.dim = 2;
    f.vectors = {unit_axis(2, 0), unit_axis(2, 0), unit_axis(2, 1), unit_axis(2, 1)};
    return f;
}

SearchConfig quick() {
    SearchConfig cfg;
    cfg.starts = 64;
    return cfg;
}

}  // namespace

TEST_CASE("product sum values") {
    Frame simplex = simplex_frame(2);
    Vec x = orthogonal_to_first(simplex);
    CHECK(product_sum(simplex, x, x) == doctest::Approx(1.5));

    // annihilating pair gives zero
    Frame f = doubled_pair();
    CHECK(product_sum(f, unit_axis(2, 1), unit_axis(2, 0)) == doctest::Approx(0.0).scale(1));

    // Parseval frame, x = y: the sum is the squared coefficient total
    Frame onb;
    onb.dim = 2;
    onb.vectors = {unit_axis(2, 0), unit_axis(2, 1)};
    Vec g = normalized(Vec{0.6, 0.8});
    CHECK(product_sum(onb, g, g) == doctest::Approx(1.0));
}

TEST_CASE("extremize product sum against the angle-grid oracle") {
    Frame simplex = simplex_frame(2);
    auto [grid_lo, grid_hi] = oracle::circle_pair_product_extrema(simplex, 2000);

    SearchResult lo = extremize_product_sum(simplex, Direction::Min, quick());
    SearchResult hi = extremize_product_sum(simplex, Direction::Max, quick());
    CHECK(lo.value == doctest::Approx(grid_lo).epsilon(1e-4).scale(1));
    CHECK(hi.value == doctest::Approx(grid_hi).epsilon(1e-4).scale(1));

    // hand witnesses: min 3/4, max B = 3/2
    CHECK(lo.value == doctest::Approx(0.75).epsilon(1e-6));
    CHECK(hi.value == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(lo.value > 1e-6);  // complement property holds, min stays positive
}

TEST_CASE("certified zero minimum on a complement-property failure") {
    SearchResult r = extremize_product_sum(doubled_pair(), Direction::Min, quick());
    CHECK(r.certified);
    CHECK(r.value == 0.0);
    REQUIRE(r.witness_y.has_value());
    CHECK(norm(r.witness_x) == doctest::Approx(1.0));
}

TEST_CASE("product sum bound ledger") {
    BoundLedger led = product_sum_bounds(simplex_frame(2));
    CHECK(*led.hoelder_upper == doctest::Approx(1.5));
    CHECK(*led.count_upper == doctest::Approx(std::sqrt(0.75)));
    CHECK(*led.best_upper == doctest::Approx(std::sqrt(0.75)));  // N - sqrt(N) + 2 < 2M
    CHECK(*led.untf_lower_coeff == doctest::Approx(1.5));

    led = product_sum_bounds(harmonic_frame(2, 16, false));
    CHECK(*led.hoelder_upper == doctest::Approx(8.0));
    CHECK(*led.count_upper == doctest::Approx(28.0));
    CHECK(*led.best_upper == doctest::Approx(8.0));  // N - sqrt(N) + 2 >= 2M

    Frame onb;
    onb.dim = 2;
    onb.vectors = {unit_axis(2, 0), unit_axis(2, 1)};
    led = product_sum_bounds(onb);
    CHECK(!led.count_upper.has_value());  // N < 2M - 1
    CHECK(*led.best_upper == doctest::Approx(1.0));
}

TEST_CASE("UNTF pair lower bound") {
    Frame simplex = simplex_frame(2);
    Vec x = orthogonal_to_first(simplex);
    TheoremReport rep = untf_pair_lower(simplex, x, x);
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(1.5));
    CHECK(rep.rhs == doctest::Approx(1.5));  // equality at x = y here

    Vec y = null_space_basis({x}, 2).front();
    rep = untf_pair_lower(simplex, x, y);
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(0.0).scale(1));

    Frame etf = etf_catalog(3, 6);
    for (int k = 0; k < 1000; ++k) {
        Vec u = random_unit_vector(3, 7000 + k);
        Vec v = random_unit_vector(3, 8000 + k);
        CHECK(untf_pair_lower(etf, u, v).pass);
    }

    Frame loose = random_frame(2, 4, 3);
    CHECK_THROWS_AS(untf_pair_lower(loose, x, x), std::invalid_argument);
}

TEST_CASE("ETF fixed-vector bound") {
    Frame etf = etf_catalog(3, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        EtfFixedVectorReport rep = etf_fixed_vector_bound(etf, j, quick());
        CHECK(rep.bound == doctest::Approx(2.0 / std::sqrt(5.0)));
        REQUIRE(rep.special_case.has_value());
        CHECK(*rep.special_case == doctest::Approx(rep.bound).epsilon(1e-9));  // N = 2M case
        CHECK(rep.pass);
    }

    Frame simplex = simplex_frame(2);
    EtfFixedVectorReport rep = etf_fixed_vector_bound(simplex, 0, quick());
    CHECK(rep.bound == doctest::Approx(0.75));
    REQUIRE(rep.special_case.has_value());  // N = M(M+1)/2 case
    CHECK(*rep.special_case == doctest::Approx(0.75));
    CHECK(rep.pass);

    // angle-grid oracle agrees that the searched infimum is feasible
    std::vector<double> w;
    for (const Vec& phi : simplex.vectors) w.push_back(std::abs(inner(simplex.vectors[0], phi)));
    auto [grid_min, grid_max] = oracle::circle_extrema([&](const Vec& x) {
        double t = 0.0;
        for (std::size_t i = 0; i < 3; ++i) t += w[i] * std::abs(inner(x, simplex.vectors[i]));
        return t;
    });
    CHECK(grid_min >= 0.75 - 1e-5);
    // the grid can only overshoot the true minimum (kinked objective, finite
    // resolution); the search should land at or below it
    CHECK(rep.searched.value <= grid_min + 1e-9);
    CHECK(grid_min - rep.searched.value <= 2e-3);

    CHECK_THROWS_AS(etf_fixed_vector_bound(random_frame(2, 4, 1), 0, quick()),
                    std::invalid_argument);
}

TEST_CASE("distance sum") {
    Frame simplex = simplex_frame(2);
    for (int k = 0; k < 100; ++k)
        CHECK(distance_sum(simplex, random_unit_vector(2, k)) == doctest::Approx(6.0));

    Frame onb2 = onb_copies(2, 2);
    Vec diag = normalized(Vec{1.0, 1.0});
    CHECK(distance_sum(onb2, diag) == doctest::Approx(8.0 - 4.0 * std::numbers::sqrt2));

    Frame h = harmonic_frame(2, 6, true);
    for (int k = 0; k < 100; ++k)
        CHECK(distance_sum(h, random_unit_vector(2, k, Field::Complex)) == doctest::Approx(12.0));

    Frame bad;
    bad.dim = 2;
    bad.vectors = {scaled(unit_axis(2, 0), 2.0)};
    CHECK_THROWS_AS(distance_sum(bad, unit_axis(2, 0)), std::invalid_argument);
}

TEST_CASE("distance sum extrema, closed form and search") {
    Frame onb2 = onb_copies(2, 2);
    auto [lo, hi] = distance_sum_extrema(onb2);
    CHECK(lo == doctest::Approx(8.0 - 4.0 * std::numbers::sqrt2));
    CHECK(hi == doctest::Approx(8.0 + 4.0 * std::numbers::sqrt2));

    auto [slo, shi] = search_distance_extrema(onb2, quick());
    CHECK(std::abs(slo.value - lo) <= 1e-7);
    CHECK(std::abs(shi.value - hi) <= 1e-7);

    auto [l6, h6] = distance_sum_extrema(simplex_frame(2));
    CHECK(l6 == doctest::Approx(6.0));
    CHECK(h6 == doctest::Approx(6.0));

    // every sampled value sits inside the closed-form interval
    Frame r = random_frame(3, 5, 55);
    auto [rl, rh] = distance_sum_extrema(r);
    for (int k = 0; k < 1000; ++k) {
        double v = distance_sum(r, random_unit_vector(3, 90000 + k));
        CHECK(v >= rl - 1e-9);
        CHECK(v <= rh + 1e-9);
    }
    auto [srl, srh] = search_distance_extrema(r, quick());
    CHECK(std::abs(srl.value - rl) <= 1e-7);
    CHECK(std::abs(srh.value - rh) <= 1e-7);
}

TEST_CASE("ETF distance bound intervals") {
    Frame etf = etf_catalog(3, 6);
    BoundLedger led = etf_distance_bounds(etf);
    double c = 1.0 / std::sqrt(5.0);
    double lam = std::sqrt(6.0 * (1.0 + 5.0 * c));
    CHECK(*led.prop226_low == doctest::Approx(2.0 * (6.0 - lam)));
    CHECK(*led.prop226_high == doctest::Approx(2.0 * (6.0 + lam)));
    CHECK(*led.prop226_low > 0.0);
    CHECK(!led.cor242_improved);
    // nesting is strict
    CHECK(*led.cor242_low < *led.prop226_low);
    CHECK(*led.cor242_high > *led.prop226_high);
    // exact extrema inside prop226
    CHECK(*led.exact_low >= *led.prop226_low - 1e-9);
    CHECK(*led.exact_high <= *led.prop226_high + 1e-9);

    BoundLedger simp = etf_distance_bounds(simplex_frame(2));
    CHECK(simp.cor242_improved);
    CHECK(*simp.cor242_low == doctest::Approx(6.0 * (1.0 - std::sqrt(5.0 / 6.0))));
    CHECK(*simp.cor242_high == doctest::Approx(6.0 * (1.0 + std::sqrt(5.0 / 6.0))));
    CHECK(*simp.exact_low == doctest::Approx(6.0));
    CHECK(*simp.prop226_low <= 6.0);
    CHECK(*simp.prop226_high >= 6.0);
    CHECK(*simp.cor242_low < *simp.prop226_low);
    CHECK(*simp.cor242_high > *simp.prop226_high);

    CHECK_THROWS_AS(etf_distance_bounds(random_frame(2, 5, 2)), std::invalid_argument);
}

TEST_CASE("zero-sum identity") {
    TheoremReport rep = zero_sum_identity(simplex_frame(3), 1000);
    CHECK(rep.hypothesis == Hypothesis::Met);
    CHECK(rep.pass);
    CHECK(rep.lhs <= 1e-10);

    rep = zero_sum_identity(harmonic_frame(2, 6, true), 1000);
    CHECK(rep.pass);

    rep = zero_sum_identity(onb_copies(2, 2), 10);
    CHECK(rep.hypothesis == Hypothesis::Violated);
    CHECK(!rep.counts_as_failure());
}

TEST_CASE("product distance sum") {
    Frame simplex = simplex_frame(2);
    Vec x = orthogonal_to_first(simplex);
    ProductDistanceReport rep = product_distance_sum(simplex, x, x);
    CHECK(rep.value == doctest::Approx(18.0));  // 4N(1 + 1/M) at y = x
    CHECK(rep.report.pass);

    Vec y = null_space_basis({x}, 2).front();
    rep = product_distance_sum(simplex, x, y);
    CHECK(rep.value == doctest::Approx(12.0));  // exactly 4N at x perp y
    CHECK(rep.report.pass);

    rep = product_distance_sum(simplex, x, scaled(x, -1.0));
    CHECK(rep.value == doctest::Approx(6.0));  // lower endpoint 4N(1 - 1/M)
    CHECK(rep.report.pass);

    CHECK_THROWS_AS(product_distance_sum(onb_copies(2, 2), x, x), std::invalid_argument);
}

TEST_CASE("analytic subgradient matches finite differences off the kinks") {
    Frame f = random_frame(3, 7, 31);
    std::vector<double> w(7, 1.0);
    int checked = 0;
    for (int k = 0; checked < 100 && k < 300; ++k) {
        Vec x = random_unit_vector(3, 40000 + k);
        bool degenerate = false;
        for (const Vec& phi : f.vectors)
            if (std::abs(inner(x, phi)) < 1e-3) degenerate = true;
        if (degenerate) continue;
        ++checked;

        auto obj = [&](const Vec& v) {
            double t = 0.0;
            for (std::size_t i = 0; i < 7; ++i) t += w[i] * std::abs(inner(v, f.vectors[i]));
            return t;
        };
        Vec g = detail::weighted_abs_subgradient(f, x, w);
        const double h = 1e-6;
        for (std::size_t j = 0; j < 3; ++j) {
            Vec xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            double fd = (obj(xp) - obj(xm)) / (2.0 * h);
            CHECK(g[j].real() == doctest::Approx(fd).epsilon(1e-5));
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("sampled product sums respect the upper bounds") {
    std::vector<Frame> battery = {simplex_frame(2), simplex_frame(3), harmonic_frame(2, 6, true),
                                  etf_catalog(3, 6), random_frame(3, 8, 66)};
    for (const Frame& f : battery) {
        BoundLedger led = product_sum_bounds(f);
        for (int k = 0; k < 300; ++k) {
            Vec x = random_unit_vector(f.dim, 50000 + k, f.field);
            Vec y = random_unit_vector(f.dim, 60000 + k, f.field);
            CHECK(product_sum(f, x, y) <= *led.hoelder_upper + 1e-9);
        }
        SearchResult hi = extremize_product_sum(f, Direction::Max, quick());
        CHECK(hi.value <= *led.hoelder_upper + 1e-6);
    }
}

TEST_CASE("count bound is not a supremum bound on tight frames") {
    // x = y on an A-tight unit-norm frame gives product sum A = N/M, which
    // exceeds (N-2M+2)sqrt(B/M) on these frames; the count bound is report-only.
    Frame simplex = simplex_frame(2);
    BoundLedger led = product_sum_bounds(simplex);
    SearchResult hi = extremize_product_sum(simplex, Direction::Max, quick());
    CHECK(hi.value == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(hi.value > *led.count_upper + 0.5);

    Frame etf = etf_catalog(3, 6);
    led = product_sum_bounds(etf);
    hi = extremize_product_sum(etf, Direction::Max, quick());
    CHECK(hi.value == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(hi.value > *led.count_upper + 0.3);
}
