#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framekit/coefficients.hpp"
#include "framekit/construct.hpp"

using namespace framekit;

namespace {

Frame onb2() {
    Frame f;
    f.field = Field::Real;
    f.dim = 2;
    f.vectors = {unit_axis(2, 0), unit_axis(2, 1)};
    f.label = "onb2";
    return f;
}

Vec orthogonal_to_first(const Frame& f) {
    return null_space_basis({f.vectors[0]}, f.dim).front();
}

}  // namespace

TEST_CASE("profile sorting and values") {
    Frame simplex = simplex_frame(2);
    CoefficientProfile p = profile(simplex, orthogonal_to_first(simplex));
    REQUIRE(p.values.size() == 3);
    CHECK(p.values[0] == doctest::Approx(0.75));
    CHECK(p.values[1] == doctest::Approx(0.75));
    CHECK(p.values[2] <= 1e-20);
    CHECK(p.permutation[2] == 0);  // the annihilated vector is phi_1

    p = profile(onb_copies(2, 3), unit_axis(2, 0));
    std::vector<double> want = {1, 1, 1, 0, 0, 0};
    for (std::size_t i = 0; i < 6; ++i) CHECK(p.values[i] == doctest::Approx(want[i]));
    // stable tie order by original index
    CHECK(p.permutation[0] == 0);
    CHECK(p.permutation[1] == 2);
    CHECK(p.permutation[2] == 4);

    p = profile(onb2(), unit_axis(2, 0));
    CHECK(p.values[0] == doctest::Approx(1.0));
    CHECK(p.values[1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(profile(onb2(), scaled(unit_axis(2, 0), 2.0)), std::invalid_argument);
}

TEST_CASE("support counts and the rank-one equality case") {
    Frame f = onb_copies(2, 3);
    SupportReport r = support_counts(f, unit_axis(2, 0), 0.5);
    CHECK(r.nonzero_indices.size() == 3);
    CHECK(r.jx_bound == doctest::Approx(3.0));
    CHECK(r.equality_case);
    CHECK(r.rank_one_support);

    r = support_counts(f, unit_axis(2, 0), 1.0 / 3.0);
    CHECK(r.threshold_indices.size() == 3);
    CHECK(r.threshold_indices.size() >= std::size_t(std::ceil(r.kx_bound - 1e-9)));
    CHECK(r.kx_bound == doctest::Approx(2.0));

    Frame simplex = simplex_frame(2);
    r = support_counts(simplex, orthogonal_to_first(simplex), 0.5, 1e-9);
    CHECK(r.nonzero_indices.size() == 2);
    CHECK(r.jx_bound == doctest::Approx(1.5));
    CHECK(!r.equality_case);

    CHECK_THROWS_AS(support_counts(f, unit_axis(2, 0), 1.5), std::invalid_argument);
    Frame nonframe;
    nonframe.dim = 2;
    nonframe.vectors = {unit_axis(2, 0), unit_axis(2, 0)};
    CHECK_THROWS_AS(support_counts(nonframe, unit_axis(2, 0), 0.5), std::invalid_argument);
}

TEST_CASE("weak and strong majorization") {
    std::vector<double> a = {0.75, 0.75, 0.0};
    std::vector<double> b = {0.5, 0.5, 0.5};
    CHECK(weakly_majorizes(a, b).holds);
    CHECK(majorizes(a, b));

    CHECK(weakly_majorizes(a, a).holds);
    CHECK(majorizes(a, a));

    MajorizationResult r = weakly_majorizes({0.4, 0.4, 0.4}, {0.5, 0.5, 0.2});
    CHECK(!r.holds);
    CHECK(r.first_failing_prefix == 1);

    // weak but not strong: totals differ
    CHECK(weakly_majorizes({1.0, 1.0}, {0.5, 0.5}).holds);
    CHECK(!majorizes({1.0, 1.0}, {0.5, 0.5}));

    CHECK_THROWS_AS(weakly_majorizes({0.1, 0.5}, b), std::invalid_argument);
    CHECK_THROWS_AS(weakly_majorizes({-0.1}, b), std::invalid_argument);
}

TEST_CASE("weak majorization invariant under zero padding") {
    std::vector<double> a = {0.9, 0.4, 0.1};
    std::vector<double> b = {0.8, 0.5, 0.05};
    bool base = weakly_majorizes(a, b).holds;
    a.push_back(0.0);
    a.push_back(0.0);
    b.push_back(0.0);
    CHECK(weakly_majorizes(a, b).holds == base);
}

TEST_CASE("flat majorization") {
    Frame simplex = simplex_frame(2);
    TheoremReport rep = check_flat_majorization(simplex, orthogonal_to_first(simplex));
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(0.75));
    CHECK(rep.rhs == doctest::Approx(0.5));

    rep = check_flat_majorization(onb2(), random_unit_vector(2, 3));
    CHECK(rep.pass);

    for (int k = 0; k < 100; ++k) {
        Frame f = random_frame(3, 7, 123 + k);
        CHECK(check_flat_majorization(f, random_unit_vector(3, 999 + k)).pass);
    }
}

TEST_CASE("tail equality") {
    // ONB, x along the diagonal: a = (1/2, 1/2), triggers at m=1
    auto t = tail_equality(onb2(), normalized(Vec{1.0, 1.0}));
    REQUIRE(t.has_value());
    CHECK(t->first == 1);
    CHECK(t->second);

    // simplex profile (3/4, 3/4, 0): first prefix match is the vacuous m=3
    Frame simplex = simplex_frame(2);
    t = tail_equality(simplex, orthogonal_to_first(simplex));
    REQUIRE(t.has_value());
    CHECK(t->first == 3);
    CHECK(t->second);

    // non-tight frame with strict prefix inequalities everywhere
    Frame mercedes;
    mercedes.dim = 2;
    mercedes.vectors = {unit_axis(2, 0), unit_axis(2, 1), normalized(Vec{1.0, 1.0})};
    CHECK(!tail_equality(mercedes, unit_axis(2, 0)).has_value());
}

TEST_CASE("tail equality verification matches direct inspection") {
    std::vector<Frame> battery = {simplex_frame(3), harmonic_frame(2, 5, true), onb_copies(3, 2)};
    for (const Frame& f : battery) {
        auto [a, b] = optimal_frame_bounds(f);
        double flat = a / double(f.count());
        for (int k = 0; k < 200; ++k) {
            Vec x = random_unit_vector(f.dim, 5000 + k, f.field);
            auto t = tail_equality(f, x);
            if (!t) continue;
            CHECK(t->second);
            CoefficientProfile p = profile(f, x);
            for (std::size_t i = t->first; i < p.values.size(); ++i)
                CHECK(p.values[i] == doctest::Approx(flat).epsilon(1e-9).scale(1));
        }
    }
}

TEST_CASE("modulus one bound") {
    ModulusOneReport r = modulus_one_bound(onb_copies(2, 2), unit_axis(2, 0));
    CHECK(r.count == 2);
    CHECK(r.bound == 2);
    CHECK(r.pass);

    Frame simplex = simplex_frame(2);
    r = modulus_one_bound(simplex, unit_axis(2, 0));
    CHECK(r.count == 0);
    CHECK(r.bound == 1);
    CHECK(r.pass);

    r = modulus_one_bound(onb2(), unit_axis(2, 0));
    CHECK(r.count == 1);
    CHECK(r.bound == 1);
    CHECK(r.pass);

    Frame not_unit;
    not_unit.dim = 2;
    not_unit.vectors = {scaled(unit_axis(2, 0), 2.0), unit_axis(2, 1)};
    CHECK_THROWS_AS(modulus_one_bound(not_unit, unit_axis(2, 0)), std::invalid_argument);
}

TEST_CASE("orthogonal inflation") {
    Frame simplex = simplex_frame(2);
    TheoremReport rep = orthogonal_inflation(simplex, orthogonal_to_first(simplex), 1e-9);
    CHECK(rep.pass);
    CHECK(rep.samples == 1);  // K = 1
    CHECK(rep.rhs == doctest::Approx(0.75));

    rep = orthogonal_inflation(onb_copies(2, 3), unit_axis(2, 0));
    CHECK(rep.pass);
    CHECK(rep.samples == 3);
    CHECK(rep.rhs == doctest::Approx(1.0));

    // K = 0 reduces to the flat comparison
    Vec generic = normalized(Vec{0.6, 0.8});
    rep = orthogonal_inflation(simplex, generic);
    CHECK(rep.samples == 0);
    CHECK(rep.pass);
    CHECK(rep.rhs == doctest::Approx(0.5));
}

TEST_CASE("support bound sweep over the battery") {
    std::vector<Frame> battery = {simplex_frame(2), simplex_frame(4), onb_copies(3, 2),
                                  harmonic_frame(3, 7, true), random_frame(4, 10, 77)};
    for (const Frame& f : battery) {
        for (int k = 0; k < 200; ++k) {
            Vec x = random_unit_vector(f.dim, 31000 + k, f.field);
            for (double c : {0.1, 0.5, 0.9}) {
                SupportReport r = support_counts(f, x, c);
                CHECK(double(r.nonzero_indices.size()) >= std::ceil(r.jx_bound - 1e-9));
                CHECK(double(r.threshold_indices.size()) >= r.kx_bound - 1e-9);
            }
            ModulusOneReport m = modulus_one_bound(f, x);
            CHECK(m.pass);
        }
    }
}
