#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "framekit/io.hpp"

using namespace framekit;

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const char* name) : path(std::string("/tmp/framekit_io_") + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

double max_vector_gap(const Frame& a, const Frame& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.count(); ++i)
        for (std::size_t k = 0; k < a.dim; ++k)
            worst = std::max(worst, std::abs(a.vectors[i][k] - b.vectors[i][k]));
    return worst;
}

}  // namespace

TEST_CASE("round trip, real") {
    Frame f = simplex_frame(3);
    TempPath t("simplex.json");
    write_frame(t.path, f);
    FrameFile loaded = read_frame(t.path);
    CHECK(loaded.frame.field == Field::Real);
    CHECK(loaded.frame.dim == 3);
    CHECK(loaded.frame.count() == 4);
    CHECK(loaded.frame.label == f.label);
    CHECK(max_vector_gap(f, loaded.frame) <= 1e-15);
    CHECK(!loaded.recipe.has_value());
}

TEST_CASE("round trip, complex, with recipe echo") {
    Frame f = harmonic_frame(2, 6, true);
    FrameRecipe r;
    r.kind = "harmonic";
    r.dim = 2;
    r.count = 6;
    r.drop_dc = true;
    r.field = Field::Complex;
    TempPath t("harmonic.json");
    write_frame(t.path, f, r);
    FrameFile loaded = read_frame(t.path);
    CHECK(loaded.frame.field == Field::Complex);
    CHECK(max_vector_gap(f, loaded.frame) <= 1e-15);
    REQUIRE(loaded.recipe.has_value());
    CHECK(loaded.recipe->kind == "harmonic");
    CHECK(loaded.recipe->drop_dc);
    CHECK(loaded.recipe->field == Field::Complex);

    // the echoed recipe rebuilds the identical frame
    Frame again = build_frame(*loaded.recipe);
    CHECK(max_vector_gap(f, again) <= 1e-15);
}

TEST_CASE("classification survives the round trip") {
    for (Frame f : {simplex_frame(2), etf_catalog(3, 6), random_frame(3, 7, 11)}) {
        TempPath t("classify.json");
        write_frame(t.path, f);
        SpectralSummary before = classify(f);
        SpectralSummary after = classify(read_frame(t.path).frame);
        CHECK(after.lower_bound == doctest::Approx(before.lower_bound).epsilon(1e-12));
        CHECK(after.upper_bound == doctest::Approx(before.upper_bound).epsilon(1e-12));
        CHECK(after.is_tight == before.is_tight);
        CHECK(after.is_unit_norm == before.is_unit_norm);
        CHECK(after.is_equiangular == before.is_equiangular);
    }
}

TEST_CASE("build_frame dispatch") {
    FrameRecipe r;
    r.kind = "onb-copies";
    r.dim = 2;
    r.count = 6;
    CHECK(build_frame(r).count() == 6);
    r.count = 5;  // not a multiple of dim
    CHECK_THROWS_AS(build_frame(r), std::invalid_argument);

    r.kind = "simplex";
    r.dim = 3;
    r.count = 0;
    CHECK(build_frame(r).count() == 4);
    r.count = 5;
    CHECK_THROWS_AS(build_frame(r), std::invalid_argument);

    r.kind = "etf-catalog";
    r.dim = 3;
    r.count = 6;
    CHECK(classify(build_frame(r)).is_equiangular);

    r.kind = "random";
    r.dim = 2;
    r.count = 4;
    r.seed = 7;
    Frame a = build_frame(r), b = build_frame(r);
    CHECK(max_vector_gap(a, b) == 0.0);

    r.kind = "mystery";
    CHECK_THROWS_AS(build_frame(r), std::invalid_argument);
}

TEST_CASE("malformed input raises ParseError") {
    TempPath t("bad.json");

    auto write_text = [&](const char* text) {
        std::ofstream os(t.path);
        os << text;
    };

    write_text("{ not json");
    CHECK_THROWS_AS(read_frame(t.path), ParseError);

    write_text("[1, 2, 3]");
    CHECK_THROWS_AS(read_frame(t.path), ParseError);

    // count disagrees with the grid
    write_text(R"({"header":{"field":"real","dim":2,"count":3,"label":""},
                  "vectors":[[1.0,0.0],[0.0,1.0]]})");
    CHECK_THROWS_AS(read_frame(t.path), ParseError);

    // ragged row
    write_text(R"({"header":{"field":"real","dim":2,"count":1,"label":""},
                  "vectors":[[1.0]]})");
    CHECK_THROWS_AS(read_frame(t.path), ParseError);

    // real field with [re, im] entries
    write_text(R"({"header":{"field":"real","dim":1,"count":1,"label":""},
                  "vectors":[[[1.0,0.0]]]})");
    CHECK_THROWS_AS(read_frame(t.path), ParseError);

    // unknown field tag
    write_text(R"({"header":{"field":"quaternion","dim":1,"count":1,"label":""},
                  "vectors":[[1.0]]})");
    CHECK_THROWS_AS(read_frame(t.path), ParseError);

    // missing file
    CHECK_THROWS_AS(read_frame("/tmp/framekit_io_definitely_missing.json"), ParseError);

    // diagnostics carry the offending location
    write_text(R"({"header":{"field":"complex","dim":1,"count":1,"label":""},
                  "vectors":[["oops"]]})");
    try {
        read_frame(t.path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("vectors[0][0]") != std::string::npos);
    }
}
