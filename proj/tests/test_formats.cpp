#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dowker/bifiltration.hpp"
#include "dowker/formats.hpp"
#include "dowker/relations.hpp"
#include "fixtures.hpp"

using namespace dowker;

namespace {

BifilteredComplex round_trip(const BifilteredComplex& C, bool negate) {
    std::stringstream ss;
    write_bifiltration(ss, C, negate);
    return read_bifiltration(ss);
}

}  // namespace

TEST_CASE("point cloud CSV: comments, headers, and line-numbered errors") {
    std::istringstream good("# comment\n0.5,1.25\n-3,4e-2\n");
    auto X = read_point_cloud_csv(good);
    REQUIRE(X.size() == 2);
    CHECK(X[0] == std::vector<double>{0.5, 1.25});
    CHECK(X[1] == std::vector<double>{-3.0, 0.04});

    std::istringstream with_header("x,y\n1,2\n");
    CHECK_THROWS_AS(read_point_cloud_csv(with_header), input_error);
    std::istringstream with_header2("x,y\n1,2\n");
    CHECK(read_point_cloud_csv(with_header2, /*skip_header=*/true).size() == 1);

    std::istringstream bad("1,2\n3,oops\n");
    try {
        read_point_cloud_csv(bad);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_point_cloud_csv(ragged), input_error);
}

TEST_CASE("lambda CSV parses a dense matrix") {
    std::istringstream in("0,5\n5,0\n");
    auto L = read_lambda_csv(in);
    CHECK(L.rows() == 2);
    CHECK(L.cols() == 2);
    CHECK(L(0, 1) == 5.0);

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_lambda_csv(empty), input_error);
}

TEST_CASE("bifiltration round-trips exactly on fixture complexes") {
    BuildParams p1;
    p1.m_max = 3;
    p1.dim_max = 3;
    p1.halve_radii = false;
    auto fig = build_measure_dowker(fixtures::four_by_five_relation(), p1);
    CHECK(round_trip(fig, false) == fig);
    CHECK(round_trip(fig, true) == fig);

    auto X = fixtures::unit_square();
    BuildParams p2;
    p2.m_max = 4;
    p2.dim_max = 3;
    auto square = build_measure_dowker(distance_lambda(X, X, Metric::euclidean), p2);
    CHECK(round_trip(square, false) == square);
    CHECK(round_trip(square, true) == square);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        BuildParams p3;
        p3.m_max = 6;
        p3.dim_max = 3;
        auto C = build_measure_dowker(random_uniform_lambda(5, 6, seed), p3);
        CHECK(round_trip(C, false) == C);
        CHECK(round_trip(C, true) == C);
    }
}

TEST_CASE("negated output equals the default after flipping the weights back") {
    BuildParams p;
    p.m_max = 4;
    p.dim_max = 2;
    auto C = build_measure_dowker(random_uniform_lambda(4, 5, 42), p);

    std::stringstream plain, negated;
    write_bifiltration(plain, C, false);
    write_bifiltration(negated, C, true);
    CHECK(plain.str() != negated.str());

    std::string flipped = negated.str();
    const std::string from = "axes: r weight-negated";
    flipped.replace(flipped.find(from), from.size(), "axes: r weight-reversed");
    std::string::size_type pos = 0;
    while ((pos = flipped.find(" -", pos)) != std::string::npos) flipped.erase(pos + 1, 1);
    CHECK(flipped == plain.str());
}

TEST_CASE("bifiltration parser reports malformed lines") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_bifiltration(in);
            FAIL_CHECK("expected input_error for: " << text);
        } catch (const input_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("wrong header\n", "line 1");
    expect_error("bifiltration-dowker v1\naxes: r upside-down\n", "line 2");
    expect_error("bifiltration-dowker v1\naxes: r weight-reversed\n0 1\n", "line 3");
    expect_error("bifiltration-dowker v1\naxes: r weight-reversed\n1 0 ; 0.5 1\n", "line 3");
    expect_error("bifiltration-dowker v1\naxes: r weight-reversed\n0 1 ; 0.5\n", "line 3");
    expect_error("bifiltration-dowker v1\naxes: r weight-reversed\n0 ; 0.5 2 0.4 1\n",
                 "line 3");
}

TEST_CASE("hilbert CSV layout") {
    HilbertGrid grid;
    grid.m_values = {1, 2};
    grid.r_values = {0.0, 0.5};
    grid.betti = {{3, 1}, {0, 0}};
    grid.homology_degree = 0;
    std::ostringstream out;
    write_hilbert_csv(out, grid);
    CHECK(out.str() == "m\\r,0,0.5\n1,3,1\n2,0,0\n");
}

TEST_CASE("PGM heatmap is log-scaled with an all-zero fallback") {
    HilbertGrid grid;
    grid.m_values = {1, 2};
    grid.r_values = {0.0, 0.5, 1.0};
    grid.betti = {{0, 1, 3}, {0, 0, 1}};
    std::ostringstream out;
    write_hilbert_pgm(out, grid);
    // gray(v) = round(255 ln(1+v)/ln(4)): 0 -> 0, 1 -> 128, 3 -> 255
    CHECK(out.str() == "P2\n3 2\n255\n0 128 255\n0 0 128\n");

    HilbertGrid zero;
    zero.m_values = {1};
    zero.r_values = {0.0, 0.1};
    zero.betti = {{0, 0}};
    std::ostringstream zout;
    write_hilbert_pgm(zout, zero);
    CHECK(zout.str() == "P2\n2 1\n255\n0 0\n");
}
