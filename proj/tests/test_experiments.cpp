#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dowker/experiments.hpp"

using namespace dowker;

namespace {

double radius(const std::vector<double>& p) { return std::hypot(p[0], p[1]); }

}  // namespace

TEST_CASE("sample_annulus_mixture: pure annulus stays in the band") {
    auto X = sample_annulus_mixture(256, 0.4, 0.5, 0.0, 1);
    CHECK(X.size() == 256);
    for (const auto& p : X.points()) {
        CHECK(radius(p) >= 0.4);
        CHECK(radius(p) <= 0.5);
    }
}

TEST_CASE("sample_annulus_mixture: 5% noise split is 243 + 13") {
    auto Y = sample_annulus_mixture(256, 0.4, 0.5, 0.05, 1);
    CHECK(Y.size() == 256);
    int annulus = 0, disk = 0;
    for (const auto& p : Y.points()) {
        const double r = radius(p);
        if (r >= 0.4 - 1e-12) {
            ++annulus;
        } else {
            ++disk;
        }
    }
    CHECK(annulus >= 243);  // a noise point may land in the band by chance
    CHECK(annulus + disk == 256);
    CHECK(disk <= 13);
}

TEST_CASE("sample_annulus_mixture: full-noise disk sample") {
    auto Z = sample_annulus_mixture(256, 0.0, 0.5, 1.0, 3);
    for (const auto& p : Z.points()) CHECK(radius(p) <= 0.5);
}

TEST_CASE("sample_annulus_mixture is deterministic under fixed seed") {
    auto A = sample_annulus_mixture(64, 0.4, 0.5, 0.05, 7);
    auto B = sample_annulus_mixture(64, 0.4, 0.5, 0.05, 7);
    CHECK(A.points() == B.points());
    auto C = sample_annulus_mixture(64, 0.4, 0.5, 0.05, 8);
    CHECK(A.points() != C.points());
}

TEST_CASE("sample_annulus_mixture rejects bad parameters") {
    CHECK_THROWS_AS(sample_annulus_mixture(10, 0.5, 0.4, 0.0, 1), input_error);
    CHECK_THROWS_AS(sample_annulus_mixture(10, 0.1, 0.2, 1.5, 1), input_error);
    CHECK_THROWS_AS(sample_annulus_mixture(-1, 0.1, 0.2, 0.0, 1), input_error);
}

TEST_CASE("annulus sampler radial law: r^2 uniform on [inner^2, outer^2]") {
    const double lo = 0.4, hi = 0.5;
    auto X = sample_annulus_mixture(2000, lo, hi, 0.0, 13);
    std::vector<double> u;
    for (const auto& p : X.points()) {
        const double r = radius(p);
        u.push_back((r * r - lo * lo) / (hi * hi - lo * lo));
    }
    std::sort(u.begin(), u.end());
    // one-sample Kolmogorov-Smirnov statistic against Uniform[0,1];
    // generous threshold (~4x the 1% critical value at n = 2000)
    double d_stat = 0.0;
    const double n = static_cast<double>(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        d_stat = std::max(d_stat, std::abs((i + 1) / n - u[i]));
        d_stat = std::max(d_stat, std::abs(u[i] - i / n));
    }
    CHECK(d_stat < 0.15);
}

TEST_CASE("annulus experiment at reduced scale is deterministic and nontrivial") {
    AnnulusParams params;
    params.n_points = 96;
    params.landmark_grid = 6;
    params.m_max = 12;
    params.grid_steps = 12;
    params.seed = 5;
    auto a = run_annulus_experiment(params);
    auto b = run_annulus_experiment(params);

    REQUIRE(a.grids.size() == 3);
    CHECK(a.labels == std::vector<std::string>{"X", "Y", "Z"});
    for (std::size_t c = 0; c < 3; ++c) {
        CHECK(a.grids[c].betti == b.grids[c].betti);
        CHECK(a.grids[c].m_values.size() == 12);
        CHECK(a.grids[c].r_values.size() == 12);
        CHECK(a.build_seconds[c] >= 0.0);
        CHECK(a.homology_seconds[c] >= 0.0);
    }
    // the clean annulus should show a degree-1 class somewhere
    long max_b1 = 0;
    for (const auto& row : a.grids[0].betti) {
        for (long v : row) max_b1 = std::max(max_b1, v);
    }
    CHECK(max_b1 >= 1);
}

TEST_CASE("ER experiment: p = 1 at m = 1 is a full complex") {
    ErParams params;
    params.n = 30;
    params.m_list = {1, 2, 3};
    params.p_grid = {0.0, 0.5, 1.0};
    params.seed = 11;
    auto result = run_er_experiment(params);

    REQUIRE(result.h0.m_values == std::vector<double>{1, 2, 3});
    // p = 1: every column witnesses every simplex; contractible
    CHECK(result.h0.at(0, 2) == 1);
    CHECK(result.h1.at(0, 2) == 0);
    // p = 0: almost surely no relation pairs at all
    CHECK(result.h0.at(0, 0) == 0);
}

TEST_CASE("ER experiment is deterministic under fixed seed") {
    ErParams params;
    params.n = 20;
    params.p_grid = {0.2, 0.6};
    auto a = run_er_experiment(params);
    auto b = run_er_experiment(params);
    CHECK(a.h0.betti == b.h0.betti);
    CHECK(a.h1.betti == b.h1.betti);
}
