// Acceptance suite: end-to-end checks with pinned tolerances and runtime
// budgets, one line of output per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dowker/bifiltration.hpp"
#include "dowker/duality.hpp"
#include "dowker/experiments.hpp"
#include "dowker/formats.hpp"
#include "dowker/homology.hpp"
#include "dowker/metrics.hpp"
#include "dowker/relations.hpp"
#include "fixtures.hpp"

using namespace dowker;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::set<Simplex> slice_set(const BifilteredComplex& C, double m, double r) {
    auto K = slice(C, m, r);
    return {K.simplices().begin(), K.simplices().end()};
}

// ---------------------------------------------------------------- 1
Outcome criterion_fixture_slices() {
    Outcome out;
    BuildParams p;
    p.m_max = 3;
    p.dim_max = 3;
    p.halve_radii = false;
    auto C = build_measure_dowker(fixtures::four_by_five_relation(), p);

    std::set<Simplex> m1 = {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2},
                            {0, 3}, {2, 3}, {0, 1, 2}};
    std::set<Simplex> m2 = {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}};
    std::set<Simplex> m3 = {{0}, {1}, {2}};
    out.require(slice_set(C, 1, 0.0) == m1, "m=1 slice mismatch");
    out.require(slice_set(C, 2, 0.0) == m2, "m=2 slice mismatch");
    out.require(slice_set(C, 3, 0.0) == m3, "m=3 slice mismatch");
    return out;
}

// ---------------------------------------------------------------- 2
Outcome criterion_square_betti() {
    Outcome out;
    auto X = fixtures::unit_square();
    BuildParams p;
    p.m_max = 4;
    p.dim_max = 3;
    auto C = build_measure_dowker(distance_lambda(X, X, Metric::euclidean), p);

    out.require(betti_numbers(slice(C, 1, 0.6), 2) == std::vector<long>{1, 0, 1},
                "m=1 Betti mismatch");
    out.require(betti_numbers(slice(C, 2, 0.6), 2) == std::vector<long>{1, 3, 0},
                "m=2 Betti mismatch");
    out.require(betti_numbers(slice(C, 3, 0.6), 2) == std::vector<long>{4, 0, 0},
                "m=3 Betti mismatch");
    out.require(slice(C, 4, 0.6).empty(), "m=4 slice not empty");
    return out;
}

// ---------------------------------------------------------------- 3
Outcome criterion_oracle_equivalence() {
    Outcome out;
    std::mt19937_64 sizes(20260826);
    for (int instance = 0; instance < 200 && out.ok; ++instance) {
        const std::size_t nx = 2 + sizes() % 5;  // 2..6
        const std::size_t ny = 2 + sizes() % 7;  // 2..8
        auto L = random_uniform_lambda(nx, ny, 5000 + static_cast<std::uint64_t>(instance));
        BuildParams p;
        p.m_max = static_cast<int>(ny);
        p.dim_max = static_cast<int>(nx) - 1;
        auto C = build_measure_dowker(L, p);

        for (int m = 1; m <= p.m_max && out.ok; ++m) {
            for (std::size_t i = 0; i < nx && out.ok; ++i) {
                for (std::size_t j = 0; j < ny && out.ok; ++j) {
                    const double r = L(i, j) / 2.0;
                    std::set<Simplex> want;
                    for (unsigned mask = 1; mask < (1u << nx); ++mask) {
                        Simplex sigma;
                        for (std::size_t v = 0; v < nx; ++v) {
                            if (mask & (1u << v)) sigma.push_back(static_cast<int>(v));
                        }
                        int witnesses = 0;
                        for (std::size_t y = 0; y < ny; ++y) {
                            bool ok = true;
                            for (int x : sigma) {
                                if (L(static_cast<std::size_t>(x), y) > 2.0 * r) {
                                    ok = false;
                                    break;
                                }
                            }
                            if (ok) ++witnesses;
                        }
                        if (witnesses >= m) want.insert(sigma);
                    }
                    out.require(slice_set(C, m, r) == want,
                                "slice/definition mismatch at instance " +
                                    std::to_string(instance));
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- 4
Outcome criterion_total_weight_duality() {
    Outcome out;
    std::mt19937_64 sizes(4);
    for (int instance = 0; instance < 100 && out.ok; ++instance) {
        const std::size_t nx = 2 + sizes() % 5;  // 2..6
        const std::size_t ny = 2 + sizes() % 5;
        auto L = fixtures::random_indicator(nx, ny, 7000 + static_cast<std::uint64_t>(instance));
        std::vector<int> m_range;
        for (int m = 1; m <= static_cast<int>(ny); ++m) m_range.push_back(m);
        auto report = check_total_weight_duality(L, 0.0, m_range);
        for (const auto& row : report.rows) {
            out.require(row.equal(), "Betti mismatch at instance " + std::to_string(instance) +
                                         ", m=" + std::to_string(row.m) +
                                         ", degree=" + std::to_string(row.degree));
        }
    }
    return out;
}

// ---------------------------------------------------------------- 5
Outcome criterion_classical_duality() {
    Outcome out;
    std::mt19937_64 sizes(4);  // same batch shape as criterion 4
    for (int instance = 0; instance < 100 && out.ok; ++instance) {
        const std::size_t nx = 2 + sizes() % 5;
        const std::size_t ny = 2 + sizes() % 5;
        auto L = fixtures::random_indicator(nx, ny, 7000 + static_cast<std::uint64_t>(instance));
        auto left = betti_numbers(dowker_complex_at(L, 0.0, static_cast<int>(nx)), 2);
        auto right = betti_numbers(
            dowker_complex_at(transpose_lambda(L), 0.0, static_cast<int>(ny)), 2);
        out.require(left == right, "Betti mismatch at instance " + std::to_string(instance));
    }
    auto fig = fixtures::four_by_five_relation();
    auto left = betti_numbers(dowker_complex_at(fig, 0.0, 3), 1);
    auto right = betti_numbers(dowker_complex_at(transpose_lambda(fig), 0.0, 4), 1);
    out.require(left == std::vector<long>{1, 1}, "fixture left side is not a circle");
    out.require(right == std::vector<long>{1, 1}, "fixture right side is not a circle");
    return out;
}

// ---------------------------------------------------------------- 6
Outcome criterion_prokhorov() {
    Outcome out;
    EmpiricalMeasure mu{PointCloud({{0.0}, {1.0}}), {Rational(1, 2), Rational(1, 2)}};
    out.require(prokhorov(mu, mu, Metric::euclidean) == 0.0, "d(mu, mu) != 0");

    for (double d : {0.25, 0.75, 2.0}) {
        EmpiricalMeasure a{PointCloud({{0.0}}), {1}};
        EmpiricalMeasure b{PointCloud({{d}}), {1}};
        out.require(prokhorov(a, b, Metric::euclidean) == std::min(d, 1.0),
                    "Dirac pair at d=" + std::to_string(d));
    }

    EmpiricalMeasure dirac{PointCloud({{0.0}}), {1}};
    out.require(prokhorov(mu, dirac, Metric::euclidean) == 0.5, "two-point vs Dirac != 1/2");
    return out;
}

// ---------------------------------------------------------------- 7
Outcome criterion_stability() {
    Outcome out;
    std::mt19937_64 rng(77);
    auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    for (int instance = 0; instance < 50 && out.ok; ++instance) {
        std::vector<std::vector<double>> pts1, pts2;
        for (int i = 0; i < 30; ++i) {
            const double x = unit(), y = unit();
            pts1.push_back({x, y});
            pts2.push_back({x + 0.1 * (2 * unit() - 1), y + 0.1 * (2 * unit() - 1)});
        }
        PointCloud X1(pts1), X2(pts2);
        auto mu1 = EmpiricalMeasure::probability(X1);
        auto mu2 = EmpiricalMeasure::probability(X2);
        const double delta = std::max(hausdorff(X1, X2, Metric::euclidean),
                                      prokhorov(mu1, mu2, Metric::euclidean));

        std::vector<double> m_values, r_values;
        for (int i = 1; i <= 10; ++i) {
            m_values.push_back(i / 10.0);
            r_values.push_back(0.08 * i);
        }
        BuildParams p;
        p.dim_max = 2;
        auto report = check_stability_lemma(X1, mu1, X2, mu2, p, delta, m_values, r_values);
        out.require(report.precondition_ok,
                    "precondition rejected at instance " + std::to_string(instance));
        out.require(report.passed, "lemma failed at instance " + std::to_string(instance));
    }
    return out;
}

// ---------------------------------------------------------------- 8
Outcome criterion_annulus() {
    Outcome out;
    AnnulusParams params;  // full-scale defaults: 256 points, 10x10 landmarks, 50x50 grid
    auto first = run_annulus_experiment(params);
    const auto& grid = first.grids[0];  // clean annulus cloud X

    bool found = false;
    for (std::size_t i = 0; i < grid.m_values.size() && !found; ++i) {
        for (std::size_t j = 0; j < grid.r_values.size(); ++j) {
            if (grid.r_values[j] >= 0.05 && grid.r_values[j] <= 0.25 && grid.at(i, j) >= 1) {
                found = true;
                break;
            }
        }
    }
    out.require(found, "no H_1 cell >= 1 in the band r in [0.05, 0.25]");

    auto second = run_annulus_experiment(params);
    for (std::size_t c = 0; c < 3; ++c) {
        out.require(first.grids[c].betti == second.grids[c].betti,
                    "rerun with the same seed differs on cloud " + first.labels[c]);
    }
    return out;
}

// ---------------------------------------------------------------- 9
Outcome criterion_er() {
    Outcome out;
    ErParams params;
    params.n = 100;
    params.m_list = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    params.dim_max = 2;
    params.seed = 3;
    auto result = run_er_experiment(params);  // default p grid: 20 values in [0, 1]

    out.require(result.h0.r_values.size() == 20, "p grid is not 20 values");
    const std::size_t last = result.h0.r_values.size() - 1;
    out.require(result.h0.r_values[last] == 1.0, "p grid does not end at 1");
    out.require(result.h0.at(0, last) == 1, "b_0 at (m=1, p=1) is not 1");
    out.require(result.h1.at(0, last) == 0, "b_1 at (m=1, p=1) is not 0");
    return out;
}

// ---------------------------------------------------------------- 10
Outcome criterion_round_trip() {
    Outcome out;
    std::vector<BifilteredComplex> fixtures_list;

    BuildParams p1;
    p1.m_max = 3;
    p1.dim_max = 3;
    p1.halve_radii = false;
    fixtures_list.push_back(build_measure_dowker(fixtures::four_by_five_relation(), p1));

    auto X = fixtures::unit_square();
    BuildParams p2;
    p2.m_max = 4;
    p2.dim_max = 3;
    fixtures_list.push_back(build_measure_dowker(distance_lambda(X, X, Metric::euclidean), p2));

    BuildParams p3;
    p3.m_max = 4;
    p3.dim_max = 2;
    fixtures_list.push_back(build_degree_rips(X, EmpiricalMeasure::counting(X), p3));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        BuildParams p;
        p.m_max = 6;
        p.dim_max = 3;
        fixtures_list.push_back(build_measure_dowker(random_uniform_lambda(5, 6, seed), p));
    }

    for (std::size_t i = 0; i < fixtures_list.size(); ++i) {
        const auto& C = fixtures_list[i];
        for (bool negate : {false, true}) {
            std::stringstream ss;
            write_bifiltration(ss, C, negate);
            out.require(read_bifiltration(ss) == C,
                        "round trip failed on fixture " + std::to_string(i) +
                            (negate ? " (negated)" : ""));
        }
    }
    return out;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "indicator fixture slices at r=0 (m=1,2,3)", 1.0, criterion_fixture_slices},
        {2, "unit-square Betti numbers at r=0.6 (m=1..4)", 1.0, criterion_square_betti},
        {3, "slice/definition equivalence on 200 random relations", 30.0,
         criterion_oracle_equivalence},
        {4, "total-weight duality on 100 random indicator relations", 300.0,
         criterion_total_weight_duality},
        {5, "classical Dowker duality at m=1 on the same batch", 300.0,
         criterion_classical_duality},
        {6, "exact Prokhorov reference values", 10.0, criterion_prokhorov},
        {7, "stability lemma on 50 jitter instances", 120.0, criterion_stability},
        {8, "annulus experiment H_1 signal and determinism", 300.0, criterion_annulus},
        {9, "Erdos-Renyi n=100 smoke and p=1 boundary", 60.0, criterion_er},
        {10, "bifiltration format round trip", 10.0, criterion_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_seconds) {
            out.ok = false;
            out.detail = "over budget (" + std::to_string(c.budget_seconds) + " s)";
        }
        std::printf("criterion %2d: %s  (%.2fs)  %s%s%s\n", c.id, out.ok ? "PASS" : "FAIL",
                    elapsed, c.label, out.detail.empty() ? "" : " -- ", out.detail.c_str());
        if (!out.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
