#include "dowker/experiments.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "dowker/relations.hpp"

namespace dowker {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform-by-area radius in [lo, hi]: r^2 uniform on [lo^2, hi^2].
double radial(std::mt19937_64& rng, double lo, double hi) {
    const double u = uniform01(rng);
    return std::sqrt(lo * lo + u * (hi * hi - lo * lo));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

PointCloud sample_annulus_mixture(int n, double inner, double outer, double noise_fraction,
                                  std::uint64_t seed) {
    if (n < 0) throw input_error("annulus sampler: n must be >= 0");
    if (!(0.0 <= inner && inner < outer)) {
        throw input_error("annulus sampler: need 0 <= inner < outer");
    }
    if (!(0.0 <= noise_fraction && noise_fraction <= 1.0)) {
        throw input_error("annulus sampler: noise fraction must lie in [0, 1]");
    }
    const int n_annulus = static_cast<int>(std::ceil((1.0 - noise_fraction) * n));
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const bool on_annulus = i < n_annulus;
        const double r = on_annulus ? radial(rng, inner, outer) : radial(rng, 0.0, inner);
        const double theta = 2.0 * std::numbers::pi * uniform01(rng);
        pts.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return PointCloud(std::move(pts));
}

AnnulusResult run_annulus_experiment(const AnnulusParams& p) {
    const PointCloud landmarks =
        grid_landmarks(p.landmark_grid, Box2{-0.5, 0.5, -0.5, 0.5});

    AnnulusResult result;
    result.labels = {"X", "Y", "Z"};
    const std::vector<PointCloud> clouds = {
        sample_annulus_mixture(p.n_points, p.inner, p.outer, 0.0, p.seed),
        sample_annulus_mixture(p.n_points, p.inner, p.outer, p.noise_fraction, p.seed + 1),
        sample_annulus_mixture(p.n_points, 0.0, p.outer, 0.0, p.seed + 2),
    };

    std::vector<double> m_values(static_cast<std::size_t>(p.m_max >= p.grid_steps ? p.grid_steps
                                                                                  : p.m_max));
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        // equispaced integers 1..m_max when they fit, else a thinned ladder
        m_values[i] = std::floor(1.0 + static_cast<double>(i) * (p.m_max - 1) /
                                           std::max<std::size_t>(1, m_values.size() - 1));
    }
    std::vector<double> r_values(static_cast<std::size_t>(p.grid_steps));
    for (std::size_t j = 0; j < r_values.size(); ++j) {
        r_values[j] = p.r_max * static_cast<double>(j) / (r_values.size() - 1);
    }

    for (const auto& cloud : clouds) {
        const auto t0 = std::chrono::steady_clock::now();
        const LambdaMatrix L = distance_lambda(landmarks, cloud, Metric::euclidean);
        BuildParams bp;
        bp.m_max = p.m_max;
        bp.dim_max = p.dim_max;
        bp.r_max = p.r_max;
        bp.halve_radii = true;
        const BifilteredComplex C = build_measure_dowker(L, bp);
        result.build_seconds.push_back(seconds_since(t0));

        const auto t1 = std::chrono::steady_clock::now();
        result.grids.push_back(hilbert_grid(C, m_values, r_values, 1));
        result.homology_seconds.push_back(seconds_since(t1));
    }
    return result;
}

ErResult run_er_experiment(const ErParams& p) {
    if (p.n < 1) throw input_error("er experiment: n must be >= 1");
    std::vector<double> p_grid = p.p_grid;
    if (p_grid.empty()) {
        p_grid.resize(20);
        for (std::size_t j = 0; j < p_grid.size(); ++j) {
            p_grid[j] = static_cast<double>(j) / (p_grid.size() - 1);
        }
    }
    std::vector<double> m_values(p.m_list.begin(), p.m_list.end());
    if (!std::is_sorted(m_values.begin(), m_values.end())) {
        throw input_error("er experiment: m_list must be ascending");
    }

    const auto t0 = std::chrono::steady_clock::now();
    const LambdaMatrix L =
        random_uniform_lambda(static_cast<std::size_t>(p.n), static_cast<std::size_t>(p.n), p.seed);
    BuildParams bp;
    bp.m_max = p.m_list.empty() ? 1 : p.m_list.back();
    bp.dim_max = p.dim_max;
    bp.r_max = 1.0;
    bp.halve_radii = false;  // the p axis is the raw matrix entry scale
    const BifilteredComplex C = build_measure_dowker(L, bp);

    ErResult result;
    result.h0 = hilbert_grid(C, m_values, p_grid, 0);
    result.h1 = hilbert_grid(C, m_values, p_grid, 1);
    result.build_seconds = seconds_since(t0);
    return result;
}

}  // namespace dowker
