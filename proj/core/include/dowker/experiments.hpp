#ifndef DOWKER_EXPERIMENTS_HPP
#define DOWKER_EXPERIMENTS_HPP

#include <cstdint>

#include "dowker/bifiltration.hpp"
#include "dowker/core.hpp"
#include "dowker/homology.hpp"

namespace dowker {

/// n points in the plane: ceil((1-f)*n) uniform by area on the annulus
/// [inner, outer], the remainder uniform on the inner disk. Seeded and
/// reproducible (std::mt19937_64, radii via inverse transform).
PointCloud sample_annulus_mixture(int n, double inner, double outer, double noise_fraction,
                                  std::uint64_t seed);

struct AnnulusParams {
    int n_points = 256;
    double inner = 0.4;
    double outer = 0.5;
    double noise_fraction = 0.05;
    int landmark_grid = 10;     // k x k grid over [-1/2, 1/2]^2
    int m_max = 50;
    int grid_steps = 50;        // both axes of the Hilbert grid
    double r_max = 0.5;
    int dim_max = 2;
    std::uint64_t seed = 1;
};

struct AnnulusResult {
    // clouds: X (clean annulus), Y (annulus + inner-disk noise), Z (disk)
    std::vector<std::string> labels;
    std::vector<HilbertGrid> grids;       // degree-1 Hilbert functions
    std::vector<double> build_seconds;    // bifiltration construction
    std::vector<double> homology_seconds; // Hilbert grid evaluation
};

/// Landmark-based annulus experiment: MD(S, mu_cloud) for the three clouds
/// on a 10x10 grid of landmarks, degree-1 Hilbert functions on an
/// equispaced grid, with wall-clock timings per cloud.
AnnulusResult run_annulus_experiment(const AnnulusParams& params);

struct ErParams {
    int n = 100;
    std::vector<int> m_list = {1, 2, 3, 4, 5};
    std::vector<double> p_grid;  // defaults to 20 equispaced values in [0, 1]
    int dim_max = 2;
    std::uint64_t seed = 1;
};

struct ErResult {
    HilbertGrid h0;  // rows: m_list, cols: p_grid
    HilbertGrid h1;
    double build_seconds = 0.0;
};

/// Erdos-Renyi hypergraph experiment: bifiltered Dowker complex of an
/// n x n i.i.d. Uniform[0,1] matrix (no radius halving, dimension capped
/// at dim_max), with b_0 and b_1 tabulated along the p axis per m.
ErResult run_er_experiment(const ErParams& params);

}  // namespace dowker

#endif  // DOWKER_EXPERIMENTS_HPP
