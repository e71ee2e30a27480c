#ifndef DOWKER_METRICS_HPP
#define DOWKER_METRICS_HPP

#include <optional>

#include "dowker/bifiltration.hpp"
#include "dowker/core.hpp"
#include "dowker/relations.hpp"

namespace dowker {

/// Two-sided Hausdorff distance between finite clouds, evaluated on the
/// union of supports. Only metrics satisfying the triangle inequality are
/// accepted (euclidean); cosine is rejected.
double hausdorff(const PointCloud& X1, const PointCloud& X2, Metric metric);

/// Exact Prokhorov distance between finite probability measures in a
/// common coordinate space. Feasibility of a candidate epsilon is decided
/// by a max-flow test with exact rational capacities: epsilon works iff at
/// most epsilon mass must move farther than epsilon (Strassen). The
/// infimum is attained at one of finitely many breakpoints, which are
/// scanned in ascending order.
double prokhorov(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu, Metric metric);

struct StabilityCounterexample {
    int direction;  // 0: X1 -> X2, 1: X2 -> X1
    double m, r;
    Simplex sigma;            // simplex of the source slice
    std::vector<int> tau;     // subset of C(sigma) missing from the target slice
};

struct StabilityReport {
    bool precondition_ok = true;  // delta >= max(hausdorff, prokhorov)
    double required_delta = 0.0;
    bool passed = false;
    std::optional<StabilityCounterexample> counterexample;
};

/// Checks the correspondence lemma at simplicial level: for every grid
/// point (m, r) and simplex sigma in the slice of MD(X1, mu1), every
/// subset of C(sigma) = {y : d(x, y) <= delta for some x in sigma} with at
/// most dim_max+1 vertices must lie in the slice of MD(X2, mu2) at
/// (m - delta, r + delta). Run in both directions.
StabilityReport check_stability_lemma(const PointCloud& X1, const EmpiricalMeasure& mu1,
                                      const PointCloud& X2, const EmpiricalMeasure& mu2,
                                      const BuildParams& params, double delta,
                                      const std::vector<double>& m_values,
                                      const std::vector<double>& r_values);

/// Membership test of the measure Dowker bifiltration for arbitrary
/// weighted measures and real weight threshold m (exact comparison).
bool measure_dowker_member(const Simplex& sigma, const PointCloud& X,
                           const EmpiricalMeasure& mu, double m, double r);

}  // namespace dowker

#endif  // DOWKER_METRICS_HPP
