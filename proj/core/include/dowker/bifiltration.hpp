#ifndef DOWKER_BIFILTRATION_HPP
#define DOWKER_BIFILTRATION_HPP

#include "dowker/core.hpp"

namespace dowker {

struct BuildParams {
    int m_max = 1;
    int dim_max = 0;
    double r_max = std::numeric_limits<double>::infinity();
    // The closed-ball 2r convention; k-NN workflows switch it off so
    // both filtration axes stay on the same integer scale.
    bool halve_radii = true;

    void validate() const {
        if (m_max < 1) throw input_error("BuildParams: m_max must be >= 1");
        if (dim_max < 0) throw input_error("BuildParams: dim_max must be >= 0");
    }
};

/// Bidegrees of appearance of one simplex from its per-witness values
/// max_{x in sigma} Lambda(x, y). Returns (m, r_m) for 1 <= m <= m_max
/// where r_m is the m-th smallest value (halved when halve_radii),
/// truncated at the first r_m > r_max.
BidegreeList bidegrees(const std::vector<double>& witness_values, const BuildParams& params);

/// The bifiltered measure Dowker complex of Lambda with the counting
/// measure on the columns: depth-first coface enumeration where the
/// witness vector of sigma+{j} is the entrywise max of sigma's vector
/// and row j. Simplices with empty bidegree lists are omitted.
BifilteredComplex build_measure_dowker(const LambdaMatrix& L, const BuildParams& params);

/// Evaluation at one poset point: all simplices with an appearance
/// (m', r') such that m' >= m and r' <= r.
SimplicialComplex slice(const BifilteredComplex& C, double m, double r);

/// Drops (m, r_m) whenever (m+1, r_{m+1}) exists with the same radius.
/// Slices are unchanged at every poset point.
BifilteredComplex minimize_bidegrees(const BifilteredComplex& C);

/// Degree-Rips bifiltration: sigma at (m, r) iff every vertex ball
/// B_r(x) carries mu-mass >= m and all pairwise distances in sigma are
/// <= r. Radii are recorded multi-critically at the finitely many
/// critical values (pairwise distances). No radius halving.
BifilteredComplex build_degree_rips(const PointCloud& X, const EmpiricalMeasure& mu,
                                    const BuildParams& params);

}  // namespace dowker

#endif  // DOWKER_BIFILTRATION_HPP
