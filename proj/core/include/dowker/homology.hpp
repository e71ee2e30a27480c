#ifndef DOWKER_HOMOLOGY_HPP
#define DOWKER_HOMOLOGY_HPP

#include "dowker/core.hpp"

namespace dowker {

/// Z/2 Betti numbers b_0 .. b_max_degree of a face-closed complex:
/// b_k = dim ker d_k - rank d_{k+1}, by dense bit-packed Gaussian
/// elimination on the boundary matrices. The empty complex yields zeros.
std::vector<long> betti_numbers(const SimplicialComplex& K, int max_degree);

/// Rank over Z/2 of a matrix given by sparse columns (row indices).
long rank_z2(std::size_t n_rows, const std::vector<std::vector<int>>& columns);

/// betti[i][j] = Betti number of slice(C, m_values[i], r_values[j]) in the
/// given degree. Each m-row is evaluated as a one-parameter filtration in r
/// with a single persistence-style reduction, which matches per-slice
/// recomputation pointwise.
HilbertGrid hilbert_grid(const BifilteredComplex& C, const std::vector<double>& m_values,
                         const std::vector<double>& r_values, int degree);

}  // namespace dowker

#endif  // DOWKER_HOMOLOGY_HPP
