#ifndef DOWKER_DUALITY_HPP
#define DOWKER_DUALITY_HPP

#include "dowker/core.hpp"

namespace dowker {

/// Brute-force Dowker complex of the relation {Lambda <= r}: every sigma of
/// dimension <= dim_cap with at least one witness column. Guarded to
/// |X| <= 16 and |Y| <= 64 for exhaustive enumeration.
SimplicialComplex dowker_complex_at(const LambdaMatrix& L, double r, int dim_cap);

/// Number of witness columns of sigma in the relation {Lambda <= r}.
long total_weight(const Simplex& sigma, const LambdaMatrix& L, double r);

/// Sheehy's subdivision filtration at index m: the complex of flags
/// sigma_0 < ... < sigma_k of simplices of K with dim(sigma_0) >= m-1.
/// Each simplex of K becomes a fresh vertex, numbered in (size, lex) order
/// so that inclusion-ordered chains have ascending vertex ids. A dim_cap
/// >= 0 truncates flags (enough for homology up to dim_cap - 1); the flag
/// count is guarded by flag_cap.
SimplicialComplex subdivision_filtration(const SimplicialComplex& K, int m, long flag_cap,
                                         int dim_cap = -1);

struct DualityRow {
    int m;
    int degree;
    long betti_left;   // D(X,Y,R)_m
    long betti_right;  // S(D(Y,X,R^T))_m
    bool equal() const { return betti_left == betti_right; }
};

struct DualityReport {
    std::vector<DualityRow> rows;
    bool passed() const {
        for (const auto& row : rows) {
            if (!row.equal()) return false;
        }
        return true;
    }
};

/// Verifies total-weight Dowker duality objectwise: for each m, Betti
/// numbers (degrees 0..2) of the weight-m Dowker complex must equal those
/// of the subdivision filtration of the transpose Dowker complex.
DualityReport check_total_weight_duality(const LambdaMatrix& L, double r,
                                         const std::vector<int>& m_range);

}  // namespace dowker

#endif  // DOWKER_DUALITY_HPP
