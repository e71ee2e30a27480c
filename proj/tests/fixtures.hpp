#ifndef DOWKER_TESTS_FIXTURES_HPP
#define DOWKER_TESTS_FIXTURES_HPP

#include <vector>

#include "dowker/core.hpp"
#include "dowker/relations.hpp"

namespace fixtures {

// 4x5 indicator relation on X = {a,b,c,d}, Y = {alpha..epsilon}.
// Witness counts: a,b,c have 3 columns, d has 2; the weight-2 complex
// keeps edges ab and bc, the weight-3 complex keeps vertices a,b,c.
inline dowker::LambdaMatrix four_by_five_relation() {
    const double z = 0.0;
    const double n = dowker::kNoRelation;
    return dowker::LambdaMatrix({{z, z, n, n, z},
                                 {z, n, n, z, z},
                                 {z, n, z, z, n},
                                 {n, z, z, n, n}});
}

// Corners of the unit square; all pairwise distances are 1 or sqrt(2).
inline dowker::PointCloud unit_square() {
    return dowker::PointCloud({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
}

// Random 0/sentinel indicator matrix with i.i.d. fair coin entries.
inline dowker::LambdaMatrix random_indicator(std::size_t rows, std::size_t cols,
                                             std::uint64_t seed) {
    dowker::LambdaMatrix L = dowker::random_uniform_lambda(rows, cols, seed);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            L(i, j) = L(i, j) < 0.5 ? 0.0 : dowker::kNoRelation;
        }
    }
    return L;
}

}  // namespace fixtures

#endif  // DOWKER_TESTS_FIXTURES_HPP
