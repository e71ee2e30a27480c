#ifndef DOWKER_RELATIONS_HPP
#define DOWKER_RELATIONS_HPP

#include <cstdint>

#include "dowker/core.hpp"

namespace dowker {

enum class Metric { euclidean, cosine };

double point_distance(const std::vector<double>& a, const std::vector<double>& b, Metric metric);

/// Pairwise distances d(X[i], Y[j]). Cosine distance is 1 - <x,y>/(|x||y|);
/// it may violate the triangle inequality and is rejected by the metrics module.
LambdaMatrix distance_lambda(const PointCloud& X, const PointCloud& Y, Metric metric);

/// values[i][j] = rank of j among ascending distances from i, self-rank 0,
/// ties broken by ascending index. Each row is a permutation of 0..n-1.
LambdaMatrix knn_rank_lambda(const PointCloud& X, Metric metric);

/// I.i.d. Uniform[0,1] entries from a seeded std::mt19937_64, with entries
/// derived as (rng() >> 11) * 2^-53 so output is bit-identical across
/// platforms. The generator identity is part of the external contract.
LambdaMatrix random_uniform_lambda(std::size_t rows, std::size_t cols, std::uint64_t seed);

LambdaMatrix transpose_lambda(const LambdaMatrix& L);

struct Box2 {
    double x_min, x_max, y_min, y_max;
};

/// k x k equispaced grid covering the box inclusively at both ends.
PointCloud grid_landmarks(int k, const Box2& bounds);

}  // namespace dowker

#endif  // DOWKER_RELATIONS_HPP
