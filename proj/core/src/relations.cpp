#include "dowker/relations.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace dowker {

double point_distance(const std::vector<double>& a, const std::vector<double>& b, Metric metric) {
    if (a.size() != b.size()) throw input_error("distance: dimension mismatch");
    if (metric == Metric::euclidean) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw input_error("cosine distance: zero vector");
    return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

LambdaMatrix distance_lambda(const PointCloud& X, const PointCloud& Y, Metric metric) {
    if (X.empty() || Y.empty()) throw input_error("distance_lambda: empty point cloud");
    if (X.dimension() != Y.dimension()) throw input_error("distance_lambda: dimension mismatch");
    LambdaMatrix L(X.size(), Y.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
        for (std::size_t j = 0; j < Y.size(); ++j) {
            L(i, j) = point_distance(X[i], Y[j], metric);
        }
    }
    return L;
}

LambdaMatrix knn_rank_lambda(const PointCloud& X, Metric metric) {
    if (X.empty()) throw input_error("knn_rank_lambda: empty point cloud");
    const std::size_t n = X.size();
    LambdaMatrix L(n, n);
    std::vector<std::size_t> order(n);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) dist[j] = point_distance(X[i], X[j], metric);
        std::iota(order.begin(), order.end(), std::size_t{0});
        // stable sort on distance keeps the ascending-index tie-break
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
        for (std::size_t rank = 0; rank < n; ++rank) {
            L(i, order[rank]) = static_cast<double>(rank);
        }
    }
    return L;
}

LambdaMatrix random_uniform_lambda(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    if (rows < 1 || cols < 1) throw input_error("random_uniform_lambda: shape must be >= 1x1");
    std::mt19937_64 rng(seed);
    LambdaMatrix L(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            // 53 high bits -> dyadic rational in [0,1); avoids the
            // implementation-defined std::uniform_real_distribution
            L(i, j) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }
    }
    return L;
}

LambdaMatrix transpose_lambda(const LambdaMatrix& L) {
    LambdaMatrix T(L.cols(), L.rows());
    for (std::size_t i = 0; i < L.rows(); ++i) {
        for (std::size_t j = 0; j < L.cols(); ++j) T(j, i) = L(i, j);
    }
    return T;
}

PointCloud grid_landmarks(int k, const Box2& bounds) {
    if (k < 2) throw input_error("grid_landmarks: k must be >= 2");
    if (bounds.x_max <= bounds.x_min || bounds.y_max <= bounds.y_min) {
        throw input_error("grid_landmarks: degenerate box");
    }
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        const double x = bounds.x_min + (bounds.x_max - bounds.x_min) * i / (k - 1);
        for (int j = 0; j < k; ++j) {
            const double y = bounds.y_min + (bounds.y_max - bounds.y_min) * j / (k - 1);
            pts.push_back({x, y});
        }
    }
    return PointCloud(std::move(pts));
}

}  // namespace dowker
