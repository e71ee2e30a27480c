#include "dowker/core.hpp"

#include <cmath>
#include <set>

namespace dowker {

PointCloud::PointCloud(std::vector<std::vector<double>> points) : points_(std::move(points)) {
    if (points_.empty()) return;
    const std::size_t d = points_[0].size();
    if (d == 0) throw input_error("point cloud: points must have dimension >= 1");
    for (const auto& p : points_) {
        if (p.size() != d) throw input_error("point cloud: inconsistent point dimensions");
        for (double c : p) {
            if (!std::isfinite(c)) throw input_error("point cloud: non-finite coordinate");
        }
    }
}

LambdaMatrix::LambdaMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows_ < 1 || cols_ < 1) throw input_error("lambda matrix: shape must be >= 1x1");
    validate();
}

LambdaMatrix::LambdaMatrix(std::vector<std::vector<double>> values) {
    rows_ = values.size();
    if (rows_ < 1) throw input_error("lambda matrix: shape must be >= 1x1");
    cols_ = values[0].size();
    if (cols_ < 1) throw input_error("lambda matrix: shape must be >= 1x1");
    data_.reserve(rows_ * cols_);
    for (const auto& row : values) {
        if (row.size() != cols_) throw input_error("lambda matrix: ragged rows");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    validate();
}

void LambdaMatrix::validate() const {
    for (double v : data_) {
        if (!std::isfinite(v)) throw input_error("lambda matrix: entries must be finite");
    }
}

double appearance_radius(const BidegreeList& appearances, double m) {
    for (const auto& bd : appearances) {
        if (static_cast<double>(bd.m) >= m) return bd.r;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

bool appears_at(const BidegreeList& appearances, double m, double r) {
    const double rm = appearance_radius(appearances, m);
    return !std::isnan(rm) && rm <= r;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices,
                                                    bool close_faces) {
    std::set<Simplex> all;
    for (auto& s : simplices) {
        if (s.empty()) throw input_error("simplicial complex: empty simplex");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw input_error("simplicial complex: vertices must be strictly ascending");
        }
        all.insert(std::move(s));
    }
    if (close_faces) {
        // Repeatedly add codim-1 faces until closed.
        std::vector<Simplex> stack(all.begin(), all.end());
        while (!stack.empty()) {
            Simplex s = std::move(stack.back());
            stack.pop_back();
            if (s.size() < 2) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j != i) face.push_back(s[j]);
                }
                if (all.insert(face).second) stack.push_back(std::move(face));
            }
        }
    } else {
        for (const auto& s : all) {
            if (s.size() < 2) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j != i) face.push_back(s[j]);
                }
                if (!all.count(face)) {
                    throw input_error("simplicial complex: not face-closed");
                }
            }
        }
    }
    SimplicialComplex k;
    k.simplices_.assign(all.begin(), all.end());
    std::sort(k.simplices_.begin(), k.simplices_.end(), detail::size_lex_less);
    return k;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s, detail::size_lex_less);
}

int SimplicialComplex::max_dim() const {
    if (simplices_.empty()) return -1;
    return static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int dim) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_) {
        if (static_cast<int>(s.size()) == dim + 1) out.push_back(s);
    }
    return out;
}

EmpiricalMeasure EmpiricalMeasure::counting(PointCloud support) {
    EmpiricalMeasure mu;
    mu.weights.assign(support.size(), Rational(1));
    mu.support = std::move(support);
    return mu;
}

EmpiricalMeasure EmpiricalMeasure::probability(PointCloud support) {
    if (support.empty()) throw input_error("empirical measure: empty support");
    EmpiricalMeasure mu;
    mu.weights.assign(support.size(),
                      Rational(1, static_cast<long>(support.size())));
    mu.support = std::move(support);
    return mu;
}

Rational EmpiricalMeasure::total_mass() const {
    Rational total = 0;
    for (const auto& w : weights) total += w;
    return total;
}

}  // namespace dowker
