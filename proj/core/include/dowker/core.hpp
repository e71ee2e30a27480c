#ifndef DOWKER_CORE_HPP
#define DOWKER_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dowker {

using Rational = boost::multiprecision::cpp_rational;

/// Thrown on malformed input data (files, matrices, parameter values).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive-enumeration guard is exceeded.
/// Guards are hard errors; a truncated oracle is worse than none.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sentinel for "no relation" in indicator-style lambda matrices.
/// Kept finite so every matrix entry stays a valid double; never serialized.
inline constexpr double kNoRelation = std::numeric_limits<double>::max();

/// A finite set of points in R^d. All points share the same dimension.
class PointCloud {
  public:
    PointCloud() = default;
    explicit PointCloud(std::vector<std::vector<double>> points);
    PointCloud(std::initializer_list<std::vector<double>> points)
        : PointCloud(std::vector<std::vector<double>>(points)) {}

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    std::size_t dimension() const { return points_.empty() ? 0 : points_[0].size(); }
    const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<double>>& points() const { return points_; }

  private:
    std::vector<std::vector<double>> points_;
};

/// A real matrix filtering a relation by sublevel sets.
/// Rows are indexed by the vertex set X, columns by the witness set Y.
class LambdaMatrix {
  public:
    LambdaMatrix() = default;
    LambdaMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    explicit LambdaMatrix(std::vector<std::vector<double>> values);
    LambdaMatrix(std::initializer_list<std::vector<double>> values)
        : LambdaMatrix(std::vector<std::vector<double>>(values)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    /// Pointer to row i (contiguous, cols() entries).
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    bool operator==(const LambdaMatrix&) const = default;

  private:
    void validate() const;

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// A simplex as a strictly ascending list of vertex indices.
using Simplex = std::vector<int>;

/// One point of the two-parameter poset ]0,inf[^op x [0,inf[.
struct Bidegree {
    int m = 1;       // weight (reversed order; larger m = deeper in the filtration)
    double r = 0.0;  // radius

    bool operator==(const Bidegree&) const = default;
};

/// Growth order of the bifiltration: a <= b iff the complex at a is
/// contained in the complex at b, i.e. a.m >= b.m and a.r <= b.r.
inline bool poset_leq(const Bidegree& a, const Bidegree& b) {
    return a.m >= b.m && a.r <= b.r;
}

/// Bidegrees of appearance of one simplex: m strictly increasing,
/// r nondecreasing with m.
using BidegreeList = std::vector<Bidegree>;

/// A simplex together with its bidegrees of appearance.
struct FilteredSimplex {
    Simplex vertices;
    BidegreeList appearances;

    bool operator==(const FilteredSimplex&) const = default;
};

/// A list of simplices with multi-critical bidegrees of appearance.
struct BifilteredComplex {
    std::vector<FilteredSimplex> simplices;
    int max_dim = 0;
    int m_max = 1;
    double r_max = std::numeric_limits<double>::infinity();

    bool operator==(const BifilteredComplex&) const = default;
};

/// Smallest radius at which `appearances` admits weight >= m, or NaN if none.
/// Entries are sorted by m with nondecreasing r, so the first entry with
/// m' >= m carries the minimal radius among them.
double appearance_radius(const BidegreeList& appearances, double m);

/// Membership of a bidegree list at a poset point.
bool appears_at(const BidegreeList& appearances, double m, double r);

/// A plain abstract simplicial complex: a face-closed set of simplices.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Builds from a simplex list. With `close_faces`, missing faces
    /// are added; otherwise face closure is checked and violation throws.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices,
                                            bool close_faces = false);

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    bool contains(const Simplex& s) const;
    int max_dim() const;

    /// Simplices of one fixed dimension, in the stored (sorted) order.
    std::vector<Simplex> simplices_of_dim(int dim) const;

    bool operator==(const SimplicialComplex&) const = default;

  private:
    // sorted by (size, lex); unique
    std::vector<Simplex> simplices_;
};

/// Weighted point masses on a finite support. Weights are exact rationals
/// so that Prokhorov feasibility tests are free of rounding.
struct EmpiricalMeasure {
    PointCloud support;
    std::vector<Rational> weights;

    /// Counting measure: all weights 1.
    static EmpiricalMeasure counting(PointCloud support);
    /// Empirical probability measure: all weights 1/n.
    static EmpiricalMeasure probability(PointCloud support);

    Rational total_mass() const;
    bool is_probability() const { return total_mass() == 1; }
};

/// Betti numbers of one homological degree sampled on an (m, r) grid.
struct HilbertGrid {
    std::vector<double> m_values;  // ascending
    std::vector<double> r_values;  // ascending
    std::vector<std::vector<long>> betti;  // shape |m_values| x |r_values|
    int homology_degree = 0;

    long at(std::size_t i, std::size_t j) const { return betti[i][j]; }
};

namespace detail {

/// Hash for simplices, used by index maps in homology and the oracles.
struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Order by (size, lexicographic): faces sort before cofaces.
inline bool size_lex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace detail

}  // namespace dowker

#endif  // DOWKER_CORE_HPP
