#include "dowker/bifiltration.hpp"

#include <cmath>
#include <queue>

#include "dowker/relations.hpp"

namespace dowker {

namespace {

/// Smallest min(m_max, |values|) entries in ascending order, selected
/// with a bounded max-heap (m_max is typically much smaller than |Y|).
std::vector<double> smallest_values(const std::vector<double>& values, int m_max) {
    const std::size_t k = std::min<std::size_t>(values.size(), static_cast<std::size_t>(m_max));
    std::priority_queue<double> heap;  // max-heap of the current k smallest
    for (double v : values) {
        if (heap.size() < k) {
            heap.push(v);
        } else if (v < heap.top()) {
            heap.pop();
            heap.push(v);
        }
    }
    std::vector<double> out(heap.size());
    for (std::size_t i = heap.size(); i-- > 0;) {
        out[i] = heap.top();
        heap.pop();
    }
    return out;
}

}  // namespace

BidegreeList bidegrees(const std::vector<double>& witness_values, const BuildParams& params) {
    params.validate();
    const std::vector<double> sorted = smallest_values(witness_values, params.m_max);
    BidegreeList out;
    out.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        // a witness at the sentinel is no witness at all
        if (sorted[i] >= kNoRelation) break;
        const double r = params.halve_radii ? sorted[i] / 2.0 : sorted[i];
        if (r > params.r_max) break;  // radii are ascending, the rest only grow
        out.push_back({static_cast<int>(i) + 1, r});
    }
    return out;
}

namespace {

struct DowkerBuilder {
    const LambdaMatrix& L;
    const BuildParams& params;
    std::vector<FilteredSimplex>& out;
    int n;

    void append_upper_cofaces(Simplex& sigma, std::vector<double>& witness_values) {
        BidegreeList appearances = bidegrees(witness_values, params);
        if (!appearances.empty()) {
            out.push_back({sigma, std::move(appearances)});
        }
        if (static_cast<int>(sigma.size()) - 1 >= params.dim_max) return;
        const std::size_t ncols = L.cols();
        std::vector<double> common(ncols);
        for (int j = sigma.back() + 1; j < n; ++j) {
            const double* row_j = L.row(static_cast<std::size_t>(j));
            for (std::size_t y = 0; y < ncols; ++y) {
                common[y] = std::max(witness_values[y], row_j[y]);
            }
            sigma.push_back(j);
            append_upper_cofaces(sigma, common);
            sigma.pop_back();
        }
    }
};

// max_dim/m_max/r_max summarize the recorded content (not the build
// caps), so a complex equals its parsed serialization field by field.
void summarize_metadata(BifilteredComplex& C) {
    if (C.simplices.empty()) {
        C = BifilteredComplex{};
        return;
    }
    C.max_dim = 0;
    C.m_max = 1;
    C.r_max = 0.0;
    for (const auto& fs : C.simplices) {
        C.max_dim = std::max(C.max_dim, static_cast<int>(fs.vertices.size()) - 1);
        for (const auto& bd : fs.appearances) {
            C.m_max = std::max(C.m_max, bd.m);
            C.r_max = std::max(C.r_max, bd.r);
        }
    }
}

}  // namespace

BifilteredComplex build_measure_dowker(const LambdaMatrix& L, const BuildParams& params) {
    params.validate();
    BifilteredComplex C;
    DowkerBuilder builder{L, params, C.simplices, static_cast<int>(L.rows())};
    for (int k = builder.n - 1; k >= 0; --k) {
        Simplex sigma{k};
        std::vector<double> witness_values(L.row(static_cast<std::size_t>(k)),
                                           L.row(static_cast<std::size_t>(k)) + L.cols());
        builder.append_upper_cofaces(sigma, witness_values);
    }
    summarize_metadata(C);
    return C;
}

SimplicialComplex slice(const BifilteredComplex& C, double m, double r) {
    std::vector<Simplex> present;
    for (const auto& fs : C.simplices) {
        if (appears_at(fs.appearances, m, r)) present.push_back(fs.vertices);
    }
    // Face domination makes the result face-closed already.
    return SimplicialComplex::from_simplices(std::move(present));
}

BifilteredComplex minimize_bidegrees(const BifilteredComplex& C) {
    BifilteredComplex out = C;
    for (auto& fs : out.simplices) {
        BidegreeList kept;
        for (std::size_t i = 0; i < fs.appearances.size(); ++i) {
            const bool shadowed = i + 1 < fs.appearances.size() &&
                                  fs.appearances[i + 1].m == fs.appearances[i].m + 1 &&
                                  fs.appearances[i + 1].r == fs.appearances[i].r;
            if (!shadowed) kept.push_back(fs.appearances[i]);
        }
        fs.appearances = std::move(kept);
    }
    return out;
}

namespace {

struct DegreeRipsBuilder {
    const PointCloud& X;
    const EmpiricalMeasure& mu;
    const BuildParams& params;
    // per vertex: sorted distances to support points with cumulative mass
    std::vector<std::vector<std::pair<double, Rational>>> ball_mass;
    std::vector<std::vector<double>> dist;  // pairwise distances in X
    std::vector<double> critical;           // sorted candidate radii
    std::vector<FilteredSimplex> out;

    /// mu(closed ball of radius r around vertex v)
    const Rational& mass_at(int v, double r) const {
        static const Rational zero(0);
        const auto& steps = ball_mass[static_cast<std::size_t>(v)];
        // last step with distance <= r
        auto it = std::upper_bound(
            steps.begin(), steps.end(), r,
            [](double val, const std::pair<double, Rational>& s) { return val < s.first; });
        if (it == steps.begin()) return zero;
        return std::prev(it)->second;
    }

    void emit(const Simplex& sigma, double diam) {
        BidegreeList appearances;
        auto start = std::lower_bound(critical.begin(), critical.end(), diam);
        std::size_t ci = static_cast<std::size_t>(start - critical.begin());
        for (int m = 1; m <= params.m_max; ++m) {
            // advance to the first critical radius where every vertex ball has mass >= m
            bool found = false;
            for (; ci < critical.size(); ++ci) {
                const double r = critical[ci];
                bool ok = true;
                for (int v : sigma) {
                    if (mass_at(v, r) < m) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) break;
            const double r = critical[ci];
            if (r > params.r_max) break;
            appearances.push_back({m, r});
        }
        if (!appearances.empty()) out.push_back({sigma, std::move(appearances)});
    }

    void extend(Simplex& sigma, double diam) {
        emit(sigma, diam);
        if (static_cast<int>(sigma.size()) - 1 >= params.dim_max) return;
        for (int j = sigma.back() + 1; j < static_cast<int>(X.size()); ++j) {
            double d = diam;
            for (int v : sigma) d = std::max(d, dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]);
            if (d > params.r_max) continue;
            sigma.push_back(j);
            extend(sigma, d);
            sigma.pop_back();
        }
    }
};

}  // namespace

BifilteredComplex build_degree_rips(const PointCloud& X, const EmpiricalMeasure& mu,
                                    const BuildParams& params) {
    params.validate();
    if (mu.support.dimension() != X.dimension()) {
        throw input_error("degree_rips: support/vertex dimension mismatch");
    }
    for (std::size_t s = 0; s < mu.support.size(); ++s) {
        bool found = false;
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (mu.support[s] == X[i]) {
                found = true;
                break;
            }
        }
        if (!found) throw input_error("degree_rips: measure not supported on the vertex set");
    }

    DegreeRipsBuilder builder{X, mu, params, {}, {}, {}, {}};
    const std::size_t n = X.size();
    builder.dist.assign(n, std::vector<double>(n, 0.0));
    std::vector<double> crit{0.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = point_distance(X[i], X[j], Metric::euclidean);
            builder.dist[i][j] = builder.dist[j][i] = d;
            crit.push_back(d);
        }
        for (std::size_t s = 0; s < mu.support.size(); ++s) {
            crit.push_back(point_distance(X[i], mu.support[s], Metric::euclidean));
        }
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    builder.critical = std::move(crit);

    builder.ball_mass.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<double, Rational>> steps;
        for (std::size_t s = 0; s < mu.support.size(); ++s) {
            steps.emplace_back(point_distance(X[i], mu.support[s], Metric::euclidean),
                               mu.weights[s]);
        }
        std::sort(steps.begin(), steps.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Rational acc = 0;
        std::vector<std::pair<double, Rational>> cum;
        for (const auto& [d, w] : steps) {
            acc += w;
            if (!cum.empty() && cum.back().first == d) {
                cum.back().second = acc;
            } else {
                cum.emplace_back(d, acc);
            }
        }
        builder.ball_mass[i] = std::move(cum);
    }

    for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
        Simplex sigma{k};
        builder.extend(sigma, 0.0);
    }

    BifilteredComplex C;
    C.simplices = std::move(builder.out);
    summarize_metadata(C);
    return C;
}

}  // namespace dowker
