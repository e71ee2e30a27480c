#include "dowker/metrics.hpp"

#include <bit>
#include <cmath>
#include <deque>
#include <functional>

namespace dowker {

double hausdorff(const PointCloud& X1, const PointCloud& X2, Metric metric) {
    if (X1.empty() || X2.empty()) throw input_error("hausdorff: empty point cloud");
    if (metric != Metric::euclidean) {
        throw input_error("hausdorff: requires a metric satisfying the triangle inequality");
    }
    auto directed = [&](const PointCloud& A, const PointCloud& B) {
        double worst = 0.0;
        for (std::size_t i = 0; i < A.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < B.size(); ++j) {
                best = std::min(best, point_distance(A[i], B[j], metric));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(X1, X2), directed(X2, X1));
}

namespace {

/// Max-flow with exact rational capacities on a small dense graph,
/// supporting incremental edge insertion (capacities only ever grow).
class RationalMaxFlow {
  public:
    explicit RationalMaxFlow(std::size_t n) : n_(n), residual_(n, std::vector<Rational>(n, 0)) {}

    void add_capacity(std::size_t u, std::size_t v, const Rational& c) { residual_[u][v] += c; }

    /// Augments from s to t until no path remains; returns total flow
    /// pushed by this call.
    Rational augment(std::size_t s, std::size_t t) {
        Rational pushed = 0;
        std::vector<int> prev(n_);
        for (;;) {
            std::fill(prev.begin(), prev.end(), -1);
            prev[s] = static_cast<int>(s);
            std::deque<std::size_t> queue{s};
            while (!queue.empty() && prev[t] < 0) {
                const std::size_t u = queue.front();
                queue.pop_front();
                for (std::size_t v = 0; v < n_; ++v) {
                    if (prev[v] < 0 && residual_[u][v] > 0) {
                        prev[v] = static_cast<int>(u);
                        queue.push_back(v);
                    }
                }
            }
            if (prev[t] < 0) return pushed;
            Rational bottleneck = -1;
            for (std::size_t v = t; v != s; v = static_cast<std::size_t>(prev[v])) {
                const Rational& c = residual_[static_cast<std::size_t>(prev[v])][v];
                if (bottleneck < 0 || c < bottleneck) bottleneck = c;
            }
            for (std::size_t v = t; v != s; v = static_cast<std::size_t>(prev[v])) {
                const auto u = static_cast<std::size_t>(prev[v]);
                residual_[u][v] -= bottleneck;
                residual_[v][u] += bottleneck;
            }
            pushed += bottleneck;
        }
    }

  private:
    std::size_t n_;
    std::vector<std::vector<Rational>> residual_;
};

Rational exact(double x) { return Rational(x); }

}  // namespace

double prokhorov(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu, Metric metric) {
    if (!mu.is_probability() || !nu.is_probability()) {
        throw input_error("prokhorov: requires probability measures");
    }
    if (mu.support.dimension() != nu.support.dimension()) {
        throw input_error("prokhorov: supports must share the coordinate space");
    }
    const std::size_t a = mu.support.size(), b = nu.support.size();

    struct Pair {
        double d;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    pairs.reserve(a * b);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            pairs.push_back({point_distance(mu.support[i], nu.support[j], metric), i, j});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.d < y.d; });

    // Nodes: source, mu points, nu points, sink.
    const std::size_t source = 0, sink = a + b + 1;
    RationalMaxFlow flow(a + b + 2);
    for (std::size_t i = 0; i < a; ++i) flow.add_capacity(source, 1 + i, mu.weights[i]);
    for (std::size_t j = 0; j < b; ++j) flow.add_capacity(1 + a + j, sink, nu.weights[j]);

    // Scan breakpoints d ascending; edges within distance d accumulate and
    // the max flow F(d) only grows. The unmatched mass v = 1 - F(d) is the
    // violation level; the infimum is min over d of max(d, v(d)).
    Rational total_flow = 0;
    Rational best = 1;  // epsilon = 1 is always feasible for probability measures
    std::size_t k = 0;
    while (k < pairs.size()) {
        const double d = pairs[k].d;
        const Rational d_exact = exact(d);
        if (d_exact >= best) break;  // later candidates only grow
        for (; k < pairs.size() && pairs[k].d == d; ++k) {
            flow.add_capacity(1 + pairs[k].i, 1 + a + pairs[k].j, 2);  // effectively unbounded
        }
        total_flow += flow.augment(source, sink);
        const Rational violation = 1 - total_flow;
        const Rational candidate = std::max(d_exact, violation);
        if (candidate < best) best = candidate;
        if (violation <= d_exact) break;  // v only shrinks, d only grows
    }
    return best.convert_to<double>();
}

namespace {

/// Per-vertex bitmasks of witness columns at a fixed radius threshold,
/// so slice enumeration runs on word operations instead of rational sums.
struct WitnessMasks {
    std::size_t words = 0;
    std::vector<std::vector<std::uint64_t>> vertex;

    static WitnessMasks build(const LambdaMatrix& dists, double threshold) {
        WitnessMasks wm;
        wm.words = (dists.cols() + 63) / 64;
        wm.vertex.assign(dists.rows(), std::vector<std::uint64_t>(wm.words, 0));
        for (std::size_t i = 0; i < dists.rows(); ++i) {
            for (std::size_t y = 0; y < dists.cols(); ++y) {
                if (dists(i, y) <= threshold) wm.vertex[i][y >> 6] |= 1ULL << (y & 63);
            }
        }
        return wm;
    }
};

void mask_and(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& other) {
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= other[w];
}

/// Decides "witness mass >= m" from a combined mask. Uniform weights use a
/// precomputed popcount threshold; general weights sum the set bits.
struct MassTest {
    bool uniform = true;
    long min_count = 0;  // uniform path
    const std::vector<Rational>* weights = nullptr;
    Rational m_exact;

    static MassTest make(const std::vector<Rational>& weights, double m) {
        MassTest t;
        t.weights = &weights;
        t.m_exact = Rational(m);
        t.uniform = std::all_of(weights.begin(), weights.end(),
                                [&](const Rational& w) { return w == weights.front(); });
        if (t.uniform && !weights.empty()) {
            // smallest c with c * w >= m
            const Rational need = t.m_exact / weights.front();
            const auto num = boost::multiprecision::numerator(need);
            const auto den = boost::multiprecision::denominator(need);
            t.min_count = static_cast<long>((num + den - 1) / den);
        }
        return t;
    }

    bool passes(const std::vector<std::uint64_t>& mask) const {
        if (uniform) {
            long count = 0;
            for (std::uint64_t w : mask) count += std::popcount(w);
            return count >= min_count;
        }
        Rational mass = 0;
        for (std::size_t w = 0; w < mask.size(); ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                mass += (*weights)[w * 64 + static_cast<std::size_t>(b)];
            }
        }
        return mass >= m_exact;
    }
};

}  // namespace

bool measure_dowker_member(const Simplex& sigma, const PointCloud& X, const EmpiricalMeasure& mu,
                           double m, double r) {
    Rational mass = 0;
    const Rational m_exact = exact(m);
    for (std::size_t y = 0; y < mu.support.size(); ++y) {
        bool witness = true;
        for (int v : sigma) {
            if (point_distance(X[static_cast<std::size_t>(v)], mu.support[y],
                               Metric::euclidean) > 2.0 * r) {
                witness = false;
                break;
            }
        }
        if (witness) mass += mu.weights[y];
    }
    return mass >= m_exact;
}

namespace {

struct Direction {
    const PointCloud& source;
    const EmpiricalMeasure& source_mu;
    const PointCloud& target;
    const EmpiricalMeasure& target_mu;
    int id;
};

/// One direction of the lemma at one grid point. Returns a counterexample
/// if some subset of C(sigma) is missing from the shifted target slice.
std::optional<StabilityCounterexample> check_direction_at(
    const Direction& dir, const BuildParams& params, double delta, double m, double r,
    const LambdaMatrix& source_dists, const LambdaMatrix& target_dists,
    const std::vector<std::vector<int>>& correspondence) {
    const double shifted_m = m - delta;
    const double shifted_r = r + delta;
    const int n = static_cast<int>(dir.source.size());

    const auto source_masks = WitnessMasks::build(source_dists, 2.0 * r);
    const auto source_test = MassTest::make(dir.source_mu.weights, m);
    const auto target_masks = WitnessMasks::build(target_dists, 2.0 * shifted_r);
    const auto target_test = MassTest::make(dir.target_mu.weights, shifted_m);

    auto target_member = [&](const std::vector<int>& tau) {
        std::vector<std::uint64_t> mask(target_masks.words, ~std::uint64_t{0});
        for (int y : tau) mask_and(mask, target_masks.vertex[static_cast<std::size_t>(y)]);
        // stray high bits beyond the column count are cleared by any vertex mask
        return target_test.passes(mask);
    };

    // C(sigma) and its membership check in the target slice
    auto check_sigma = [&](const Simplex& sigma) -> std::optional<StabilityCounterexample> {
        if (shifted_m <= 0.0) return std::nullopt;  // mass bound is vacuous
        std::vector<int> image;
        {
            std::vector<char> seen(dir.target.size(), 0);
            for (int v : sigma) {
                for (int y : correspondence[static_cast<std::size_t>(v)]) {
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        image.push_back(y);
                    }
                }
            }
            std::sort(image.begin(), image.end());
        }
        // The full image passing implies every subset passes (witness mass
        // is antitone under inclusion).
        if (target_member(image)) return std::nullopt;
        // Otherwise enumerate subsets (up to the dimension cap) to find
        // a minimal counterexample.
        const std::size_t max_size =
            std::min(image.size(), static_cast<std::size_t>(params.dim_max) + 1);
        std::vector<int> subset;
        std::optional<StabilityCounterexample> failure;
        std::function<void(std::size_t)> combos = [&](std::size_t start) {
            if (failure) return;
            if (!subset.empty() && !target_member(subset)) {
                failure = StabilityCounterexample{dir.id, m, r, sigma, subset};
                return;
            }
            if (subset.size() == max_size) return;
            for (std::size_t j = start; j < image.size(); ++j) {
                subset.push_back(image[j]);
                combos(j + 1);
                subset.pop_back();
            }
        };
        combos(0);
        return failure;
    };

    // Enumerate the source slice up to dim_max, pruning on witness mass.
    Simplex sigma;
    std::optional<StabilityCounterexample> failure;
    std::function<void(int, const std::vector<std::uint64_t>&)> extend =
        [&](int start, const std::vector<std::uint64_t>& mask) {
            for (int j = start; j < n; ++j) {
                std::vector<std::uint64_t> next = mask;
                mask_and(next, source_masks.vertex[static_cast<std::size_t>(j)]);
                if (!source_test.passes(next)) continue;
                sigma.push_back(j);
                failure = check_sigma(sigma);
                if (!failure && static_cast<int>(sigma.size()) - 1 < params.dim_max) {
                    extend(j + 1, next);
                }
                sigma.pop_back();
                if (failure) return;
            }
        };
    extend(0, std::vector<std::uint64_t>(source_masks.words, ~std::uint64_t{0}));
    return failure;
}

}  // namespace

StabilityReport check_stability_lemma(const PointCloud& X1, const EmpiricalMeasure& mu1,
                                      const PointCloud& X2, const EmpiricalMeasure& mu2,
                                      const BuildParams& params, double delta,
                                      const std::vector<double>& m_values,
                                      const std::vector<double>& r_values) {
    params.validate();
    StabilityReport report;
    report.required_delta = std::max(hausdorff(X1, X2, Metric::euclidean),
                                     prokhorov(mu1, mu2, Metric::euclidean));
    if (delta < report.required_delta) {
        report.precondition_ok = false;
        return report;
    }

    const LambdaMatrix d1 = distance_lambda(X1, mu1.support, Metric::euclidean);
    const LambdaMatrix d2 = distance_lambda(X2, mu2.support, Metric::euclidean);
    auto correspondence = [&](const PointCloud& from, const PointCloud& to) {
        std::vector<std::vector<int>> corr(from.size());
        for (std::size_t i = 0; i < from.size(); ++i) {
            for (std::size_t j = 0; j < to.size(); ++j) {
                if (point_distance(from[i], to[j], Metric::euclidean) <= delta) {
                    corr[i].push_back(static_cast<int>(j));
                }
            }
        }
        return corr;
    };
    const auto corr12 = correspondence(X1, X2);
    const auto corr21 = correspondence(X2, X1);

    const Direction forward{X1, mu1, X2, mu2, 0};
    const Direction backward{X2, mu2, X1, mu1, 1};
    for (double m : m_values) {
        for (double r : r_values) {
            if (auto bad = check_direction_at(forward, params, delta, m, r, d1, d2, corr12)) {
                report.counterexample = bad;
                return report;
            }
            if (auto bad = check_direction_at(backward, params, delta, m, r, d2, d1, corr21)) {
                report.counterexample = bad;
                return report;
            }
        }
    }
    report.passed = true;
    return report;
}

}  // namespace dowker
