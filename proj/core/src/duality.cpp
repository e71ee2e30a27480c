#include "dowker/duality.hpp"

#include <bit>
#include <cstdint>
#include <functional>

#include "dowker/homology.hpp"
#include "dowker/relations.hpp"

namespace dowker {

namespace {

void check_oracle_guards(const LambdaMatrix& L) {
    if (L.rows() > 16) throw guard_error("dowker oracle: |X| > 16");
    if (L.cols() > 64) throw guard_error("dowker oracle: |Y| > 64");
}

std::uint64_t witness_mask(const LambdaMatrix& L, std::size_t row, double r) {
    std::uint64_t mask = 0;
    for (std::size_t y = 0; y < L.cols(); ++y) {
        if (L(row, y) <= r) mask |= 1ULL << y;
    }
    return mask;
}

/// Enumerates witnessed simplices with weight >= min_weight, pruning on the
/// shared witness mask.
void enumerate_witnessed(const LambdaMatrix& L, double r, int dim_cap, long min_weight,
                         std::vector<Simplex>& out) {
    check_oracle_guards(L);
    const int n = static_cast<int>(L.rows());
    std::vector<std::uint64_t> vertex_mask(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertex_mask[static_cast<std::size_t>(i)] = witness_mask(L, static_cast<std::size_t>(i), r);

    Simplex sigma;
    std::function<void(int, std::uint64_t)> extend = [&](int start, std::uint64_t mask) {
        for (int j = start; j < n; ++j) {
            const std::uint64_t next = mask & vertex_mask[static_cast<std::size_t>(j)];
            if (std::popcount(next) < min_weight) continue;
            sigma.push_back(j);
            out.push_back(sigma);
            if (static_cast<int>(sigma.size()) - 1 < dim_cap) extend(j + 1, next);
            sigma.pop_back();
        }
    };
    extend(0, ~std::uint64_t{0});
}

}  // namespace

SimplicialComplex dowker_complex_at(const LambdaMatrix& L, double r, int dim_cap) {
    std::vector<Simplex> simplices;
    enumerate_witnessed(L, r, dim_cap, 1, simplices);
    return SimplicialComplex::from_simplices(std::move(simplices));
}

long total_weight(const Simplex& sigma, const LambdaMatrix& L, double r) {
    check_oracle_guards(L);
    std::uint64_t mask = ~std::uint64_t{0};
    if (L.cols() < 64) mask = (1ULL << L.cols()) - 1;
    for (int v : sigma) mask &= witness_mask(L, static_cast<std::size_t>(v), r);
    return std::popcount(mask);
}

SimplicialComplex subdivision_filtration(const SimplicialComplex& K, int m, long flag_cap,
                                         int dim_cap) {
    if (m < 1) throw input_error("subdivision_filtration: m must be >= 1");
    // K's simplices are already stored in (size, lex) order; their position
    // is the fresh vertex id. Inclusion implies a strictly larger id.
    const auto& cells = K.simplices();
    std::vector<Simplex> flags;
    long count = 0;

    Simplex chain;  // current flag, as cell ids
    std::function<void(std::size_t)> extend = [&](std::size_t top) {
        if (++count > flag_cap) throw guard_error("subdivision_filtration: flag_cap exceeded");
        flags.push_back(chain);
        if (dim_cap >= 0 && static_cast<int>(chain.size()) - 1 >= dim_cap) return;
        for (std::size_t j = top + 1; j < cells.size(); ++j) {
            if (cells[j].size() <= cells[top].size()) continue;
            if (!std::includes(cells[j].begin(), cells[j].end(), cells[top].begin(),
                               cells[top].end())) {
                continue;
            }
            chain.push_back(static_cast<int>(j));
            extend(j);
            chain.pop_back();
        }
    };

    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(cells[i].size()) - 1 < m - 1) continue;
        chain.push_back(static_cast<int>(i));
        extend(i);
        chain.pop_back();
    }
    return SimplicialComplex::from_simplices(std::move(flags));
}

DualityReport check_total_weight_duality(const LambdaMatrix& L, double r,
                                         const std::vector<int>& m_range) {
    constexpr int kBettiDepth = 2;  // degrees 0..2, matching the experiments
    const LambdaMatrix Lt = transpose_lambda(L);
    // The dual Dowker complex is shared across all m.
    const SimplicialComplex dual =
        dowker_complex_at(Lt, r, static_cast<int>(Lt.rows()) - 1);

    DualityReport report;
    for (int m : m_range) {
        if (m < 1) throw input_error("check_total_weight_duality: m must be >= 1");
        std::vector<Simplex> weighted;
        enumerate_witnessed(L, r, static_cast<int>(L.rows()) - 1, m, weighted);
        const auto left = betti_numbers(SimplicialComplex::from_simplices(std::move(weighted)),
                                        kBettiDepth);
        // Flags truncated at dimension kBettiDepth + 1: enough for b_0..b_2.
        const auto sub = subdivision_filtration(dual, m, 2'000'000, kBettiDepth + 1);
        const auto right = betti_numbers(sub, kBettiDepth);
        for (int deg = 0; deg <= kBettiDepth; ++deg) {
            report.rows.push_back({m, deg, left[static_cast<std::size_t>(deg)],
                                   right[static_cast<std::size_t>(deg)]});
        }
    }
    return report;
}

}  // namespace dowker
