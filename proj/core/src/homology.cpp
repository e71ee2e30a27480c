#include "dowker/homology.hpp"

#include <cmath>
#include <cstring>
#include <unordered_map>

namespace dowker {

namespace {

/// Union-find with path halving.
struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    /// Returns true if the two classes were distinct (a merge happened).
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

/// Column reducer over Z/2 with dense bit-packed pivot columns.
/// Rows must be indexed consistently with the intended order; the pivot
/// of a column is its highest set row.
class ColumnReducer {
  public:
    explicit ColumnReducer(std::size_t n_rows)
        : n_rows_(n_rows), words_((n_rows + 63) / 64), pivot_of_row_(n_rows, -1), buf_(words_) {}

    /// Reduces the column given by its row indices. Returns the pivot row
    /// if the reduced column is nonzero (and stores it), or -1 if it
    /// reduced to zero.
    int reduce(const std::vector<int>& rows) {
        std::memset(buf_.data(), 0, words_ * sizeof(std::uint64_t));
        for (int r : rows) {
            buf_[static_cast<std::size_t>(r) >> 6] ^= 1ULL << (r & 63);
        }
        int low = highest_bit();
        while (low >= 0 && pivot_of_row_[static_cast<std::size_t>(low)] >= 0) {
            const auto& piv = stored_[static_cast<std::size_t>(
                pivot_of_row_[static_cast<std::size_t>(low)])];
            for (std::size_t w = 0; w <= (static_cast<std::size_t>(low) >> 6); ++w) {
                buf_[w] ^= piv[w];
            }
            low = highest_bit();
        }
        if (low < 0) return -1;
        pivot_of_row_[static_cast<std::size_t>(low)] = static_cast<int>(stored_.size());
        stored_.push_back(buf_);
        return low;
    }

    long rank() const { return static_cast<long>(stored_.size()); }

  private:
    int highest_bit() const {
        for (std::size_t w = words_; w-- > 0;) {
            if (buf_[w]) {
                return static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(
                                                          __builtin_clzll(buf_[w])));
            }
        }
        return -1;
    }

    std::size_t n_rows_, words_;
    std::vector<int> pivot_of_row_;
    std::vector<std::uint64_t> buf_;
    std::vector<std::vector<std::uint64_t>> stored_;
};

using IndexMap = std::unordered_map<Simplex, int, detail::SimplexHash>;

std::vector<int> facet_rows(const Simplex& s, const IndexMap& face_index) {
    std::vector<int> rows;
    rows.reserve(s.size());
    Simplex face(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i) face[k++] = s[j];
        }
        rows.push_back(face_index.at(face));
    }
    return rows;
}

}  // namespace

long rank_z2(std::size_t n_rows, const std::vector<std::vector<int>>& columns) {
    if (n_rows == 0) return 0;
    ColumnReducer reducer(n_rows);
    for (const auto& col : columns) reducer.reduce(col);
    return reducer.rank();
}

std::vector<long> betti_numbers(const SimplicialComplex& K, int max_degree) {
    if (max_degree < 0) throw input_error("betti_numbers: max_degree must be >= 0");
    std::vector<long> betti(static_cast<std::size_t>(max_degree) + 1, 0);
    if (K.empty()) return betti;

    const int top = std::min(K.max_dim(), max_degree + 1);
    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(top) + 1);
    for (const auto& s : K.simplices()) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d <= top) by_dim[static_cast<std::size_t>(d)].push_back(s);
    }

    // rank of d_k for k = 1 .. top (d_0 = 0); beyond the top dimension all ranks vanish
    std::vector<long> rank(static_cast<std::size_t>(max_degree) + 2, 0);
    for (int k = 1; k <= top; ++k) {
        const auto& faces = by_dim[static_cast<std::size_t>(k - 1)];
        IndexMap face_index;
        face_index.reserve(faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i) {
            face_index.emplace(faces[i], static_cast<int>(i));
        }
        std::vector<std::vector<int>> columns;
        columns.reserve(by_dim[static_cast<std::size_t>(k)].size());
        for (const auto& s : by_dim[static_cast<std::size_t>(k)]) {
            columns.push_back(facet_rows(s, face_index));
        }
        rank[static_cast<std::size_t>(k)] = rank_z2(faces.size(), columns);
    }

    for (int k = 0; k <= max_degree; ++k) {
        const long n_k = k <= top ? static_cast<long>(by_dim[static_cast<std::size_t>(k)].size()) : 0;
        betti[static_cast<std::size_t>(k)] =
            n_k - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1];
    }
    return betti;
}

namespace {

struct GradedSimplex {
    double r;
    const Simplex* vertices;
};

bool graded_less(const GradedSimplex& a, const GradedSimplex& b) {
    if (a.r != b.r) return a.r < b.r;
    return *a.vertices < *b.vertices;
}

/// Simplices of one dimension appearing at weight m within the r-range,
/// sorted by appearance radius.
std::vector<GradedSimplex> graded_dim(const BifilteredComplex& C, double m, int dim,
                                      double r_last) {
    std::vector<GradedSimplex> out;
    for (const auto& fs : C.simplices) {
        if (static_cast<int>(fs.vertices.size()) != dim + 1) continue;
        const double r = appearance_radius(fs.appearances, m);
        if (!std::isnan(r) && r <= r_last) out.push_back({r, &fs.vertices});
    }
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

/// One row of the Hilbert grid for degree 0: sweep r, union-find.
void hilbert_row_deg0(const BifilteredComplex& C, double m, const std::vector<double>& r_values,
                      std::vector<long>& row) {
    const double r_last = r_values.back();
    auto verts = graded_dim(C, m, 0, r_last);
    auto edges = graded_dim(C, m, 1, r_last);

    std::unordered_map<int, int> vid;  // vertex label -> union-find slot
    vid.reserve(verts.size());
    UnionFind uf(verts.size());
    long components = 0;

    std::size_t vi = 0, ei = 0;
    for (std::size_t j = 0; j < r_values.size(); ++j) {
        const double r = r_values[j];
        for (; vi < verts.size() && verts[vi].r <= r; ++vi) {
            vid.emplace((*verts[vi].vertices)[0], static_cast<int>(vid.size()));
            ++components;
        }
        for (; ei < edges.size() && edges[ei].r <= r; ++ei) {
            const auto& e = *edges[ei].vertices;
            if (uf.unite(vid.at(e[0]), vid.at(e[1]))) --components;
        }
        row[j] = components;
    }
}

/// One row for degree >= 1: persistence-style sweep. Positive deg-simplices
/// create classes, paired (deg+1)-columns destroy them.
void hilbert_row_pos(const BifilteredComplex& C, double m, const std::vector<double>& r_values,
                     int degree, std::vector<long>& row) {
    const double r_last = r_values.back();
    auto faces = graded_dim(C, m, degree - 1, r_last);
    auto cells = graded_dim(C, m, degree, r_last);
    auto cofaces = graded_dim(C, m, degree + 1, r_last);

    // positivity of deg-simplices: reduce d_deg in filtration order
    std::vector<char> positive(cells.size(), 0);
    if (degree == 1) {
        std::unordered_map<int, int> vid;
        vid.reserve(faces.size());
        for (const auto& f : faces) vid.emplace((*f.vertices)[0], static_cast<int>(vid.size()));
        UnionFind uf(faces.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& e = *cells[i].vertices;
            positive[i] = !uf.unite(vid.at(e[0]), vid.at(e[1]));
        }
    } else {
        IndexMap face_index;
        face_index.reserve(faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i) {
            face_index.emplace(*faces[i].vertices, static_cast<int>(i));
        }
        ColumnReducer reducer(faces.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            positive[i] = reducer.reduce(facet_rows(*cells[i].vertices, face_index)) < 0;
        }
    }

    // deaths: reduce d_{deg+1}; a nonzero reduced column pairs with (kills)
    // one positive deg-simplex at the column's radius
    IndexMap cell_index;
    cell_index.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        cell_index.emplace(*cells[i].vertices, static_cast<int>(i));
    }
    std::vector<double> death_radii;
    {
        ColumnReducer reducer(cells.size());
        for (const auto& cf : cofaces) {
            if (reducer.reduce(facet_rows(*cf.vertices, cell_index)) >= 0) {
                death_radii.push_back(cf.r);
            }
        }
    }
    // deaths arrive in filtration order already
    std::size_t ci = 0, di = 0;
    long alive = 0;
    for (std::size_t j = 0; j < r_values.size(); ++j) {
        const double r = r_values[j];
        for (; ci < cells.size() && cells[ci].r <= r; ++ci) {
            if (positive[ci]) ++alive;
        }
        for (; di < death_radii.size() && death_radii[di] <= r; ++di) --alive;
        row[j] = alive;
    }
}

}  // namespace

HilbertGrid hilbert_grid(const BifilteredComplex& C, const std::vector<double>& m_values,
                         const std::vector<double>& r_values, int degree) {
    if (degree < 0) throw input_error("hilbert_grid: degree must be >= 0");
    if (m_values.empty() || r_values.empty()) throw input_error("hilbert_grid: empty grid");
    if (!std::is_sorted(m_values.begin(), m_values.end()) ||
        !std::is_sorted(r_values.begin(), r_values.end())) {
        throw input_error("hilbert_grid: grid values must be ascending");
    }
    HilbertGrid grid;
    grid.m_values = m_values;
    grid.r_values = r_values;
    grid.homology_degree = degree;
    grid.betti.assign(m_values.size(), std::vector<long>(r_values.size(), 0));
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (degree == 0) {
            hilbert_row_deg0(C, m_values[i], r_values, grid.betti[i]);
        } else {
            hilbert_row_pos(C, m_values[i], r_values, degree, grid.betti[i]);
        }
    }
    return grid;
}

}  // namespace dowker
