// algebra.cpp
#include "fla/algebra.hpp"

#include "fla/error.hpp"

namespace fla {

Subspace Subspace::span_of(int ambient, const std::vector<Vec>& vecs) {
    Subspace s(ambient);
    for (const Vec& v : vecs) s.insert(v);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = w[pivots_[i]];
        if (c == 0) continue;
        const Rat f = c;
        for (int j = pivots_[i]; j < ambient_; ++j) w[j] -= f * rows_[i][j];
    }
    return w;
}

bool Subspace::insert(const Vec& v) {
    Vec r = reduce(v);
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
        if (r[j] != 0) {
            p = j;
            break;
        }
    if (p < 0) return false;
    const Rat piv = r[p];
    for (int j = p; j < ambient_; ++j) r[j] /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat c = rows_[i][p];
        if (c == 0) continue;
        for (int j = p; j < ambient_; ++j) rows_[i][j] -= c * r[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

MatAlgebra::MatAlgebra(int n, std::vector<Mat> basis)
    : n_(n), basis_(std::move(basis)), span_(n * n) {
    for (const Mat& b : basis_) {
        if (b.rows() != n_ || b.cols() != n_)
            throw InputError("algebra basis: matrix size does not match n");
        if (!span_.insert(b.vectorized()))
            throw InputError("algebra basis is linearly dependent");
    }
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (!commutator(basis_[i], basis_[j]).is_zero())
                throw Inapplicable("algebra basis matrices do not commute");
    if (!span_.contains(Mat::identity(n_).vectorized()))
        throw InputError("algebra span does not contain the identity");
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j)
            if (!span_.contains((basis_[i] * basis_[j]).vectorized()))
                throw InputError("algebra span is not closed under products");
}

std::optional<Vec> MatAlgebra::coords(const Mat& m) const {
    Mat cols(n_ * n_, dim());
    for (int k = 0; k < dim(); ++k) {
        Vec v = basis_[k].vectorized();
        for (int i = 0; i < n_ * n_; ++i) cols.at(i, k) = v[i];
    }
    return solve(cols, m.vectorized());
}

MatAlgebra closure(int n, const std::vector<Mat>& gens) {
    for (const Mat& g : gens)
        if (g.rows() != n || g.cols() != n)
            throw InputError("closure: generator size does not match n");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!commutator(gens[i], gens[j]).is_zero())
                throw Inapplicable("closure: generators do not commute");

    Subspace span(n * n);
    std::vector<Mat> accepted;
    auto take = [&](const Mat& m) {
        if (span.insert(m.vectorized())) accepted.push_back(m);
    };
    take(Mat::identity(n));
    for (const Mat& g : gens) take(g);

    // Saturate with products wave by wave; every accepted matrix is a
    // product of commuting generators, so the result stays commutative.
    for (;;) {
        const std::size_t before = accepted.size();
        const std::vector<Mat> snapshot = accepted;
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = 0; j < snapshot.size(); ++j)
                take(snapshot[i] * snapshot[j]);
        if (accepted.size() == before) break;
    }
    return MatAlgebra(n, accepted);
}

GerstenhaberCheck gerstenhaber_check(const MatAlgebra& b, const std::vector<int>& subset) {
    std::vector<Mat> gens;
    for (int i : subset) {
        if (i < 0 || i >= b.dim()) throw InputError("gerstenhaber_check: subset index out of range");
        gens.push_back(b.basis()[i]);
    }
    GerstenhaberCheck c;
    c.subset_closure_dim = closure(b.n(), gens).dim();
    c.bound_ok = c.subset_closure_dim <= b.n();
    c.closure_is_whole = closure(b.n(), b.basis()).span() == b.span();
    return c;
}

namespace {

// Matrix of X -> [X, b] on row-major vectorised gl(n):
// coefficient of X_uv in [X, b]_pq is delta_pu b_vq - b_pu delta_qv.
Mat commutator_map(int n, const Mat& b) {
    Mat c(n * n, n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const int row = p * n + q;
            for (int v = 0; v < n; ++v) c.at(row, p * n + v) += b.at(v, q);
            for (int u = 0; u < n; ++u) c.at(row, u * n + q) -= b.at(p, u);
        }
    return c;
}

Mat stack(const std::vector<Mat>& blocks, int cols) {
    int rows = 0;
    for (const Mat& b : blocks) rows += b.rows();
    Mat s(rows, cols);
    int r = 0;
    for (const Mat& b : blocks) {
        for (int i = 0; i < b.rows(); ++i, ++r)
            for (int j = 0; j < cols; ++j) s.at(r, j) = b.at(i, j);
    }
    return s;
}

} // namespace

Subspace centralizer(int n, const std::vector<Mat>& mats) {
    std::vector<Mat> blocks;
    for (const Mat& b : mats) blocks.push_back(commutator_map(n, b));
    if (blocks.empty()) blocks.push_back(Mat(0, n * n));
    return Subspace::span_of(n * n, kernel_basis(stack(blocks, n * n)));
}

Subspace centralizer(const MatAlgebra& b) { return centralizer(b.n(), b.basis()); }

std::vector<Mat> subspace_matrices(int n, const Subspace& s) {
    std::vector<Mat> out;
    for (const Vec& r : s.rows()) out.push_back(Mat::from_vec(n, n, r));
    return out;
}

bool is_masa(const MatAlgebra& b) {
    return centralizer(b.n(), b.basis()) == b.span();
}

Subspace normalizer(const MatAlgebra& b) {
    const int m = b.n() * b.n();
    // Projection killing span(b): w -> w - sum_r w[pivot_r] row_r.
    Mat proj = Mat::identity(m);
    const auto& rows = b.span().rows();
    const auto& pivots = b.span().pivots();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < m; ++j) proj.at(j, pivots[r]) -= rows[r][j];

    std::vector<Mat> blocks;
    for (const Mat& bi : b.basis()) blocks.push_back(proj * commutator_map(b.n(), bi));
    return Subspace::span_of(m, kernel_basis(stack(blocks, m)));
}

namespace {

bool next_combination(std::vector<int>& idx, int k) {
    int q = static_cast<int>(idx.size());
    for (int i = q - 1; i >= 0; --i) {
        if (idx[i] < k - (q - i)) {
            ++idx[i];
            for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

int freedom_degree(int n, const std::vector<Mat>& system) {
    const Subspace target = closure(n, system).span();
    const int k = static_cast<int>(system.size());
    for (int q = 0; q <= k; ++q) {
        std::vector<int> idx(q);
        for (int i = 0; i < q; ++i) idx[i] = i;
        do {
            std::vector<Mat> subset;
            for (int i : idx) subset.push_back(system[i]);
            if (closure(n, subset).span() == target) return q;
        } while (next_combination(idx, k));
    }
    return k; // unreachable: q = k always matches
}

bool is_lagrangian_in_heisenberg(int n, const std::vector<Mat>& mats) {
    if (n < 3) throw InputError("Heisenberg model needs n >= 3");
    std::vector<Vec> model;
    for (int j = 1; j <= n - 2; ++j) {
        model.push_back(Mat::unit(n, 0, j).vectorized());
        model.push_back(Mat::unit(n, j, n - 1).vectorized());
    }
    model.push_back(Mat::unit(n, 0, n - 1).vectorized());
    Subspace h = Subspace::span_of(n * n, model);

    std::vector<Vec> vecs;
    for (const Mat& m : mats) {
        if (!h.contains(m.vectorized())) return false;
        vecs.push_back(m.vectorized());
    }
    if (Subspace::span_of(n * n, vecs).dim() != n - 1) return false;
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!commutator(mats[i], mats[j]).is_zero()) return false;
    return true;
}

} // namespace fla
