// Semidirect builds, coboundaries, orbit/functional decisions, the
// left-symmetric product, and the principal element.
#include "fla/frobenius.hpp"

#include "fla/error.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace fla {

LieAlg::LieAlg(std::vector<std::string> labels, std::vector<std::vector<Vec>> c)
    : labels_(std::move(labels)), c_(std::move(c)) {
    const int d = static_cast<int>(labels_.size());
    if (d <= 0) throw InputError("LieAlg: empty basis");
    if (static_cast<int>(c_.size()) != d)
        throw InputError("LieAlg: structure constant table has wrong size");
    for (const auto& row : c_) {
        if (static_cast<int>(row.size()) != d)
            throw InputError("LieAlg: structure constant table has wrong size");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != d)
                throw InputError("LieAlg: bracket coordinate vector has wrong length");
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (c_[i][j][k] != -c_[j][i][k])
                    throw InputError("LieAlg: structure constants are not antisymmetric");
    // Jacobi on basis triples: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                Vec acc = vec_zero(d);
                const std::pair<const Vec*, int> cyclic[3] = {
                    {&c_[i][j], k}, {&c_[j][k], i}, {&c_[k][i], j}};
                for (const auto& [inner, outer] : cyclic)
                    for (int u = 0; u < d; ++u) {
                        if ((*inner)[u] == 0) continue;
                        vec_axpy(acc, (*inner)[u], c_[u][outer]);
                    }
                if (!vec_is_zero(acc))
                    throw InputError("LieAlg: Jacobi identity fails on a basis triple");
            }
}

Vec LieAlg::bracket(const Vec& u, const Vec& v) const {
    const int d = dim();
    if (static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d)
        throw InputError("bracket: vector length mismatch");
    Vec out = vec_zero(d);
    for (int i = 0; i < d; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (v[j] == 0) continue;
            vec_axpy(out, u[i] * v[j], c_[i][j]);
        }
    }
    return out;
}

Subspace LieAlg::derived_ideal() const {
    Subspace s(dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) s.insert(c_[i][j]);
    return s;
}

bool LieAlg::is_two_step_solvable() const {
    const Subspace d1 = derived_ideal();
    const auto& rows = d1.rows();
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b)
            if (!vec_is_zero(bracket(rows[a], rows[b]))) return false;
    return true;
}

TwoForm::TwoForm(Mat m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) throw InputError("TwoForm: matrix not square");
    for (int i = 0; i < mat_.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (mat_.at(i, j) != -mat_.at(j, i))
                throw InputError("TwoForm: matrix not skew-symmetric");
}

bool TwoForm::nondegenerate() const { return det(mat_) != 0; }

LieAlg build_semidirect(const MatAlgebra& b) {
    const int k = b.dim();
    const int n = b.n();
    const int d = k + n;
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, vec_zero(d)));
    for (int i = 0; i < k; ++i) {
        const Mat& a = b.basis()[i];
        for (int j = 0; j < n; ++j) {
            // [a_i, e~_j] = a_i e~_j = column j of a_i, expanded in the e~ basis.
            for (int l = 0; l < n; ++l) {
                c[i][k + j][k + l] = a.at(l, j);
                c[k + j][i][k + l] = -a.at(l, j);
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(d);
    for (int i = 1; i <= d; ++i) labels.push_back("e" + std::to_string(i));
    return LieAlg(std::move(labels), std::move(c));
}

TwoForm ce_coboundary(const LieAlg& g, const LinForm& alpha) {
    const int d = g.dim();
    if (static_cast<int>(alpha.size()) != d)
        throw InputError("ce_coboundary: form length mismatch");
    Mat omega(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) omega.at(i, j) = -dot(alpha, g.bracket_basis(i, j));
    return TwoForm(omega);
}

bool is_frobenius_functional(const LieAlg& g, const LinForm& alpha) {
    if (g.dim() % 2 != 0) return false;
    return ce_coboundary(g, alpha).nondegenerate();
}

LinForm extend_by_zero(const LinForm& alpha_on_fiber, int b_dim) {
    if (b_dim < 0) throw InputError("extend_by_zero: negative dimension");
    LinForm out = vec_zero(b_dim);
    out.insert(out.end(), alpha_on_fiber.begin(), alpha_on_fiber.end());
    return out;
}

Mat orbital_matrix(const MatAlgebra& b, const LinForm& alpha) {
    const int n = b.n();
    if (static_cast<int>(alpha.size()) != n)
        throw InputError("orbital_matrix: covector length mismatch");
    std::vector<Vec> rows;
    rows.reserve(b.dim());
    for (const Mat& a : b.basis()) rows.push_back(a.mul_vec_left(alpha));
    return Mat::from_rows(rows);
}

OrbitDecision open_orbit_exists(const MatAlgebra& b, std::uint64_t seed, int budget_dim) {
    const int n = b.n();
    if (b.dim() != n)
        throw Inapplicable("open_orbit_exists: algebra dimension must equal the ambient size");
    OrbitDecision out;
    auto accept = [&](const LinForm& alpha, const std::string& detail) {
        if (det(orbital_matrix(b, alpha)) == 0) return false;
        out.open_orbit = true;
        out.witness = alpha;
        out.detail = detail;
        return true;
    };
    for (int j = 0; j < n; ++j) {
        LinForm alpha = vec_zero(n);
        alpha[j] = 1;
        if (accept(alpha, "dual basis vector e" + std::to_string(j + 1) + "*")) return out;
    }
    if (accept(Vec(n, Rat(1)), "all-ones covector")) return out;
    Sampler sampler(seed);
    for (int trial = 0; trial < 40; ++trial)
        if (accept(sampler.next_rats(n), "seeded sample")) return out;
    if (n <= budget_dim) {
        std::vector<std::vector<MPoly>> sym(n, std::vector<MPoly>(n, MPoly(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    const Rat& coef = b.basis()[i].at(l, j);
                    if (coef != 0) sym[i][j] = sym[i][j] + MPoly::variable(n, l, coef);
                }
        const MPoly p = mpoly_det(sym, budget_dim);
        if (p.is_zero()) {
            out.zero_certificate = true;
            out.detail = "symbolic determinant identically zero";
            return out;
        }
        const auto point = mpoly_find_nonzero_point(p);
        if (point && accept(*point, "symbolic determinant nonzero point")) return out;
        throw InputError("open_orbit_exists: internal inconsistency in symbolic search");
    }
    out.probabilistic = true;
    out.detail = "all samples degenerate; ambient size above symbolic budget";
    return out;
}

FrobeniusPolynomial frobenius_polynomial(const LieAlg& g, std::uint64_t seed,
                                         int budget_dim) {
    const int d = g.dim();
    FrobeniusPolynomial out;
    if (d % 2 != 0) {
        // A skew form on odd dimension is always degenerate, so the
        // determinant vanishes identically without any computation.
        out.poly = MPoly(d);
        out.zero = true;
        return out;
    }
    if (d <= budget_dim) {
        std::vector<std::vector<MPoly>> sym(d, std::vector<MPoly>(d, MPoly(d)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    const Rat& coef = g.c(i, j, k);
                    if (coef != 0) sym[i][j] = sym[i][j] + MPoly::variable(d, k, -coef);
                }
        out.poly = mpoly_det(sym, budget_dim);
        out.zero = out.poly->is_zero();
        return out;
    }
    Sampler sampler(seed);
    for (int trial = 0; trial < 40; ++trial) {
        const LinForm alpha = sampler.next_rats(d);
        if (det(ce_coboundary(g, alpha).mat()) != 0) {
            out.zero = false; // a nonzero value is an exact witness of nonvanishing
            return out;
        }
    }
    out.zero = true;
    out.probabilistic = true;
    return out;
}

Vec lsa_product(const LieAlg& g, const TwoForm& omega, const Vec& u, const Vec& v) {
    const int d = g.dim();
    if (omega.dim() != d) throw InputError("lsa_product: form dimension mismatch");
    if (!omega.nondegenerate()) throw InputError("lsa_product: degenerate form");
    Vec rhs = vec_zero(d);
    for (int k = 0; k < d; ++k) {
        Vec ek = vec_zero(d);
        ek[k] = 1;
        rhs[k] = -omega.eval(v, g.bracket(u, ek));
    }
    const auto z = solve(omega.mat().transpose(), rhs);
    if (!z) throw InputError("lsa_product: degenerate form");
    return *z;
}

Vec lsa_associator(const LieAlg& g, const TwoForm& omega, const Vec& u, const Vec& v,
                   const Vec& w) {
    const Vec uv_w = lsa_product(g, omega, lsa_product(g, omega, u, v), w);
    const Vec u_vw = lsa_product(g, omega, u, lsa_product(g, omega, v, w));
    Vec out = uv_w;
    vec_axpy(out, Rat(-1), u_vw);
    return out;
}

Vec principal_element(const LieAlg& g, const TwoForm& omega, const LinForm& alpha) {
    if (!(omega.mat() == ce_coboundary(g, alpha).mat()))
        throw InputError("principal_element: form is not the coboundary of the given alpha");
    if (!omega.nondegenerate()) throw InputError("principal_element: degenerate form");
    const auto v0 = solve(omega.mat().transpose(), alpha);
    if (!v0) throw InputError("principal_element: degenerate form");
    return *v0;
}

bool wedge_power_nonzero(const TwoForm& omega) {
    const int d = omega.dim();
    if (d % 2 != 0) throw InputError("wedge_power_nonzero: odd dimension");
    if (d > 16) throw BudgetExceeded("wedge_power_nonzero: dimension above 16");
    // Forms are maps index-bitmask -> coefficient over the canonical ordered
    // basis of wedge powers; the merge sign counts inversions between masks.
    using Form = std::map<std::uint32_t, Rat>;
    Form two;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (omega.at(i, j) != 0)
                two[(1u << i) | (1u << j)] = omega.at(i, j);
    Form acc;
    acc[0] = Rat(1);
    for (int step = 0; step < d / 2; ++step) {
        Form next;
        for (const auto& [ma, ca] : acc)
            for (const auto& [mb, cb] : two) {
                if (ma & mb) continue;
                int inversions = 0;
                for (int bit = 0; bit < d; ++bit)
                    if (mb & (1u << bit))
                        inversions += __builtin_popcount(ma >> (bit + 1));
                Rat term = ca * cb;
                if (inversions % 2 != 0) term = -term;
                auto [it, fresh] = next.emplace(ma | mb, term);
                if (!fresh) {
                    it->second += term;
                    if (it->second == 0) next.erase(it);
                }
            }
        acc = std::move(next);
    }
    const std::uint32_t full = (d == 32) ? 0xffffffffu : ((1u << d) - 1u);
    const auto it = acc.find(full);
    return it != acc.end() && it->second != 0;
}

} // namespace fla
