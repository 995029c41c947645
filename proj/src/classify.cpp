// Eigenvalue profiles, direct-sum labels, Cartan detection, derivations,
// and automorphism verification.
#include "fla/classify.hpp"

#include "fla/error.hpp"

#include <algorithm>
#include <utility>

namespace fla {

std::string EigProfile::str() const {
    std::string out;
    for (const auto& e : entries) {
        if (!out.empty()) out += "; ";
        out += "mult " + std::to_string(e.multiplicity) + ": " +
               std::to_string(e.real_roots) + " real, " +
               std::to_string(e.complex_pairs) + " complex pair" +
               (e.complex_pairs == 1 ? "" : "s");
    }
    return out.empty() ? "empty" : out;
}

EigProfile eig_profile(const Mat& m) {
    const Poly chi = char_poly(m);
    EigProfile out;
    for (const auto& [g, e] : squarefree_decompose(chi)) {
        const int r = sturm_real_root_count(g);
        out.entries.push_back({e, r, (g.degree() - r) / 2});
    }
    return out;
}

std::string LabelAtom::str() const {
    if (!complex_block) return size == 1 ? "aff(R)" : "D0^" + std::to_string(size);
    return size == 1 ? "aff(C)" : "D01(" + std::to_string(size) + ")";
}

std::string ClassLabel::str() const {
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty()) out += " + ";
        out += a.str();
    }
    return out.empty() ? "(empty)" : out;
}

std::string ClassLabel::verbose() const {
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty()) out += " + ";
        out += a.str();
        const int dim = a.complex_block ? 4 * a.size : 2 * a.size;
        out += "[dim " + std::to_string(dim) + "]";
    }
    return out.empty() ? "(empty)" : out;
}

ClassLabel classify_gm(const Mat& m) {
    if (!is_nonderogatory(m))
        throw Inapplicable("classify_gm: matrix is derogatory; the direct-sum "
                           "classification only covers the nonderogatory case");
    ClassLabel out;
    for (const auto& e : eig_profile(m).entries) {
        for (int r = 0; r < e.real_roots; ++r)
            out.atoms.push_back({false, e.multiplicity});
        for (int c = 0; c < e.complex_pairs; ++c)
            out.atoms.push_back({true, e.multiplicity});
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    return out;
}

bool iso_gm(const Mat& m1, const Mat& m2) {
    return classify_gm(m1) == classify_gm(m2);
}

namespace {

// M(t) = sum_l t^(l-1) b_l over the basis of b, the deterministic curve both
// searches sample.
Mat curve_point(const MatAlgebra& b, long t) {
    Mat m(b.n(), b.n());
    Rat scale(1);
    for (const Mat& bl : b.basis()) {
        m = m + bl.scaled(scale);
        scale *= t;
    }
    return m;
}

} // namespace

std::optional<Mat> find_cyclic_generator(const MatAlgebra& b) {
    const int n = b.n();
    // K[m] for nonderogatory m has dimension exactly n, so any other
    // dimension rules a cyclic nonderogatory generator out immediately.
    if (b.dim() != n) return std::nullopt;
    for (const Mat& bl : b.basis())
        if (is_nonderogatory(bl)) return bl;
    // If b = K[m] with m nonderogatory, the curve misses nonderogatory
    // points only where one of at most n(n-1)/2 eigenvalue-separation
    // conditions or n derivative conditions vanishes, each a nonzero
    // polynomial of degree < n in t; one more sample than the product degree
    // therefore guarantees a hit.
    const long samples = static_cast<long>(n) * (n + 1) * (n - 1) / 2 + 1;
    for (long t = 0; t < samples; ++t) {
        Mat m = curve_point(b, t);
        if (is_nonderogatory(m)) return m;
    }
    return std::nullopt;
}

bool is_cartan(const MatAlgebra& b) {
    const int n = b.n();
    if (b.dim() != n)
        throw Inapplicable("is_cartan: algebra dimension must equal the ambient size");
    // A matrix with squarefree characteristic polynomial (n distinct
    // eigenvalues) is in particular nonderogatory and generates b by
    // dimension count. When such an element exists, all of b is polynomial
    // in it, and the curve's failure locus is the vanishing set of at most
    // n(n-1)/2 pairwise-difference polynomials of degree < n in t, so
    // sampling past the product degree decides exactly.
    const long samples = static_cast<long>(n) * (n - 1) * std::max(1, n - 1) + 1;
    for (long t = 0; t < samples; ++t) {
        const Mat m = curve_point(b, t);
        const Poly chi = char_poly(m);
        if (poly_gcd(chi, chi.derivative()).is_constant()) return true;
    }
    return false;
}

DerivationSpace derivations_direct(const LieAlg& g) {
    const int d = g.dim();
    // Unknown D is a d x d matrix acting on coordinates, vectorised
    // row-major: column index k*d + l holds D(k, l). One equation per basis
    // pair (i < j) and output coordinate k:
    //   sum_l c[i][j][l] D(k,l) - sum_u D(u,i) c[u][j][k] - sum_u D(u,j) c[i][u][k] = 0.
    std::vector<Vec> rows;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec row = vec_zero(d * d);
                for (int l = 0; l < d; ++l) row[k * d + l] += g.c(i, j, l);
                for (int u = 0; u < d; ++u) {
                    row[u * d + i] -= g.c(u, j, k);
                    row[u * d + j] -= g.c(i, u, k);
                }
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
    DerivationSpace out;
    if (rows.empty()) {
        // Abelian algebra: every linear map is a derivation.
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) out.basis.push_back(Mat::unit(d, k, l));
    } else {
        for (const Vec& v : kernel_basis(Mat::from_rows(rows)))
            out.basis.push_back(Mat::from_vec(d, d, v));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

int derivations_via_normalizer(const MatAlgebra& b) {
    if (!find_cyclic_generator(b))
        throw Inapplicable("derivations_via_normalizer: the algebra has no "
                           "nonderogatory cyclic generator");
    return normalizer(b).dim() + b.n();
}

bool verify_automorphism(const Mat& m, const Mat& phi, const Vec& x0) {
    const int n = m.rows();
    if (m.cols() != n || phi.rows() != n || phi.cols() != n ||
        static_cast<int>(x0.size()) != n)
        throw InputError("verify_automorphism: dimension mismatch");
    const auto phi_inv = inverse(phi);
    if (!phi_inv) throw InputError("verify_automorphism: phi is singular");
    const MatAlgebra b = closure(n, {m});
    const int k = b.dim();
    const int d = k + n;
    if (!b.contains(phi * m * (*phi_inv)))
        throw Inapplicable("verify_automorphism: phi m phi^-1 lies outside K[m]");
    const LieAlg g = build_semidirect(b);
    // Columns of the candidate map psi in the e-basis of the build.
    Mat psi(d, d);
    for (int i = 0; i < k; ++i) {
        const Mat conj = phi * b.basis()[i] * (*phi_inv);
        const auto coords = b.coords(conj);
        if (!coords)
            throw Inapplicable("verify_automorphism: phi a phi^-1 lies outside K[m]");
        for (int t = 0; t < k; ++t) psi.at(t, i) = (*coords)[t];
        const Vec fiber = conj.mul_vec(x0);
        for (int l = 0; l < n; ++l) psi.at(k + l, i) = fiber[l];
    }
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) psi.at(k + l, k + j) = phi.at(l, j);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const Vec lhs = psi.mul_vec(g.bracket_basis(i, j));
            Vec ei = vec_zero(d), ej = vec_zero(d);
            ei[i] = 1;
            ej[j] = 1;
            if (lhs != g.bracket(psi.mul_vec(ei), psi.mul_vec(ej))) return false;
        }
    return true;
}

std::optional<std::pair<int, int>> nilpotent_square_signature(const MatAlgebra& b) {
    const int dim = b.dim();
    // Multiplication table in basis coordinates: table[i][j] = coords of
    // basis[i] * basis[j]. The products stay inside the algebra by the
    // MatAlgebra closure invariant.
    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            auto c = b.coords(b.basis()[i] * b.basis()[j]);
            table[i][j] = *c;
            table[j][i] = *c;
        }
    // Trace of multiplication by basis[k] in the regular representation.
    Vec mult_trace(dim, Rat(0));
    for (int k = 0; k < dim; ++k)
        for (int j = 0; j < dim; ++j) mult_trace[k] += table[k][j][j];
    // The nilpotent elements are the radical of T(x, y) = trace(L_{xy}).
    Mat gram(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) gram.at(i, j) = dot(table[i][j], mult_trace);
    const std::vector<Vec> nil = kernel_basis(gram);
    const int vd = static_cast<int>(nil.size());
    // Product of two V-coordinate vectors, in algebra coordinates.
    const auto prod = [&](const Vec& x, const Vec& y) {
        Vec out(dim, Rat(0));
        for (int i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j] == 0) continue;
                vec_axpy(out, x[i] * y[j], table[i][j]);
            }
        }
        return out;
    };
    Subspace value_span(dim);
    for (int a = 0; a < vd; ++a)
        for (int c = a; c < vd; ++c) value_span.insert(prod(nil[a], nil[c]));
    if (value_span.dim() != 1) return std::nullopt;
    const Vec& unit = value_span.rows()[0];
    int pivot = 0;
    while (unit[pivot] == 0) ++pivot;
    // Gram matrix of the squaring form on V in the scale set by `unit`, then
    // exact symmetric congruence diagonalization (Sylvester inertia).
    std::vector<std::vector<Rat>> beta(vd, std::vector<Rat>(vd));
    for (int a = 0; a < vd; ++a)
        for (int c = 0; c < vd; ++c) beta[a][c] = prod(nil[a], nil[c])[pivot] / unit[pivot];
    std::vector<bool> used(vd, false);
    int plus = 0, minus = 0;
    for (;;) {
        int piv = -1;
        for (int i = 0; i < vd && piv < 0; ++i)
            if (!used[i] && beta[i][i] != 0) piv = i;
        if (piv < 0) {
            // No nonzero diagonal left: mix in a row with a surviving
            // off-diagonal entry to expose one, or stop at the zero form.
            int fi = -1, fj = -1;
            for (int i = 0; i < vd && fi < 0; ++i)
                if (!used[i])
                    for (int j = i + 1; j < vd; ++j)
                        if (!used[j] && beta[i][j] != 0) {
                            fi = i;
                            fj = j;
                            break;
                        }
            if (fi < 0) break;
            for (int k = 0; k < vd; ++k) beta[fi][k] += beta[fj][k];
            for (int k = 0; k < vd; ++k) beta[k][fi] += beta[k][fj];
            continue;
        }
        used[piv] = true;
        if (beta[piv][piv] > 0) ++plus;
        else ++minus;
        for (int i = 0; i < vd; ++i) {
            if (used[i] || beta[i][piv] == 0) continue;
            const Rat f = beta[i][piv] / beta[piv][piv];
            for (int k = 0; k < vd; ++k) beta[i][k] -= f * beta[piv][k];
            for (int k = 0; k < vd; ++k) beta[k][i] -= f * beta[k][piv];
        }
    }
    if (plus < minus) std::swap(plus, minus);
    return std::make_pair(plus, minus);
}

InvariantBundle invariant_bundle(const MatAlgebra& b) {
    const LieAlg g = build_semidirect(b);
    InvariantBundle out;
    out.total_dim = g.dim();
    out.derived_dim = g.derived_ideal().dim();
    out.derivation_dim = derivations_direct(g).dimension;
    out.freedom = freedom_degree(b.n(), b.basis());
    if (const auto gen = find_cyclic_generator(b)) out.label = classify_gm(*gen);
    out.square_signature = nilpotent_square_signature(b);
    return out;
}

} // namespace fla
