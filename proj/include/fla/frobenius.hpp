// frobenius.hpp
// Semidirect-sum Lie algebras G = B ⋉ K^n built from a commutative matrix
// algebra acting on column vectors, together with the machinery that makes
// them Frobenius: coboundaries of linear forms, open-orbit and functional
// existence decisions (exact within a symbolic-determinant budget, seeded
// sampling beyond), the induced left-symmetric product, and the principal
// element. Everything is exact rational arithmetic.
#pragma once

#include "fla/algebra.hpp"
#include "fla/mat.hpp"
#include "fla/mpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fla {

// Finite-dimensional Lie algebra over the rationals, stored as structure
// constants c[i][j] = coordinates of [e_i, e_j] in the basis e_1..e_dim.
// The constructor verifies antisymmetry and the Jacobi identity exactly.
class LieAlg {
public:
    LieAlg(std::vector<std::string> labels, std::vector<std::vector<Vec>> c);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rat& c(int i, int j, int k) const { return c_[i][j][k]; }
    const Vec& bracket_basis(int i, int j) const { return c_[i][j]; }
    Vec bracket(const Vec& u, const Vec& v) const;
    Subspace derived_ideal() const; // span of all basis brackets
    // Derived ideal abelian: [[u,v],[u',v']] = 0 for all inputs.
    bool is_two_step_solvable() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> c_;
};

// Linear form on a Lie algebra, coordinates in the dual basis.
using LinForm = Vec;

// Skew-symmetric bilinear form, e.g. the coboundary of a linear form.
class TwoForm {
public:
    explicit TwoForm(Mat m); // verifies squareness and skew-symmetry
    int dim() const { return mat_.rows(); }
    const Mat& mat() const { return mat_; }
    const Rat& at(int i, int j) const { return mat_.at(i, j); }
    Rat eval(const Vec& u, const Vec& v) const { return dot(u, mat_.mul_vec(v)); }
    bool nondegenerate() const;

private:
    Mat mat_;
};

// G = B ⋉ K^n for a commutative subalgebra B of gl(n): basis a_1..a_k of B
// followed by the standard basis of K^n, brackets [a,a']=0, [x,y]=0,
// [a_i, x] = a_i x. Labels are e1..e(k+n). The last n vectors span the
// derived ideal whenever B is nontrivial.
LieAlg build_semidirect(const MatAlgebra& b);

// Coboundary of alpha: the skew matrix O with O(i,j) = -alpha([e_i, e_j]).
TwoForm ce_coboundary(const LieAlg& g, const LinForm& alpha);

// True iff the coboundary of alpha is nondegenerate. Odd-dimensional
// algebras return false immediately (a skew form on odd dimension is
// always degenerate).
bool is_frobenius_functional(const LieAlg& g, const LinForm& alpha);

// Extend a form on the K^n part to the whole of B ⋉ K^n by zero on the
// k-dimensional B part: result = (0,...,0, alpha).
LinForm extend_by_zero(const LinForm& alpha_on_fiber, int b_dim);

// Row i = alpha composed with the i-th basis matrix of b, as a covector:
// entry (i, j) = alpha(b_i e_j). Invertibility of this matrix at some alpha
// is the open-orbit condition for the dual action of B.
Mat orbital_matrix(const MatAlgebra& b, const LinForm& alpha);

// Outcome of the open-orbit search over covectors on K^n.
struct OrbitDecision {
    bool open_orbit = false;        // some covector has invertible orbital matrix
    bool probabilistic = false;     // verdict reached by sampling only, not certified
    std::optional<LinForm> witness; // covector with det(orbital_matrix) != 0
    bool zero_certificate = false;  // symbolic determinant identically zero: exact "no"
    std::string detail;             // how the verdict was reached
};

// Search order: dual basis vectors, the all-ones covector, seeded samples,
// then the symbolic determinant when n <= budget_dim (an identically zero
// determinant is an exact nonexistence certificate; a nonzero one yields a
// witness). Beyond the budget an all-zero sample run gives a probabilistic
// "no". Requires dim b = n; anything else is Inapplicable.
OrbitDecision open_orbit_exists(const MatAlgebra& b, std::uint64_t seed = 0,
                                int budget_dim = 8);

// The determinant of the coboundary matrix with a symbolic linear form
// s_1 e_1* + ... + s_dim e_dim*. Identically zero iff the algebra admits no
// Frobenius functional.
struct FrobeniusPolynomial {
    std::optional<MPoly> poly; // present when computed within the budget
    bool zero = false;         // determinant vanishes identically
    bool probabilistic = false; // verdict from seeded sampling, poly absent
};
FrobeniusPolynomial frobenius_polynomial(const LieAlg& g, std::uint64_t seed = 0,
                                         int budget_dim = 8);

// Left-symmetric product induced by a nondegenerate coboundary omega:
// u * v is the unique solution of omega(u * v, w) = -omega(v, [u, w]).
Vec lsa_product(const LieAlg& g, const TwoForm& omega, const Vec& u, const Vec& v);

// Associator (u*v)*w - u*(v*w) of the product above.
Vec lsa_associator(const LieAlg& g, const TwoForm& omega, const Vec& u,
                   const Vec& v, const Vec& w);

// The vector v0 with omega(v0, .) = alpha, for omega = ce_coboundary(g, alpha)
// nondegenerate. For semidirect builds with alpha supported on the K^n dual
// this is -identity expanded in the B part of the basis.
Vec principal_element(const LieAlg& g, const TwoForm& omega, const LinForm& alpha);

// Cross-check of nondegeneracy for small dimensions: whether the (dim/2)-th
// wedge power of omega is a nonzero top form. Exact; dimension must be even
// (InputError) and at most 16 (BudgetExceeded).
bool wedge_power_nonzero(const TwoForm& omega);

} // namespace fla
