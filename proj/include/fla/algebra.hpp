// algebra.hpp
// Commutative matrix algebras: spans in canonical reduced form, unital
// closure of commuting generators, centralizers and normalizers inside
// gl(n), and the subset-generation count (freedom degree). All bases are
// deterministic: closure accepts matrices in discovery order starting from
// the identity, spans reduce to unique RREF rows.
#pragma once

#include "fla/mat.hpp"

#include <optional>
#include <vector>

namespace fla {

// A linear subspace of K^ambient held as canonical reduced row echelon rows,
// so two subspaces are equal iff their rows compare equal.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}
    static Subspace span_of(int ambient, const std::vector<Vec>& vecs);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
    bool insert(const Vec& v); // true iff the dimension grew
    Vec reduce(const Vec& v) const; // v minus its projection onto the span
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    int ambient_;
    std::vector<Vec> rows_;  // canonical RREF rows, pivots ascending
    std::vector<int> pivots_;
};

// A commutative unital subalgebra of gl(n) with an explicit ordered basis.
// The constructor verifies independence, pairwise commutation, that the span
// contains the identity, and that it is closed under products.
class MatAlgebra {
public:
    MatAlgebra(int n, std::vector<Mat> basis);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Mat>& basis() const { return basis_; }
    const Subspace& span() const { return span_; }
    bool contains(const Mat& m) const { return span_.contains(m.vectorized()); }
    // Coefficients of m in terms of basis(), or nullopt when m is outside.
    std::optional<Vec> coords(const Mat& m) const;

private:
    int n_;
    std::vector<Mat> basis_;
    Subspace span_;
};

// Unital algebra generated by pairwise commuting matrices. The basis starts
// with the identity, then the generators that enlarge the span in the given
// order, then products in discovery order until saturation. Non-commuting
// generators raise Inapplicable.
MatAlgebra closure(int n, const std::vector<Mat>& gens);

// Dimension bound floor(n^2/4) + 1 for commutative subalgebras of gl(n).
inline int commutative_dim_bound(int n) { return (n * n) / 4 + 1; }

// Closure dimension of a basis subset of b, checked against the bound
// dim <= n that holds whenever b has an open orbit on the dual. The caller
// is responsible for establishing the open-orbit hypothesis; this only
// reports the dimensions.
struct GerstenhaberCheck {
    int subset_closure_dim;
    bool bound_ok;          // subset_closure_dim <= n
    bool closure_is_whole;  // closure of the full basis equals b
};
GerstenhaberCheck gerstenhaber_check(const MatAlgebra& b, const std::vector<int>& subset);

// All matrices commuting with every element of mats, as a subspace of gl(n)
// under row-major vectorisation.
Subspace centralizer(int n, const std::vector<Mat>& mats);
Subspace centralizer(const MatAlgebra& b);

std::vector<Mat> subspace_matrices(int n, const Subspace& s);

// True iff the algebra equals its own centralizer (maximal commutative).
bool is_masa(const MatAlgebra& b);

// Lie normalizer {X in gl(n) : [X, b] subset of b}.
Subspace normalizer(const MatAlgebra& b);

// Smallest q such that some q-element subset of the system already generates
// the same unital algebra as the whole system; 0 when the algebra is K.I.
int freedom_degree(int n, const std::vector<Mat>& system);

// Heisenberg model inside gl(n), n >= 3: span of E_1j and E_jn for
// 2 <= j <= n-1 with center E_1n. True iff the given matrices lie in that
// span, their span has dimension n-1, and all pairwise commutators vanish
// (such a span necessarily contains the center).
bool is_lagrangian_in_heisenberg(int n, const std::vector<Mat>& mats);

} // namespace fla
