// classify.hpp
// Eigenvalue-profile classification of the semidirect sums built from a
// single nonderogatory matrix, canonical direct-sum labels, Cartan
// detection, derivation spaces by two independent routes, automorphism
// verification, and the invariant bundle used to separate algebras that the
// label does not cover. All decisions are exact: squarefree structure comes
// from Yun decomposition, real/complex splits from Sturm counts, and the
// sampling searches carry degree bounds that make an exhaustive miss a
// proof of absence rather than a heuristic.
#pragma once

#include "fla/algebra.hpp"
#include "fla/frobenius.hpp"
#include "fla/mat.hpp"
#include "fla/poly.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fla {

// One squarefree level of a characteristic polynomial: the roots of
// multiplicity `multiplicity`, split into real roots and complex-conjugate
// pairs.
struct ProfileEntry {
    int multiplicity = 0;
    int real_roots = 0;
    int complex_pairs = 0;
    auto operator<=>(const ProfileEntry&) const = default;
};

// Entries in increasing multiplicity order (one per level that occurs), so
// equal profiles compare equal componentwise.
struct EigProfile {
    std::vector<ProfileEntry> entries;
    bool operator==(const EigProfile&) const = default;
    std::string str() const;
};

EigProfile eig_profile(const Mat& m);

// One indecomposable summand of the classification: a real eigenvalue of
// multiplicity `size` (RealBlock) or a complex-conjugate eigenvalue pair of
// multiplicity `size` (ComplexBlock, a 4*size-dimensional summand).
struct LabelAtom {
    bool complex_block = false;
    int size = 1;
    auto operator<=>(const LabelAtom&) const = default;
    std::string str() const;
};

// Canonical multiset of summands; atoms are kept sorted.
struct ClassLabel {
    std::vector<LabelAtom> atoms; // sorted ascending
    bool operator==(const ClassLabel&) const = default;
    std::string str() const;     // e.g. "aff(R) + aff(C) + D0^3"
    std::string verbose() const; // same, with summand dimensions spelled out
};

// Direct-sum label of the semidirect build on K[m] for nonderogatory m:
// one RealBlock(e) per real eigenvalue of multiplicity e, one
// ComplexBlock(e) per complex pair of multiplicity e. Derogatory input is
// Inapplicable: the classification theorem does not cover it.
ClassLabel classify_gm(const Mat& m);

// Label equality for two nonderogatory matrices (Inapplicable otherwise).
bool iso_gm(const Mat& m1, const Mat& m2);

// A nonderogatory element m of b with K[m] = b, if one exists. The search
// tries the basis first, then the curve M(t) = sum t^(l-1) b_l at
// n(n+1)(n-1)/2 + 1 integer values of t; the factored degree bound on the
// curve's failure locus makes an exhaustive miss a proof that b has no
// nonderogatory element. Returns nullopt when dim b != n (impossible on
// dimension grounds) or when the search proves absence.
std::optional<Mat> find_cyclic_generator(const MatAlgebra& b);

// True iff b = K[m] for some m in b with squarefree characteristic
// polynomial (n distinct eigenvalues over the complex numbers). Searches
// the same curve at n(n-1)*max(1, n-1) + 1 values of t, again with a
// degree-bound guarantee. Requires dim b = n (Inapplicable otherwise).
bool is_cartan(const MatAlgebra& b);

// Derivations of a Lie algebra: maps D with D[x,y] = [Dx,y] + [x,Dy].
struct DerivationSpace {
    std::vector<Mat> basis; // acting on coordinates
    int dimension = 0;
};

// Kernel of the Leibniz system over all basis pairs, solved directly.
DerivationSpace derivations_direct(const LieAlg& g);

// Derivation dimension of the semidirect build on b = K[m], m
// nonderogatory, computed as dim normalizer(b) + n without touching the
// Leibniz system. Inapplicable when b has no nonderogatory generator.
int derivations_via_normalizer(const MatAlgebra& b);

// Checks whether (phi, x0) induces an automorphism of K[m] semidirect K^n
// via psi(a, x) = (phi a phi^-1, phi a phi^-1 (x0) + phi(x)): builds the
// linear map and tests the homomorphism property on all basis pairs.
// Singular phi is an InputError; phi m phi^-1 outside K[m] is Inapplicable
// (the representation theorem's precondition fails).
bool verify_automorphism(const Mat& m, const Mat& phi, const Vec& x0);

// Signature {p, q} with p >= q of the squaring form on the nilpotent part of
// b. The nilpotent elements V of a commutative algebra form the radical of
// the regular-representation trace form; when the product span V*V is a
// line, beta(x, y) := xy defines a symmetric bilinear form on V valued in
// that line, canonical up to the choice of scale on V*V. Its inertia pair,
// normalized so p >= q to absorb that sign, is invariant under algebra
// isomorphism (in particular under conjugation of b). Returns nullopt when
// dim V*V != 1, where no single scalar-valued form exists.
std::optional<std::pair<int, int>> nilpotent_square_signature(const MatAlgebra& b);

// Isomorphism invariants of G = B semidirect K^n that are computable
// whether or not the classification label applies.
struct InvariantBundle {
    int total_dim = 0;        // dim B + n
    int derived_dim = 0;      // dimension of [G, G]
    int derivation_dim = 0;   // dim Der(G), direct route
    int freedom = 0;          // freedom degree of the B basis as a system
    std::optional<ClassLabel> label; // present when B has a cyclic
                                     // nonderogatory generator
    std::optional<std::pair<int, int>> square_signature; // see above
    bool operator==(const InvariantBundle&) const = default;
};

InvariantBundle invariant_bundle(const MatAlgebra& b);

} // namespace fla
