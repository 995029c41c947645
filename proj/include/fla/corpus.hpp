// corpus.hpp
// Named example families: commuting matrix systems and the Lie algebras they
// generate, with the exact printed bases in their source ordering. Every
// populated expectation field is recomputed from scratch by the test suite,
// so the records double as frozen regression oracles.
#pragma once

#include "fla/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fla {

// Stated facts about an entry. Absent fields are simply not asserted for the
// family; present ones are re-derived in CI.
struct CorpusExpected {
    std::optional<int> closure_dim;       // dim of the unital closure of `generators`
    std::optional<std::string> label;     // canonical direct-sum label, when one applies
    std::optional<int> derivation_dim;    // dim Der(B semidirect K^n)
    std::optional<Vec> frobenius_witness; // fiber covector with an open orbit
    std::optional<bool> masa;
    std::optional<bool> open_orbit;       // some covector has an open orbit
    std::optional<bool> frobenius;        // the semidirect sum admits a Frobenius functional
    std::optional<int> freedom;           // freedom degree of the printed basis as a system
};

struct CorpusEntry {
    std::string name;
    std::vector<int> params;
    std::vector<Mat> generators; // the printed generating system (identity omitted)
    MatAlgebra algebra;          // unital algebra with the printed basis order
    CorpusExpected expected;
};

// Families and their parameters:
//   gerstenhaber4        {E13, E14, E23, E24} in gl(4); closure dim 5 exceeds n
//   B31                  {E12, E13} in gl(3)
//   B42                  basis {I, E12+E23, E13, E14} in gl(4)
//   Bnp [n, p]           basis M^0..M^p then E_{1,p+2}..E_{1,n} for the
//                        p-step shift M; n >= 2, 1 <= p <= n-1
//   D0 [n]               K[M0] for the principal nilpotent shift M0; n >= 1
//   D01 [n]              K[Ms+Mn], plane rotations plus second superdiagonal;
//                        even n >= 2 (n = 2 is the complex-line algebra)
//   affR                 K[I] in gl(1)
//   affC                 K[E21-E12] in gl(2)
//   Bnn [n]              I, E_{1,j}+E_{j,n} (j=2..n-1), E_{1,n}; n >= 3
//   BnnPrime [n]         I, E_{1,j}+E_{n-j+1,n} (j=2..n, so the last basis
//                        element is 2 E_{1,n}); n >= 3
//   Ln [n]               I, E_{1,n}, ..., E_{n-1,n}; n >= 3 (MASA without
//                        open orbit)
//   circperm [n]         K[cyclic permutation of the canonical basis]; n >= 2
//   winternitz [i]       the six maximal Abelian families in gl(3), i = 1..6
//   cartan_form [n, k]   k plane-rotation blocks plus a diagonal tail,
//                        0 <= 2k <= n
// Unknown names and out-of-range parameters raise InputError.
CorpusEntry corpus_build(const std::string& name, const std::vector<int>& params = {});

std::vector<std::string> corpus_names();

} // namespace fla
