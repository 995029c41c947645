// mpoly.hpp
// Sparse multivariate polynomials with a graded lexicographic term order,
// plus the symbolic determinant behind the open-orbit and Frobenius-
// functional decisions and an exact nonzero-point extractor.
#pragma once

#include "fla/rat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fla {

// Graded lex: lower total degree first, ties broken lexicographically.
struct GradedLexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

class MPoly {
public:
    using Exps = std::vector<unsigned>;
    using Terms = std::map<Exps, Rat, GradedLexLess>;

    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int index, const Rat& coeff = Rat(1));

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial
    int degree_in(int var) const;
    const Terms& terms() const { return terms_; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& s) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rat eval(const std::vector<Rat>& point) const;

    // Substitute one variable by a value; the result keeps the same variable
    // count with exponent zero in that slot.
    MPoly substituted(int var, const Rat& value) const;

    // Terms rendered in graded lex order, variables named s1..sk.
    std::string str() const;

    void add_term(const Exps& e, const Rat& c); // builder; drops zeros

private:
    int nvars_;
    Terms terms_; // invariant: no zero coefficients stored
};

// Exact symbolic determinant by cofactor expansion with subset memoisation.
// Intended for matrices of affine entries (total degree <= 1); dimension
// above budget_dim throws BudgetExceeded so callers can switch to seeded
// sampling instead.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m, int budget_dim = 8);

// A point where the polynomial does not vanish, found variable by variable
// over the integers 0..deg. Exact and deterministic; nullopt only for the
// zero polynomial.
std::optional<std::vector<Rat>> mpoly_find_nonzero_point(const MPoly& p);

} // namespace fla
