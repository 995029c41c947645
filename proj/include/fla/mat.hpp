// mat.hpp
// Dense exact matrices over Rat. Elimination is fraction-free (Bareiss) with
// first-nonzero pivoting in column order, so every returned basis is
// deterministic; kernel vectors are cleared to integer-primitive form.
// Characteristic polynomials come from the Faddeev-LeVerrier recursion and
// minimal polynomials from the first linear dependence among vectorised
// powers I, M, M^2, ...
#pragma once

#include "fla/poly.hpp"
#include "fla/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fla {

using Vec = std::vector<Rat>;

Vec vec_zero(int n);
bool vec_is_zero(const Vec& v);
void vec_axpy(Vec& y, const Rat& a, const Vec& x); // y += a*x
Rat dot(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n);
    // Single-entry matrix with a 1 in row i, column j (0-based).
    static Mat unit(int n, int i, int j);
    static Mat diagonal(const Vec& d);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_vec(int rows, int cols, const Vec& v); // row-major inverse of vectorised()

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Rat& s) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Mat transpose() const;
    Mat pow(int k) const; // k >= 0, square
    Rat trace() const;
    bool is_zero() const;

    Vec mul_vec(const Vec& x) const;      // matrix * column vector
    Vec mul_vec_left(const Vec& x) const; // row vector * matrix

    Vec vectorized() const { return e_; } // row-major
    std::string str() const;              // [[a,b],[c,d]] with exact entries

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

Mat commutator(const Mat& a, const Mat& b); // ab - ba

// Fraction-free row echelon form. Rows are pre-scaled to integers (recorded
// in scale_product for determinant recovery); pivots are the first nonzero
// entry per column, scanning columns left to right.
struct EchelonForm {
    Mat e;
    std::vector<int> pivot_cols;
    int swap_sign = 1;
    Rat scale_product = Rat(1);
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};
EchelonForm ff_echelon(const Mat& a);

int rank(const Mat& a);
Rat det(const Mat& a);

// Basis of the right null space; each vector integer-primitive with positive
// first nonzero entry, ordered by free column. Empty when the kernel is 0.
std::vector<Vec> kernel_basis(const Mat& a);

// Reduced row echelon data for a list of row vectors; rows holds the
// canonical nonzero rows. Two spans are equal iff their Rref rows are equal.
struct Rref {
    std::vector<Vec> rows;
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
};
Rref rref_rows(const std::vector<Vec>& rows, int width);

// One solution of A x = b with free variables set to zero, or nullopt when
// the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

std::optional<Mat> inverse(const Mat& a);

// Monic characteristic polynomial det(X I - M) via Faddeev-LeVerrier.
Poly char_poly(const Mat& m);

// Monic minimal polynomial via the first linear dependence among the
// vectorised powers of M.
Poly min_poly(const Mat& m);

// True iff the characteristic and minimal polynomials coincide.
bool is_nonderogatory(const Mat& m);

Mat poly_at(const Poly& p, const Mat& m); // p(M)

} // namespace fla
