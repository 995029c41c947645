// poly.hpp
// Dense univariate polynomials over Rat, with the three exact decision tools
// the classification rests on: monic gcd, Yun squarefree decomposition, and
// Sturm real-root counting. No numeric root-finding anywhere.
#pragma once

#include "fla/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fla {

class Poly {
public:
    Poly() = default; // the zero polynomial
    explicit Poly(const Rat& constant);
    explicit Poly(std::vector<Rat> ascending_coeffs); // trailing zeros trimmed

    // coeff * X^power
    static Poly x_power(int power, const Rat& coeff = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 if zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of X^i; zero outside the stored range.
    const Rat& coeff(int i) const;
    const Rat& leading() const; // requires nonzero
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;

    // Exact euclidean division: a = q*b + r with deg r < deg b. b nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

    Poly monic() const; // zero stays zero
    bool is_monic() const { return !is_zero() && leading() == 1; }

    // Positive-rational rescaling to integer coefficients with content 1.
    // Preserves the sign of every coefficient, which is what Sturm needs.
    Poly primitive_integer() const;

    std::string str(const std::string& var = "X") const;

private:
    void trim();
    std::vector<Rat> c_; // ascending; invariant: empty or c_.back() != 0
};

// Monic gcd; divides both inputs and any common divisor divides it.
// Convention: poly_gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// Yun's algorithm: p = c * prod g_e^e with each g_e monic squarefree and the
// g_e pairwise coprime. Returns the (g_e, e) pairs with deg g_e >= 1 in
// increasing multiplicity order; the constant c is leading(p) since all g_e
// are monic. Rejects the zero polynomial.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p);

// Number of distinct real roots of a squarefree nonzero polynomial, by a
// Sturm chain evaluated at -infinity and +infinity through leading-coefficient
// signs. Rejects non-squarefree input; callers decompose first.
int sturm_real_root_count(const Poly& p);

} // namespace fla
