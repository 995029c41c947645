// test_matrix.cpp
// Exact linear algebra: elimination, kernels, determinants, characteristic
// and minimal polynomials. Where a value could not be asserted structurally,
// it was computed by hand and frozen (Hilbert determinant, Vandermonde,
// companion matrices).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fla/error.hpp"
#include "fla/mat.hpp"

using namespace fla;

static Poly P(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return Poly(c);
}

static Mat M(std::vector<std::vector<long>> rows) {
    std::vector<Vec> r;
    for (auto& row : rows) {
        Vec v;
        for (long x : row) v.emplace_back(x);
        r.push_back(v);
    }
    return Mat::from_rows(r);
}

// Companion matrix of a monic polynomial; its characteristic polynomial is
// the polynomial itself, which makes it an independent oracle for char_poly.
static Mat companion(const Poly& p) {
    int n = p.degree();
    Mat c(n, n);
    for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(i);
    return c;
}

TEST_CASE("matrix arithmetic") {
    Mat e13 = Mat::unit(4, 0, 2), e34 = Mat::unit(4, 2, 3);
    CHECK(e13 * e34 == Mat::unit(4, 0, 3));
    CHECK((e34 * e13).is_zero());
    CHECK(commutator(e13, e34) == Mat::unit(4, 0, 3));
    CHECK(commutator(e34, e13) == -Mat::unit(4, 0, 3));

    Mat a = M({{1, 2}, {3, 4}});
    CHECK(a + a == a.scaled(rat(2)));
    CHECK((a - a).is_zero());
    CHECK(a.transpose() == M({{1, 3}, {2, 4}}));
    CHECK(a.trace() == 5);
    CHECK(a.pow(0) == Mat::identity(2));
    CHECK(a.pow(2) == a * a);
    CHECK(Mat::from_vec(2, 2, a.vectorized()) == a);
    CHECK(a.mul_vec({rat(1), rat(1)}) == Vec{rat(3), rat(7)});
    CHECK(a.mul_vec_left({rat(1), rat(1)}) == Vec{rat(4), rat(6)});
}

TEST_CASE("determinants") {
    CHECK(det(M({{2, 1}, {1, 1}})) == 1);
    CHECK(det(M({{1, 2}, {2, 4}})) == 0);
    // Vandermonde on 1,2,3: (2-1)(3-1)(3-2) = 2.
    CHECK(det(M({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}})) == 2);
    // 3x3 Hilbert matrix determinant, known closed value 1/2160.
    Mat h(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i, j) = rat(1, i + j + 1);
    CHECK(det(h) == rat(1, 2160));
    CHECK(det(Mat::identity(5)) == 1);
    CHECK(det(M({{0, 1}, {1, 0}})) == -1);
    CHECK_THROWS_AS(det(Mat(2, 3)), InputError);
}

TEST_CASE("rank and kernel") {
    Mat a = M({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    CHECK(rank(a) == 2);
    auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    CHECK(vec_is_zero(a.mul_vec(k[0])));
    // Kernel vectors are integer-primitive with positive leading entry.
    CHECK(k[0] == Vec{rat(1), rat(-2), rat(1)});

    Mat b = M({{1, 2}, {3, 4}});
    CHECK(rank(b) == 2);
    CHECK(kernel_basis(b).empty());

    Mat z(3, 4);
    CHECK(rank(z) == 0);
    CHECK(kernel_basis(z).size() == 4);

    // rank + kernel dimension = column count.
    for (const Mat& m : {a, b, M({{1, 1, 1, 1}, {1, 1, 1, 1}})})
        CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == m.cols());
}

TEST_CASE("rref is canonical") {
    std::vector<Vec> rows1 = {{rat(2), rat(4), rat(6)}, {rat(1), rat(1), rat(1)}};
    std::vector<Vec> rows2 = {{rat(1), rat(1), rat(1)}, {rat(3), rat(5), rat(7)}};
    Rref a = rref_rows(rows1, 3), b = rref_rows(rows2, 3);
    CHECK(a.rows == b.rows); // same span, same canonical form
    CHECK(a.pivots == b.pivots);
    CHECK(a.rank() == 2);

    Rref c = rref_rows({{rat(0), rat(0)}}, 2);
    CHECK(c.rows.empty());
    CHECK(c.rank() == 0);
}

TEST_CASE("solve and inverse") {
    Mat a = M({{1, 2}, {3, 4}});
    auto x = solve(a, {rat(5), rat(11)});
    REQUIRE(x.has_value());
    CHECK(a.mul_vec(*x) == Vec{rat(5), rat(11)});

    Mat sing = M({{1, 1}, {2, 2}});
    CHECK_FALSE(solve(sing, {rat(0), rat(1)}).has_value());
    auto under = solve(sing, {rat(1), rat(2)});
    REQUIRE(under.has_value());
    CHECK(sing.mul_vec(*under) == Vec{rat(1), rat(2)});

    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(*inv * a == Mat::identity(2));
    CHECK(a * *inv == Mat::identity(2));
    CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("characteristic polynomial") {
    // diag(1,2,3): (X-1)(X-2)(X-3) = X^3 - 6X^2 + 11X - 6, expanded by hand.
    CHECK(char_poly(Mat::diagonal({rat(1), rat(2), rat(3)})) == P({-6, 11, -6, 1}));

    // Companion oracle: char poly of companion(p) is p.
    for (Poly p : {P({-7, 5, -2, 1}), P({1, 0, 0, 0, 1}), P({0, 1, 1})})
        CHECK(char_poly(companion(p)) == p);

    // Cayley-Hamilton on assorted fixed matrices.
    for (const Mat& m :
         {M({{1, 2}, {3, 4}}), M({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
          M({{2, 0, 0}, {1, 2, 0}, {0, 0, 5}})})
        CHECK(poly_at(char_poly(m), m).is_zero());

    CHECK(char_poly(Mat(0, 0)) == P({1}));
}

TEST_CASE("minimal polynomial") {
    CHECK(min_poly(Mat::identity(3)) == P({-1, 1}));
    CHECK(min_poly(Mat::diagonal({rat(1), rat(1), rat(2)})) == P({2, -3, 1}));
    Mat j3 = M({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(min_poly(j3) == P({0, 0, 0, 1}));
    CHECK(min_poly(j3).is_monic());

    // The minimal polynomial divides the characteristic polynomial.
    for (const Mat& m :
         {Mat::diagonal({rat(1), rat(1), rat(2)}), j3, M({{1, 2}, {3, 4}}),
          Mat::unit(3, 0, 2)})
        CHECK(Poly::divrem(char_poly(m), min_poly(m)).second.is_zero());

    CHECK(min_poly(Mat(0, 0)) == P({1}));
}

TEST_CASE("nonderogatory detection") {
    CHECK(is_nonderogatory(companion(P({-7, 5, -2, 1}))));
    CHECK(is_nonderogatory(M({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
    CHECK(is_nonderogatory(Mat::diagonal({rat(1), rat(2), rat(3)})));
    CHECK_FALSE(is_nonderogatory(Mat::identity(2)));
    CHECK_FALSE(is_nonderogatory(Mat::diagonal({rat(1), rat(1), rat(2)})));
}

TEST_CASE("polynomial evaluation at a matrix") {
    Mat a = M({{1, 1}, {0, 1}});
    Poly p = P({2, -1, 3}); // 3X^2 - X + 2
    Mat direct = a.pow(2).scaled(rat(3)) - a + Mat::identity(2).scaled(rat(2));
    CHECK(poly_at(p, a) == direct);
    CHECK(poly_at(Poly(), a).is_zero());
}
