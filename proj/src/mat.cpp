// mat.cpp
#include "fla/mat.hpp"

#include "fla/error.hpp"

#include <sstream>

namespace fla {

Vec vec_zero(int n) { return Vec(static_cast<std::size_t>(n), Rat(0)); }

bool vec_is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

void vec_axpy(Vec& y, const Rat& a, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Rat dot(const Vec& a, const Vec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(v[i]);
    }
    os << ")";
    return os.str();
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::unit(int n, int i, int j) {
    Mat m(n, n);
    m.at(i, j) = 1;
    return m;
}

Mat Mat::diagonal(const Vec& d) {
    int n = static_cast<int>(d.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Mat Mat::from_vec(int rows, int cols, const Vec& v) {
    Mat m(rows, cols);
    m.e_ = v;
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    Mat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Mat Mat::scaled(const Rat& s) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::pow(int k) const {
    Mat r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rat Mat::trace() const {
    Rat s(0);
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

bool Mat::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

Vec Mat::mul_vec(const Vec& x) const {
    Vec y = vec_zero(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

Vec Mat::mul_vec_left(const Vec& x) const {
    Vec y = vec_zero(cols_);
    for (int i = 0; i < rows_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < cols_; ++j) y[j] += x[i] * at(i, j);
    }
    return y;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << rat_str(at(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

EchelonForm ff_echelon(const Mat& a) {
    EchelonForm f;
    f.e = a;
    int rows = a.rows(), cols = a.cols();

    // Clear denominators row by row so the Bareiss divisions stay integral.
    for (int i = 0; i < rows; ++i) {
        Int l(1);
        for (int j = 0; j < cols; ++j) l = lcm(l, f.e.at(i, j).get_den());
        if (l != 1) {
            Rat s(l);
            for (int j = 0; j < cols; ++j) f.e.at(i, j) *= s;
            f.scale_product *= s;
        }
    }

    int r = 0;
    Rat prev(1);
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (f.e.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < cols; ++j) swap(f.e.at(p, j), f.e.at(r, j));
            f.swap_sign = -f.swap_sign;
        }
        const Rat piv = f.e.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            const Rat m = f.e.at(i, c);
            for (int j = c + 1; j < cols; ++j)
                f.e.at(i, j) = (piv * f.e.at(i, j) - m * f.e.at(r, j)) / prev;
            f.e.at(i, c) = 0;
        }
        prev = piv;
        f.pivot_cols.push_back(c);
        ++r;
    }
    return f;
}

int rank(const Mat& a) { return ff_echelon(a).rank(); }

Rat det(const Mat& a) {
    if (!a.square()) throw InputError("det: matrix is not square");
    if (a.rows() == 0) return Rat(1);
    EchelonForm f = ff_echelon(a);
    if (f.rank() < a.rows()) return Rat(0);
    // With full rank the last Bareiss pivot is the determinant of the
    // integer-scaled matrix.
    Rat d = f.e.at(a.rows() - 1, f.pivot_cols.back());
    if (f.swap_sign < 0) d = -d;
    return d / f.scale_product;
}

namespace {

// Rescale to integer entries with content 1 and positive first nonzero entry.
void primitivize(Vec& v) {
    Int l(1);
    for (const Rat& x : v) l = lcm(l, x.get_den());
    Int g(0);
    for (Rat& x : v) {
        x *= Rat(l);
        g = gcd(g, x.get_num());
    }
    if (g == 0) return;
    int lead = 0;
    for (const Rat& x : v) {
        if (x != 0) {
            lead = sgn(x);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (Rat& x : v) x /= Rat(g);
}

} // namespace

std::vector<Vec> kernel_basis(const Mat& a) {
    EchelonForm f = ff_echelon(a);
    int cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : f.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v = vec_zero(cols);
        v[fc] = 1;
        for (int i = f.rank() - 1; i >= 0; --i) {
            int c = f.pivot_cols[i];
            Rat s(0);
            for (int j = c + 1; j < cols; ++j)
                if (v[j] != 0) s += f.e.at(i, j) * v[j];
            v[c] = -s / f.e.at(i, c);
        }
        primitivize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rref rref_rows(const std::vector<Vec>& rows, int width) {
    std::vector<Vec> w = rows;
    Rref out;
    std::size_t r = 0;
    for (int c = 0; c < width && r < w.size(); ++c) {
        std::size_t p = r;
        while (p < w.size() && w[p][c] == 0) ++p;
        if (p == w.size()) continue;
        std::swap(w[p], w[r]);
        const Rat piv = w[r][c];
        for (int j = c; j < width; ++j) w[r][j] /= piv;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == r || w[i][c] == 0) continue;
            const Rat m = w[i][c];
            for (int j = c; j < width; ++j) w[i][j] -= m * w[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    w.resize(r);
    out.rows = std::move(w);
    return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    int n = a.cols();
    std::vector<Vec> aug;
    aug.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Vec row(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n; ++j) row[j] = a.at(i, j);
        row[n] = b[i];
        aug.push_back(std::move(row));
    }
    Rref f = rref_rows(aug, n + 1);
    if (!f.pivots.empty() && f.pivots.back() == n) return std::nullopt;
    Vec x = vec_zero(n);
    for (std::size_t i = 0; i < f.pivots.size(); ++i) x[f.pivots[i]] = f.rows[i][n];
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    if (!a.square()) throw InputError("inverse: matrix is not square");
    int n = a.rows();
    std::vector<Vec> aug;
    for (int i = 0; i < n; ++i) {
        Vec row(static_cast<std::size_t>(2) * n, Rat(0));
        for (int j = 0; j < n; ++j) row[j] = a.at(i, j);
        row[static_cast<std::size_t>(n) + i] = 1;
        aug.push_back(std::move(row));
    }
    Rref f = rref_rows(aug, 2 * n);
    if (f.rank() != n || f.pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = f.rows[i][static_cast<std::size_t>(n) + j];
    return inv;
}

Poly char_poly(const Mat& m) {
    if (!m.square()) throw InputError("char_poly: matrix is not square");
    int n = m.rows();
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    c[n] = 1;
    Mat acc = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        Mat mn = m * acc;
        Rat ck = -mn.trace() / k;
        c[n - k] = ck;
        acc = mn + Mat::identity(n).scaled(ck);
    }
    return Poly(c);
}

Poly min_poly(const Mat& m) {
    if (!m.square()) throw InputError("min_poly: matrix is not square");
    int n = m.rows();
    int nn = n * n;
    int tail = n + 1; // a dependence appears at degree <= n

    // Reduced rows [vec(M^j) | e_j]; pivots live in the first nn columns.
    std::vector<Vec> reduced;
    std::vector<int> pivots;

    Mat power = Mat::identity(n);
    for (int d = 0; d <= n; ++d) {
        Vec row(static_cast<std::size_t>(nn + tail), Rat(0));
        Vec v = power.vectorized();
        for (int j = 0; j < nn; ++j) row[j] = v[j];
        row[static_cast<std::size_t>(nn) + d] = 1;

        for (std::size_t i = 0; i < reduced.size(); ++i) {
            const Rat& x = row[pivots[i]];
            if (x == 0) continue;
            const Rat f = x;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * reduced[i][j];
        }
        int p = -1;
        for (int j = 0; j < nn; ++j)
            if (row[j] != 0) {
                p = j;
                break;
            }
        if (p < 0) {
            std::vector<Rat> coeffs(row.begin() + nn, row.begin() + nn + d + 1);
            return Poly(coeffs).monic();
        }
        const Rat piv = row[p];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] /= piv;
        reduced.push_back(std::move(row));
        pivots.push_back(p);
        power = power * m;
    }
    throw InputError("min_poly: no dependence found (unreachable)");
}

bool is_nonderogatory(const Mat& m) { return min_poly(m) == char_poly(m); }

Mat poly_at(const Poly& p, const Mat& m) {
    int n = m.rows();
    Mat r(n, n);
    for (int d = p.degree(); d >= 0; --d) {
        r = r * m;
        r = r + Mat::identity(n).scaled(p.coeff(d));
    }
    return r;
}

} // namespace fla
