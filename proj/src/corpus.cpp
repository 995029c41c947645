// Builders for the named example families. Bases follow the printed source
// ordering of each family so that bracket tables can be compared index by
// index; expectation records hold only stated facts, and the test suite
// recomputes every populated field from scratch.
#include "fla/corpus.hpp"

#include "fla/error.hpp"

#include <utility>

namespace fla {

namespace {

Mat E(int n, int i, int j) { return Mat::unit(n, i - 1, j - 1); } // 1-based

// Principal nilpotent shift: e_i <- e_{i+1}.
Mat shift_mat(int n) {
    Mat m(n, n);
    for (int l = 1; l < n; ++l) m.at(l - 1, l) = 1;
    return m;
}

// Plane rotations on consecutive pairs plus the second superdiagonal.
Mat rotation_shift_mat(int n) {
    Mat m(n, n);
    for (int j = 0; 2 * j + 2 <= n; ++j) {
        m.at(2 * j + 1, 2 * j) = 1;
        m.at(2 * j, 2 * j + 1) = -1;
    }
    for (int j = 1; j <= n - 2; ++j) m.at(j - 1, j + 1) = 1;
    return m;
}

// Cyclic permutation of the canonical basis vectors.
Mat circ_mat(int n) {
    Mat m = E(n, 1, n);
    for (int i = 1; i <= n - 1; ++i) m = m + E(n, i + 1, i);
    return m;
}

Vec first_covector(int n) {
    Vec v = vec_zero(n);
    v[0] = 1;
    return v;
}

std::vector<Mat> power_basis(const Mat& m, int count) {
    std::vector<Mat> basis;
    Mat p = Mat::identity(m.rows());
    for (int j = 0; j < count; ++j) {
        basis.push_back(p);
        p = p * m;
    }
    return basis;
}

std::string direct_sum_label(int real_lines, int complex_lines) {
    std::string out;
    for (int i = 0; i < real_lines; ++i) out += (out.empty() ? "" : " + ") + std::string("aff(R)");
    for (int i = 0; i < complex_lines; ++i)
        out += (out.empty() ? "" : " + ") + std::string("aff(C)");
    return out;
}

void need_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
    if (params.size() != count)
        throw InputError("corpus: " + name + " takes " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
}

CorpusEntry make_gerstenhaber4() {
    const std::vector<Mat> gens{E(4, 1, 3), E(4, 1, 4), E(4, 2, 3), E(4, 2, 4)};
    CorpusExpected exp;
    exp.closure_dim = 5;
    return {"gerstenhaber4", {}, gens, closure(4, gens), std::move(exp)};
}

CorpusEntry make_b31() {
    const std::vector<Mat> gens{E(3, 1, 2), E(3, 1, 3)};
    CorpusExpected exp;
    exp.closure_dim = 3;
    exp.frobenius_witness = first_covector(3);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = 2;
    return {"B31", {}, gens, closure(3, gens), std::move(exp)};
}

CorpusEntry make_b42() {
    const Mat m1 = E(4, 1, 2) + E(4, 2, 3);
    const Mat m2 = E(4, 1, 4);
    CorpusExpected exp;
    exp.closure_dim = 4;
    exp.frobenius_witness = first_covector(4);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = 2;
    return {"B42",
            {},
            {m1, m2},
            MatAlgebra(4, {Mat::identity(4), m1, E(4, 1, 3), m2}),
            std::move(exp)};
}

CorpusEntry make_bnp(int n, int p) {
    if (n < 2 || p < 1 || p > n - 1)
        throw InputError("corpus: Bnp needs n >= 2 and 1 <= p <= n-1");
    Mat m(n, n);
    for (int l = 1; l <= p; ++l) m.at(l - 1, l) = 1;
    std::vector<Mat> basis = power_basis(m, p + 1);
    std::vector<Mat> gens{m};
    for (int j = p + 2; j <= n; ++j) {
        basis.push_back(E(n, 1, j));
        gens.push_back(E(n, 1, j));
    }
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.frobenius_witness = first_covector(n);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = n - p;
    if (p == n - 1) {
        exp.label = "D0^" + std::to_string(n);
        exp.derivation_dim = 3 * n - 1;
    }
    return {"Bnp", {n, p}, std::move(gens), MatAlgebra(n, std::move(basis)), std::move(exp)};
}

CorpusEntry make_d0(int n) {
    if (n < 1) throw InputError("corpus: D0 needs n >= 1");
    const Mat m = shift_mat(n);
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.label = n == 1 ? "aff(R)" : "D0^" + std::to_string(n);
    exp.derivation_dim = 3 * n - 1;
    exp.frobenius_witness = first_covector(n);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = n == 1 ? 0 : 1;
    return {"D0", {n}, {m}, MatAlgebra(n, power_basis(m, n)), std::move(exp)};
}

CorpusEntry make_d01(int n) {
    if (n < 2 || n % 2 != 0) throw InputError("corpus: D01 needs even n >= 2");
    const Mat m = rotation_shift_mat(n);
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.label = n == 2 ? "aff(C)" : "D01(" + std::to_string(n / 2) + ")";
    if (n == 2) exp.derivation_dim = 4;  // squarefree characteristic polynomial: all inner
    if (n == 4) exp.derivation_dim = 10; // normalizer dimension 6 plus the fiber
    exp.frobenius_witness = first_covector(n);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = 1;
    return {"D01", {n}, {m}, MatAlgebra(n, power_basis(m, n)), std::move(exp)};
}

CorpusEntry make_affr() {
    CorpusExpected exp;
    exp.closure_dim = 1;
    exp.label = "aff(R)";
    exp.derivation_dim = 2;
    exp.frobenius_witness = first_covector(1);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = 0;
    return {"affR", {}, {}, MatAlgebra(1, {Mat::identity(1)}), std::move(exp)};
}

CorpusEntry make_affc() {
    const Mat m = E(2, 2, 1) - E(2, 1, 2);
    CorpusExpected exp;
    exp.closure_dim = 2;
    exp.label = "aff(C)";
    exp.derivation_dim = 4;
    exp.frobenius_witness = first_covector(2);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = 1;
    return {"affC", {}, {m}, MatAlgebra(2, {Mat::identity(2), m}), std::move(exp)};
}

CorpusEntry make_bnn(int n) {
    if (n < 3) throw InputError("corpus: Bnn needs n >= 3");
    std::vector<Mat> basis{Mat::identity(n)};
    for (int j = 2; j <= n - 1; ++j) basis.push_back(E(n, 1, j) + E(n, j, n));
    basis.push_back(E(n, 1, n));
    std::vector<Mat> gens(basis.begin() + 1, basis.end());
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.frobenius_witness = first_covector(n);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    if (n == 3) { // coincides with the polynomial algebra of the 3x3 shift
        exp.label = "D0^3";
        exp.derivation_dim = 8;
        exp.freedom = 1;
    }
    return {"Bnn", {n}, std::move(gens), MatAlgebra(n, std::move(basis)), std::move(exp)};
}

CorpusEntry make_bnn_prime(int n) {
    if (n < 3) throw InputError("corpus: BnnPrime needs n >= 3");
    std::vector<Mat> basis{Mat::identity(n)};
    for (int j = 2; j <= n; ++j) basis.push_back(E(n, 1, j) + E(n, n - j + 1, n));
    std::vector<Mat> gens(basis.begin() + 1, basis.end());
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.frobenius_witness = first_covector(n);
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    if (n == 3) {
        exp.label = "D0^3";
        exp.derivation_dim = 8;
        exp.freedom = 1;
    }
    return {"BnnPrime", {n}, std::move(gens), MatAlgebra(n, std::move(basis)), std::move(exp)};
}

CorpusEntry make_ln(int n) {
    if (n < 3) throw InputError("corpus: Ln needs n >= 3");
    std::vector<Mat> basis{Mat::identity(n)};
    for (int i = 1; i <= n - 1; ++i) basis.push_back(E(n, i, n));
    std::vector<Mat> gens(basis.begin() + 1, basis.end());
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.masa = true;
    exp.open_orbit = false;
    exp.frobenius = false;
    return {"Ln", {n}, std::move(gens), MatAlgebra(n, std::move(basis)), std::move(exp)};
}

CorpusEntry make_circperm(int n) {
    if (n < 2) throw InputError("corpus: circperm needs n >= 2");
    const Mat m = circ_mat(n);
    const int real_roots = n % 2 == 0 ? 2 : 1; // real n-th roots of unity
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.label = direct_sum_label(real_roots, (n - real_roots) / 2);
    exp.derivation_dim = 2 * n; // distinct eigenvalues: all derivations inner
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    exp.freedom = 1;
    return {"circperm", {n}, {m}, MatAlgebra(n, power_basis(m, n)), std::move(exp)};
}

CorpusEntry make_winternitz(int i) {
    const Mat id = Mat::identity(3);
    const Mat a = E(3, 1, 1) + E(3, 2, 2) - E(3, 3, 3).scaled(2);
    std::vector<Mat> basis;
    CorpusExpected exp;
    exp.closure_dim = 3;
    exp.masa = true;
    switch (i) {
    case 1:
        basis = {id, Mat::diagonal({Rat(1), Rat(-1), Rat(0)}),
                 Mat::diagonal({Rat(1), Rat(1), Rat(-2)})};
        exp.label = direct_sum_label(3, 0);
        exp.open_orbit = true;
        exp.frobenius = true;
        break;
    case 2:
        basis = {id, a, E(3, 1, 2) - E(3, 2, 1)};
        exp.label = direct_sum_label(1, 1);
        exp.open_orbit = true;
        exp.frobenius = true;
        break;
    case 3:
        basis = {id, a, E(3, 1, 2)};
        exp.label = "aff(R) + D0^2";
        exp.open_orbit = true;
        exp.frobenius = true;
        break;
    case 4:
        basis = {id, E(3, 1, 3), E(3, 2, 3)};
        exp.open_orbit = false;
        exp.frobenius = false;
        break;
    case 5:
        basis = {id, E(3, 1, 2), E(3, 1, 3)};
        exp.frobenius_witness = first_covector(3);
        exp.open_orbit = true;
        exp.frobenius = true;
        break;
    case 6:
        basis = {id, E(3, 1, 2) + E(3, 2, 3), E(3, 1, 3)};
        exp.label = "D0^3";
        exp.derivation_dim = 8;
        exp.open_orbit = true;
        exp.frobenius = true;
        exp.freedom = 1;
        break;
    default:
        throw InputError("corpus: winternitz index must be 1..6");
    }
    std::vector<Mat> gens(basis.begin() + 1, basis.end());
    return {"winternitz", {i}, std::move(gens), MatAlgebra(3, std::move(basis)), std::move(exp)};
}

CorpusEntry make_cartan_form(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n) throw InputError("corpus: cartan_form needs 0 <= 2k <= n");
    std::vector<Mat> basis;
    for (int j = 1; j <= k; ++j) {
        basis.push_back(E(n, 2 * j - 1, 2 * j - 1) + E(n, 2 * j, 2 * j));
        basis.push_back(E(n, 2 * j, 2 * j - 1) - E(n, 2 * j - 1, 2 * j));
    }
    for (int l = 2 * k + 1; l <= n; ++l) basis.push_back(E(n, l, l));
    CorpusExpected exp;
    exp.closure_dim = n;
    exp.label = direct_sum_label(n - 2 * k, k);
    exp.derivation_dim = 2 * n; // regular element has distinct eigenvalues
    exp.masa = true;
    exp.open_orbit = true;
    exp.frobenius = true;
    std::vector<Mat> gens = basis;
    return {"cartan_form", {n, k}, std::move(gens), MatAlgebra(n, std::move(basis)),
            std::move(exp)};
}

} // namespace

CorpusEntry corpus_build(const std::string& name, const std::vector<int>& params) {
    if (name == "gerstenhaber4") {
        need_params(name, params, 0);
        return make_gerstenhaber4();
    }
    if (name == "B31") {
        need_params(name, params, 0);
        return make_b31();
    }
    if (name == "B42") {
        need_params(name, params, 0);
        return make_b42();
    }
    if (name == "Bnp") {
        need_params(name, params, 2);
        return make_bnp(params[0], params[1]);
    }
    if (name == "D0") {
        need_params(name, params, 1);
        return make_d0(params[0]);
    }
    if (name == "D01") {
        need_params(name, params, 1);
        return make_d01(params[0]);
    }
    if (name == "affR") {
        need_params(name, params, 0);
        return make_affr();
    }
    if (name == "affC") {
        need_params(name, params, 0);
        return make_affc();
    }
    if (name == "Bnn") {
        need_params(name, params, 1);
        return make_bnn(params[0]);
    }
    if (name == "BnnPrime") {
        need_params(name, params, 1);
        return make_bnn_prime(params[0]);
    }
    if (name == "Ln") {
        need_params(name, params, 1);
        return make_ln(params[0]);
    }
    if (name == "circperm") {
        need_params(name, params, 1);
        return make_circperm(params[0]);
    }
    if (name == "winternitz") {
        need_params(name, params, 1);
        return make_winternitz(params[0]);
    }
    if (name == "cartan_form") {
        need_params(name, params, 2);
        return make_cartan_form(params[0], params[1]);
    }
    throw InputError("corpus: unknown family '" + name + "'");
}

std::vector<std::string> corpus_names() {
    return {"gerstenhaber4", "B31",      "B42", "Bnp",      "D0",         "D01",        "affR",
            "affC",          "Bnn",      "BnnPrime",        "Ln",         "circperm",
            "winternitz",    "cartan_form"};
}

} // namespace fla
