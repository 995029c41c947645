#include "fla/familyfile.hpp"

#include "fla/error.hpp"
#include "fla/rat.hpp"

#include "json.hpp"

#include <utility>

namespace fla {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Ambient sizes beyond this are certainly mistakes for exact dense linear
// algebra; rejecting early beats allocating gigabytes.
constexpr int kMaxAmbient = 64;

Rat parse_scalar(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_number_unsigned()) {
        Int num;
        num = static_cast<unsigned long>(v.get<unsigned long long>());
        return Rat(num);
    }
    if (v.is_string()) {
        try {
            return rat_parse(v.get<std::string>());
        } catch (const InputError& err) {
            throw InputError(path + ": " + err.what());
        }
    }
    if (v.is_number_float())
        throw InputError(path + ": floating-point numbers are not exact; use \"p/q\" strings");
    throw InputError(path + ": expected an integer or a \"p/q\" string");
}

Mat parse_matrix(const json& v, int n, const std::string& path) {
    if (!v.is_array() || static_cast<int>(v.size()) != n)
        throw InputError(path + ": expected " + std::to_string(n) + " rows");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = v[i];
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError(row_path + ": expected " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = parse_scalar(row[j], row_path + "[" + std::to_string(j) + "]");
    }
    return m;
}

std::vector<Mat> parse_matrix_list(const json& v, int n, const std::string& path) {
    if (!v.is_array()) throw InputError(path + ": expected an array of matrices");
    std::vector<Mat> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        out.push_back(parse_matrix(v[k], n, path + "[" + std::to_string(k) + "]"));
    return out;
}

ordered_json emit_scalar(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return ordered_json(static_cast<long long>(r.get_num().get_si()));
    return ordered_json(rat_str(r));
}

ordered_json emit_matrix(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(emit_scalar(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

FamilyFile familyfile_parse(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& err) {
        throw InputError(std::string("family file: ") + err.what());
    }
    if (!root.is_object()) throw InputError("family file: top level must be a JSON object");
    for (const auto& item : root.items()) {
        const std::string& key = item.key();
        if (key != "n" && key != "generators" && key != "basis" && key != "alpha")
            throw InputError("family file: unknown key \"" + key + "\"");
    }
    if (!root.contains("n") || !root["n"].is_number_integer())
        throw InputError("family file: key \"n\" must be an integer");
    const long long n_raw = root["n"].get<long long>();
    if (n_raw < 1 || n_raw > kMaxAmbient)
        throw InputError("family file: n must be between 1 and " + std::to_string(kMaxAmbient));
    FamilyFile f;
    f.n = static_cast<int>(n_raw);
    if (!root.contains("generators"))
        throw InputError("family file: key \"generators\" is required");
    f.generators = parse_matrix_list(root["generators"], f.n, "generators");
    if (root.contains("basis")) f.basis = parse_matrix_list(root["basis"], f.n, "basis");
    if (root.contains("alpha")) {
        const json& a = root["alpha"];
        if (!a.is_array() || static_cast<int>(a.size()) != f.n)
            throw InputError("alpha: expected " + std::to_string(f.n) + " entries");
        Vec alpha = vec_zero(f.n);
        for (int j = 0; j < f.n; ++j)
            alpha[j] = parse_scalar(a[j], "alpha[" + std::to_string(j) + "]");
        f.alpha = std::move(alpha);
    }
    return f;
}

std::string familyfile_emit(const FamilyFile& f) {
    ordered_json root;
    root["n"] = f.n;
    ordered_json gens = ordered_json::array();
    for (const Mat& m : f.generators) gens.push_back(emit_matrix(m));
    root["generators"] = std::move(gens);
    if (f.basis) {
        ordered_json basis = ordered_json::array();
        for (const Mat& m : *f.basis) basis.push_back(emit_matrix(m));
        root["basis"] = std::move(basis);
    }
    if (f.alpha) {
        ordered_json alpha = ordered_json::array();
        for (const Rat& r : *f.alpha) alpha.push_back(emit_scalar(r));
        root["alpha"] = std::move(alpha);
    }
    return root.dump(2) + "\n";
}

MatAlgebra familyfile_algebra(const FamilyFile& f) {
    if (f.basis) {
        MatAlgebra b(f.n, *f.basis);
        if (!f.generators.empty()) {
            const MatAlgebra from_gens = closure(f.n, f.generators);
            if (!(from_gens.span() == b.span()))
                throw InputError(
                    "family file: basis does not span the closure of the generators");
        }
        return b;
    }
    return closure(f.n, f.generators);
}

} // namespace fla
