// familyfile.hpp
// Exact-rational JSON interchange for matrix families. The wire format is a
// UTF-8 JSON object with keys `n` (ambient size), `generators` (list of n×n
// matrices as row arrays), optional `basis`, and optional `alpha` (covector
// of length n). Scalars are JSON integers or strings "p" / "p/q". Parsing is
// strict: unknown keys, floating-point numbers, shape mismatches, and
// malformed rationals are all InputError with the offending path; emission
// is canonical, so equal files serialize byte-identically.
#pragma once

#include "fla/algebra.hpp"
#include "fla/mat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fla {

struct FamilyFile {
    int n = 0;
    std::vector<Mat> generators;
    std::optional<std::vector<Mat>> basis;
    std::optional<Vec> alpha;
};

// Parse the JSON text. Shape errors carry the JSON path; syntax errors keep
// the parser's line/column context.
FamilyFile familyfile_parse(const std::string& text);

// Canonical serialization: fixed key order, two-space indent, integers when
// the denominator is 1 and the value fits, "p/q" strings otherwise.
std::string familyfile_emit(const FamilyFile& f);

// The algebra a file denotes: MatAlgebra(n, basis) when a basis is given
// (verified by the constructor), otherwise the closure of the generators.
// When both are present the basis must span that closure (InputError
// otherwise, since commands would disagree about which algebra to use).
MatAlgebra familyfile_algebra(const FamilyFile& f);

} // namespace fla
