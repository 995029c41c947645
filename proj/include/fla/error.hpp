// error.hpp
// Error taxonomy shared across the library. Three situations are kept apart
// because the CLI maps them to different exit codes: malformed input data,
// preconditions a theorem or operation does not cover, and internal budget
// signals that callers are expected to catch and route to a sampling fallback.
#pragma once

#include <stdexcept>
#include <string>

namespace fla {

// Bad data: unparseable files, non-square matrices, unknown family names.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Valid data outside an operation's hypotheses (derogatory matrix passed to
// the nonderogatory classification, dimension mismatch for the orbit test).
struct Inapplicable : std::runtime_error {
    explicit Inapplicable(const std::string& what) : std::runtime_error(what) {}
};

// The exact symbolic path was asked to exceed its cofactor-expansion budget.
// Catchers fall back to seeded sampling and flag the verdict as probabilistic.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fla
