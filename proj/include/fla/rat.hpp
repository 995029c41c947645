// rat.hpp
// Exact rational scalars. Rat is GMP's canonical rational type: always
// reduced, positive denominator, arithmetic exact with no rounding anywhere.
// This header adds the parsing/printing conventions used across the project
// and a small deterministic sampler for seeded fallbacks and property tests.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fla {

using Rat = mpq_class;
using Int = mpz_class;

// Convenience constructor; rat(3, 6) == 1/2.
Rat rat(long num, long den = 1);

// Accepts an optional leading minus, digits, and an optional "/digits" part
// with a positive denominator, e.g. "-7", "3/4". Anything else throws
// InputError. This is the wire format of the CLI.
Rat rat_parse(const std::string& s);

// Inverse of rat_parse: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

inline int rat_sign(const Rat& r) { return sgn(r); }

// Deterministic source of small test scalars. mt19937_64 raw output is fixed
// by the C++ standard, so seeded runs reproduce byte-for-byte on any platform
// (standard distributions do not guarantee that, hence the modulo mapping).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    // Uniform-ish integer in [lo, hi], both ends included.
    long next_long(long lo, long hi);

    // Rational with numerator in [-num_bound, num_bound] and denominator
    // in [1, den_bound].
    Rat next_rat(long num_bound = 9, long den_bound = 4);

    // Nonzero variant of next_rat.
    Rat next_rat_nonzero(long num_bound = 9, long den_bound = 4);

    std::vector<Rat> next_rats(std::size_t count, long num_bound = 9, long den_bound = 4);

private:
    std::mt19937_64 eng_;
};

} // namespace fla
