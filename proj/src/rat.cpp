// rat.cpp
#include "fla/rat.hpp"

#include "fla/error.hpp"

namespace fla {

Rat rat(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& s) {
    // Shape: -?[0-9]+(/[1-9][0-9]*)?  validated by hand so the error message
    // can quote the offending token.
    auto bad = [&]() -> Rat {
        throw InputError("not a rational: \"" + s + "\" (expected p or p/q, q > 0)");
    };
    if (s.empty()) return bad();
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) return bad();
    std::string num = s.substr(0, i);
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') return bad();
        ++i;
        std::size_t den_begin = i;
        if (i >= s.size() || s[i] < '1' || s[i] > '9') return bad();
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i != s.size()) return bad();
        den = s.substr(den_begin);
    }
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long Sampler::next_long(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
}

Rat Sampler::next_rat(long num_bound, long den_bound) {
    long num = next_long(-num_bound, num_bound);
    long den = next_long(1, den_bound);
    return rat(num, den);
}

Rat Sampler::next_rat_nonzero(long num_bound, long den_bound) {
    for (;;) {
        Rat r = next_rat(num_bound, den_bound);
        if (r != 0) return r;
    }
}

std::vector<Rat> Sampler::next_rats(std::size_t count, long num_bound, long den_bound) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(next_rat(num_bound, den_bound));
    return out;
}

} // namespace fla
