// mpoly.cpp
#include "fla/mpoly.hpp"

#include "fla/error.hpp"

#include <numeric>

namespace fla {

bool GradedLexLess::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Exps(static_cast<std::size_t>(nvars), 0u), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index, const Rat& coeff) {
    MPoly p(nvars);
    Exps e(static_cast<std::size_t>(nvars), 0u);
    e[static_cast<std::size_t>(index)] = 1u;
    p.add_term(e, coeff);
    return p;
}

void MPoly::add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Graded order: the last term has maximal total degree.
    const Exps& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
    return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exps e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::scaled(const Rat& s) const {
    MPoly out(nvars_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::substituted(int var, const Rat& value) const {
    MPoly out(nvars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (unsigned k = 0; k < e[v]; ++k) t *= value;
        Exps e2(e);
        e2[v] = 0;
        out.add_term(e2, t);
    }
    return out;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Print leading total degrees first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool first = out.empty();
        Rat mag = abs(c);
        if (!first) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "s" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += rat_str(mag);
        } else {
            if (mag != 1) out += rat_str(mag) + "*";
            out += mono;
        }
    }
    return out;
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m, int budget_dim) {
    const int d = static_cast<int>(m.size());
    if (d == 0) throw InputError("symbolic determinant of an empty matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != d) throw InputError("symbolic determinant needs a square matrix");
    if (d > budget_dim)
        throw BudgetExceeded("symbolic determinant dimension " + std::to_string(d) +
                             " exceeds budget " + std::to_string(budget_dim));
    const int nvars = m[0][0].nvars();
    // Expansion along rows with memoisation over column subsets: minor(S) is
    // the determinant of the first |S| rows restricted to columns S. This is
    // O(2^d * d) polynomial multiplications instead of d! products.
    std::vector<MPoly> minor(static_cast<std::size_t>(1) << d, MPoly(nvars));
    minor[0] = MPoly::constant(nvars, Rat(1));
    // Group masks by population count so dependencies are ready.
    std::vector<std::vector<unsigned>> by_pop(static_cast<std::size_t>(d) + 1);
    for (unsigned mask = 1; mask < (1u << d); ++mask)
        by_pop[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    for (int k = 1; k <= d; ++k) {
        for (unsigned mask : by_pop[static_cast<std::size_t>(k)]) {
            MPoly acc(nvars);
            int pos = 0; // index of the column within the sorted subset
            for (int j = 0; j < d; ++j) {
                if (!(mask & (1u << j))) continue;
                const MPoly& entry = m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
                if (!entry.is_zero()) {
                    MPoly contrib = entry * minor[mask & ~(1u << j)];
                    if ((k - 1 + pos) % 2 == 0) acc = acc + contrib;
                    else acc = acc - contrib;
                }
                ++pos;
            }
            minor[mask] = acc;
        }
    }
    return minor[(1u << d) - 1];
}

std::optional<std::vector<Rat>> mpoly_find_nonzero_point(const MPoly& p) {
    if (p.is_zero()) return std::nullopt;
    const int k = p.nvars();
    std::vector<Rat> point(static_cast<std::size_t>(k), Rat(0));
    MPoly cur = p;
    for (int v = 0; v < k; ++v) {
        // Degree-in-v many roots at most, so one of 0..deg keeps it nonzero.
        int dv = cur.degree_in(v);
        for (int t = 0; t <= dv; ++t) {
            MPoly sub = cur.substituted(v, Rat(t));
            if (!sub.is_zero()) {
                point[static_cast<std::size_t>(v)] = Rat(t);
                cur = sub;
                break;
            }
        }
    }
    return point;
}

} // namespace fla
