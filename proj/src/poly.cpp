// poly.cpp
#include "fla/poly.hpp"

#include "fla/error.hpp"

#include <algorithm>

namespace fla {

namespace {
const Rat kZero(0);
} // namespace

Poly::Poly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> ascending_coeffs) : c_(std::move(ascending_coeffs)) { trim(); }

Poly Poly::x_power(int power, const Rat& coeff) {
    if (coeff == 0) return Poly();
    std::vector<Rat> c(static_cast<std::size_t>(power) + 1, Rat(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const { return c_.back(); }

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    Poly r = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0,
                       Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat f = r.leading() / b.leading();
        q[static_cast<std::size_t>(shift)] = f;
        r = r - Poly::x_power(shift, f) * b;
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(Rat(1) / leading());
}

Poly Poly::primitive_integer() const {
    if (is_zero()) return Poly();
    Int den_lcm(1);
    for (const auto& x : c_) {
        Int d = x.get_den();
        Int g = gcd(den_lcm, d);
        den_lcm = den_lcm / g * d;
    }
    Int num_gcd(0);
    for (const auto& x : c_) {
        Int num = x.get_num() * (den_lcm / x.get_den());
        num_gcd = gcd(num_gcd, abs(num));
    }
    Rat s(den_lcm, num_gcd == 0 ? Int(1) : num_gcd);
    s.canonicalize();
    return scaled(s);
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (a == 0) continue;
        bool first = out.empty();
        Rat mag = abs(a);
        if (!first) out += (a > 0) ? " + " : " - ";
        else if (a < 0) out += "-";
        bool unit = (mag == 1);
        if (i == 0) {
            out += rat_str(mag);
        } else {
            if (!unit) out += rat_str(mag) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Keep remainders primitive-integer to hold coefficient growth down; the
    // positive rescaling never changes the gcd up to units.
    a = a.primitive_integer();
    b = b.primitive_integer();
    while (!b.is_zero()) {
        Poly r = Poly::divrem(a, b).second;
        a = b;
        b = r.is_zero() ? Poly() : r.primitive_integer();
    }
    return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;
    // Yun: iterate c <- c/g, d <- d/g - c', pulling out the multiplicity-e
    // part as gcd(c, d) at step e.
    Poly pm = p.monic();
    Poly g0 = poly_gcd(pm, pm.derivative());
    Poly c = Poly::divrem(pm, g0).first;
    Poly d = Poly::divrem(pm.derivative(), g0).first - c.derivative();
    for (int e = 1; !c.is_constant(); ++e) {
        Poly ge = poly_gcd(c, d);
        if (ge.degree() >= 1) out.emplace_back(ge, e);
        c = Poly::divrem(c, ge).first;
        d = Poly::divrem(d, ge).first - c.derivative();
    }
    return out;
}

namespace {

// Sign of p at +infinity (dir = +1) or -infinity (dir = -1).
int sign_at_infinity(const Poly& p, int dir) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int sturm_real_root_count(const Poly& p) {
    if (p.is_zero()) throw InputError("Sturm count of the zero polynomial");
    if (!poly_gcd(p, p.derivative()).is_constant())
        throw InputError("Sturm count requires squarefree input");
    if (p.degree() == 0) return 0;
    // Chain: p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), each member
    // rescaled by a positive rational to primitive integer form (a positive
    // rescaling keeps every sign, so the chain stays a valid Sturm chain).
    std::vector<Poly> chain;
    chain.push_back(p.primitive_integer());
    chain.push_back(p.derivative().primitive_integer());
    while (!chain.back().is_constant()) {
        Poly r = Poly::divrem(chain[chain.size() - 2], chain.back()).second;
        // Squarefree input means the chain terminates in a nonzero constant.
        chain.push_back((-r).primitive_integer());
    }
    std::vector<int> at_minus, at_plus;
    at_minus.reserve(chain.size());
    at_plus.reserve(chain.size());
    for (const Poly& q : chain) {
        at_minus.push_back(sign_at_infinity(q, -1));
        at_plus.push_back(sign_at_infinity(q, +1));
    }
    return sign_changes(at_minus) - sign_changes(at_plus);
}

} // namespace fla
