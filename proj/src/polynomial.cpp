#include "surfrig/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace surfrig {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    q.canonicalize();
    return q;
}

Polynomial3 Polynomial3::constant(const Rat& c) {
    Polynomial3 p;
    p.add_term({0, 0, 0}, c);
    return p;
}

Polynomial3 Polynomial3::variable(int axis) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("Polynomial3: axis out of range");
    Polynomial3 p;
    Monomial mono = {0, 0, 0};
    mono[axis] = 1;
    p.add_term(mono, 1);
    return p;
}

void Polynomial3::add_term(const Monomial& mono, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial3 Polynomial3::operator+(const Polynomial3& other) const {
    Polynomial3 out = *this;
    for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
    return out;
}

Polynomial3 Polynomial3::operator-(const Polynomial3& other) const {
    Polynomial3 out = *this;
    for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, -coeff);
    return out;
}

Polynomial3 Polynomial3::operator*(const Polynomial3& other) const {
    Polynomial3 out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_)
            out.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    return out;
}

Polynomial3 Polynomial3::operator*(const Rat& scalar) const {
    Polynomial3 out;
    if (scalar == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff * scalar);
    return out;
}

Polynomial3 Polynomial3::derivative(int axis) const {
    if (axis < 0 || axis > 2) throw std::invalid_argument("Polynomial3: axis out of range");
    Polynomial3 out;
    for (const auto& [mono, coeff] : terms_) {
        if (mono[axis] == 0) continue;
        Monomial m = mono;
        m[axis] -= 1;
        out.add_term(m, coeff * mono[axis]);
    }
    return out;
}

Rat Polynomial3::eval(const Vec3Q& p) const {
    Rat total = 0;
    for (const auto& [mono, coeff] : terms_) {
        Rat term = coeff;
        for (int axis = 0; axis < 3; ++axis)
            for (int e = 0; e < mono[axis]; ++e) term *= p[axis];
        total += term;
    }
    return total;
}

Vec3Q Polynomial3::gradient_at(const Vec3Q& p) const {
    return {derivative(0).eval(p), derivative(1).eval(p), derivative(2).eval(p)};
}

std::string Polynomial3::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* names[3] = {"x", "y", "z"};
    for (const auto& [mono, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << coeff.get_str();
        for (int axis = 0; axis < 3; ++axis) {
            if (mono[axis] == 0) continue;
            os << "*" << names[axis];
            if (mono[axis] > 1) os << "^" << mono[axis];
        }
    }
    return os.str();
}

} // namespace surfrig
