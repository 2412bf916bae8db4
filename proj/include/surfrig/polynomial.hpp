#pragma once

#include <map>
#include <string>

#include "surfrig/exact.hpp"

namespace surfrig {

// Trivariate polynomial with rational coefficients, keyed by exponent
// triples. Small degrees only (the presets are degree <= 4).
class Polynomial3 {
public:
    using Monomial = std::array<int, 3>;

    Polynomial3() = default;

    static Polynomial3 constant(const Rat& c);
    static Polynomial3 variable(int axis);  // 0=x, 1=y, 2=z

    void add_term(const Monomial& mono, const Rat& coeff);

    Polynomial3 operator+(const Polynomial3& other) const;
    Polynomial3 operator-(const Polynomial3& other) const;
    Polynomial3 operator*(const Polynomial3& other) const;
    Polynomial3 operator*(const Rat& scalar) const;

    Polynomial3 derivative(int axis) const;

    Rat eval(const Vec3Q& p) const;
    Vec3Q gradient_at(const Vec3Q& p) const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    std::string to_string() const;

private:
    std::map<Monomial, Rat> terms_;
};

} // namespace surfrig
