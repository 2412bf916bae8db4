#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

namespace surfrig {

using Rat = mpq_class;

// Parses "p", "-p", or "p/q" into a canonical rational.
Rat rat_from_string(const std::string& text);

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

using Vec3Q = std::array<Rat, 3>;

inline Rat dot(const Vec3Q& a, const Vec3Q& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3Q sub(const Vec3Q& a, const Vec3Q& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline bool is_zero(const Vec3Q& v) {
    return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

} // namespace surfrig
