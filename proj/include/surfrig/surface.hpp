#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfrig/exact.hpp"
#include "surfrig/polynomial.hpp"
#include "surfrig/rng.hpp"

namespace surfrig {

// An irreducible algebraic surface m(x,y,z) = 0 with (for presets) an exact
// rational point parametrization. declared_type is the freedom number k, or
// -1 when unknown (custom surfaces without a stated type).
struct Surface {
    std::string name;
    Polynomial3 poly;
    int declared_type = -1;
    bool has_sampler = false;
    std::map<std::string, Rat> params;
    std::string spec_string;
};

// Preset names: plane, sphere (r), cylinder (r), elliptical_cylinder (a,b),
// cone, torus (R,r), ellipsoid.
Surface preset(const std::string& name, const std::map<std::string, Rat>& params = {});

// "torus:R=2,r=1", "sphere", "ellipsoid", ... Parameters are rationals.
Surface parse_surface_spec(const std::string& spec);

// Exact point of the preset parametrization at parameters (t,u). Meaning per
// preset: plane (t,u)->(t,u,0); sphere/ellipsoid stereographic directions;
// cylinder and elliptical_cylinder: t around, u = height; cone: t around,
// u = z (u must be nonzero); torus: t around the axis, u around the tube.
Vec3Q param_point(const Surface& s, const Rat& t, const Rat& u);

// Random exact rational point with nonzero gradient; parameters are drawn
// with numerator and denominator uniform in [-10^6, 10^6].
Vec3Q sample_point(const Surface& s, Rng& rng);

// n pairwise-distinct sampled points.
std::vector<Vec3Q> sample_placement(const Surface& s, int n, Rng& rng);

// Exact gradient of the surface polynomial; errors if p is off the surface
// or the gradient vanishes (singular point).
Vec3Q normal(const Surface& s, const Vec3Q& p);

Rat random_rational(Rng& rng);  // num, den uniform in [-10^6, 10^6], den != 0

} // namespace surfrig
