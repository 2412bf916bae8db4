#include "surfrig/surface.hpp"

#include <set>
#include <stdexcept>

namespace surfrig {

namespace {

Polynomial3 var(int axis) { return Polynomial3::variable(axis); }

Rat get_param(const std::map<std::string, Rat>& params, const std::string& key, const Rat& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, Rat>& params, const std::set<std::string>& known,
                    const std::string& name) {
    for (const auto& [key, value] : params)
        if (!known.count(key))
            throw std::invalid_argument("surface " + name + ": unknown parameter '" + key + "'");
}

std::string canonical_spec(const std::string& name, const std::vector<std::pair<std::string, Rat>>& kv) {
    std::string out = name;
    char sep = ':';
    for (const auto& [key, value] : kv) {
        out += sep + key + "=" + value.get_str();
        sep = ',';
    }
    return out;
}

// (1-t^2)/(1+t^2) and 2t/(1+t^2): the tangent-half-angle circle point.
std::pair<Rat, Rat> half_angle(const Rat& t) {
    Rat den = 1 + t * t;
    return {(1 - t * t) / den, 2 * t / den};
}

} // namespace

Surface preset(const std::string& name, const std::map<std::string, Rat>& params) {
    Surface s;
    s.name = name;
    s.has_sampler = true;
    const Polynomial3 x = var(0), y = var(1), z = var(2);

    if (name == "plane") {
        reject_unknown(params, {}, name);
        s.poly = z;
        s.declared_type = 3;
        s.spec_string = "plane";
    } else if (name == "sphere") {
        reject_unknown(params, {"r"}, name);
        Rat r = get_param(params, "r", 1);
        if (r <= 0) throw std::invalid_argument("sphere: radius must be positive");
        s.params["r"] = r;
        s.poly = x * x + y * y + z * z - Polynomial3::constant(r * r);
        s.declared_type = 3;
        s.spec_string = canonical_spec(name, {{"r", r}});
    } else if (name == "cylinder") {
        reject_unknown(params, {"r"}, name);
        Rat r = get_param(params, "r", 1);
        if (r <= 0) throw std::invalid_argument("cylinder: radius must be positive");
        s.params["r"] = r;
        s.poly = x * x + y * y - Polynomial3::constant(r * r);
        s.declared_type = 2;
        s.spec_string = canonical_spec(name, {{"r", r}});
    } else if (name == "elliptical_cylinder") {
        reject_unknown(params, {"a", "b"}, name);
        Rat a = get_param(params, "a", 2), b = get_param(params, "b", 1);
        if (a <= 0 || b <= 0) throw std::invalid_argument("elliptical_cylinder: semi-axes must be positive");
        if (a == b)
            throw std::invalid_argument("elliptical_cylinder: a = b is the circular cylinder (type 2)");
        s.params["a"] = a;
        s.params["b"] = b;
        s.poly = x * x * Rat(1 / (a * a)) + y * y * Rat(1 / (b * b)) - Polynomial3::constant(1);
        s.declared_type = 1;
        s.spec_string = canonical_spec(name, {{"a", a}, {"b", b}});
    } else if (name == "cone") {
        reject_unknown(params, {}, name);
        s.poly = x * x + y * y - z * z;
        s.declared_type = 1;
        s.spec_string = "cone";
    } else if (name == "torus") {
        reject_unknown(params, {"R", "r"}, name);
        Rat big = get_param(params, "R", 2), small = get_param(params, "r", 1);
        if (small <= 0 || big <= 0) throw std::invalid_argument("torus: radii must be positive");
        if (small >= big) throw std::invalid_argument("torus: requires 0 < r < R");
        s.params["R"] = big;
        s.params["r"] = small;
        Polynomial3 sum = x * x + y * y + z * z + Polynomial3::constant(big * big - small * small);
        s.poly = sum * sum - (x * x + y * y) * Rat(4 * big * big);
        s.declared_type = 1;
        s.spec_string = canonical_spec(name, {{"R", big}, {"r", small}});
    } else if (name == "ellipsoid") {
        reject_unknown(params, {}, name);
        s.poly = x * x + y * y * Rat(2) + z * z * Rat(3) - Polynomial3::constant(1);
        s.declared_type = 0;
        s.spec_string = "ellipsoid";
    } else {
        throw std::invalid_argument("unknown surface preset: " + name);
    }
    return s;
}

Surface parse_surface_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::map<std::string, Rat> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("surface spec: expected key=value in '" + item + "'");
            params[item.substr(0, eq)] = rat_from_string(item.substr(eq + 1));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return preset(name, params);
}

Vec3Q param_point(const Surface& s, const Rat& t, const Rat& u) {
    if (s.name == "plane") return {t, u, 0};
    if (s.name == "sphere") {
        // Stereographic: r * (2t, 2u, 1 - t^2 - u^2) / (1 + t^2 + u^2).
        const Rat& r = s.params.at("r");
        Rat den = 1 + t * t + u * u;
        return {r * 2 * t / den, r * 2 * u / den, r * (1 - t * t - u * u) / den};
    }
    if (s.name == "cylinder") {
        const Rat& r = s.params.at("r");
        auto [c, sn] = half_angle(t);
        return {r * c, r * sn, u};
    }
    if (s.name == "elliptical_cylinder") {
        auto [c, sn] = half_angle(t);
        return {s.params.at("a") * c, s.params.at("b") * sn, u};
    }
    if (s.name == "cone") {
        if (u == 0) throw std::invalid_argument("cone: z = 0 is the singular apex ring");
        auto [c, sn] = half_angle(t);
        return {u * c, u * sn, u};
    }
    if (s.name == "torus") {
        const Rat& big = s.params.at("R");
        const Rat& small = s.params.at("r");
        auto [ct, st] = half_angle(t);   // around the axis
        auto [cu, su] = half_angle(u);   // around the tube
        Rat w = big + small * cu;
        return {w * ct, w * st, small * su};
    }
    if (s.name == "ellipsoid") {
        // Lines through (1,0,0) with direction (1,t,u).
        Rat den = 1 + 2 * t * t + 3 * u * u;
        return {1 - 2 / den, -2 * t / den, -2 * u / den};
    }
    throw std::invalid_argument("surface " + s.name + " has no parametrization");
}

Rat random_rational(Rng& rng) {
    const int64_t bound = 1000000;
    int64_t num = rng.range(-bound, bound);
    int64_t den = rng.range(1, bound);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Vec3Q sample_point(const Surface& s, Rng& rng) {
    if (!s.has_sampler) throw std::invalid_argument("surface " + s.name + " has no sampler");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rat t = random_rational(rng);
        Rat u = random_rational(rng);
        if (s.name == "cone" && u == 0) continue;
        Vec3Q p = param_point(s, t, u);
        if (s.poly.eval(p) != 0)
            throw std::logic_error("sample_point: parametrization left the surface");
        if (is_zero(s.poly.gradient_at(p))) continue;
        return p;
    }
    throw std::logic_error("sample_point: rejection sampling failed");
}

std::vector<Vec3Q> sample_placement(const Surface& s, int n, Rng& rng) {
    std::vector<Vec3Q> points;
    points.reserve(n);
    int attempts = 0;
    while (static_cast<int>(points.size()) < n) {
        if (++attempts > 1000 * (n + 1))
            throw std::logic_error("sample_placement: could not draw distinct points");
        Vec3Q p = sample_point(s, rng);
        bool repeat = false;
        for (const auto& q : points)
            if (q == p) repeat = true;
        if (!repeat) points.push_back(std::move(p));
    }
    return points;
}

Vec3Q normal(const Surface& s, const Vec3Q& p) {
    if (s.poly.eval(p) != 0) throw std::invalid_argument("normal: point is not on the surface");
    Vec3Q grad = s.poly.gradient_at(p);
    if (is_zero(grad)) throw std::invalid_argument("normal: zero gradient (singular point)");
    return grad;
}

} // namespace surfrig
