#include "symplane/core.hpp"

#include <string>

namespace symplane {

namespace detail {
void throw_non_finite(double x, double y) {
    throw Error(ErrorCode::NonFinite,
                "vector components must be finite, got (" + std::to_string(x) + ", " + std::to_string(y) + ")");
}
}  // namespace detail

namespace {
void require_nonzero(const Vec2& a, const char* what) {
    if (a.x == 0.0 && a.y == 0.0) throw Error(ErrorCode::ZeroVector, what);
}
}  // namespace

double normalize_angle(double angle) {
    if (!std::isfinite(angle)) throw Error(ErrorCode::NonFinite, "angle must be finite");
    double wrapped = std::remainder(angle, 2.0 * std::numbers::pi);
    if (wrapped <= -std::numbers::pi) wrapped = std::numbers::pi;
    return wrapped;
}

Polar::Polar(double magnitude_, double angle_) : magnitude(magnitude_), angle(normalize_angle(angle_)) {
    if (!std::isfinite(magnitude_)) throw Error(ErrorCode::NonFinite, "polar magnitude must be finite");
}

Vec2 inverse(const Vec2& a) {
    require_nonzero(a, "the zero vector has no inverse");
    return a / dot(a, a);
}

Polar to_polar(const Vec2& a) {
    require_nonzero(a, "the zero vector has no direction");
    return {norm(a), std::atan2(a.y, a.x)};
}

Vec2 from_polar(const Polar& p) { return p.magnitude * unit(p.angle); }

double directed_angle(const Vec2& a, const Vec2& b) {
    require_nonzero(a, "directed angle from the zero vector");
    require_nonzero(b, "directed angle to the zero vector");
    return normalize_angle(std::atan2(symp(a, b), dot(a, b)));
}

Vec2 similarity(const Vec2& a, double c, double d) { return c * a + d * tilde(a); }

Vec2 similarity_div(const Vec2& a, double c, double d) {
    const double scale = c * c + d * d;
    if (scale == 0.0) throw Error(ErrorCode::DegenerateScale, "similarity division by c = d = 0");
    return (c * a - d * tilde(a)) / scale;
}

Vec2 rotate(const Vec2& a, double phi) { return similarity(a, std::cos(phi), std::sin(phi)); }

IdentityResiduals identity_residuals(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    IdentityResiduals r;
    r.jacobi = tilde(a) * symp(b, c) + tilde(b) * symp(c, a) + tilde(c) * symp(a, b);
    r.grassmann_full = tilde(a) * symp(b, c) + b * dot(c, a) - c * dot(a, b);
    const double ab_symp = symp(a, b);
    const double ab_dot = dot(a, b);
    r.lagrange = ab_symp * ab_symp + ab_dot * ab_dot - dot(a, a) * dot(b, b);
    r.grassmann_reduced = tilde(a) * symp(b, a) + b * dot(a, a) - a * dot(b, a);
    r.binet_cauchy = symp(a, b) * symp(c, d) - (dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c));
    return r;
}

}  // namespace symplane
