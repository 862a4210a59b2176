#pragma once
/**
 * @file core.hpp
 * @brief Planar symplectic vector algebra.
 *
 * The plane carries two bilinear forms built from the same ingredients:
 * the dot product and the quarter-turn operator `tilde` (the complex
 * structure J = [[0,-1],[1,0]]). Their combination `symp(a, b)` is the
 * signed area of the parallelogram spanned by a and b.
 *
 * Sign convention: tilde(a) = (-a.y, a.x) turns counterclockwise, so
 *   symp(a, b)        = dot(tilde(a), b) = a.x*b.y - a.y*b.x
 *   dot(a, b)         = symp(a, tilde(b))
 *   symp(a~, b~)      = symp(a, b)
 *   dot(a~, b~)       = dot(a, b)
 */

#include <cmath>
#include <numbers>

#include "symplane/error.hpp"

namespace symplane {

namespace detail {
[[noreturn]] void throw_non_finite(double x, double y);
}  // namespace detail

/// Planar vector. Construction rejects NaN and infinities.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {
        if (!std::isfinite(x_) || !std::isfinite(y_)) detail::throw_non_finite(x_, y_);
    }

    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { return *this = Vec2(x + o.x, y + o.y); }
    Vec2& operator-=(const Vec2& o) { return *this = Vec2(x - o.x, y - o.y); }
    Vec2& operator*=(double s) { return *this = Vec2(x * s, y * s); }
    Vec2& operator/=(double s) { return *this = Vec2(x / s, y / s); }

    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator*(Vec2 a, double s) { return a *= s; }
    friend Vec2 operator*(double s, Vec2 a) { return a *= s; }
    friend Vec2 operator/(Vec2 a, double s) { return a /= s; }

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Magnitude/angle form. The magnitude may be negative on input; the angle
/// is always stored in (-pi, pi].
struct Polar {
    double magnitude = 0.0;
    double angle = 0.0;

    Polar() = default;
    Polar(double magnitude_, double angle_);
};

/// Left-minus-right residuals of the five planar identities (Jacobi,
/// Grassmann, Lagrange, reduced Grassmann, Binet-Cauchy). All vanish in
/// exact arithmetic.
struct IdentityResiduals {
    Vec2 jacobi;
    Vec2 grassmann_full;
    double lagrange = 0.0;
    Vec2 grassmann_reduced;
    double binet_cauchy = 0.0;
};

/// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

/// Quarter turn counterclockwise: (x, y) -> (-y, x). tilde(tilde(a)) == -a.
inline Vec2 tilde(const Vec2& a) { return {-a.y, a.x}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Symplectic inner product, the signed parallelogram area a.x*b.y - a.y*b.x.
/// Positive when b lies counterclockwise from a.
inline double symp(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

/// a / (a.a), so that dot(a, inverse(a)) == 1. Throws ZeroVector.
Vec2 inverse(const Vec2& a);

/// Magnitude >= 0 and angle atan2(y, x). Throws ZeroVector.
Polar to_polar(const Vec2& a);
Vec2 from_polar(const Polar& p);

/// Unit vector at the given angle, (cos, sin).
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Signed angle from a to b in (-pi, pi], atan2(symp, dot). Throws ZeroVector.
double directed_angle(const Vec2& a, const Vec2& b);

/// c*a + d*tilde(a): rotation plus scaling, the same as the complex product
/// (a.x + i a.y)(c + i d).
Vec2 similarity(const Vec2& a, double c, double d);

/// Inverse of similarity(a, c, d). Throws DegenerateScale when c = d = 0.
Vec2 similarity_div(const Vec2& a, double c, double d);

/// a*cos(phi) + tilde(a)*sin(phi).
Vec2 rotate(const Vec2& a, double phi);

IdentityResiduals identity_residuals(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

}  // namespace symplane
