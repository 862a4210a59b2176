#include "symplane/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "symplane/tolerance.hpp"

namespace symplane {

Line::Line(const Vec2& point_, const Vec2& direction_) : point(point_), direction(direction_) {
    if (direction.x == 0.0 && direction.y == 0.0) throw Error(ErrorCode::ZeroDirection, "line direction is zero");
}

Circle::Circle(const Vec2& center_, double radius_) : center(center_), radius(radius_) {
    if (!std::isfinite(radius_) || radius_ < 0.0)
        throw Error(ErrorCode::InvalidArgument, "circle radius must be finite and >= 0");
}

double collinearity_residual(const Vec2& a, const Vec2& b, const Vec2& c) {
    return symp(a, b) + symp(b, c) + symp(c, a);
}

bool is_collinear(const Vec2& a, const Vec2& b, const Vec2& c, double tol) {
    if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "collinearity tolerance must be >= 0");
    const double na = norm(a), nb = norm(b), nc = norm(c);
    const double scale = std::max({1.0, na * nb, nb * nc, nc * na});
    return std::abs(collinearity_residual(a, b, c)) <= tol * scale;
}

double simple_ratio(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double den = symp(b, c);
    if (std::abs(den) <= kAtol) throw Error(ErrorCode::DegenerateDenominator, "symp(b, c) vanishes");
    return symp(a, b) / den;
}

double cross_ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double bc = symp(b, c);
    const double ad = symp(a, d);
    if (std::abs(bc) <= kAtol || std::abs(ad) <= kAtol)
        throw Error(ErrorCode::DegenerateDenominator, "symp(b, c) or symp(a, d) vanishes");
    return (symp(a, c) * symp(b, d)) / (bc * ad);
}

Intersection intersect_lines(const Line& l1, const Line& l2) {
    const Vec2& u = l1.direction;
    const Vec2& v = l2.direction;
    const double uv = symp(u, v);
    if (std::abs(uv) <= kAtol * norm(u) * norm(v))
        throw Error(ErrorCode::ParallelLines, "lines are parallel, the intersection is at infinity");
    const Vec2 a = l2.point - l1.point;
    Intersection out;
    out.lambda = -symp(v, a) / uv;
    out.mu = symp(a, u) / uv;
    out.point = l1.point + out.lambda * u;
    return out;
}

Vec2 jacobi_triangle_residual(const Vec2& u, const Vec2& v, const Vec2& a) {
    return symp(u, v) * a + symp(v, a) * u + symp(a, u) * v;
}

Vec2 project_point_onto_line(const Vec2& p, const Line& l) {
    return intersect_lines(l, Line(p, tilde(l.direction))).point;
}

double signed_distance(const Vec2& p, const Line& l) {
    return symp(l.direction, p - l.point) / norm(l.direction);
}

std::vector<Tangent> circle_tangents(const Circle& c1, const Circle& c2) {
    const Vec2 a = c2.center - c1.center;
    const double a2 = dot(a, a);
    if (std::sqrt(a2) <= kAtol) throw Error(ErrorCode::CoincidentCenters, "circle centers coincide");

    std::vector<Tangent> out;
    out.reserve(4);
    // Loop closure R1 e + lambda e~ + sigma R2 e - a = 0, sigma = -1 for
    // outer tangents (circle 2 on the same side), +1 for inner ones.
    for (const TangentKind kind : {TangentKind::outer, TangentKind::inner}) {
        const double sigma = kind == TangentKind::inner ? 1.0 : -1.0;
        const double k = c1.radius + sigma * c2.radius;
        const double radicand = a2 - k * k;
        if (radicand < 0.0) continue;
        const double root = std::sqrt(radicand);
        for (const double lambda : {root, -root}) {
            Tangent t;
            t.kind = kind;
            t.lambda = lambda;
            t.direction_e = (k * a - lambda * tilde(a)) / a2;
            t.touch1 = c1.center + c1.radius * t.direction_e;
            t.touch2 = c2.center - sigma * c2.radius * t.direction_e;
            out.push_back(t);
        }
    }
    return out;
}

std::vector<Tangent> point_circle_tangents(const Vec2& p, const Circle& c) {
    if (norm(p - c.center) <= kAtol) return {};
    std::vector<Tangent> all = circle_tangents(c, Circle(p, 0.0));
    // With a zero radius the inner branch repeats the outer one.
    std::erase_if(all, [](const Tangent& t) { return t.kind == TangentKind::inner; });
    return all;
}

}  // namespace symplane
