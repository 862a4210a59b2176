#pragma once
/**
 * @file geometry.hpp
 * @brief Closed-form planar constructions written with dot/symp only.
 *
 * Points are given as position vectors from a common origin. Every
 * construction is a ratio of signed areas, so degeneracies show up as
 * vanishing denominators and are reported with a typed Error.
 */

#include <vector>

#include "symplane/core.hpp"

namespace symplane {

/// Infinite line through `point` along `direction`. The direction must be
/// nonzero (throws ZeroDirection).
struct Line {
    Vec2 point;
    Vec2 direction;

    Line(const Vec2& point_, const Vec2& direction_);
};

/// Circle with radius >= 0. Radius 0 is a point.
struct Circle {
    Vec2 center;
    double radius = 0.0;

    Circle(const Vec2& center_, double radius_);
};

/// point = l1.point + lambda*l1.direction = l2.point + mu*l2.direction
struct Intersection {
    Vec2 point;
    double lambda = 0.0;
    double mu = 0.0;
};

enum class TangentKind { outer, inner };

/// Common tangent of two circles. direction_e is the unit normal pointing
/// from circle 1's center to touch1; the tangent line runs along
/// tilde(direction_e), and touch2 = touch1 + lambda*tilde(direction_e).
struct Tangent {
    Vec2 touch1;
    Vec2 touch2;
    Vec2 direction_e;
    TangentKind kind = TangentKind::outer;
    double lambda = 0.0;

    [[nodiscard]] Line line() const { return {touch1, tilde(direction_e)}; }
};

/// symp(a,b) + symp(b,c) + symp(c,a): twice the signed area of triangle ABC.
double collinearity_residual(const Vec2& a, const Vec2& b, const Vec2& c);

/// Thresholded collinearity, invariant under uniform scaling of the input.
/// Throws InvalidArgument for tol < 0.
bool is_collinear(const Vec2& a, const Vec2& b, const Vec2& c, double tol);

/// symp(a,b) / symp(b,c). For collinear endpoints this is the signed ratio
/// AB/BC; it is unchanged when b is scaled. Throws DegenerateDenominator.
double simple_ratio(const Vec2& a, const Vec2& b, const Vec2& c);

/// [symp(a,c) symp(b,d)] / [symp(b,c) symp(a,d)]. Throws DegenerateDenominator.
double cross_ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Solves the loop a + mu*v - lambda*u = 0 with a = l2.point - l1.point.
/// Throws ParallelLines.
Intersection intersect_lines(const Line& l1, const Line& l2);

/// symp(u,v)*a + symp(v,a)*u + symp(a,u)*v, identically zero.
Vec2 jacobi_triangle_residual(const Vec2& u, const Vec2& v, const Vec2& a);

/// Foot of the perpendicular from p onto l.
Vec2 project_point_onto_line(const Vec2& p, const Line& l);

/// Signed distance of p from l, positive to the left of l.direction.
double signed_distance(const Vec2& p, const Line& l);

/// All common tangents, ordered outer(+lambda), outer(-lambda),
/// inner(+lambda), inner(-lambda). A branch whose radicand is negative is
/// skipped; a zero radicand emits the touching tangent twice. Throws
/// CoincidentCenters.
std::vector<Tangent> circle_tangents(const Circle& c1, const Circle& c2);

/// The two tangents from p to c (touch1 on the circle, touch2 == p). Empty
/// when p is inside, the touching tangent twice when p is on the circle.
std::vector<Tangent> point_circle_tangents(const Vec2& p, const Circle& c);

}  // namespace symplane
