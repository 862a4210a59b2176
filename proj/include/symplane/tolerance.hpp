#pragma once

#include <algorithm>
#include <cmath>

namespace symplane {

/// Absolute floor used by degeneracy checks (zero vectors, parallel lines,
/// vanishing denominators).
inline constexpr double kAtol = 1e-12;
inline constexpr double kRtol = 1e-9;

struct Tolerance {
    double atol = kAtol;
    double rtol = kRtol;
};

/// |lhs - rhs| <= atol + rtol * max(|lhs|, |rhs|)
inline bool approx_equal(double lhs, double rhs, Tolerance tol = {}) noexcept {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return std::abs(lhs - rhs) <= tol.atol + tol.rtol * scale;
}

}  // namespace symplane
