#pragma once
/**
 * @file dynamics.hpp
 * @brief One-degree-of-freedom harmonic oscillator in phase space.
 *
 * H(q, p) = p^2/(2m) + k q^2/2. The flow is (q_dot, p_dot) = -J grad H,
 * evaluated here literally as -tilde(grad H) on the planar (q, p) vector.
 */

#include <string_view>
#include <vector>

#include "symplane/core.hpp"

namespace symplane {

struct OscillatorParams {
    double mass = 1.0;
    double stiffness = 1.0;

    OscillatorParams(double mass_, double stiffness_);
};

struct PhaseState {
    double q = 0.0;
    double p = 0.0;
    double t = 0.0;

    [[nodiscard]] Vec2 point() const { return {q, p}; }
};

struct PhaseVelocity {
    double q_dot = 0.0;
    double p_dot = 0.0;
};

enum class Integrator { explicit_euler, symplectic_euler, leapfrog };

/// CLI spelling: "euler", "symplectic-euler", "leapfrog".
std::string_view to_string(Integrator method) noexcept;
/// Throws InvalidArgument for unknown names.
Integrator parse_integrator(std::string_view name);

struct Trajectory {
    OscillatorParams params;
    double dt = 0.0;
    Integrator integrator = Integrator::leapfrog;
    std::vector<PhaseState> states;
};

double hamiltonian(const PhaseState& s, const OscillatorParams& params);

/// Lagrangian in phase-space variables, p^2/(2m) - k q^2/2.
double lagrangian(const PhaseState& s, const OscillatorParams& params);

/// (dH/dq, dH/dp) = (k q, p/m)
Vec2 hamiltonian_gradient(const PhaseState& s, const OscillatorParams& params);

/// -J grad H = (p/m, -k q)
PhaseVelocity hamiltonian_field(const PhaseState& s, const OscillatorParams& params);

/// One fixed step; t advances by dt. Throws InvalidStep for dt <= 0.
PhaseState step(const PhaseState& s, const OscillatorParams& params, double dt, Integrator method);

/// n_steps + 1 states starting with `initial`; state i has t = t0 + i*dt.
/// Throws InvalidStep for dt <= 0 or n_steps < 1.
Trajectory simulate(const PhaseState& initial, const OscillatorParams& params, double dt, long n_steps,
                    Integrator method);

/// Exact flow from `initial` to absolute time t.
PhaseState analytic_oscillator(double t, const PhaseState& initial, const OscillatorParams& params);

/// H(s) - H(initial): zero on the energy ellipse through `initial`.
double ellipse_residual(const PhaseState& s, const PhaseState& initial, const OscillatorParams& params);

}  // namespace symplane
