#include "symplane/dynamics.hpp"

#include <cmath>
#include <string>

namespace symplane {

OscillatorParams::OscillatorParams(double mass_, double stiffness_) : mass(mass_), stiffness(stiffness_) {
    if (!std::isfinite(mass_) || mass_ <= 0.0) throw Error(ErrorCode::InvalidArgument, "mass must be > 0");
    if (!std::isfinite(stiffness_) || stiffness_ <= 0.0)
        throw Error(ErrorCode::InvalidArgument, "stiffness must be > 0");
}

std::string_view to_string(Integrator method) noexcept {
    switch (method) {
        case Integrator::explicit_euler: return "euler";
        case Integrator::symplectic_euler: return "symplectic-euler";
        case Integrator::leapfrog: return "leapfrog";
    }
    return "unknown";
}

Integrator parse_integrator(std::string_view name) {
    for (const Integrator m : {Integrator::explicit_euler, Integrator::symplectic_euler, Integrator::leapfrog})
        if (to_string(m) == name) return m;
    throw Error(ErrorCode::InvalidArgument, "unknown integrator '" + std::string(name) + "'");
}

double hamiltonian(const PhaseState& s, const OscillatorParams& params) {
    return s.p * s.p / (2.0 * params.mass) + params.stiffness * s.q * s.q / 2.0;
}

double lagrangian(const PhaseState& s, const OscillatorParams& params) {
    return s.p * s.p / (2.0 * params.mass) - params.stiffness * s.q * s.q / 2.0;
}

Vec2 hamiltonian_gradient(const PhaseState& s, const OscillatorParams& params) {
    return {params.stiffness * s.q, s.p / params.mass};
}

PhaseVelocity hamiltonian_field(const PhaseState& s, const OscillatorParams& params) {
    const Vec2 flow = -tilde(hamiltonian_gradient(s, params));
    return {flow.x, flow.y};
}

namespace {

// Partial updates of a separable H: a kick moves p with the force at the
// current q, a drift moves q with the velocity at the current p.
void kick(PhaseState& s, const OscillatorParams& params, double h) { s.p += h * hamiltonian_field(s, params).p_dot; }
void drift(PhaseState& s, const OscillatorParams& params, double h) { s.q += h * hamiltonian_field(s, params).q_dot; }

void require_step(double dt) {
    if (!std::isfinite(dt) || dt <= 0.0) throw Error(ErrorCode::InvalidStep, "time step must be > 0");
}

PhaseState advance(PhaseState s, const OscillatorParams& params, double dt, Integrator method) {
    switch (method) {
        case Integrator::explicit_euler: {
            const PhaseVelocity f = hamiltonian_field(s, params);
            s.q += dt * f.q_dot;
            s.p += dt * f.p_dot;
            break;
        }
        case Integrator::symplectic_euler:
            kick(s, params, dt);
            drift(s, params, dt);
            break;
        case Integrator::leapfrog:
            kick(s, params, 0.5 * dt);
            drift(s, params, dt);
            kick(s, params, 0.5 * dt);
            break;
    }
    if (!std::isfinite(s.q) || !std::isfinite(s.p)) throw Error(ErrorCode::NonFinite, "phase state overflowed");
    return s;
}

}  // namespace

PhaseState step(const PhaseState& s, const OscillatorParams& params, double dt, Integrator method) {
    require_step(dt);
    PhaseState next = advance(s, params, dt, method);
    next.t = s.t + dt;
    return next;
}

Trajectory simulate(const PhaseState& initial, const OscillatorParams& params, double dt, long n_steps,
                    Integrator method) {
    require_step(dt);
    if (n_steps < 1) throw Error(ErrorCode::InvalidStep, "need at least one step");
    Trajectory traj{params, dt, method, {}};
    traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.states.push_back(initial);
    for (long i = 1; i <= n_steps; ++i) {
        PhaseState next = advance(traj.states.back(), params, dt, method);
        next.t = initial.t + static_cast<double>(i) * dt;
        traj.states.push_back(next);
    }
    return traj;
}

PhaseState analytic_oscillator(double t, const PhaseState& initial, const OscillatorParams& params) {
    const double omega = std::sqrt(params.stiffness / params.mass);
    const double m_omega = params.mass * omega;
    const double elapsed = t - initial.t;
    const double c = std::cos(omega * elapsed);
    const double s = std::sin(omega * elapsed);
    return {initial.q * c + initial.p / m_omega * s, initial.p * c - m_omega * initial.q * s, t};
}

double ellipse_residual(const PhaseState& s, const PhaseState& initial, const OscillatorParams& params) {
    return hamiltonian(s, params) - hamiltonian(initial, params);
}

}  // namespace symplane
