#pragma once
/**
 * @file kinematics.hpp
 * @brief Polar-vector derivatives and the inverted slider crank.
 *
 * Crank 1 (length a, angle phi, constant rate phi_dot) is hinged at the
 * origin. Its tip B carries a rocker of variable length s that slides
 * through a pivoting guide at C. The single loop reads
 *
 *   a + s e_psi - c = 0
 *
 * and its first and second time derivatives are projected on e_psi and
 * e_psi~ to get the rates in closed form.
 */

#include <optional>
#include <vector>

#include "symplane/core.hpp"

namespace symplane {

struct PolarMotion {
    double r = 0.0;
    double r_dot = 0.0;
    double r_ddot = 0.0;
    double phi = 0.0;
    double phi_dot = 0.0;
    double phi_ddot = 0.0;
};

struct PolarKinematics {
    Vec2 position;
    Vec2 velocity;
    Vec2 acceleration;
};

/// r e_phi and its first two time derivatives.
PolarKinematics polar_kinematics(const PolarMotion& m);

struct CrankConfig {
    double crank_length = 1.0;
    Vec2 pivot_c;
    double phi_dot = 0.0;

    CrankConfig(double crank_length_, const Vec2& pivot_c_, double phi_dot_);
};

struct CrankPosition {
    double phi = 0.0;
    double s = 0.0;
    double psi = 0.0;
    Vec2 e_psi;
};

struct CrankVelocity {
    double s_dot = 0.0;
    double psi_dot = 0.0;
};

struct CrankAcceleration {
    double s_ddot = 0.0;
    double psi_ddot = 0.0;
};

struct CrankState {
    double phi = 0.0;
    double s = 0.0;
    double psi = 0.0;
    double s_dot = 0.0;
    double psi_dot = 0.0;
    double s_ddot = 0.0;
    double psi_ddot = 0.0;
    Vec2 e_psi;
};

/// One sample of a sweep. `state` is empty when the slider length
/// collapses (singular); near_singular marks s < 1e-6 * crank_length.
struct CrankSweepEntry {
    double phi = 0.0;
    std::optional<CrankState> state;
    bool singular = false;
    bool near_singular = false;
    /// psi continued across the sweep without 2*pi jumps.
    double psi_unwrapped = 0.0;
};

/// Crank vector a = crank_length * (cos phi, sin phi).
Vec2 crank_vector(const CrankConfig& cfg, double phi);

/// s <= this raises SingularPosition: 1e-12 * (1 + |c|).
double singular_threshold(const CrankConfig& cfg);

/// s = |c - a|, e_psi = (c - a)/s. Throws SingularPosition.
CrankPosition crank_position(const CrankConfig& cfg, double phi);

/// s_dot = phi_dot * dot(a, e_psi~), psi_dot = -phi_dot * dot(a, e_psi) / s.
CrankVelocity crank_velocity(const CrankConfig& cfg, const CrankPosition& pos);

/// Constant drive rate (phi_ddot = 0):
///   s_ddot   = psi_dot * (psi_dot - phi_dot) * s
///   psi_ddot = (phi_dot - 2 psi_dot) * s_dot / s
CrankAcceleration crank_acceleration(const CrankConfig& cfg, const CrankPosition& pos, const CrankVelocity& vel);

CrankState crank_state(const CrankConfig& cfg, double phi);

/// a + s e_psi - c
Vec2 position_closure_residual(const CrankConfig& cfg, const CrankState& st);
/// phi_dot a~ + s_dot e_psi + psi_dot s e_psi~
Vec2 velocity_closure_residual(const CrankConfig& cfg, const CrankState& st);
/// -phi_dot^2 a + (s_ddot - psi_dot^2 s) e_psi + (psi_ddot s + 2 psi_dot s_dot) e_psi~
Vec2 acceleration_closure_residual(const CrankConfig& cfg, const CrankState& st);

/// `steps` evenly spaced samples on [phi_start, phi_end], both ends
/// included. Throws InvalidArgument for steps < 2.
std::vector<CrankSweepEntry> crank_sweep(const CrankConfig& cfg, double phi_start, double phi_end, int steps);

}  // namespace symplane
