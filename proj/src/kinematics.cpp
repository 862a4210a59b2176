#include "symplane/kinematics.hpp"

#include <cmath>

namespace symplane {

PolarKinematics polar_kinematics(const PolarMotion& m) {
    const Vec2 e = unit(m.phi);
    const Vec2 e_perp = tilde(e);
    return {
        m.r * e,
        m.r_dot * e + m.phi_dot * m.r * e_perp,
        (m.r_ddot - m.phi_dot * m.phi_dot * m.r) * e + (m.phi_ddot * m.r + 2.0 * m.phi_dot * m.r_dot) * e_perp,
    };
}

CrankConfig::CrankConfig(double crank_length_, const Vec2& pivot_c_, double phi_dot_)
    : crank_length(crank_length_), pivot_c(pivot_c_), phi_dot(phi_dot_) {
    if (!std::isfinite(crank_length_) || crank_length_ <= 0.0)
        throw Error(ErrorCode::InvalidArgument, "crank length must be > 0");
    if (!std::isfinite(phi_dot_)) throw Error(ErrorCode::NonFinite, "crank rate must be finite");
}

Vec2 crank_vector(const CrankConfig& cfg, double phi) { return cfg.crank_length * unit(phi); }

double singular_threshold(const CrankConfig& cfg) { return 1e-12 * (1.0 + norm(cfg.pivot_c)); }

CrankPosition crank_position(const CrankConfig& cfg, double phi) {
    const Vec2 guide = cfg.pivot_c - crank_vector(cfg, phi);
    const double s = norm(guide);
    if (s <= singular_threshold(cfg))
        throw Error(ErrorCode::SingularPosition, "crank tip coincides with the guide pivot, psi is undefined");
    const Vec2 e_psi = guide / s;
    return {phi, s, std::atan2(e_psi.y, e_psi.x), e_psi};
}

CrankVelocity crank_velocity(const CrankConfig& cfg, const CrankPosition& pos) {
    if (pos.s <= singular_threshold(cfg)) throw Error(ErrorCode::SingularPosition, "slider length vanishes");
    const Vec2 a = crank_vector(cfg, pos.phi);
    return {
        cfg.phi_dot * dot(a, tilde(pos.e_psi)),
        -cfg.phi_dot * dot(a, pos.e_psi) / pos.s,
    };
}

CrankAcceleration crank_acceleration(const CrankConfig& cfg, const CrankPosition& pos, const CrankVelocity& vel) {
    if (pos.s <= singular_threshold(cfg)) throw Error(ErrorCode::SingularPosition, "slider length vanishes");
    return {
        vel.psi_dot * (vel.psi_dot - cfg.phi_dot) * pos.s,
        (cfg.phi_dot - 2.0 * vel.psi_dot) * vel.s_dot / pos.s,
    };
}

CrankState crank_state(const CrankConfig& cfg, double phi) {
    const CrankPosition pos = crank_position(cfg, phi);
    const CrankVelocity vel = crank_velocity(cfg, pos);
    const CrankAcceleration acc = crank_acceleration(cfg, pos, vel);
    return {pos.phi, pos.s, pos.psi, vel.s_dot, vel.psi_dot, acc.s_ddot, acc.psi_ddot, pos.e_psi};
}

Vec2 position_closure_residual(const CrankConfig& cfg, const CrankState& st) {
    return crank_vector(cfg, st.phi) + st.s * st.e_psi - cfg.pivot_c;
}

Vec2 velocity_closure_residual(const CrankConfig& cfg, const CrankState& st) {
    const Vec2 a = crank_vector(cfg, st.phi);
    return cfg.phi_dot * tilde(a) + st.s_dot * st.e_psi + st.psi_dot * st.s * tilde(st.e_psi);
}

Vec2 acceleration_closure_residual(const CrankConfig& cfg, const CrankState& st) {
    const Vec2 a = crank_vector(cfg, st.phi);
    return -cfg.phi_dot * cfg.phi_dot * a + (st.s_ddot - st.psi_dot * st.psi_dot * st.s) * st.e_psi +
           (st.psi_ddot * st.s + 2.0 * st.psi_dot * st.s_dot) * tilde(st.e_psi);
}

std::vector<CrankSweepEntry> crank_sweep(const CrankConfig& cfg, double phi_start, double phi_end, int steps) {
    if (steps < 2) throw Error(ErrorCode::InvalidArgument, "a sweep needs at least 2 steps");
    if (!std::isfinite(phi_start) || !std::isfinite(phi_end))
        throw Error(ErrorCode::NonFinite, "sweep bounds must be finite");

    std::vector<CrankSweepEntry> out(static_cast<std::size_t>(steps));
    const double span = phi_end - phi_start;
    std::optional<double> last_psi;
    double unwrapped = 0.0;
    for (int i = 0; i < steps; ++i) {
        CrankSweepEntry& entry = out[static_cast<std::size_t>(i)];
        entry.phi = i == steps - 1 ? phi_end : phi_start + span * i / (steps - 1);
        try {
            entry.state = crank_state(cfg, entry.phi);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SingularPosition) throw;
            entry.singular = true;
            entry.psi_unwrapped = unwrapped;
            continue;
        }
        entry.near_singular = entry.state->s < 1e-6 * cfg.crank_length;
        const double psi = entry.state->psi;
        unwrapped = last_psi ? unwrapped + normalize_angle(psi - *last_psi) : psi;
        last_psi = psi;
        entry.psi_unwrapped = unwrapped;
    }
    return out;
}

}  // namespace symplane
