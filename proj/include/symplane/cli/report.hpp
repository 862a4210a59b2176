#pragma once
/**
 * @file report.hpp
 * @brief Subcommand drivers behind the command-line tool.
 *
 * Each driver takes a plain options struct, runs the corresponding solver
 * and returns a RunReport whose JSON form is
 *
 *   { "subcommand": ..., "input": {...}, "results": {...},
 *     "residuals": {...}, "wall_time_ms": ... }
 *
 * `input` deserializes back into the options struct, so a report can be
 * replayed. Keys are snake_case; vectors are [x, y] arrays.
 */

#include <cstdint>
#include <string>

#include "json.hpp"

#include "symplane/core.hpp"
#include "symplane/dynamics.hpp"
#include "symplane/error.hpp"

namespace symplane::cli {

using nlohmann::json;

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitDegenerate = 2,
    kExitSingular = 3,
};

int exit_code_for(ErrorCode code) noexcept;

/// Bound on every identity residual: 1e-9 * (1 + product of operand norms).
inline constexpr double kIdentityTolerance = 1e-9;

struct IdentitiesOptions {
    long samples = 1000;
    std::uint64_t seed = 42;
    double range = 10.0;
};

struct IntersectOptions {
    Vec2 a;
    Vec2 u{1.0, 0.0};
    Vec2 b;
    Vec2 v{0.0, 1.0};
};

struct TangentsOptions {
    Vec2 c1;
    double r1 = 1.0;
    Vec2 c2{4.0, 0.0};
    double r2 = 1.0;
};

struct CrankOptions {
    double length = 1.0;
    Vec2 pivot{3.0, 0.0};
    double phi_dot = 1.0;
    double from = 0.0;
    double to = 2.0 * std::numbers::pi;
    int steps = 361;
    /// Angles (from, to, phi_dot and every angular output) in degrees.
    bool degrees = false;
};

struct OscillatorOptions {
    double mass = 1.0;
    double stiffness = 1.0;
    double q0 = 1.0;
    double p0 = 0.0;
    double dt = 0.01;
    long steps = 628;
    Integrator method = Integrator::leapfrog;
};

struct RunReport {
    std::string subcommand;
    json input;
    json results;
    json residuals;
    double wall_time_ms = 0.0;
    /// kExitOk unless the run itself detected a failure (identity bound
    /// exceeded, singular crank positions).
    int exit_code = kExitOk;
    std::string diagnostic;
};

json to_json(const RunReport& report);

void to_json(json& j, const IdentitiesOptions& o);
void from_json(const json& j, IdentitiesOptions& o);
void to_json(json& j, const IntersectOptions& o);
void from_json(const json& j, IntersectOptions& o);
void to_json(json& j, const TangentsOptions& o);
void from_json(const json& j, TangentsOptions& o);
void to_json(json& j, const CrankOptions& o);
void from_json(const json& j, CrankOptions& o);
void to_json(json& j, const OscillatorOptions& o);
void from_json(const json& j, OscillatorOptions& o);

/// Seeded random quadruples in [-range, range]^2; max residual per identity.
/// Throws InvalidArgument for samples < 1 or range < 0.
RunReport run_identities(const IdentitiesOptions& opts);
RunReport run_intersect(const IntersectOptions& opts);
RunReport run_tangents(const TangentsOptions& opts);
RunReport run_crank(const CrankOptions& opts);
RunReport run_oscillator(const OscillatorOptions& opts);

/// Replays a report's `input` echo through the matching driver.
RunReport rerun(const json& report);

}  // namespace symplane::cli
