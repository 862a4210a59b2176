#include "symplane/cli/report.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "symplane/geometry.hpp"
#include "symplane/kinematics.hpp"
#include "symplane/random.hpp"

namespace symplane::cli {

namespace {

using Clock = std::chrono::steady_clock;

json vec_json(const Vec2& v) { return json::array({v.x, v.y}); }

Vec2 vec_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected a [x, y] pair");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParallelLines:
        case ErrorCode::CoincidentCenters:
        case ErrorCode::ZeroVector:
        case ErrorCode::ZeroDirection:
        case ErrorCode::DegenerateDenominator:
        case ErrorCode::DegenerateScale:
            return kExitDegenerate;
        case ErrorCode::SingularPosition:
            return kExitSingular;
        case ErrorCode::NonFinite:
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidStep:
            return kExitUsage;
    }
    return kExitUsage;
}

json to_json(const RunReport& report) {
    json j;
    j["subcommand"] = report.subcommand;
    j["input"] = report.input;
    j["results"] = report.results;
    j["residuals"] = report.residuals;
    j["wall_time_ms"] = report.wall_time_ms;
    return j;
}

void to_json(json& j, const IdentitiesOptions& o) {
    j = json{{"samples", o.samples}, {"seed", o.seed}, {"range", o.range}};
}
void from_json(const json& j, IdentitiesOptions& o) {
    j.at("samples").get_to(o.samples);
    j.at("seed").get_to(o.seed);
    j.at("range").get_to(o.range);
}

void to_json(json& j, const IntersectOptions& o) {
    j = json{{"a", vec_json(o.a)}, {"u", vec_json(o.u)}, {"b", vec_json(o.b)}, {"v", vec_json(o.v)}};
}
void from_json(const json& j, IntersectOptions& o) {
    o.a = vec_from(j.at("a"));
    o.u = vec_from(j.at("u"));
    o.b = vec_from(j.at("b"));
    o.v = vec_from(j.at("v"));
}

void to_json(json& j, const TangentsOptions& o) {
    j = json{{"c1", {{"center", vec_json(o.c1)}, {"radius", o.r1}}},
             {"c2", {{"center", vec_json(o.c2)}, {"radius", o.r2}}}};
}
void from_json(const json& j, TangentsOptions& o) {
    o.c1 = vec_from(j.at("c1").at("center"));
    j.at("c1").at("radius").get_to(o.r1);
    o.c2 = vec_from(j.at("c2").at("center"));
    j.at("c2").at("radius").get_to(o.r2);
}

void to_json(json& j, const CrankOptions& o) {
    j = json{{"crank_length", o.length}, {"pivot_c", vec_json(o.pivot)}, {"phi_dot", o.phi_dot},
             {"phi_start", o.from},      {"phi_end", o.to},             {"steps", o.steps},
             {"degrees", o.degrees}};
}
void from_json(const json& j, CrankOptions& o) {
    j.at("crank_length").get_to(o.length);
    o.pivot = vec_from(j.at("pivot_c"));
    j.at("phi_dot").get_to(o.phi_dot);
    j.at("phi_start").get_to(o.from);
    j.at("phi_end").get_to(o.to);
    j.at("steps").get_to(o.steps);
    j.at("degrees").get_to(o.degrees);
}

void to_json(json& j, const OscillatorOptions& o) {
    j = json{{"mass", o.mass}, {"stiffness", o.stiffness}, {"q0", o.q0},   {"p0", o.p0},
             {"dt", o.dt},     {"steps", o.steps},         {"method", std::string(to_string(o.method))}};
}
void from_json(const json& j, OscillatorOptions& o) {
    j.at("mass").get_to(o.mass);
    j.at("stiffness").get_to(o.stiffness);
    j.at("q0").get_to(o.q0);
    j.at("p0").get_to(o.p0);
    j.at("dt").get_to(o.dt);
    j.at("steps").get_to(o.steps);
    o.method = parse_integrator(j.at("method").get<std::string>());
}

RunReport run_identities(const IdentitiesOptions& opts) {
    if (opts.samples < 1) throw Error(ErrorCode::InvalidArgument, "--samples must be >= 1");
    if (!std::isfinite(opts.range) || opts.range < 0.0)
        throw Error(ErrorCode::InvalidArgument, "--range must be finite and >= 0");
    const auto start = Clock::now();

    static constexpr std::array<const char*, 5> kNames = {"jacobi", "grassmann_full", "lagrange",
                                                          "grassmann_reduced", "binet_cauchy"};
    std::array<double, 5> max_abs{};
    std::array<double, 5> max_scaled{};

    SplitMix64 rng(opts.seed);
    auto draw = [&] { return Vec2(rng.uniform(-opts.range, opts.range), rng.uniform(-opts.range, opts.range)); };
    for (long i = 0; i < opts.samples; ++i) {
        const Vec2 a = draw(), b = draw(), c = draw(), d = draw();
        const IdentityResiduals r = identity_residuals(a, b, c, d);
        const double scale = 1.0 + norm(a) * norm(b) * norm(c) * norm(d);
        const std::array<double, 5> magnitude = {norm(r.jacobi), norm(r.grassmann_full), std::abs(r.lagrange),
                                                 norm(r.grassmann_reduced), std::abs(r.binet_cauchy)};
        for (std::size_t k = 0; k < kNames.size(); ++k) {
            max_abs[k] = std::max(max_abs[k], magnitude[k]);
            max_scaled[k] = std::max(max_scaled[k], magnitude[k] / scale);
        }
    }

    RunReport report;
    report.subcommand = "identities";
    report.input = opts;
    json abs_j = json::object(), scaled_j = json::object();
    bool pass = true;
    for (std::size_t k = 0; k < kNames.size(); ++k) {
        abs_j[kNames[k]] = max_abs[k];
        scaled_j[kNames[k]] = max_scaled[k];
        pass = pass && max_scaled[k] <= kIdentityTolerance;
    }
    report.results = {{"samples", opts.samples},
                      {"tolerance", kIdentityTolerance},
                      {"max_scaled_residual", scaled_j},
                      {"pass", pass}};
    report.residuals = abs_j;
    if (!pass) {
        report.exit_code = kExitSingular;
        report.diagnostic = "identity residual exceeds 1e-9 * (1 + product of norms)";
    }
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

RunReport run_intersect(const IntersectOptions& opts) {
    const auto start = Clock::now();
    const Line l1(opts.a, opts.u);
    const Line l2(opts.b, opts.v);
    const Intersection hit = intersect_lines(l1, l2);
    const Vec2 offset = opts.b - opts.a;

    RunReport report;
    report.subcommand = "intersect";
    report.input = opts;
    report.results = {{"point", vec_json(hit.point)}, {"lambda", hit.lambda}, {"mu", hit.mu}};
    report.residuals = {
        {"loop_closure", norm(offset + hit.mu * opts.v - hit.lambda * opts.u)},
        {"line2", norm(hit.point - (opts.b + hit.mu * opts.v))},
        {"jacobi_triangle", norm(jacobi_triangle_residual(opts.u, opts.v, offset))},
    };
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

RunReport run_tangents(const TangentsOptions& opts) {
    const auto start = Clock::now();
    const Circle c1(opts.c1, opts.r1);
    const Circle c2(opts.c2, opts.r2);
    const auto tangents = circle_tangents(c1, c2);
    const Vec2 a = opts.c2 - opts.c1;

    json list = json::array();
    double dist1 = 0.0, dist2 = 0.0, unit_err = 0.0, closure = 0.0;
    for (const Tangent& t : tangents) {
        const bool inner = t.kind == TangentKind::inner;
        list.push_back({{"kind", inner ? "inner" : "outer"},
                        {"lambda", t.lambda},
                        {"direction_e", vec_json(t.direction_e)},
                        {"touch1", vec_json(t.touch1)},
                        {"touch2", vec_json(t.touch2)}});
        const Line line = t.line();
        dist1 = std::max(dist1, std::abs(std::abs(signed_distance(c1.center, line)) - c1.radius));
        dist2 = std::max(dist2, std::abs(std::abs(signed_distance(c2.center, line)) - c2.radius));
        unit_err = std::max(unit_err, std::abs(norm(t.direction_e) - 1.0));
        const double sigma = inner ? 1.0 : -1.0;
        const Vec2 loop = c1.radius * t.direction_e + t.lambda * tilde(t.direction_e) +
                          sigma * c2.radius * t.direction_e - a;
        closure = std::max(closure, norm(loop));
    }

    RunReport report;
    report.subcommand = "tangents";
    report.input = opts;
    report.results = {{"count", tangents.size()}, {"tangents", list}};
    report.residuals = {{"distance_c1", dist1}, {"distance_c2", dist2}, {"unit_e", unit_err}, {"loop_closure", closure}};
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

RunReport run_crank(const CrankOptions& opts) {
    const auto start = Clock::now();
    const double to_rad = opts.degrees ? std::numbers::pi / 180.0 : 1.0;
    const CrankConfig cfg(opts.length, opts.pivot, opts.phi_dot * to_rad);
    const auto sweep = crank_sweep(cfg, opts.from * to_rad, opts.to * to_rad, opts.steps);

    json states = json::array();
    double pos_res = 0.0, vel_res = 0.0, acc_res = 0.0;
    double s_min = std::numeric_limits<double>::infinity();
    double s_max = -std::numeric_limits<double>::infinity();
    long singular = 0, near_singular = 0;
    for (const CrankSweepEntry& e : sweep) {
        json row = {{"phi", e.phi / to_rad}, {"singular", e.singular}, {"near_singular", e.near_singular}};
        if (!e.state) {
            ++singular;
            for (const char* key : {"s", "psi", "psi_unwrapped", "s_dot", "psi_dot", "s_ddot", "psi_ddot", "e_psi"})
                row[key] = nullptr;
            states.push_back(row);
            continue;
        }
        const CrankState& st = *e.state;
        near_singular += e.near_singular ? 1 : 0;
        row["s"] = st.s;
        row["psi"] = st.psi / to_rad;
        row["psi_unwrapped"] = e.psi_unwrapped / to_rad;
        row["s_dot"] = st.s_dot;
        row["psi_dot"] = st.psi_dot / to_rad;
        row["s_ddot"] = st.s_ddot;
        row["psi_ddot"] = st.psi_ddot / to_rad;
        row["e_psi"] = vec_json(st.e_psi);
        states.push_back(row);
        s_min = std::min(s_min, st.s);
        s_max = std::max(s_max, st.s);
        pos_res = std::max(pos_res, norm(position_closure_residual(cfg, st)));
        vel_res = std::max(vel_res, norm(velocity_closure_residual(cfg, st)));
        acc_res = std::max(acc_res, norm(acceleration_closure_residual(cfg, st)));
    }

    RunReport report;
    report.subcommand = "crank";
    report.input = opts;
    report.results = {{"states", states},
                      {"singular_count", singular},
                      {"near_singular_count", near_singular},
                      {"s_min", singular == opts.steps ? json(nullptr) : json(s_min)},
                      {"s_max", singular == opts.steps ? json(nullptr) : json(s_max)}};
    report.residuals = {{"position_closure", pos_res},
                        {"velocity_closure", vel_res},
                        {"acceleration_closure", acc_res}};
    if (singular > 0) {
        report.exit_code = kExitSingular;
        report.diagnostic = "SingularPosition: " + std::to_string(singular) +
                            " sweep position(s) put the crank tip on the guide pivot";
    }
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

RunReport run_oscillator(const OscillatorOptions& opts) {
    const auto start = Clock::now();
    const OscillatorParams params(opts.mass, opts.stiffness);
    const PhaseState initial{opts.q0, opts.p0, 0.0};
    const Trajectory traj = simulate(initial, params, opts.dt, opts.steps, opts.method);
    const double h0 = hamiltonian(initial, params);

    json states = json::array();
    double max_drift = 0.0;
    for (const PhaseState& s : traj.states) {
        const double h = hamiltonian(s, params);
        states.push_back({{"t", s.t}, {"q", s.q}, {"p", s.p}, {"energy", h}});
        max_drift = std::max(max_drift, std::abs(h - h0));
    }
    const PhaseState& last = traj.states.back();
    const PhaseState exact = analytic_oscillator(last.t, initial, params);
    auto state_json = [](const PhaseState& s) { return json{{"t", s.t}, {"q", s.q}, {"p", s.p}}; };

    RunReport report;
    report.subcommand = "oscillator";
    report.input = opts;
    report.results = {{"integrator", std::string(to_string(opts.method))},
                      {"energy_initial", h0},
                      {"final", state_json(last)},
                      {"analytic_final", state_json(exact)},
                      {"states", states}};
    report.residuals = {{"ellipse", max_drift},
                        {"relative_ellipse", h0 > 0.0 ? json(max_drift / h0) : json(nullptr)},
                        {"final_q_error", std::abs(last.q - exact.q)},
                        {"final_p_error", std::abs(last.p - exact.p)}};
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

RunReport rerun(const json& report) {
    const std::string sub = report.at("subcommand").get<std::string>();
    const json& input = report.at("input");
    if (sub == "identities") return run_identities(input.get<IdentitiesOptions>());
    if (sub == "intersect") return run_intersect(input.get<IntersectOptions>());
    if (sub == "tangents") return run_tangents(input.get<TangentsOptions>());
    if (sub == "crank") return run_crank(input.get<CrankOptions>());
    if (sub == "oscillator") return run_oscillator(input.get<OscillatorOptions>());
    throw Error(ErrorCode::InvalidArgument, "unknown subcommand '" + sub + "'");
}

}  // namespace symplane::cli
