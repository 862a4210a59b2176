// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. argv[1] is the path of the CLI binary.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symplane/core.hpp"
#include "symplane/dynamics.hpp"
#include "symplane/error.hpp"
#include "symplane/geometry.hpp"
#include "symplane/kinematics.hpp"
#include "symplane/random.hpp"
#include "test_support.hpp"

using namespace symplane;
using symplane::test::random_vec;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

/// Runs `body`, appends the runtime check when `limit_s` > 0, prints one line.
bool criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    if (limit_s > 0 && elapsed >= limit_s) {
        out.pass = false;
        out.detail += "; runtime over " + fmt(limit_s) + " s";
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << out.detail << " ("
              << fmt(elapsed) << " s)" << std::endl;
    return out.pass;
}

// ---------------------------------------------------------------------------

Outcome identity_suite() {
    SplitMix64 rng(20240601);
    double worst = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        const Vec2 a = random_vec(rng, 10), b = random_vec(rng, 10), c = random_vec(rng, 10), d = random_vec(rng, 10);
        const IdentityResiduals r = identity_residuals(a, b, c, d);
        const double na = norm(a), nb = norm(b), nc = norm(c), nd = norm(d);
        // scale of each identity: product of the norms of the operands it involves
        const std::array<double, 5> ratio = {
            norm(r.jacobi) / (1 + na * nb * nc),
            norm(r.grassmann_full) / (1 + na * nb * nc),
            std::abs(r.lagrange) / (1 + na * na * nb * nb),
            norm(r.grassmann_reduced) / (1 + na * na * nb),
            std::abs(r.binet_cauchy) / (1 + na * nb * nc * nd),
        };
        for (const double x : ratio) worst = std::max(worst, x);
    }
    return {worst <= 1e-9, "10000 quadruples, max scaled residual " + fmt(worst) + " (bound 1e-9)"};
}

Outcome structure_compatibility() {
    SplitMix64 rng(77);
    double worst = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        const Vec2 a = random_vec(rng, 10), b = random_vec(rng, 10);
        const double scale = norm(a) * norm(b);
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(dot(tilde(a), tilde(b)) - dot(a, b)) / scale);
        worst = std::max(worst, std::abs(symp(tilde(a), tilde(b)) - symp(a, b)) / scale);
        worst = std::max(worst, std::abs(dot(a, b) - symp(a, tilde(b))) / scale);
    }
    return {worst <= 1e-12, "10000 pairs x 3 identities, max relative error " + fmt(worst) + " (bound 1e-12)"};
}

Outcome intersection_oracle() {
    SplitMix64 rng(4242);
    double worst_point = 0.0, worst_jacobi = 0.0;
    int pairs = 0;
    while (pairs < 1000) {
        const Vec2 p = random_vec(rng, 10), u = random_vec(rng, 10), q = random_vec(rng, 10),
                   v = random_vec(rng, 10);
        // non-parallel: keep the angle between the directions away from 0 and pi
        if (std::abs(oracle::twice_signed_area({0, 0}, u, v)) < 0.05 * norm(u) * norm(v)) continue;
        ++pairs;
        const Intersection hit = intersect_lines(Line(p, u), Line(q, v));
        worst_point = std::max(worst_point, norm(hit.point - oracle::line_intersection(p, u, q, v)));
        const Vec2 a = q - p;
        worst_jacobi =
            std::max(worst_jacobi, norm(jacobi_triangle_residual(u, v, a)) / (1 + norm(u) * norm(v) * norm(a)));
    }
    const bool ok = worst_point <= 1e-8 && worst_jacobi <= 1e-9;
    return {ok, "1000 pairs, max point deviation " + fmt(worst_point) + " (bound 1e-8), max scaled Jacobi residual " +
                    fmt(worst_jacobi) + " (bound 1e-9)"};
}

Outcome tangent_correctness() {
    SplitMix64 rng(9001);
    const oracle::TangentCounter counter(1'000'000);
    std::array<int, 3> configs{};
    int count_mismatch = 0;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int config = i % 3;  // 0 disjoint, 1 overlapping, 2 contained
        const Vec2 c1 = random_vec(rng, 5);
        const double r1 = rng.uniform(0.1, 3.0);
        const double r2 = rng.uniform(0.1, 3.0);
        const double lo = std::abs(r1 - r2), hi = r1 + r2;
        double d = 0.0;
        switch (config) {
            case 0: d = hi * rng.uniform(1.01, 3.0); break;
            case 1: d = lo + (hi - lo) * rng.uniform(0.01, 0.99); break;
            default: d = lo * rng.uniform(0.01, 0.99); break;
        }
        if (config == 2 && lo < 0.05) {  // radii too close to nest with margin
            --i;
            continue;
        }
        ++configs[config];
        const Vec2 c2 = c1 + d * unit(rng.uniform(-std::numbers::pi, std::numbers::pi));
        const auto tangents = circle_tangents(Circle(c1, r1), Circle(c2, r2));
        const int expected = counter.count(c1, r1, c2, r2);
        if (static_cast<int>(tangents.size()) != expected) ++count_mismatch;
        for (const Tangent& t : tangents) {
            const Line l = t.line();
            // point-to-line distance from the cross product, independent of the library
            auto dist = [&](const Vec2& c) {
                const Vec2 w = c - l.point;
                return std::abs(w.x * l.direction.y - w.y * l.direction.x) / std::hypot(l.direction.x, l.direction.y);
            };
            const double scale = 1 + d;
            worst = std::max({worst, std::abs(dist(c1) - r1) / scale, std::abs(dist(c2) - r2) / scale});
        }
    }

    // unit circles four apart: outer tangents are y = 1 and y = -1
    const auto anchor = circle_tangents(Circle({0, 0}, 1), Circle({4, 0}, 1));
    bool anchor_ok = anchor.size() == 4;
    if (anchor_ok) {
        std::vector<double> ys;
        for (int k = 0; k < 2; ++k) {
            const Tangent& t = anchor[k];
            anchor_ok = anchor_ok && t.kind == TangentKind::outer && std::abs(t.touch1.y - t.touch2.y) <= 1e-12 &&
                        std::abs(t.line().direction.y) <= 1e-12;
            ys.push_back(t.touch1.y);
        }
        std::sort(ys.begin(), ys.end());
        anchor_ok = anchor_ok && std::abs(ys[0] + 1) <= 1e-12 && std::abs(ys[1] - 1) <= 1e-12;
    }

    const bool ok = count_mismatch == 0 && worst <= 1e-9 && anchor_ok;
    return {ok, "1000 pairs (" + std::to_string(configs[0]) + " disjoint, " + std::to_string(configs[1]) +
                    " overlapping, " + std::to_string(configs[2]) + " contained), count mismatches " +
                    std::to_string(count_mismatch) + ", max scaled distance error " + fmt(worst) +
                    " (bound 1e-9), anchor y=+-1 " + (anchor_ok ? "ok" : "wrong")};
}

Outcome kinematics_derivatives() {
    SplitMix64 rng(31337);
    double worst_vel = 0.0, worst_acc = 0.0, worst_closure = 0.0;
    for (int config = 0; config < 20; ++config) {
        const double length = rng.uniform(0.5, 2.0);
        // keep the pivot off the crank circle so s stays bounded away from zero
        double radius = 0.0;
        do {
            radius = rng.uniform(0.0, 4.0);
        } while (std::abs(radius - length) < 0.3 * length);
        const Vec2 pivot = radius * unit(rng.uniform(-std::numbers::pi, std::numbers::pi));
        const double phi_dot = rng.uniform(0.5, 3.0) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
        const CrankConfig cfg(length, pivot, phi_dot);

        for (int k = 0; k <= 360; ++k) {
            const double phi0 = 2.0 * std::numbers::pi * k / 360.0;
            const CrankState st = crank_state(cfg, phi0);
            // time parametrisation: phi(t) = phi0 + phi_dot * t
            auto s_of = [&](double t) { return crank_position(cfg, phi0 + phi_dot * t).s; };
            auto psi_of = [&](double t) {
                return st.psi + oracle::wrap(crank_position(cfg, phi0 + phi_dot * t).psi - st.psi);
            };
            const double hv = 1e-6, ha = 1e-4;
            worst_vel = std::max({worst_vel, std::abs(oracle::d1(s_of, 0.0, hv) - st.s_dot),
                                  std::abs(oracle::d1(psi_of, 0.0, hv) - st.psi_dot)});
            worst_acc = std::max({worst_acc, std::abs(oracle::d2(s_of, 0.0, ha) - st.s_ddot),
                                  std::abs(oracle::d2(psi_of, 0.0, ha) - st.psi_ddot)});

            const Vec2 a = crank_vector(cfg, phi0);
            const double pos_scale = 1 + norm(a) + st.s + norm(pivot);
            const double vel_scale = 1 + std::abs(phi_dot) * norm(a) + std::abs(st.s_dot) + std::abs(st.psi_dot) * st.s;
            const double acc_scale = 1 + phi_dot * phi_dot * norm(a) + std::abs(st.s_ddot) +
                                     st.psi_dot * st.psi_dot * st.s + std::abs(st.psi_ddot) * st.s +
                                     2 * std::abs(st.psi_dot * st.s_dot);
            worst_closure = std::max({worst_closure, norm(position_closure_residual(cfg, st)) / pos_scale,
                                      norm(velocity_closure_residual(cfg, st)) / vel_scale,
                                      norm(acceleration_closure_residual(cfg, st)) / acc_scale});
        }
    }
    const bool ok = worst_vel <= 1e-5 && worst_acc <= 1e-3 && worst_closure <= 1e-8;
    return {ok, "20 cranks x 361 points, velocity FD error " + fmt(worst_vel) + " (bound 1e-5), acceleration FD error " +
                    fmt(worst_acc) + " (bound 1e-3), max scaled closure " + fmt(worst_closure) + " (bound 1e-8)"};
}

Outcome oscillator() {
    const OscillatorParams params(1.0, 1.0);
    const PhaseState x0{1.0, 0.0, 0.0};
    const double h0 = hamiltonian(x0, params);

    const Trajectory one = simulate(x0, params, 0.01, 100, Integrator::leapfrog);
    const double q_exact = std::cos(1.0);  // q(t) = cos t for this start
    const double q_error = std::abs(one.states.back().q - q_exact);

    const Trajectory longrun = simulate(x0, params, 0.01, 100'000, Integrator::leapfrog);
    double drift = 0.0;
    for (const PhaseState& s : longrun.states) drift = std::max(drift, std::abs(hamiltonian(s, params) - h0) / h0);

    const Trajectory euler = simulate(x0, params, 0.01, 100'000, Integrator::explicit_euler);
    bool monotone = true;
    for (std::size_t i = 1; i < euler.states.size(); ++i)
        monotone = monotone && hamiltonian(euler.states[i], params) > hamiltonian(euler.states[i - 1], params);

    // global error at t = 1 against cos t, -sin t; factor per halving of dt
    auto error_at_1 = [&](Integrator method, double dt) {
        const auto steps = static_cast<long>(std::lround(1.0 / dt));
        const PhaseState end = simulate(x0, params, dt, steps, method).states.back();
        return std::hypot(end.q - std::cos(1.0), end.p + std::sin(1.0));
    };
    const double se_factor =
        error_at_1(Integrator::symplectic_euler, 0.01) / error_at_1(Integrator::symplectic_euler, 0.005);
    const double lf_factor = error_at_1(Integrator::leapfrog, 0.01) / error_at_1(Integrator::leapfrog, 0.005);

    const bool ok = q_error <= 1e-4 && drift <= 1e-4 && monotone && se_factor >= 1.8 && se_factor <= 2.2 &&
                    lf_factor >= 3.6 && lf_factor <= 4.4;
    return {ok, "leapfrog q(1) error " + fmt(q_error) + " (bound 1e-4), drift over 1e5 steps " + fmt(drift) +
                    " (bound 1e-4), Euler energy " + (monotone ? "monotone" : "NOT monotone") +
                    ", symplectic Euler factor " + fmt(se_factor) + " [1.8, 2.2], leapfrog factor " + fmt(lf_factor) +
                    " [3.6, 4.4]"};
}

// ---------------------------------------------------------------------------

struct Captured {
    int code = -1;
    std::string out;
};

Captured capture(const std::string& command) {
    Captured c;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return c;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
    const int status = pclose(pipe);
    c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return c;
}

std::string drop_timing(const std::string& text) {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line))
        if (line.find("\"wall_time_ms\"") == std::string::npos) kept += line + "\n";
    return kept;
}

Outcome cli_determinism(const std::string& cli) {
    const std::string exe = "'" + cli + "'";
    const std::vector<std::string> seeded = {
        "identities --samples 1000 --seed 42 --range 10 --json",
        "crank --length 1 --pivot 3,0 --phidot 1 --from 0 --to 6.283185307179586 --steps 361 --json",
        "oscillator --mass 1 --stiffness 1 --q0 1 --p0 0 --dt 0.01 --steps 628 --method leapfrog --json",
        "tangents --c1 0,0,1 --c2 4,0,1 --json",
    };
    int mismatched = 0;
    for (const auto& args : seeded) {
        const Captured a = capture(exe + " " + args), b = capture(exe + " " + args);
        if (a.code != 0 || a.out.empty() || drop_timing(a.out) != drop_timing(b.out)) ++mismatched;
    }

    const std::vector<std::pair<std::string, int>> matrix = {
        {"intersect --a 0,0 --u 1,0 --b 2,2 --v 0,1", 0},
        {"tangents --c1 0,0,3 --c2 1,0,1", 0},
        {"crank --length 1 --pivot 3,0 --phidot 1 --from 0 --to 1 --steps 5", 0},
        {"identities --samples 0", 1},
        {"oscillator --mass 1 --stiffness 1 --q0 1 --p0 0 --dt 0 --steps 5 --method leapfrog", 1},
        {"frobnicate", 1},
        {"intersect --a 0,0 --u 1,1 --b 2,0 --v -2,-2", 2},
        {"tangents --c1 1,1,1 --c2 1,1,2", 2},
        {"crank --length 1 --pivot 1,0 --phidot 1 --from 0 --to 1 --steps 5", 3},
    };
    int wrong_codes = 0;
    std::array<bool, 4> seen{};
    for (const auto& [args, expected] : matrix) {
        const Captured r = capture(exe + " " + args);
        if (r.code != expected) {
            ++wrong_codes;
            std::cerr << "  exit code " << r.code << " (expected " << expected << "): " << args << "\n";
        } else {
            seen[static_cast<std::size_t>(expected)] = true;
        }
    }
    const bool all_seen = std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
    const bool ok = mismatched == 0 && wrong_codes == 0 && all_seen;
    return {ok, std::to_string(seeded.size() - mismatched) + "/" + std::to_string(seeded.size()) +
                    " seeded invocations byte-identical, " + std::to_string(matrix.size() - wrong_codes) + "/" +
                    std::to_string(matrix.size()) + " exit codes as expected (0/1/2/3 " +
                    (all_seen ? "all covered" : "NOT all covered") + ")"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-symplane-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    bool ok = true;
    ok &= criterion(1, "identity suite", 1.0, identity_suite);
    ok &= criterion(2, "structure compatibility", 0.0, structure_compatibility);
    ok &= criterion(3, "intersection oracle equivalence", 1.0, intersection_oracle);
    ok &= criterion(4, "tangent correctness", 0.0, tangent_correctness);
    ok &= criterion(5, "kinematics derivative check", 2.0, kinematics_derivatives);
    ok &= criterion(6, "oscillator", 5.0, oscillator);
    ok &= criterion(7, "CLI determinism and exit codes", 2.0, [&] { return cli_determinism(cli); });
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << std::endl;
    return ok ? 0 : 1;
}
